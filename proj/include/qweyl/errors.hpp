#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace qweyl {

/// Library-wide error with a stable machine-readable code; the CLI maps it
/// onto the JSON error object {code, message, position?}.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(std::move(code)), position_(position) {}

  const std::string& code() const { return code_; }
  std::optional<std::size_t> position() const { return position_; }

 private:
  std::string code_;
  std::optional<std::size_t> position_;
};

}  // namespace qweyl
