#pragma once

#include <string>

#include <json.hpp>

#include "qweyl/closed_forms.hpp"
#include "qweyl/sym_power.hpp"

namespace qweyl {

using Json = nlohmann::ordered_json;

/// {"terms":[{"exps":[...],"coeff":"..."}]}, leading monomial first.
Json ncpoly_json(const NCPolynomial& p);

/// Coordinate maps as flat JSON objects, key -> canonical coefficient
/// string. Keys: q-oscillator "k"; q-weyl "k1,k2,..."; h-weyl flattens the
/// p groups then ";" then q ("p...;q..."); sl2 "k;s;p;q".
Json coords_json(const QOCoords& coords);
Json coords_json(const QWeylCoords& coords);
Json coords_json(const HWeylCoords& coords);
Json coords_json(const Sl2Coords& coords);

/// {"arity":n,"terms":[{"class":[[...],...],"coeff":"..."}]}.
Json sym_json(const SymElement& e);

Json error_json(const std::string& code, const std::string& message,
                std::optional<std::size_t> position = std::nullopt);

}  // namespace qweyl
