#include "qweyl/json_io.hpp"

#include <sstream>

namespace qweyl {

namespace {

std::string join(const std::vector<unsigned>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

}  // namespace

Json ncpoly_json(const NCPolynomial& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json term;
    term["exps"] = it->first.exps;
    term["coeff"] = it->second.str();
    terms.push_back(std::move(term));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

Json coords_json(const QOCoords& coords) {
  Json out = Json::object();
  for (const auto& [k, c] : coords) out[std::to_string(k)] = c.str();
  return out;
}

Json coords_json(const QWeylCoords& coords) {
  Json out = Json::object();
  for (const auto& [k, c] : coords) out[join(k)] = c.str();
  return out;
}

Json coords_json(const HWeylCoords& coords) {
  Json out = Json::object();
  for (const auto& [key, c] : coords) {
    std::vector<unsigned> flat;
    for (const auto& pj : key.p) flat.insert(flat.end(), pj.begin(), pj.end());
    out[join(flat) + ";" + join(key.q)] = to_string(c);
  }
  return out;
}

Json coords_json(const Sl2Coords& coords) {
  Json out = Json::object();
  for (const auto& [key, c] : coords)
    out[join(key.k) + ";" + join(key.s) + ";" + join(key.p) + ";" +
        join(key.q)] = c.get_str();
  return out;
}

Json sym_json(const SymElement& e) {
  Json terms = Json::array();
  for (const auto& [tuple, c] : e.terms()) {
    Json cls = Json::array();
    for (const NormalMonomial& m : tuple) cls.push_back(m.exps);
    Json term;
    term["class"] = std::move(cls);
    term["coeff"] = c.str();
    terms.push_back(std::move(term));
  }
  Json out;
  out["arity"] = e.arity();
  out["terms"] = std::move(terms);
  return out;
}

Json error_json(const std::string& code, const std::string& message,
                std::optional<std::size_t> position) {
  Json out;
  out["code"] = code;
  out["message"] = message;
  if (position) out["position"] = *position;
  return out;
}

}  // namespace qweyl
