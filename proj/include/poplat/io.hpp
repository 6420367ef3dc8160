#pragma once

// JSON encodings: QPolynomial as {"degree": "coefficient"} with string keys and
// values, lattices as an element list plus (lower, upper) cover index pairs.

#include <string>

#include <json.hpp>

#include "poplat/lattice.hpp"
#include "poplat/qpolynomial.hpp"

namespace poplat {

using Json = nlohmann::ordered_json;

inline Json to_json(const QPolynomial& p) {
  Json out = Json::object();
  // Highest degree first, matching the printed form.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out[std::to_string(it->first)] = it->second.str();
  }
  return out;
}

inline QPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("polynomial JSON must be an object");
  QPolynomial p;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw InvalidInput("polynomial coefficients must be strings");
    int degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoi(key, &used);
      if (used != key.size()) throw InvalidInput("bad degree " + key);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad degree " + key);
    }
    p.add_term(degree, BigInt(value.get<std::string>()));
  }
  return p;
}

inline Json to_json(const FiniteLattice& lattice) {
  Json out;
  out["elements"] = lattice.keys();
  Json covers = Json::array();
  for (auto [lo, up] : lattice.covers()) covers.push_back({lo, up});
  out["covers"] = std::move(covers);
  return out;
}

inline FiniteLattice lattice_from_json(const Json& j, LatticeOptions options = {}) {
  auto keys = j.at("elements").get<std::vector<std::string>>();
  CoverList covers;
  for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
  return FiniteLattice(std::move(keys), covers, options);
}

}  // namespace poplat
