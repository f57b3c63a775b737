#pragma once

// JSON encodings of tensors, elements and series. Coefficients are "p/q" strings.

#include "naphopf/hopf.hpp"
#include "naphopf/series.hpp"

#include <json.hpp>

namespace naphopf {

using Json = nlohmann::ordered_json;

/// [{"left": ..., "right": ..., "coeff": "p/q"}, ...]
template <class A>
Json to_json(const Tensor<A>& t) {
  Json out = Json::array();
  for (const auto& [k, c] : t.terms()) {
    out.push_back({{"left", A::render(k.first)}, {"right", A::render(k.second)}, {"coeff", to_string(c)}});
  }
  return out;
}

/// [{"monomial": ..., "coeff": "p/q"}, ...]
template <class A>
Json to_json(const Element<A>& e) {
  Json out = Json::array();
  for (const auto& [m, c] : e.terms()) out.push_back({{"monomial", A::render(m)}, {"coeff", to_string(c)}});
  return out;
}

/// {"truncation": N, "coeffs": {tree: "p/q"}}
Json to_json(const TreeSeries& s);
/// Throws std::invalid_argument (or ParseError) on malformed input.
TreeSeries tree_series_from_json(const Json& j);

/// {"coeffs": ["p/q", ...]}
Json to_json(const PowerSeries& p);
PowerSeries power_series_from_json(const Json& j);

}  // namespace naphopf
