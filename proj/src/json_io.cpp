#include "naphopf/json_io.hpp"

#include <stdexcept>

namespace naphopf {

Json to_json(const TreeSeries& s) {
  Json coeffs = Json::object();
  for (const auto& [t, c] : s.coeffs()) coeffs[t.str()] = to_string(c);
  return {{"truncation", s.truncation()}, {"coeffs", coeffs}};
}

TreeSeries tree_series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("truncation") || !j.contains("coeffs") || !j["truncation"].is_number_unsigned() ||
      !j["coeffs"].is_object()) {
    throw std::invalid_argument("expected {\"truncation\": N, \"coeffs\": {tree: \"p/q\"}}");
  }
  TreeSeries out(j["truncation"].get<std::size_t>());
  for (const auto& [key, value] : j["coeffs"].items()) {
    if (!value.is_string()) throw std::invalid_argument("coefficient of " + key + " is not a string");
    out.set(parse_tree(key), parse_rational(value.get<std::string>()));
  }
  return out;
}

Json to_json(const PowerSeries& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"coeffs", coeffs}};
}

PowerSeries power_series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("expected {\"coeffs\": [\"p/q\", ...]}");
  }
  std::vector<Rational> coeffs;
  for (const auto& v : j["coeffs"]) {
    if (!v.is_string()) throw std::invalid_argument("coefficients must be strings");
    coeffs.push_back(parse_rational(v.get<std::string>()));
  }
  return PowerSeries(std::move(coeffs));
}

}  // namespace naphopf
