#include "wedge/serialize.hpp"

#include <stdexcept>

namespace wedge::serialize {

using nlohmann::json;

json to_json(const exact::TSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return {{"valuation", s.is_zero() ? 0 : s.valuation()},
          {"order", s.is_exact() ? json(nullptr) : json(s.order())},
          {"coeffs", coeffs}};
}

exact::TSeries series_from_json(const json& j) {
  try {
    std::vector<exact::Rational> coeffs;
    for (const auto& pair : j.at("coeffs")) {
      if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("coefficient must be [num, den]");
      exact::Rational c(exact::BigInt(pair[0].get<std::string>()), exact::BigInt(pair[1].get<std::string>()));
      c.canonicalize();
      coeffs.push_back(c);
    }
    const int order = j.at("order").is_null() ? exact::kExactOrder : j.at("order").get<int>();
    return exact::TSeries(j.at("valuation").get<int>(), std::move(coeffs), order);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
  }
}

json to_json(const enumerate::CountTable& table) {
  json counts = json::array();
  for (const auto& c : table.counts) counts.push_back(c.get_str());
  return {{"model", enumerate::describe(table.model)}, {"counts", counts}};
}

}  // namespace wedge::serialize
