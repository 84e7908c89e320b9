#include "kschur/json_io.hpp"

#include <stdexcept>

namespace kschur {

nlohmann::ordered_json partition_to_json(const Partition& p) {
  return nlohmann::ordered_json(p.parts());
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be an array");
  return Partition(j.get<std::vector<int>>());
}

nlohmann::ordered_json lincomb_to_json(const LinComb& f) {
  nlohmann::ordered_json out;
  out["basis"] = basis_name(f.basis());
  if (f.basis() == Basis::kschur) out["k"] = f.k();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [index, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["index"] = partition_to_json(index);
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

LinComb lincomb_from_json(const nlohmann::json& j) {
  const Basis basis = basis_from_name(j.at("basis").get<std::string>());
  const int k = basis == Basis::kschur ? j.at("k").get<int>() : 0;
  LinComb f(basis, k);
  for (const auto& t : j.at("terms"))
    f.add_term(partition_from_json(t.at("index")),
               t.at("coeff").get<std::int64_t>());
  return f;
}

}  // namespace kschur
