#pragma once

#include "json.hpp"
#include "kschur/lincomb.hpp"
#include "kschur/partition.hpp"

namespace kschur {

// Partitions serialize as arrays of parts: (4,2,1) <-> [4,2,1].
nlohmann::ordered_json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// Term lists carry the basis tag, the level for the kschur basis, and
// the terms in canonical order:
//   {"basis":"h","terms":[{"index":[2,2,2,1],"coeff":1}, ...]}
nlohmann::ordered_json lincomb_to_json(const LinComb& f);
LinComb lincomb_from_json(const nlohmann::json& j);

}  // namespace kschur
