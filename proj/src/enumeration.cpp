#include "kschur/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace kschur {

std::vector<Partition> partitions_of(int n, int max_part) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int cap) {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(cap, rem); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

std::vector<ResidueSet> subsets_of_size(int k, int size) {
  if (size < 0 || size > k + 1)
    throw std::invalid_argument("subset size out of range");
  std::vector<ResidueSet> out;
  const std::uint32_t full = (std::uint32_t{1} << (k + 1)) - 1;
  for (std::uint32_t mask = 0; mask <= full; ++mask)
    if (std::popcount(mask) == size) out.push_back(ResidueSet::from_mask(k, mask));
  return out;
}

}  // namespace kschur
