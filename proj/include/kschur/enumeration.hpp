#pragma once

#include <climits>
#include <vector>

#include "kschur/core.hpp"
#include "kschur/partition.hpp"

namespace kschur {

// All partitions of n with parts <= max_part, in descending
// lexicographic order; n = 0 yields the empty partition.
std::vector<Partition> partitions_of(int n, int max_part = INT_MAX);

// All size-element subsets of the residues {0, ..., k}, in ascending
// order of bit mask.
std::vector<ResidueSet> subsets_of_size(int k, int size);

}  // namespace kschur
