#pragma once

#include <vector>

#include "kschur/core.hpp"
#include "kschur/lincomb.hpp"
#include "kschur/partition.hpp"

namespace kschur {

struct PieriTerm {
  ResidueSet subset;
  Core result;
};

// All size-ell residue subsets A whose action on the core of lambda is
// defined and raises the k-bounded degree by exactly ell.  These index
// the terms of h_ell * s^{(k)}_lambda.
std::vector<PieriTerm> pieri_subsets(const Partition& lambda, int ell, int k);

// h_ell * s^{(k)}_lambda, and its linear extension.
LinComb multiply_h(int ell, const Partition& lambda, int k);
LinComb multiply_h(int ell, const LinComb& f);

// The same product computed from the skew description: mu contributes
// iff core(mu)/core(lambda) is a horizontal strip occupying exactly
// ell distinct residues.
LinComb pieri_by_strips(const Partition& lambda, int ell, int k);

}  // namespace kschur
