#pragma once

#include <utility>
#include <vector>

#include "kschur/core.hpp"
#include "kschur/lincomb.hpp"
#include "kschur/partition.hpp"

namespace kschur {

// The columns of the core above the first row, taken from the column of
// the leftmost k-bounded cell of the first row through column shape_2.
struct MainSubpartition {
  Partition sub;
  int start_column = 0;
  // Number of rows of sub (the height of its first column).
  int length = 0;
};

MainSubpartition main_subpartition(const Core& omega);

enum class StripOrder { canonical, any_order };

// Cores delta reached from hat by ell strong covers downward, each
// removing a union of horizontal ribbons, with the lowest ribbons of
// the steps in ell distinct rows of 1..m.  The canonical enumeration
// visits the rows in strictly decreasing order, which reaches every
// delta exactly once; any_order tries all row sequences (kept for
// cross-checking).  Results are sorted in descending lexicographic
// order of shape.
std::vector<Core> vertical_strips(const Core& hat, int m, int ell,
                                  StripOrder order = StripOrder::canonical);

// Skewing part of the level-k Bernstein operator: for lambda = (r, nu),
// sums s^{(k)}_mu over the vertical strip removals of ell rows from the
// core above the first row of core(lambda).
LinComb e_perp_k(int ell, int r, const Partition& nu, int k);

// B^{(k)}_r = sum_{ell=0}^{k-r} (-1)^ell h_{r+ell} e_perp_k(ell, r, .);
// every index of f must have first part <= r.
LinComb apply_b(int r, const LinComb& f);

// The signed Schur-function terms of B^{(k)}_r s^{(k)}_nu before any
// cancellation, in enumeration order.
std::vector<std::pair<int, Partition>> apply_b_expanded(int r,
                                                        const Partition& nu,
                                                        int k);

// B^{(k)}_{lambda_1} ... B^{(k)}_{lambda_r} applied to 1; equals the
// unit vector at lambda.
LinComb kschur_by_recursion(const Partition& lambda, int k);

// One summand of the iterated recursion: a chain
//   empty = chain[0] < chain[1] < ... < chain[r] = core(lambda)
// where step i removes first the bottom row of chain[i] (with
// first_rows[i-1] k-bounded cells) and then a vertical strip of
// ells[i-1] rows, reaching chain[i-1].
struct StripSequence {
  std::vector<Core> chain;
  std::vector<int> ells;
  std::vector<int> first_rows;
  // Decreasing rearrangement of ells[i] + first_rows[i].
  Partition part;
  // (-1)^(sum of ells).
  int sign = 1;
};

std::vector<StripSequence> strip_sequences(const Partition& lambda, int k);

// sum over strip sequences of sign * h_part: the alternating
// h-expansion of s^{(k)}_lambda.
LinComb h_expansion_via_strips(const Partition& lambda, int k);

}  // namespace kschur
