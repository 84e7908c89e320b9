#pragma once

#include <cstdint>

#include "kschur/lincomb.hpp"
#include "kschur/partition.hpp"

namespace kschur::classical {

// h_ell * s_lambda = sum of s_mu over mu/lambda a horizontal ell-strip.
LinComb pieri_h(int ell, const Partition& lambda);
LinComb pieri_h(int ell, const LinComb& f);

// Skewing by e_m: sum of s_mu over lambda/mu a vertical m-strip.
LinComb e_perp(int m, const Partition& lambda);
LinComb e_perp(int m, const LinComb& f);

// The Bernstein creation operator B_n = sum_i (-1)^i h_{n+i} e_i-perp;
// B_{lambda_1} ... B_{lambda_r} applied to 1 gives s_lambda.
LinComb bernstein(int n, const LinComb& f);

// Kostka number: the coefficient of s_mu in h_alpha, computed by
// iterated Pieri multiplication.
std::int64_t kostka(const Partition& mu, const Partition& alpha);

// s_lambda in the h basis, by inverting the Kostka system over all
// partitions of |lambda| in dominance order.
LinComb schur_in_h(const Partition& lambda);

}  // namespace kschur::classical
