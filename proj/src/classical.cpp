#include "kschur/classical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "kschur/enumeration.hpp"

namespace kschur::classical {

LinComb pieri_h(int ell, const Partition& lambda) {
  if (ell < 0) throw std::invalid_argument("ell must be nonnegative");
  LinComb out(Basis::schur);
  const int len = lambda.length();
  // Grow each row within the interlacing bounds lambda_i <= mu_i <=
  // lambda_{i-1}; the first row is unbounded and at most one new row
  // can appear on top.
  std::vector<int> mu(len + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i > len + 1) {
      if (rem == 0)
        out.add_term(Partition(std::vector<int>(mu.begin(), mu.end())), 1);
      return;
    }
    const int lo = lambda.part(i);
    const int hi =
        i == 1 ? lo + rem : std::min(lambda.part(i - 1), lo + rem);
    for (int v = lo; v <= hi; ++v) {
      mu[i - 1] = v;
      rec(i + 1, rem - (v - lo));
    }
    mu[i - 1] = lo;
  };
  rec(1, ell);
  return out;
}

LinComb pieri_h(int ell, const LinComb& f) {
  if (f.basis() != Basis::schur)
    throw std::invalid_argument("pieri_h acts on the schur basis");
  LinComb out(Basis::schur);
  for (const auto& [index, c] : f.terms()) out += pieri_h(ell, index) * c;
  return out;
}

LinComb e_perp(int m, const Partition& lambda) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  LinComb out(Basis::schur);
  const int len = lambda.length();
  // Remove at most one cell per row, keeping a partition; rows are
  // chosen from the top down, so "above" is the row already fixed.
  std::vector<int> mu(len, 0);
  std::function<void(int, int, int)> rec = [&](int i, int rem, int above) {
    if (rem > i) return;
    if (i == 0) {
      out.add_term(Partition(std::vector<int>(mu.begin(), mu.end())), 1);
      return;
    }
    for (int x = 0; x <= 1; ++x) {
      const int v = lambda.part(i) - x;
      if (v < above || (x == 1 && rem == 0) || v < 0) continue;
      mu[i - 1] = v;
      rec(i - 1, rem - x, v);
    }
  };
  rec(len, m, 0);
  return out;
}

LinComb e_perp(int m, const LinComb& f) {
  if (f.basis() != Basis::schur)
    throw std::invalid_argument("e_perp acts on the schur basis");
  LinComb out(Basis::schur);
  for (const auto& [index, c] : f.terms()) out += e_perp(m, index) * c;
  return out;
}

LinComb bernstein(int n, const LinComb& f) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (f.basis() != Basis::schur)
    throw std::invalid_argument("bernstein acts on the schur basis");
  int maxlen = 0;
  for (const auto& [index, c] : f.terms())
    maxlen = std::max(maxlen, index.length());
  LinComb acc(Basis::schur);
  for (int i = 0; i <= maxlen; ++i) {
    LinComb raised = pieri_h(n + i, e_perp(i, f));
    acc += raised * (i % 2 == 0 ? 1 : -1);
  }
  return acc;
}

std::int64_t kostka(const Partition& mu, const Partition& alpha) {
  if (mu.degree() != alpha.degree())
    throw std::invalid_argument("kostka needs equal degrees");
  LinComb f = LinComb::unit(Basis::schur, Partition());
  for (int i = 1; i <= alpha.length(); ++i) f = pieri_h(alpha.part(i), f);
  return f.coeff(mu);
}

LinComb schur_in_h(const Partition& lambda) {
  const auto all = partitions_of(lambda.degree());
  // Descending lexicographic order refines dominance, so processing in
  // order makes the system back-substitutable: s_mu = h_mu - sum over
  // strictly more dominant nu of K_{nu,mu} s_nu.
  std::vector<LinComb> expansion;
  expansion.reserve(all.size());
  LinComb result(Basis::h);
  for (std::size_t j = 0; j < all.size(); ++j) {
    LinComb e = LinComb::unit(Basis::h, all[j]);
    for (std::size_t i = 0; i < j; ++i) {
      const std::int64_t c = kostka(all[i], all[j]);
      if (c != 0) e -= expansion[i] * c;
    }
    if (all[j] == lambda) result = e;
    expansion.push_back(std::move(e));
  }
  return result;
}

}  // namespace kschur::classical
