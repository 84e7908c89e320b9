#include "kschur/verify.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "kschur/classical.hpp"
#include "kschur/core.hpp"
#include "kschur/enumeration.hpp"
#include "kschur/involution.hpp"
#include "kschur/kbernstein.hpp"
#include "kschur/kpieri.hpp"
#include "kschur/ktableau.hpp"
#include "kschur/lincomb.hpp"
#include "kschur/partition.hpp"

namespace kschur {

namespace {
constexpr std::size_t kMaxMessages = 25;
}

void SuiteReport::note(bool ok, const std::string& message) {
  ++checks;
  if (!ok) {
    ++failures;
    if (messages.size() < kMaxMessages) messages.push_back(message);
  }
}

void SuiteReport::merge(const SuiteReport& other) {
  checks += other.checks;
  failures += other.failures;
  for (const std::string& m : other.messages)
    if (messages.size() < kMaxMessages) messages.push_back(m);
}

namespace {

std::vector<Partition> bounded_partitions_up_to(int k, int max_degree) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_degree; ++n)
    for (Partition& p : partitions_of(n, k)) out.push_back(std::move(p));
  return out;
}

// Runs fn(i) for i in [0, count) over the requested number of threads
// and merges the partial reports.
SuiteReport parallel_cases(long count, int jobs,
                           const std::function<void(long, SuiteReport&)>& fn) {
  SuiteReport total;
  if (jobs <= 1) {
    for (long i = 0; i < count; ++i) fn(i, total);
    return total;
  }
  std::atomic<long> next{0};
  std::mutex merge_mutex;
  auto worker = [&]() {
    SuiteReport local;
    for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1))
      fn(i, local);
    std::lock_guard<std::mutex> lock(merge_mutex);
    total.merge(local);
  };
  std::vector<std::thread> threads;
  const int width = std::min<long>(jobs, std::max<long>(count, 1));
  threads.reserve(width);
  for (int t = 0; t < width; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  return total;
}

std::string describe(const Partition& lambda, int k, const char* what) {
  std::ostringstream os;
  os << what << " failed for lambda=" << lambda << " k=" << k;
  return os.str();
}

// Corner structure of cores: no residue has both an addable and a
// removable corner, and extremal cells of equal residue replicate each
// other's right and upper neighborhoods.
void check_core_structure(const Core& core, SuiteReport& r) {
  const Partition& sh = core.shape();
  const int k = core.k();
  for (int res = 0; res <= k; ++res) {
    bool has_rem = false, has_add = false;
    for (const Cell& c : removable_corners(sh))
      has_rem = has_rem || residue(c.row, c.col, k) == res;
    for (const Cell& c : addable_corners(sh))
      has_add = has_add || residue(c.row, c.col, k) == res;
    r.note(!(has_rem && has_add),
           describe(sh, k, "addable and removable corners share a residue"));
  }
  const std::vector<Cell> ext = extremal_cells(sh);
  for (const Cell& a : ext) {
    for (const Cell& b : ext) {
      if (a == b || residue(a.row, a.col, k) != residue(b.row, b.col, k))
        continue;
      if (b.row >= a.row && b.col <= a.col) {
        // b is weakly northwest of a.
        if (a.col == sh.part(a.row))
          r.note(b.col == sh.part(b.row),
                 describe(sh, k, "row-end extremal cell has a non-row-end "
                                 "northwest partner"));
        if (sh.contains_cell(a.row + 1, a.col))
          r.note(sh.contains_cell(b.row + 1, b.col),
                 describe(sh, k, "covered extremal cell has an uncovered "
                                 "northwest partner"));
      }
      if (b.row <= a.row && b.col >= a.col) {
        // b is weakly southeast of a.
        const Partition conj = sh.conjugate();
        if (a.row == conj.part(a.col))
          r.note(b.row == conj.part(b.col),
                 describe(sh, k, "column-top extremal cell has a non-top "
                                 "southeast partner"));
        if (sh.contains_cell(a.row, a.col + 1))
          r.note(sh.contains_cell(b.row, b.col + 1),
                 describe(sh, k, "right-extended extremal cell has an "
                                 "unextended southeast partner"));
      }
    }
  }
}

void check_coxeter(const Core& core, SuiteReport& r) {
  const int n = core.k() + 1;
  auto word = [&](const Core& c,
                  std::initializer_list<int> beats) -> std::optional<Core> {
    std::optional<Core> cur = c;
    for (int i : beats) {
      cur = sigma(*cur, i);
      if (!cur) return std::nullopt;
    }
    return cur;
  };
  for (int i = 0; i < n; ++i) {
    auto twice = word(core, {i, i});
    if (twice)
      r.note(*twice == core,
             describe(core.shape(), core.k(), "sigma_i is not an involution"));
    // With only two residues the group is infinite dihedral: the
    // generators satisfy no relation beyond being involutions.
    if (n < 3) continue;
    for (int j = 0; j < n; ++j) {
      const int gap = (i - j + n) % n;
      if (gap == 1 || gap == n - 1) {
        auto lhs = word(core, {i, j, i});
        auto rhs = word(core, {j, i, j});
        if (lhs && rhs)
          r.note(*lhs == *rhs,
                 describe(core.shape(), core.k(), "braid relation"));
      } else if (i != j) {
        auto lhs = word(core, {i, j});
        auto rhs = word(core, {j, i});
        if (lhs && rhs)
          r.note(*lhs == *rhs,
                 describe(core.shape(), core.k(), "commutation relation"));
      }
    }
  }
}

SuiteReport suite_bijection(int k, int max_degree, int jobs) {
  const auto lambdas = bounded_partitions_up_to(k, max_degree);
  return parallel_cases(
      static_cast<long>(lambdas.size()), jobs,
      [&](long idx, SuiteReport& r) {
        const Partition& lambda = lambdas[idx];
        const Core core = Core::from_bounded(lambda, k);
        r.note(core.to_bounded() == lambda,
               describe(lambda, k, "bounded -> core -> bounded round trip"));
        r.note(Core::from_bounded(core.to_bounded(), k) == core,
               describe(lambda, k, "core -> bounded -> core round trip"));
        check_core_structure(core, r);
        check_coxeter(core, r);
        // Every strong cover reached by a transposition must decompose
        // into translated ribbons (checked inside ribbon_components).
        const int n = k + 1;
        for (int a = 0; a < n; ++a)
          for (int d = 1; d <= k; ++d) {
            auto moved = transposition(core, a, a + d);
            if (!moved || !is_strong_cover(*moved, core)) continue;
            try {
              ribbon_components(*moved, core);
              r.note(true, "");
            } catch (const std::exception& e) {
              r.note(false, describe(lambda, k, e.what()));
            }
          }
      });
}

SuiteReport suite_pieri(int k, int max_degree, int jobs) {
  const auto lambdas = bounded_partitions_up_to(k, max_degree);
  return parallel_cases(
      static_cast<long>(lambdas.size()), jobs,
      [&](long idx, SuiteReport& r) {
        const Partition& lambda = lambdas[idx];
        for (int ell = 1; ell <= k; ++ell) {
          const LinComb by_subsets = multiply_h(ell, lambda, k);
          const LinComb by_strips = pieri_by_strips(lambda, ell, k);
          r.note(by_subsets == by_strips,
                 describe(lambda, k, "subset and strip Pieri products"));
          bool unit = true, degrees = true;
          for (const auto& [index, c] : by_subsets.terms()) {
            unit = unit && c == 1;
            degrees = degrees && index.degree() == lambda.degree() + ell;
          }
          r.note(unit, describe(lambda, k, "Pieri multiplicity freeness"));
          r.note(degrees, describe(lambda, k, "Pieri degree additivity"));
        }
      });
}

SuiteReport suite_strips(int k, int max_degree, int jobs) {
  const auto lambdas = bounded_partitions_up_to(k, max_degree);
  return parallel_cases(
      static_cast<long>(lambdas.size()), jobs,
      [&](long idx, SuiteReport& r) {
        const Partition& lambda = lambdas[idx];
        if (lambda.empty()) return;
        const Core gamma = Core::from_bounded(lambda, k);
        const Core hat = gamma.tail();
        const int m = main_subpartition(gamma).length;
        for (int ell = 0; ell <= m; ++ell) {
          std::vector<Core> canonical, free_order;
          try {
            canonical = vertical_strips(hat, m, ell, StripOrder::canonical);
            free_order = vertical_strips(hat, m, ell, StripOrder::any_order);
          } catch (const std::exception& e) {
            r.note(false, describe(lambda, k, e.what()));
            continue;
          }
          r.note(canonical.size() == free_order.size() &&
                     std::equal(canonical.begin(), canonical.end(),
                                free_order.begin()),
                 describe(lambda, k, "strip enumeration order independence"));
          for (const Core& delta : canonical) {
            const Partition top = hat.to_bounded();
            const Partition bottom = delta.to_bounded();
            bool ok = top.contains(bottom) &&
                      top.degree() - bottom.degree() == ell &&
                      SkewShape(top, bottom).is_vertical_strip();
            r.note(ok,
                   describe(lambda, k, "strip projection to the k-bounded "
                                       "partitions"));
          }
        }
      });
}

SuiteReport suite_recursion(int k, int max_degree, int jobs) {
  const auto lambdas = bounded_partitions_up_to(k, max_degree);
  return parallel_cases(
      static_cast<long>(lambdas.size()), jobs,
      [&](long idx, SuiteReport& r) {
        const Partition& lambda = lambdas[idx];
        try {
          r.note(kschur_by_recursion(lambda, k) ==
                     LinComb::unit(Basis::kschur, lambda, k),
                 describe(lambda, k, "operator recursion unit vector"));
        } catch (const std::exception& e) {
          r.note(false, describe(lambda, k, e.what()));
        }
      });
}

SuiteReport suite_oracle(int k, int max_degree, int jobs) {
  SuiteReport total;
  KMatrixCache cache{std::filesystem::path()};
  for (int n = 0; n <= max_degree; ++n) {
    const KMatrix& m = cache.get(k, n);
    const std::size_t size = m.index.size();
    SuiteReport header;
    for (std::size_t i = 0; i < size; ++i) {
      header.note(m.values[i][i] == 1,
                  describe(m.index[i], k, "tableau count on the diagonal"));
      for (std::size_t j = 0; j < size; ++j)
        if (m.values[i][j] != 0)
          header.note(dominates(m.index[i], m.index[j]),
                      describe(m.index[j], k, "tableau count triangularity"));
    }
    total.merge(header);
    total.merge(parallel_cases(
        static_cast<long>(size), jobs, [&](long idx, SuiteReport& r) {
          const Partition& lambda = m.index[idx];
          LinComb via_kostka(Basis::h);
          try {
            via_kostka = h_expansion_via_kostka(lambda, k, &cache);
            r.note(true, "");
          } catch (const std::exception& e) {
            r.note(false, describe(lambda, k, e.what()));
            return;
          }
          try {
            r.note(h_expansion_via_strips(lambda, k) == via_kostka,
                   describe(lambda, k,
                            "strip expansion against tableau counts"));
          } catch (const std::exception& e) {
            r.note(false, describe(lambda, k, e.what()));
          }
          // Substituting the expansions back must reproduce h_lambda.
          LinComb back(Basis::h);
          for (std::size_t i = 0; i < size; ++i) {
            const std::int64_t c = m.values[i][idx];
            if (c != 0)
              back += h_expansion_via_kostka(m.index[i], k, &cache) * c;
          }
          r.note(back == LinComb::unit(Basis::h, lambda),
                 describe(lambda, k, "back substitution identity"));
          // Tableau counts agree with iterated Pieri products.
          LinComb prod = LinComb::unit(Basis::kschur, Partition(), k);
          for (int i = lambda.length(); i >= 1; --i)
            prod = multiply_h(lambda.part(i), prod);
          bool chains = true;
          for (std::size_t i = 0; i < size; ++i)
            chains = chains && prod.coeff(m.index[i]) == m.values[i][idx];
          r.note(chains,
                 describe(lambda, k, "tableau counts against Pieri chains"));
        }));
  }
  return total;
}

SuiteReport involution_case(const Partition& lambda, int k) {
  SuiteReport r;
  std::vector<OXPair> pairs;
  try {
    pairs = d_pairs(lambda, k);
    unique_no_changeable(lambda, k);
    r.note(true, "");
  } catch (const std::exception& e) {
    r.note(false, describe(lambda, k, e.what()));
    return r;
  }
  // The signed sum over the domain collapses to the unit vector.
  LinComb signed_sum(Basis::kschur, k);
  for (const OXPair& p : pairs)
    signed_sum.add_term(p.sigma_delta().to_bounded(),
                        p.ell() % 2 == 0 ? 1 : -1);
  r.note(signed_sum == LinComb::unit(Basis::kschur, lambda, k),
         describe(lambda, k, "signed domain sum"));
  long with_changeable = 0;
  for (const OXPair& p : pairs) {
    if (changeable_cells(p).empty()) continue;
    ++with_changeable;
    try {
      const OXPair image = phi(p);
      r.note(std::find(pairs.begin(), pairs.end(), image) != pairs.end(),
             describe(lambda, k, "phi image inside the domain"));
      r.note(!(image == p), describe(lambda, k, "phi fixed point"));
      const int diff = image.residues().size() - p.residues().size();
      r.note(diff == 1 || diff == -1,
             describe(lambda, k, "phi changes |A| by one"));
      r.note(image.sigma_delta() == p.sigma_delta(),
             describe(lambda, k, "phi conservation"));
      const OXPair back = phi(image);
      r.note(back == p, describe(lambda, k, "phi involution"));
    } catch (const std::exception& e) {
      r.note(false, describe(lambda, k, e.what()));
    }
  }
  r.note(with_changeable % 2 == 0,
         describe(lambda, k, "changeable pairs come in twos"));
  return r;
}

SuiteReport suite_involution(int k, int max_degree, int jobs) {
  std::vector<Partition> lambdas;
  for (int n = 1; n <= max_degree; ++n)
    for (Partition& p : partitions_of(n, k)) lambdas.push_back(std::move(p));
  return parallel_cases(static_cast<long>(lambdas.size()), jobs,
                        [&](long idx, SuiteReport& r) {
                          r.merge(involution_case(lambdas[idx], k));
                        });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"bijection", "pieri",  "strips",    "recursion",
          "oracle",    "involution", "all"};
}

SuiteReport run_suite(const std::string& suite, int k, int max_degree,
                      int jobs) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (max_degree < 0)
    throw std::invalid_argument("max degree must be nonnegative");
  SuiteReport out;
  out.suite = suite;
  out.k = k;
  out.max_degree = max_degree;
  if (suite == "bijection")
    out.merge(suite_bijection(k, max_degree, jobs));
  else if (suite == "pieri")
    out.merge(suite_pieri(k, max_degree, jobs));
  else if (suite == "strips")
    out.merge(suite_strips(k, max_degree, jobs));
  else if (suite == "recursion")
    out.merge(suite_recursion(k, max_degree, jobs));
  else if (suite == "oracle")
    out.merge(suite_oracle(k, max_degree, jobs));
  else if (suite == "involution")
    out.merge(suite_involution(k, max_degree, jobs));
  else if (suite == "all") {
    for (const std::string& name : suite_names())
      if (name != "all") out.merge(run_suite(name, k, max_degree, jobs));
  } else {
    throw std::invalid_argument("unknown suite \"" + suite + "\"");
  }
  return out;
}

}  // namespace kschur
