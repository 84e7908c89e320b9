#include "kschur/kbernstein.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "kschur/kpieri.hpp"

namespace kschur {

MainSubpartition main_subpartition(const Core& omega) {
  if (omega.empty())
    throw std::invalid_argument("the empty core has no main subpartition");
  const Partition& sh = omega.shape();
  const Partition conj = sh.conjugate();
  int start = 0;
  for (int c = 1; c <= sh.part(1); ++c)
    if (sh.part(1) - c + conj.part(c) <= omega.k()) {
      start = c;
      break;
    }
  // The last cell of the first row is k-bounded in every core, so the
  // scan always finds a column.
  const Partition hatconj = sh.tail().conjugate();
  std::vector<int> heights;
  for (int c = start; c <= sh.part(2); ++c) heights.push_back(hatconj.part(c));
  MainSubpartition out;
  out.start_column = start;
  out.sub = heights.empty() ? Partition() : Partition(heights).conjugate();
  out.length = out.sub.length();
  return out;
}

namespace {

struct HCover {
  Core core;
  int lowest_row;
};

// Strong covers directly below w whose skew is a union of horizontal
// ribbons, found by running every transposition over the residue pairs.
std::vector<HCover> horizontal_covers(const Core& w) {
  std::vector<HCover> out;
  const int n = w.k() + 1;
  for (int a = 0; a < n; ++a) {
    for (int d = 1; d <= w.k(); ++d) {
      auto moved = transposition(w, a, a + d);
      if (!moved) continue;
      if (moved->shape() == w.shape() ||
          !w.shape().contains(moved->shape()))
        continue;
      if (moved->bounded_cells() + 1 != w.bounded_cells()) continue;
      const auto ribbons = ribbon_components(*moved, w);
      bool horizontal = true;
      for (const Ribbon& r : ribbons) horizontal = horizontal && r.horizontal();
      if (!horizontal) continue;
      // Removing the ribbons must lower the k-bounded row counts by one
      // exactly in the row of the highest ribbon.
      const int high = ribbons.back().lowest_row();
      const Partition before = w.to_bounded();
      const Partition after = moved->to_bounded();
      for (int i = 1; i <= std::max(before.length(), after.length()); ++i)
        if (before.part(i) != after.part(i) + (i == high ? 1 : 0))
          throw std::logic_error(
              "horizontal cover does not drop the k-bounded count at the "
              "highest ribbon row");
      out.push_back({*moved, ribbons.front().lowest_row()});
    }
  }
  std::sort(out.begin(), out.end(), [](const HCover& x, const HCover& y) {
    if (x.lowest_row != y.lowest_row) return x.lowest_row < y.lowest_row;
    return PartitionDescLex{}(x.core.shape(), y.core.shape());
  });
  return out;
}

}  // namespace

std::vector<Core> vertical_strips(const Core& hat, int m, int ell,
                                  StripOrder order) {
  if (m < 0 || ell < 0)
    throw std::invalid_argument("strip parameters must be nonnegative");
  std::set<Partition, PartitionDescLex> shapes;
  if (order == StripOrder::canonical) {
    std::function<void(const Core&, int, int)> rec = [&](const Core& w,
                                                         int left, int bound) {
      if (left == 0) {
        // Distinct decreasing row sequences must reach distinct cores.
        if (!shapes.insert(w.shape()).second)
          throw std::logic_error("two canonical strips reach one core");
        return;
      }
      for (const HCover& cov : horizontal_covers(w))
        if (cov.lowest_row <= bound)
          rec(cov.core, left - 1, cov.lowest_row - 1);
    };
    rec(hat, ell, m);
  } else {
    std::function<void(const Core&, int, std::uint32_t)> rec =
        [&](const Core& w, int left, std::uint32_t used) {
          if (left == 0) {
            shapes.insert(w.shape());
            return;
          }
          for (const HCover& cov : horizontal_covers(w))
            if (cov.lowest_row <= m && !((used >> cov.lowest_row) & 1u))
              rec(cov.core, left - 1, used | (std::uint32_t{1} << cov.lowest_row));
        };
    rec(hat, ell, 0);
  }
  std::vector<Core> out;
  out.reserve(shapes.size());
  for (const Partition& s : shapes) out.emplace_back(s, hat.k());
  return out;
}

LinComb e_perp_k(int ell, int r, const Partition& nu, int k) {
  if (ell < 0) throw std::invalid_argument("ell must be nonnegative");
  if (r < 1 || r > k) throw std::invalid_argument("r must lie between 1 and k");
  if (nu.part(1) > r)
    throw std::invalid_argument("nu's first part must be at most r");
  const Partition lambda = nu.prepend(r);
  const Core gamma = Core::from_bounded(lambda, k);
  const Core hat = gamma.tail();
  if (!(hat == Core::from_bounded(nu, k)))
    throw std::logic_error("rows above the first row are not the core of nu");
  const MainSubpartition msp = main_subpartition(gamma);
  LinComb out(Basis::kschur, k);
  for (const Core& delta : vertical_strips(hat, msp.length, ell))
    out.add_term(delta.to_bounded(), 1);
  return out;
}

LinComb apply_b(int r, const LinComb& f) {
  if (f.basis() != Basis::kschur)
    throw std::invalid_argument("apply_b acts on the kschur basis");
  const int k = f.k();
  if (r < 1 || r > k) throw std::invalid_argument("r must lie between 1 and k");
  LinComb acc(Basis::kschur, k);
  for (const auto& [nu, c] : f.terms()) {
    if (nu.part(1) > r)
      throw std::invalid_argument(
          "apply_b needs every index's first part at most r");
    for (int ell = 0; ell <= k - r; ++ell) {
      const LinComb raised = multiply_h(r + ell, e_perp_k(ell, r, nu, k));
      acc += raised * checked_mul(c, ell % 2 == 0 ? 1 : -1);
    }
  }
  return acc;
}

std::vector<std::pair<int, Partition>> apply_b_expanded(int r,
                                                        const Partition& nu,
                                                        int k) {
  std::vector<std::pair<int, Partition>> out;
  for (int ell = 0; ell <= k - r; ++ell) {
    const int sign = ell % 2 == 0 ? 1 : -1;
    const LinComb skewed = e_perp_k(ell, r, nu, k);
    for (const auto& [mu, c] : skewed.terms()) {
      if (c != 1)
        throw std::logic_error("vertical strip enumeration repeated a shape");
      const LinComb raised = multiply_h(r + ell, mu, k);
      for (const auto& [index, d] : raised.terms()) {
        if (d != 1)
          throw std::logic_error("Pieri product is not multiplicity free");
        out.emplace_back(sign, index);
      }
    }
  }
  return out;
}

LinComb kschur_by_recursion(const Partition& lambda, int k) {
  if (lambda.part(1) > k)
    throw std::invalid_argument("partition is not k-bounded");
  LinComb f = LinComb::unit(Basis::kschur, Partition(), k);
  for (int i = lambda.length(); i >= 1; --i) f = apply_b(lambda.part(i), f);
  return f;
}

std::vector<StripSequence> strip_sequences(const Partition& lambda, int k) {
  const Core gamma = Core::from_bounded(lambda, k);
  std::vector<StripSequence> out;
  std::vector<Core> chain;
  std::vector<int> ells, first_rows;
  // The strips below a core do not depend on the path taken to it.
  std::map<Partition, std::vector<std::pair<int, std::vector<Core>>>,
           PartitionDescLex>
      memo;
  std::function<void(const Core&)> rec = [&](const Core& g) {
    chain.push_back(g);
    if (g.empty()) {
      StripSequence s;
      s.chain.assign(chain.rbegin(), chain.rend());
      s.ells.assign(ells.rbegin(), ells.rend());
      s.first_rows.assign(first_rows.rbegin(), first_rows.rend());
      std::vector<int> parts;
      for (std::size_t i = 0; i < s.ells.size(); ++i) {
        parts.push_back(s.ells[i] + s.first_rows[i]);
        if (s.ells[i] % 2 != 0) s.sign = -s.sign;
      }
      s.part = Partition::sorted(std::move(parts));
      out.push_back(std::move(s));
      chain.pop_back();
      return;
    }
    auto it = memo.find(g.shape());
    if (it == memo.end()) {
      const Core hat = g.tail();
      const int m = main_subpartition(g).length;
      std::vector<std::pair<int, std::vector<Core>>> options;
      for (int ell = 0; ell <= m; ++ell) {
        std::vector<Core> deltas = vertical_strips(hat, m, ell);
        for (const Core& d : deltas)
          if (hat.bounded_cells() - d.bounded_cells() != ell)
            throw std::logic_error("strip removal count disagrees with ell");
        options.emplace_back(ell, std::move(deltas));
      }
      it = memo.emplace(g.shape(), std::move(options)).first;
    }
    const int p = g.to_bounded().part(1);
    for (const auto& [ell, deltas] : it->second) {
      for (const Core& delta : deltas) {
        ells.push_back(ell);
        first_rows.push_back(p);
        rec(delta);
        ells.pop_back();
        first_rows.pop_back();
      }
    }
    chain.pop_back();
  };
  rec(gamma);
  return out;
}

LinComb h_expansion_via_strips(const Partition& lambda, int k) {
  LinComb out(Basis::h);
  for (const StripSequence& s : strip_sequences(lambda, k))
    out.add_term(s.part, s.sign);
  return out;
}

}  // namespace kschur
