#include "kschur/core.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace kschur {

namespace {
int mod_residue(int v, int n) {
  int m = v % n;
  return m < 0 ? m + n : m;
}
}  // namespace

int residue(int row, int col, int k) { return mod_residue(col - row, k + 1); }

Core::Core(Partition shape, int k) : shape_(std::move(shape)), k_(k) {
  if (k_ < 1) throw std::invalid_argument("k must be at least 1");
  const Partition conj = shape_.conjugate();
  for (int i = 1; i <= shape_.length(); ++i)
    for (int j = 1; j <= shape_.part(i); ++j)
      if (shape_.part(i) - j + conj.part(j) - i + 1 == k_ + 1)
        throw std::invalid_argument("shape has a cell of hook length k+1");
}

Core Core::from_bounded(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (lambda.part(1) > k)
    throw std::invalid_argument("partition is not k-bounded");
  // Partial skew diagram, bottom-up; inner[r] is the offset of row r.
  std::vector<int> outer, inner;
  auto col_height = [&](int c) {
    int h = 0;
    for (std::size_t r = 0; r < outer.size(); ++r)
      if (inner[r] < c && c <= outer[r]) ++h;
    return h;
  };
  for (int idx = lambda.length(); idx >= 1; --idx) {
    const int len = lambda.part(idx);
    int off = inner.empty() ? 0 : inner.front();
    for (;; ++off) {
      if (!outer.empty() && off + len < outer.front()) continue;
      bool ok = true;
      for (int t = 1; t <= len && ok; ++t)
        ok = (len - t) + col_height(off + t) + 1 <= k;
      if (ok) break;
    }
    outer.insert(outer.begin(), off + len);
    inner.insert(inner.begin(), off);
  }
  return Core(Partition(std::move(outer)), k);
}

std::vector<int> Core::bounded_row_counts() const {
  const Partition conj = shape_.conjugate();
  std::vector<int> counts;
  counts.reserve(shape_.length());
  for (int i = 1; i <= shape_.length(); ++i) {
    int n = 0;
    // Hook lengths decrease strictly along a row.
    for (int j = shape_.part(i); j >= 1; --j) {
      if (shape_.part(i) - j + conj.part(j) - i + 1 > k_) break;
      ++n;
    }
    counts.push_back(n);
  }
  return counts;
}

int Core::bounded_cells() const {
  int total = 0;
  for (int c : bounded_row_counts()) total += c;
  return total;
}

Partition Core::to_bounded() const { return Partition(bounded_row_counts()); }

Core Core::tail() const { return Core(shape_.tail(), k_); }

std::ostream& operator<<(std::ostream& os, const Core& c) {
  return os << c.shape() << "@" << c.k() + 1 << "-core";
}

ResidueSet::ResidueSet(int k) : k_(k) {
  if (k < 1 || k > 30) throw std::invalid_argument("k out of range");
}

ResidueSet::ResidueSet(int k, std::initializer_list<int> elems)
    : ResidueSet(k, std::vector<int>(elems)) {}

ResidueSet::ResidueSet(int k, const std::vector<int>& elems) : ResidueSet(k) {
  for (int r : elems) mask_ |= std::uint32_t{1} << mod_residue(r, k_ + 1);
}

ResidueSet ResidueSet::from_mask(int k, std::uint32_t mask) {
  ResidueSet s(k);
  if (mask >> (k + 1))
    throw std::invalid_argument("mask has bits beyond residue k");
  s.mask_ = mask;
  return s;
}

int ResidueSet::size() const { return std::popcount(mask_); }

bool ResidueSet::contains(int r) const {
  return (mask_ >> mod_residue(r, k_ + 1)) & 1u;
}

bool ResidueSet::proper() const {
  return mask_ != (std::uint32_t{1} << (k_ + 1)) - 1;
}

ResidueSet ResidueSet::with(int r) const {
  ResidueSet s = *this;
  s.mask_ |= std::uint32_t{1} << mod_residue(r, k_ + 1);
  return s;
}

ResidueSet ResidueSet::without(int r) const {
  ResidueSet s = *this;
  s.mask_ &= ~(std::uint32_t{1} << mod_residue(r, k_ + 1));
  return s;
}

std::vector<int> ResidueSet::elements() const {
  std::vector<int> out;
  for (int r = 0; r <= k_; ++r)
    if ((mask_ >> r) & 1u) out.push_back(r);
  return out;
}

std::vector<std::pair<int, int>> ResidueSet::cyclic_components() const {
  if (!proper())
    throw std::invalid_argument("cyclic components need a proper subset");
  std::vector<std::pair<int, int>> comps;
  const int n = k_ + 1;
  for (int a = 0; a < n; ++a) {
    if (!contains(a) || contains(a - 1)) continue;
    int b = a;
    while (contains(b + 1)) b = mod_residue(b + 1, n);
    comps.emplace_back(a, b);
  }
  return comps;
}

std::string ResidueSet::to_text() const {
  std::string out = "{";
  bool first = true;
  for (int r : elements()) {
    if (!first) out += ',';
    out += std::to_string(r);
    first = false;
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const ResidueSet& s) {
  return os << s.to_text();
}

std::optional<Core> sigma(const Core& core, int i) {
  const int k = core.k();
  const int res = mod_residue(i, k + 1);
  std::vector<Cell> rem, add;
  for (const Cell& c : removable_corners(core.shape()))
    if (residue(c.row, c.col, k) == res) rem.push_back(c);
  for (const Cell& c : addable_corners(core.shape()))
    if (residue(c.row, c.col, k) == res) add.push_back(c);
  if (!rem.empty() && !add.empty())
    throw std::logic_error(
        "core has both addable and removable corners of one residue");
  if (rem.empty() && add.empty()) return std::nullopt;
  std::vector<int> parts = core.shape().parts();
  if (!rem.empty()) {
    for (const Cell& c : rem) parts[c.row - 1] -= 1;
  } else {
    for (const Cell& c : add) {
      if (c.row - 1 == static_cast<int>(parts.size()))
        parts.push_back(1);
      else
        parts[c.row - 1] += 1;
    }
  }
  return Core(Partition(std::move(parts)), k);
}

std::optional<Core> sigma(const Core& core, const ResidueSet& set) {
  if (set.k() != core.k())
    throw std::invalid_argument("residue set and core disagree on k");
  const int n = core.k() + 1;
  if (set.empty()) return core;
  std::optional<Core> cur = core;
  for (const auto& [a, b] : set.cyclic_components()) {
    int t = a;
    while (cur) {
      cur = sigma(*cur, t);
      if (t == b) break;
      t = mod_residue(t + 1, n);
    }
    if (!cur) return std::nullopt;
  }
  return cur;
}

std::optional<Core> transposition(const Core& core, int r, int s) {
  const int n = core.k() + 1;
  const int d = mod_residue(s - r, n);
  if (d == 0)
    throw std::invalid_argument("transposition needs distinct residues");
  std::optional<Core> cur = core;
  for (int t = 0; t < d && cur; ++t) cur = sigma(*cur, r + t);
  for (int t = d - 2; t >= 0 && cur; --t) cur = sigma(*cur, r + t);
  return cur;
}

bool is_strong_cover(const Core& delta, const Core& gamma) {
  if (delta.k() != gamma.k())
    throw std::invalid_argument("cover comparands disagree on k");
  return gamma.shape().contains(delta.shape()) &&
         delta.shape() != gamma.shape() &&
         gamma.bounded_cells() == delta.bounded_cells() + 1;
}

std::vector<Ribbon> ribbon_components(const Core& delta, const Core& gamma) {
  if (!is_strong_cover(delta, gamma))
    throw std::invalid_argument("ribbon decomposition needs a strong cover");
  const int k = gamma.k();
  const SkewShape skew(gamma.shape(), delta.shape());
  const std::vector<Cell> all = skew.cells();
  std::set<Cell> pending(all.begin(), all.end());

  auto structural = [&](const char* what) {
    return std::logic_error(std::string("strong cover ") +
                            delta.shape().to_text() + " < " +
                            gamma.shape().to_text() + ": " + what);
  };

  std::vector<Ribbon> out;
  while (!pending.empty()) {
    std::vector<Cell> comp{*pending.begin()};
    pending.erase(pending.begin());
    for (std::size_t q = 0; q < comp.size(); ++q) {
      const Cell c = comp[q];
      for (const Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col},
                            Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}}) {
        auto it = pending.find(nb);
        if (it != pending.end()) {
          comp.push_back(*it);
          pending.erase(it);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    const std::set<Cell> in(comp.begin(), comp.end());
    std::set<int> diags;
    for (const Cell& c : comp) {
      diags.insert(c.col - c.row);
      if (in.count({c.row + 1, c.col}) && in.count({c.row, c.col + 1}) &&
          in.count({c.row + 1, c.col + 1}))
        throw structural("component contains a 2x2 block");
    }
    if (static_cast<int>(diags.size()) != static_cast<int>(comp.size()) ||
        *diags.rbegin() - *diags.begin() + 1 != static_cast<int>(comp.size()))
      throw structural("component is not a ribbon");
    Ribbon r;
    r.cells = comp;
    for (const Cell& c : comp)
      if (c.col - c.row == *diags.rbegin()) r.head = c;
    r.residue_lo = mod_residue(*diags.begin(), k + 1);
    r.residue_hi = mod_residue(*diags.rbegin(), k + 1);
    out.push_back(std::move(r));
  }

  std::sort(out.begin(), out.end(), [](const Ribbon& a, const Ribbon& b) {
    return a.cells.front() < b.cells.front();
  });

  const std::size_t size = out.front().cells.size();
  if (static_cast<int>(size) > k) throw structural("ribbon longer than k");
  auto offsets = [](const Ribbon& r) {
    std::vector<std::pair<int, int>> o;
    for (const Cell& c : r.cells)
      o.emplace_back(c.row - r.head.row, c.col - r.head.col);
    return o;
  };
  std::vector<int> head_diags;
  for (const Ribbon& r : out) {
    if (r.cells.size() != size || r.residue_lo != out.front().residue_lo ||
        r.residue_hi != out.front().residue_hi ||
        offsets(r) != offsets(out.front()))
      throw structural("components are not translated copies");
    head_diags.push_back(r.head.col - r.head.row);
  }
  std::sort(head_diags.begin(), head_diags.end());
  for (std::size_t i = 1; i < head_diags.size(); ++i)
    if (head_diags[i] - head_diags[i - 1] != k + 1)
      throw structural("ribbon heads not on consecutive diagonals");
  return out;
}

}  // namespace kschur
