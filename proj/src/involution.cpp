#include "kschur/involution.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

#include "kschur/enumeration.hpp"

namespace kschur {

OXPair::OXPair(Partition lambda, int k, Core delta, ResidueSet set)
    : lambda_(std::move(lambda)),
      k_(k),
      delta_(std::move(delta)),
      set_(set),
      gamma_(Core::from_bounded(lambda_, k)),
      hat_(gamma_.tail()),
      sigma_delta_([&] {
        auto moved = sigma(delta_, set_);
        if (!moved)
          throw std::invalid_argument("residue action undefined on delta");
        return *moved;
      }()),
      msp_(main_subpartition(gamma_)) {
  if (delta_.k() != k_ || set_.k() != k_)
    throw std::invalid_argument("pair components disagree on k");
  if (lambda_.empty())
    throw std::invalid_argument("lambda must be nonempty");
  if (!hat_.shape().contains(delta_.shape()))
    throw std::invalid_argument("delta not contained above the first row");
  const int ell = set_.size() - lambda_.part(1);
  if (ell < 0 || ell > k_ - lambda_.part(1))
    throw std::invalid_argument("residue set has the wrong size");
  if (sigma_delta_.bounded_cells() != lambda_.degree())
    throw std::invalid_argument("residue action misses the degree of lambda");
  // The added cells form a horizontal strip, so no column gains two.
  const Partition before = delta_.shape().conjugate();
  const Partition after = sigma_delta_.shape().conjugate();
  for (int c = 1; c <= sigma_delta_.shape().part(1); ++c)
    if (after.part(c) - before.part(c) > 1)
      throw std::invalid_argument("residue action added two cells in a column");
}

std::vector<OXPair> d_pairs(const Partition& lambda, int k) {
  if (lambda.empty())
    throw std::invalid_argument("lambda must be nonempty");
  if (lambda.part(1) > k)
    throw std::invalid_argument("partition is not k-bounded");
  const Core gamma = Core::from_bounded(lambda, k);
  const Core hat = gamma.tail();
  const MainSubpartition msp = main_subpartition(gamma);
  std::vector<OXPair> out;
  for (int ell = 0; ell <= k - lambda.part(1); ++ell) {
    for (const Core& delta : vertical_strips(hat, msp.length, ell)) {
      for (const ResidueSet& set :
           subsets_of_size(k, lambda.part(1) + ell)) {
        auto moved = sigma(delta, set);
        if (moved && moved->bounded_cells() == lambda.degree())
          out.emplace_back(lambda, k, delta, set);
      }
    }
  }
  return out;
}

std::vector<Cell> changeable_cells(const OXPair& p) {
  const Partition& moved = p.sigma_delta().shape();
  const Partition conj = moved.conjugate();
  const Partition& hat = p.gamma_hat().shape();
  std::vector<Cell> out;
  for (int c = 1; c <= moved.part(1); ++c) {
    const int top = conj.part(c);
    if (hat.part(top) >= c) out.push_back({top, c});
  }
  return out;
}

namespace {

[[noreturn]] void structural_failure(const OXPair& p, const std::string& what) {
  std::cerr << "OX structure violated: " << what << "\n"
            << "lambda = " << p.lambda() << ", k = " << p.k()
            << ", delta = " << p.delta().shape() << ", A = " << p.residues()
            << "\n"
            << render_ox(p) << "\n";
  throw std::logic_error("OX structure violated: " + what);
}

void expect(bool ok, const OXPair& p, const std::string& what) {
  if (!ok) structural_failure(p, what);
}

}  // namespace

OXPair unique_no_changeable(const Partition& lambda, int k) {
  std::vector<OXPair> hits;
  for (const OXPair& p : d_pairs(lambda, k))
    if (changeable_cells(p).empty()) hits.push_back(p);
  if (hits.size() != 1)
    throw std::logic_error("expected exactly one pair without changeable "
                           "cells, found " +
                           std::to_string(hits.size()));
  const OXPair& p = hits.front();
  expect(p.delta().shape() == p.gamma_hat().shape(), p,
         "survivor's delta is not the full upper core");
  expect(p.sigma_delta() == p.gamma(), p,
         "survivor's residue action does not restore the full core");
  // B holds exactly the residues of the top cells of the columns of
  // gamma from the main subpartition's first column rightward.
  const Partition& g = p.gamma().shape();
  const Partition conj = g.conjugate();
  ResidueSet expected(k);
  for (int c = p.msp().start_column; c <= g.part(1); ++c)
    expected = expected.with(residue(conj.part(c), c, k));
  expect(expected == p.residues(), p,
         "survivor's residues are not the column tops beside the main "
         "subpartition");
  return p;
}

OXPair phi(const OXPair& p) {
  const std::vector<Cell> cells = changeable_cells(p);
  if (cells.empty())
    throw std::invalid_argument("phi needs a changeable cell");
  const Cell c = cells.back();
  const int k = p.k();
  const int n = k + 1;
  const int i = c.row;
  const int r = residue(c.row, c.col, k);
  const Partition& delta = p.delta().shape();
  const Partition& hat = p.gamma_hat().shape();
  const Partition& moved = p.sigma_delta().shape();
  const ResidueSet& set = p.residues();

  // No O cell may sit strictly right of the rightmost changeable cell,
  // and that cell must lie in the main subpartition.
  for (int row = 1; row <= hat.length(); ++row)
    expect(hat.part(row) <= std::max(delta.part(row), c.col), p,
           "an O cell lies right of the rightmost changeable cell");
  expect(c.col >= p.msp().start_column, p,
         "rightmost changeable cell left of the main subpartition");

  const bool empty_cell = delta.part(i) >= c.col;

  if (!empty_cell) {
    // The cell carries an OX: remove the ribbon of OX cells in its row.
    expect(set.contains(r), p, "OX case: r missing from A");
    expect(hat.part(i) <= moved.part(i), p,
           "OX case: an O cell in the row is not an X cell");
    expect(c.col == hat.part(i), p,
           "OX case: rightmost changeable cell is not the row's last O");
    const int rp = residue(i, delta.part(i) + 1, k);
    expect(!set.contains(rp - 1), p, "OX case: r'-1 lies in A");
    auto flipped = transposition(p.delta(), rp, r + 1);
    expect(flipped.has_value(), p, "OX case: transposition undefined");
    expect(flipped->shape().contains(delta) &&
               flipped->bounded_cells() == p.delta().bounded_cells() + 1,
           p, "OX case: transposition is not an upward cover");
    OXPair image(p.lambda(), k, *flipped, set.without(r));
    expect(image.sigma_delta() == p.sigma_delta(), p,
           "OX case: the image moves sigma_A(delta)");
    return image;
  }

  // The cell is empty: add a ribbon ending at the leftmost changeable
  // cell of the row whose residue interval up to r lies in A.
  expect(!set.contains(r), p, "empty case: r already in A");
  Cell b = c;
  for (const Cell& cand : cells) {
    if (cand.row != i) continue;
    const int rc = residue(cand.row, cand.col, k);
    bool ok = true;
    for (int t = rc; t != r; t = (t + 1) % n)
      if (!set.contains(t)) {
        ok = false;
        break;
      }
    if (ok) {
      b = cand;
      break;
    }
  }
  const int rp = residue(b.row, b.col, k);
  expect(!set.contains(rp - 1), p, "empty case: r'-1 lies in A");
  auto flipped = transposition(p.delta(), rp, r + 1);
  expect(flipped.has_value(), p, "empty case: transposition undefined");
  expect(delta.contains(flipped->shape()) &&
             flipped->bounded_cells() + 1 == p.delta().bounded_cells(),
         p, "empty case: transposition is not a downward cover");
  OXPair image(p.lambda(), k, *flipped, set.with(r));
  expect(image.sigma_delta() == p.sigma_delta(), p,
         "empty case: the image moves sigma_A(delta)");
  return image;
}

std::string render_ox(const OXPair& p) {
  const Partition& delta = p.delta().shape();
  const Partition& hat = p.gamma_hat().shape();
  const Partition& moved = p.sigma_delta().shape();
  const int height = std::max(hat.length(), moved.length());
  std::string out;
  for (int row = height; row >= 1; --row) {
    const int width = std::max(hat.part(row), moved.part(row));
    std::string line;
    for (int col = 1; col <= width; ++col) {
      const bool in_delta = delta.part(row) >= col;
      const bool in_moved = moved.part(row) >= col;
      const bool in_hat = hat.part(row) >= col;
      const bool x = in_moved && !in_delta;
      const bool o = in_hat && !in_delta;
      if (x && o)
        line += "⊠";
      else if (x)
        line += "X";
      else if (o)
        line += "O";
      else if (in_delta)
        line += "·";
      else
        line += " ";
    }
    out += line;
    out += "\n";
  }
  return out;
}

}  // namespace kschur
