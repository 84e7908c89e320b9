#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "kschur/partition.hpp"

namespace kschur {

// (col - row) mod (k+1), reduced into [0, k].
int residue(int row, int col, int k);

// A (k+1)-core: a partition none of whose cells has hook length exactly
// k+1.  Cells of hook length <= k are called k-bounded; counting them by
// row gives the k-bounded partition attached to the core, and that map
// is a bijection onto partitions with parts <= k.
class Core {
 public:
  Core(Partition shape, int k);

  // Inverse of to_bounded: builds the core of a partition with parts
  // <= k by attaching its rows from the top one down, each new bottom
  // row pushed right just far enough that the attachment stays a skew
  // diagram and creates no cell of hook length > k.
  static Core from_bounded(const Partition& lambda, int k);

  const Partition& shape() const { return shape_; }
  int k() const { return k_; }
  int degree() const { return shape_.degree(); }
  bool empty() const { return shape_.empty(); }

  // Number of k-bounded cells in each row, and in total.
  std::vector<int> bounded_row_counts() const;
  int bounded_cells() const;
  Partition to_bounded() const;

  // The core formed by the rows above the first row.
  Core tail() const;

  friend bool operator==(const Core& a, const Core& b) {
    return a.k_ == b.k_ && a.shape_ == b.shape_;
  }

 private:
  Partition shape_;
  int k_;
};

std::ostream& operator<<(std::ostream& os, const Core& c);

// Subset of the residues {0, ..., k}.
class ResidueSet {
 public:
  explicit ResidueSet(int k);
  ResidueSet(int k, std::initializer_list<int> elems);
  ResidueSet(int k, const std::vector<int>& elems);
  static ResidueSet from_mask(int k, std::uint32_t mask);

  int k() const { return k_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  // r is reduced mod k+1.
  bool contains(int r) const;
  bool proper() const;
  ResidueSet with(int r) const;
  ResidueSet without(int r) const;
  std::uint32_t mask() const { return mask_; }
  std::vector<int> elements() const;

  // Maximal runs of cyclically consecutive residues, as (first, last)
  // pairs; e.g. {0,1,3,4,6,8} with k = 8 gives [3,4], [6,6], [8,1].
  // Requires a proper subset.
  std::vector<std::pair<int, int>> cyclic_components() const;

  std::string to_text() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  int k_;
  std::uint32_t mask_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ResidueSet& s);

// Adds every addable corner of residue i if there is one, otherwise
// removes every removable corner of residue i, otherwise returns nullopt
// (the action is undefined).  A core never has both kinds at once.
std::optional<Core> sigma(const Core& core, int i);

// Applies sigma for each cyclic component [a,b] of the set as the word
// sigma_b ... sigma_{a+1} sigma_a (sigma_a acts first); components
// commute.  nullopt if any step is undefined.
std::optional<Core> sigma(const Core& core, const ResidueSet& set);

// The affine transposition t_{r,s} as the palindromic word
// sigma_r sigma_{r+1} ... sigma_{s-1} ... sigma_{r+1} sigma_r with the
// indices taken mod k+1; requires r != s mod k+1.
std::optional<Core> transposition(const Core& core, int r, int s);

// delta < gamma with one fewer k-bounded cell.
bool is_strong_cover(const Core& delta, const Core& gamma);

// Connected skew component with one cell per diagonal.
struct Ribbon {
  std::vector<Cell> cells;  // sorted by (row, col), ascending
  Cell head;                // the cell on the largest diagonal
  int residue_lo = 0;       // residue of the smallest diagonal
  int residue_hi = 0;       // residue of the head
  bool horizontal() const {
    return cells.front().row == cells.back().row;
  }
  int lowest_row() const { return cells.front().row; }
};

// Decomposes gamma/delta for a strong cover into its connected
// components, lowest component first, checking that they are translated
// copies of one ribbon of size <= k whose heads sit on consecutive
// diagonals of one residue.
std::vector<Ribbon> ribbon_components(const Core& delta, const Core& gamma);

}  // namespace kschur
