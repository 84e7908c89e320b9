#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace kschur {

// Diagram cell (i, j): row i counted from 1 at the bottom (French
// convention), column j from 1 at the left.  All shapes in this library
// use this convention.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::ostream& operator<<(std::ostream& os, const Cell& c);

// Integer partition: weakly decreasing positive parts, stored without
// trailing zeros.  Immutable value type.
class Partition {
 public:
  Partition() = default;
  // Accepts weakly decreasing parts; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);

  // Builds a partition from values in any order; zeros are dropped.
  static Partition sorted(std::vector<int> values);

  // Parses "4,3,2,2,1"; the empty string is the empty partition.
  static Partition parse(const std::string& text);

  int length() const { return static_cast<int>(parts_.size()); }
  int degree() const;
  bool empty() const { return parts_.empty(); }

  // 1-based row size; rows beyond the last have size 0.
  int part(int i) const;
  const std::vector<int>& parts() const { return parts_; }

  bool contains_cell(int i, int j) const;

  Partition conjugate() const;
  // The partition without its first (= bottom) part.
  Partition tail() const;
  // (r, lambda_1, lambda_2, ...); requires r >= lambda_1.
  Partition prepend(int r) const;

  // arm + leg + 1 of cell (i, j); the cell must lie in the shape.
  int hook_length(int i, int j) const;

  // inner_i <= part(i) for all i.
  bool contains(const Partition& inner) const;

  std::string to_text() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Descending lexicographic order on the part vectors.  Within a fixed
// degree this refines dominance, so it is the canonical term order for
// triangular basis changes and for printed output.
struct PartitionDescLex {
  bool operator()(const Partition& a, const Partition& b) const {
    return a.parts() > b.parts();
  }
};

// true iff |a| = |b| and every prefix sum of a is >= that of b.
bool dominates(const Partition& a, const Partition& b);

// Cells (i,j) of p with (i,j+1) and (i+1,j) outside p.
std::vector<Cell> removable_corners(const Partition& p);
// Cells (i,j) outside p with (i,j-1) and (i-1,j) inside, together with
// the outer boundary positions (1, p_1 + 1) and (length + 1, 1).
std::vector<Cell> addable_corners(const Partition& p);
// Cells (i,j) of p with (i+1,j+1) outside p.
std::vector<Cell> extremal_cells(const Partition& p);

// Skew diagram outer/inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int degree() const { return outer_.degree() - inner_.degree(); }
  std::vector<Cell> cells() const;
  // No two cells in the same column.
  bool is_horizontal_strip() const;
  // No two cells in the same row.
  bool is_vertical_strip() const;

 private:
  Partition outer_;
  Partition inner_;
};

}  // namespace kschur
