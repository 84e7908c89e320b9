#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "kschur/partition.hpp"

namespace kschur {

enum class Basis { h, schur, kschur };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

// Overflow-checked 64-bit arithmetic; throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Linear combination over one basis with exact integer coefficients.
// Terms are kept in descending lexicographic order of their index and
// zero coefficients are dropped, so iteration order, equality and text
// output are canonical.  The kschur basis carries the level k and only
// accepts k-bounded indices.
class LinComb {
 public:
  using TermMap = std::map<Partition, std::int64_t, PartitionDescLex>;

  explicit LinComb(Basis basis, int k = 0);
  static LinComb unit(Basis basis, const Partition& index, int k = 0);

  Basis basis() const { return basis_; }
  int k() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  int size() const { return static_cast<int>(terms_.size()); }

  std::int64_t coeff(const Partition& index) const;
  void add_term(const Partition& index, std::int64_t c);

  LinComb& operator+=(const LinComb& rhs);
  LinComb& operator-=(const LinComb& rhs);
  LinComb& operator*=(std::int64_t s);
  friend LinComb operator+(LinComb lhs, const LinComb& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LinComb operator-(LinComb lhs, const LinComb& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LinComb operator*(LinComb lhs, std::int64_t s) {
    lhs *= s;
    return lhs;
  }

  const TermMap& terms() const { return terms_; }

  // e.g. "h[2,2,2,1] - 2 h[3,2,1,1] + h[3,3,1]"; the zero sum is "0".
  std::string to_text() const;

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Basis basis_;
  int k_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LinComb& f);

}  // namespace kschur
