#include "kschur/lincomb.hpp"

#include <ostream>
#include <stdexcept>

namespace kschur {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::h:
      return "h";
    case Basis::schur:
      return "schur";
    case Basis::kschur:
      return "kschur";
  }
  throw std::logic_error("unreachable basis tag");
}

Basis basis_from_name(const std::string& name) {
  if (name == "h") return Basis::h;
  if (name == "schur") return Basis::schur;
  if (name == "kschur") return Basis::kschur;
  throw std::invalid_argument("unknown basis \"" + name + "\"");
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

LinComb::LinComb(Basis basis, int k) : basis_(basis), k_(k) {
  if (basis_ == Basis::kschur) {
    if (k_ < 1) throw std::invalid_argument("kschur basis needs k >= 1");
  } else if (k_ != 0) {
    throw std::invalid_argument("only the kschur basis carries k");
  }
}

LinComb LinComb::unit(Basis basis, const Partition& index, int k) {
  LinComb f(basis, k);
  f.add_term(index, 1);
  return f;
}

std::int64_t LinComb::coeff(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? 0 : it->second;
}

void LinComb::add_term(const Partition& index, std::int64_t c) {
  if (basis_ == Basis::kschur && index.part(1) > k_)
    throw std::invalid_argument("kschur index must be k-bounded");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(index, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {
void require_same_space(const LinComb& a, const LinComb& b) {
  if (a.basis() != b.basis() || a.k() != b.k())
    throw std::invalid_argument("mixing different bases");
}
}  // namespace

LinComb& LinComb::operator+=(const LinComb& rhs) {
  require_same_space(*this, rhs);
  for (const auto& [index, c] : rhs.terms_) add_term(index, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& rhs) {
  require_same_space(*this, rhs);
  for (const auto& [index, c] : rhs.terms_)
    add_term(index, checked_mul(c, -1));
  return *this;
}

LinComb& LinComb::operator*=(std::int64_t s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, c] : terms_) c = checked_mul(c, s);
  return *this;
}

std::string LinComb::to_text() const {
  if (terms_.empty()) return "0";
  std::string label;
  switch (basis_) {
    case Basis::h:
      label = "h";
      break;
    case Basis::schur:
      label = "s";
      break;
    case Basis::kschur:
      label = "s^" + std::to_string(k_);
      break;
  }
  std::string out;
  bool first = true;
  for (const auto& [index, c] : terms_) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + " ";
    out += label + "[" + index.to_text() + "]";
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LinComb& f) {
  return os << f.to_text();
}

}  // namespace kschur
