#include "kschur/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kschur {

std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << "(" << c.row << "," << c.col << ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::sorted(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<int>());
  return Partition(std::move(values));
}

namespace {
std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}
}  // namespace

Partition Partition::parse(const std::string& text) {
  const std::string body = trimmed(text);
  if (body.empty()) return Partition();
  std::vector<int> parts;
  std::stringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trimmed(tok);
    try {
      std::size_t used = 0;
      int value = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      parts.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition text: \"" + text + "\"");
    }
  }
  return Partition(std::move(parts));
}

int Partition::degree() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("row index must be at least 1");
  return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::contains_cell(int i, int j) const {
  return i >= 1 && j >= 1 && j <= part(i);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_[0], 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) conj[c] += 1;
  return Partition(std::move(conj));
}

Partition Partition::tail() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::prepend(int r) const {
  if (r < part(1))
    throw std::invalid_argument("prepended part must be at least the first part");
  std::vector<int> parts;
  parts.reserve(parts_.size() + 1);
  parts.push_back(r);
  parts.insert(parts.end(), parts_.begin(), parts_.end());
  return Partition(std::move(parts));
}

int Partition::hook_length(int i, int j) const {
  if (!contains_cell(i, j)) throw std::invalid_argument("cell outside shape");
  const Partition conj = conjugate();
  return part(i) - j + conj.part(j) - i + 1;
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::string Partition::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << "(" << p.to_text() << ")";
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.degree() != b.degree()) return false;
  int sa = 0, sb = 0;
  const int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

std::vector<Cell> removable_corners(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 1; i <= p.length(); ++i)
    if (p.part(i) > p.part(i + 1)) out.push_back({i, p.part(i)});
  return out;
}

std::vector<Cell> addable_corners(const Partition& p) {
  std::vector<Cell> out;
  out.push_back({1, p.part(1) + 1});
  for (int i = 2; i <= p.length(); ++i)
    if (p.part(i) < p.part(i - 1)) out.push_back({i, p.part(i) + 1});
  if (p.length() >= 1) out.push_back({p.length() + 1, 1});
  return out;
}

std::vector<Cell> extremal_cells(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = std::max(1, p.part(i + 1)); j <= p.part(i); ++j)
      out.push_back({i, j});
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("inner shape not contained in outer shape");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
      out.push_back({i, j});
  return out;
}

bool SkewShape::is_horizontal_strip() const {
  const Partition oc = outer_.conjugate();
  const Partition ic = inner_.conjugate();
  for (int c = 1; c <= outer_.part(1); ++c)
    if (oc.part(c) - ic.part(c) > 1) return false;
  return true;
}

bool SkewShape::is_vertical_strip() const {
  for (int i = 1; i <= outer_.length(); ++i)
    if (outer_.part(i) - inner_.part(i) > 1) return false;
  return true;
}

}  // namespace kschur
