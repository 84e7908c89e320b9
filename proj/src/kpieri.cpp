#include "kschur/kpieri.hpp"

#include <bit>
#include <stdexcept>

#include "kschur/enumeration.hpp"

namespace kschur {

std::vector<PieriTerm> pieri_subsets(const Partition& lambda, int ell, int k) {
  if (ell < 1 || ell > k)
    throw std::invalid_argument("ell must lie between 1 and k");
  const Core gamma = Core::from_bounded(lambda, k);
  const int target = lambda.degree() + ell;
  std::vector<PieriTerm> out;
  for (const ResidueSet& set : subsets_of_size(k, ell)) {
    auto moved = sigma(gamma, set);
    if (moved && moved->bounded_cells() == target)
      out.push_back({set, *moved});
  }
  return out;
}

LinComb multiply_h(int ell, const Partition& lambda, int k) {
  LinComb out(Basis::kschur, k);
  for (const PieriTerm& t : pieri_subsets(lambda, ell, k))
    out.add_term(t.result.to_bounded(), 1);
  return out;
}

LinComb multiply_h(int ell, const LinComb& f) {
  if (f.basis() != Basis::kschur)
    throw std::invalid_argument("multiply_h acts on the kschur basis");
  LinComb out(Basis::kschur, f.k());
  for (const auto& [index, c] : f.terms())
    out += multiply_h(ell, index, f.k()) * c;
  return out;
}

LinComb pieri_by_strips(const Partition& lambda, int ell, int k) {
  if (ell < 1 || ell > k)
    throw std::invalid_argument("ell must lie between 1 and k");
  const Core gamma = Core::from_bounded(lambda, k);
  LinComb out(Basis::kschur, k);
  for (const Partition& mu : partitions_of(lambda.degree() + ell, k)) {
    const Core cmu = Core::from_bounded(mu, k);
    if (!cmu.shape().contains(gamma.shape())) continue;
    const SkewShape skew(cmu.shape(), gamma.shape());
    if (!skew.is_horizontal_strip()) continue;
    std::uint32_t residues = 0;
    for (const Cell& c : skew.cells())
      residues |= std::uint32_t{1} << residue(c.row, c.col, k);
    if (std::popcount(residues) == ell) out.add_term(mu, 1);
  }
  return out;
}

}  // namespace kschur
