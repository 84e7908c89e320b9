#pragma once

#include <string>
#include <vector>

#include "kschur/core.hpp"
#include "kschur/kbernstein.hpp"
#include "kschur/partition.hpp"

namespace kschur {

// A pair (delta, A) in the cancellation domain of lambda: delta is a
// vertical strip removal from hat = core(lambda) minus its first row,
// and A is a residue set of size lambda_1 + ell whose action on delta
// is defined and restores the degree of lambda.  Drawn as an OX
// diagram: O marks hat/delta, X marks sigma_A(delta)/delta.
class OXPair {
 public:
  OXPair(Partition lambda, int k, Core delta, ResidueSet set);

  const Partition& lambda() const { return lambda_; }
  int k() const { return k_; }
  const Core& delta() const { return delta_; }
  const ResidueSet& residues() const { return set_; }
  const Core& gamma() const { return gamma_; }
  const Core& gamma_hat() const { return hat_; }
  const Core& sigma_delta() const { return sigma_delta_; }
  const MainSubpartition& msp() const { return msp_; }

  // |A| - lambda_1: the number of strip rows removed below delta.
  int ell() const { return set_.size() - lambda_.part(1); }

  friend bool operator==(const OXPair& a, const OXPair& b) {
    return a.lambda_ == b.lambda_ && a.k_ == b.k_ &&
           a.delta_.shape() == b.delta_.shape() && a.set_ == b.set_;
  }

 private:
  Partition lambda_;
  int k_;
  Core delta_;
  ResidueSet set_;
  Core gamma_;
  Core hat_;
  Core sigma_delta_;
  MainSubpartition msp_;
};

// Every pair of the cancellation domain of lambda, in deterministic
// order (ell ascending, then delta, then residue mask).
std::vector<OXPair> d_pairs(const Partition& lambda, int k);

// Cells of sigma_A(delta) that lie at the top of their column and
// inside gamma_hat, by ascending column (at most one per column).
std::vector<Cell> changeable_cells(const OXPair& p);

// The single pair without changeable cells: (gamma_hat, B) with
// sigma_B(gamma_hat) = gamma; checks that B consists of the residues of
// the top cells of the columns of gamma from the main subpartition's
// first column rightward.
OXPair unique_no_changeable(const Partition& lambda, int k);

// The sign-reversing involution on the pairs with changeable cells:
// flips a ribbon through the rightmost changeable cell, moving one
// residue in or out of A while preserving sigma_A(delta).  Structural
// claims are checked and violations throw std::logic_error after
// dumping the OX diagram to standard error.
OXPair phi(const OXPair& p);

// Plain-text OX diagram, top row first: 'O', 'X', U+22A0 for both,
// U+00B7 for cells of delta.
std::string render_ox(const OXPair& p);

}  // namespace kschur
