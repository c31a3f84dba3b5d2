#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dirosc/matrix.hpp"
#include "dirosc/minkowski.hpp"

namespace dirosc {

// Concrete gamma matrices for one spacetime dimension, exact entries.
//
// Conventions (sigma^k the Pauli matrices):
//   (1+1):           gamma0 = sigma3, gamma1 = i*sigma1
//   (2+1) irred.:    gamma0 = sigma3, gamma1 = i*sigma1, gamma2 = i*sigma2
//                    (variant flag flips gamma2 to -i*sigma2, the second
//                    inequivalent choice)
//   (2+1) reducible: block-diagonal pair of the two inequivalent 2x2
//                    representations, diag(gamma, -gamma)
//   (3+1):           standard Dirac representation
//
// gamma5: gamma0*gamma1 in (1+1); offdiag(I, I) in (2+1) reducible;
// i*gamma0*gamma1*gamma2*gamma3 in (3+1). The irreducible (2+1)
// representation has none (gamma0*gamma1*gamma2 is proportional to the
// identity).
class GammaRep {
 public:
  Dim dim;
  bool reducible = false;
  bool variant = false;
  std::size_t size = 2;
  std::vector<SpinorMatrix> gammas;

  const SpinorMatrix& gamma(int mu) const { return gammas.at(static_cast<std::size_t>(mu)); }
  bool has_gamma5() const { return !gamma5_.empty(); }
  const SpinorMatrix& gamma5() const;

  // Internal, set by make_rep.
  std::vector<SpinorMatrix> gamma5_;
};

// Builds the representation and verifies {gamma^mu, gamma^nu} = 2 eta^mu^nu I
// exactly. `reducible` is only meaningful in (2+1).
GammaRep make_rep(Dim dim, bool reducible = false, bool variant = false);

struct DiracMatrices {
  SpinorMatrix beta;                 // gamma0
  std::vector<SpinorMatrix> alphas;  // alpha_j = gamma0 gamma^j
};

DiracMatrices derived(const GammaRep& rep);

// sigma^mu^nu = (i/2) [gamma^mu, gamma^nu]
SpinorMatrix sigma(const GammaRep& rep, int mu, int nu);

struct ChiralProjectors {
  SpinorMatrix P_R;  // (I + gamma5)/2
  SpinorMatrix P_L;  // (I - gamma5)/2
};

// Throws NoChiralityError for the irreducible (2+1) representation.
ChiralProjectors chiral_projectors(const GammaRep& rep);

// ---------------------------------------------------------------------------
// Exact symbolic algebra of gamma products. A word is a bitmask over the
// index set {0..dim}; the word denotes the ascending-ordered product of the
// corresponding gammas. Any product of gammas reduces to +/- one word via
// the anticommutation relations, with (gamma^0)^2 = I and (gamma^i)^2 = -I.

struct GammaWord {
  int sign = 1;            // +1 or -1
  std::uint32_t mask = 0;  // ascending product of set indices; 0 = identity

  friend bool operator==(const GammaWord& a, const GammaWord& b) {
    return a.sign == b.sign && a.mask == b.mask;
  }
};

GammaWord gamma_word_mul(const GammaWord& a, const GammaWord& b);

// Number of gamma factors mod 2; even words commute with gamma5, odd ones
// anticommute.
inline bool gamma_word_odd(std::uint32_t mask) { return __builtin_popcount(mask) & 1; }

// Concrete matrix for a word in the given representation.
SpinorMatrix realize(const GammaRep& rep, const GammaWord& word);

std::string gamma_word_str(const GammaWord& word);

}  // namespace dirosc
