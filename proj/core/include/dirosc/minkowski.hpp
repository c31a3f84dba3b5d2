#pragma once

#include <vector>

#include "dirosc/poly.hpp"
#include "dirosc/universe.hpp"

namespace dirosc {

enum class Variance { Contravariant, Covariant };

// Metric signature is fixed to (+, -, ..., -): eta_00 = +1, eta_ii = -1.
inline int metric_sign(int mu) { return mu == 0 ? 1 : -1; }

// Dimension-tagged spacetime vector with polynomial components, index 0 =
// time. The variance tag is explicit; dot products take contravariant
// operands and lower internally.
class FourVector {
 public:
  FourVector(Dim dim, std::vector<PolyExpr> components,
             Variance variance = Variance::Contravariant);

  static FourVector zero(Dim dim, const UniversePtr& u);
  // x^mu = (t, x, ...), contravariant.
  static FourVector coordinate(Dim dim, const UniversePtr& u);
  // Rest-frame four-velocity U^mu = (1, 0, ...).
  static FourVector rest_velocity(Dim dim, const UniversePtr& u);

  Dim dim() const { return dim_; }
  Variance variance() const { return variance_; }
  const PolyExpr& operator[](int mu) const { return comps_[static_cast<std::size_t>(mu)]; }
  PolyExpr& operator[](int mu) { return comps_[static_cast<std::size_t>(mu)]; }

  FourVector lower() const;
  FourVector raise() const;

  FourVector scaled(const PolyExpr& s) const;

  friend bool operator==(const FourVector& a, const FourVector& b);
  friend bool operator!=(const FourVector& a, const FourVector& b) { return !(a == b); }

  std::string str() const;

 private:
  Dim dim_;
  Variance variance_;
  std::vector<PolyExpr> comps_;
};

// Lorentz dot product sum_mu_nu eta_mu_nu u^mu v^nu of two contravariant
// vectors.
PolyExpr dot(const FourVector& u, const FourVector& v);

}  // namespace dirosc
