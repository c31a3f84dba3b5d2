#pragma once

#include <vector>

#include "dirosc/matrix.hpp"
#include "dirosc/minkowski.hpp"

namespace dirosc {

// Electromagnetic four-potential A^mu = (phi, A_vec), contravariant
// polynomial components.
struct Potential {
  Dim dim;
  FourVector A;

  Potential(Dim d, FourVector a) : dim(d), A(std::move(a)) {
    if (A.dim() != dim) throw DimensionMismatchError("potential component count");
    if (A.variance() != Variance::Contravariant)
      throw VarianceError("potentials are stored contravariant");
  }

  friend bool operator==(const Potential& a, const Potential& b) {
    return a.dim == b.dim && a.A == b.A;
  }
};

struct GaugeFn {
  Dim dim;
  PolyExpr lambda;
};

// E has one entry per spatial dimension. B is the pseudoscalar z-component
// for one or two spatial dimensions (a single entry) and the full
// three-vector for three.
struct FieldPair {
  Dim dim;
  std::vector<PolyExpr> E;
  std::vector<PolyExpr> B;

  friend bool operator==(const FieldPair& a, const FieldPair& b) {
    return a.dim == b.dim && a.E == b.E && a.B == b.B;
  }
};

// Antisymmetric field tensor with covariant (lower) indices.
struct FieldTensor {
  Dim dim;
  PolyMatrix F;

  FieldTensor(Dim d, PolyMatrix f) : dim(d), F(std::move(f)) {
    if (F.size() != static_cast<std::size_t>(dim.total()))
      throw DimensionMismatchError("field tensor size");
  }

  friend bool operator==(const FieldTensor& a, const FieldTensor& b) {
    return a.dim == b.dim && a.F == b.F;
  }
};

// E_i = -d_i A^0 - d_t A^i; B = curl of the spatial part (the scalar
// d_x A^y - d_y A^x in two spatial dimensions, identically zero in one).
FieldPair fields_from_potential(const Potential& A);

// A'^mu = A^mu - eta^mu^nu d_nu Lambda. The raised gradient keeps E and B
// invariant for every polynomial gauge function; it reproduces the
// transformed potentials of both derivation chains up to the sign
// bookkeeping pinned in the verification suites.
Potential gauge_transform(const Potential& A, const GaugeFn& g);

// A'^mu = (c/4) [2 (U.x) x^mu - x^2 U^mu] in the rest frame U = (1, 0...).
Potential covariant_potential(const std::string& constant_name, Dim dim, const UniversePtr& u);

// F_mu_nu = d_mu A_nu - d_nu A_mu with A lowered first; F_0i = E_i.
FieldTensor field_tensor_from_potential(const Potential& A);

// The rest-frame tensor with components F_01 = c*x, F_02 = c*y (built as
// F_mu_nu = c (x_mu U_nu - x_nu U_mu) with lowered entries). It equals
// field_tensor_from_potential(covariant_potential(c)) after raising both
// indices.
FieldTensor covariant_field_tensor(const std::string& constant_name, Dim dim,
                                   const UniversePtr& u);

// F^mu^nu = eta^mu^mu' eta^nu^nu' F_mu'_nu' (entrywise sign map).
FieldTensor raised(const FieldTensor& F);

// Magnitude of the uniform field sustaining circular motion at frequency
// omega: m*omega*q_inv.
PolyExpr larmor_field(const UniversePtr& u);

// zeta = 2*m*a^2*q_inv*v_inv^2 from the kinematics of uniformly
// accelerated motion.
PolyExpr zeta_from_kinematics(const UniversePtr& u);

// zeta = -dE/dx for a linear electric field E(x).
PolyExpr zeta_from_gradient(const PolyExpr& E);

// The lab-frame potentials the verification chains start from:
// rho*(0, y, -x) in (2+1) and zeta*(0, t*x) in (1+1).
Potential uniform_field_lab_potential(Dim dim, const UniversePtr& u);

// The gauge functions that covariantize them:
// -(rho/4)*(t*x^2 + t*y^2 + t^3/3) and -(zeta/4)*(t*x^2 + t^3/3).
GaugeFn covariantizing_gauge_function(Dim dim, const UniversePtr& u);

}  // namespace dirosc
