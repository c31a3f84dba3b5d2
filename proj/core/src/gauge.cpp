#include "dirosc/gauge.hpp"

namespace dirosc {

namespace {

Rational quarter() { return Rational(1, 4); }

}  // namespace

FieldPair fields_from_potential(const Potential& A) {
  const auto& u = A.A[0].universe();
  const auto coords = coordinate_names(A.dim);
  FieldPair f{A.dim, {}, {}};

  for (int i = 1; i <= A.dim.spatial; ++i) {
    PolyExpr Ei = -A.A[0].partial(coords[static_cast<std::size_t>(i)]) - A.A[i].partial("t");
    f.E.push_back(std::move(Ei));
  }

  switch (A.dim.spatial) {
    case 1:
      f.B.push_back(PolyExpr::zero(u));
      break;
    case 2:
      f.B.push_back(A.A[2].partial("x") - A.A[1].partial("y"));
      break;
    case 3:
      f.B.push_back(A.A[3].partial("y") - A.A[2].partial("z"));
      f.B.push_back(A.A[1].partial("z") - A.A[3].partial("x"));
      f.B.push_back(A.A[2].partial("x") - A.A[1].partial("y"));
      break;
    default:
      throw DimensionMismatchError("unsupported spatial dimension");
  }
  return f;
}

Potential gauge_transform(const Potential& A, const GaugeFn& g) {
  if (A.dim != g.dim) throw DimensionMismatchError("potential and gauge function dimension");
  const auto coords = coordinate_names(A.dim);
  std::vector<PolyExpr> comps;
  comps.reserve(static_cast<std::size_t>(A.dim.total()));
  for (int mu = 0; mu < A.dim.total(); ++mu) {
    PolyExpr grad = g.lambda.partial(coords[static_cast<std::size_t>(mu)]);
    if (metric_sign(mu) < 0) grad = -grad;  // raised gradient
    comps.push_back(A.A[mu] - grad);
  }
  return Potential(A.dim, FourVector(A.dim, std::move(comps)));
}

Potential covariant_potential(const std::string& constant_name, Dim dim, const UniversePtr& u) {
  FourVector x = FourVector::coordinate(dim, u);
  FourVector U = FourVector::rest_velocity(dim, u);
  PolyExpr ux = dot(U, x);
  PolyExpr x2 = dot(x, x);
  PolyExpr c = PolyExpr::symbol(u, constant_name);

  std::vector<PolyExpr> comps;
  for (int mu = 0; mu < dim.total(); ++mu) {
    PolyExpr val = ux * x[mu] * GaussianRational(2) - x2 * U[mu];
    comps.push_back(val * c * GaussianRational(quarter()));
  }
  return Potential(dim, FourVector(dim, std::move(comps)));
}

FieldTensor field_tensor_from_potential(const Potential& A) {
  const auto& u = A.A[0].universe();
  const auto coords = coordinate_names(A.dim);
  FourVector a_low = A.A.lower();
  PolyMatrix F = poly_zero_matrix(static_cast<std::size_t>(A.dim.total()), u);
  for (int mu = 0; mu < A.dim.total(); ++mu)
    for (int nu = 0; nu < A.dim.total(); ++nu)
      F(static_cast<std::size_t>(mu), static_cast<std::size_t>(nu)) =
          a_low[nu].partial(coords[static_cast<std::size_t>(mu)]) -
          a_low[mu].partial(coords[static_cast<std::size_t>(nu)]);
  return FieldTensor(A.dim, std::move(F));
}

FieldTensor covariant_field_tensor(const std::string& constant_name, Dim dim,
                                   const UniversePtr& u) {
  FourVector x_low = FourVector::coordinate(dim, u).lower();
  FourVector U_low = FourVector::rest_velocity(dim, u).lower();
  PolyExpr c = PolyExpr::symbol(u, constant_name);
  PolyMatrix F = poly_zero_matrix(static_cast<std::size_t>(dim.total()), u);
  for (int mu = 0; mu < dim.total(); ++mu)
    for (int nu = 0; nu < dim.total(); ++nu)
      F(static_cast<std::size_t>(mu), static_cast<std::size_t>(nu)) =
          (x_low[mu] * U_low[nu] - x_low[nu] * U_low[mu]) * c;
  return FieldTensor(dim, std::move(F));
}

FieldTensor raised(const FieldTensor& F) {
  PolyMatrix G = F.F;
  for (int mu = 0; mu < F.dim.total(); ++mu)
    for (int nu = 0; nu < F.dim.total(); ++nu) {
      if (metric_sign(mu) * metric_sign(nu) < 0)
        G(static_cast<std::size_t>(mu), static_cast<std::size_t>(nu)) =
            -G(static_cast<std::size_t>(mu), static_cast<std::size_t>(nu));
    }
  return FieldTensor(F.dim, std::move(G));
}

PolyExpr larmor_field(const UniversePtr& u) {
  return PolyExpr::symbol(u, "m") * PolyExpr::symbol(u, "omega") * PolyExpr::symbol(u, "q_inv");
}

PolyExpr zeta_from_kinematics(const UniversePtr& u) {
  return PolyExpr::symbol(u, "m")
             .scale(GaussianRational(2)) *
         PolyExpr::symbol(u, "a", 2) * PolyExpr::symbol(u, "q_inv") *
         PolyExpr::symbol(u, "v_inv", 2);
}

PolyExpr zeta_from_gradient(const PolyExpr& E) { return -E.partial("x"); }

Potential uniform_field_lab_potential(Dim dim, const UniversePtr& u) {
  switch (dim.spatial) {
    case 2: {
      PolyExpr rho = PolyExpr::symbol(u, "rho");
      std::vector<PolyExpr> comps = {PolyExpr::zero(u), rho * PolyExpr::symbol(u, "y"),
                                     -(rho * PolyExpr::symbol(u, "x"))};
      return Potential(dim, FourVector(dim, std::move(comps)));
    }
    case 1: {
      PolyExpr zeta = PolyExpr::symbol(u, "zeta");
      std::vector<PolyExpr> comps = {
          PolyExpr::zero(u), zeta * PolyExpr::symbol(u, "t") * PolyExpr::symbol(u, "x")};
      return Potential(dim, FourVector(dim, std::move(comps)));
    }
    default:
      throw DimensionMismatchError("lab potentials are defined in (1+1) and (2+1)");
  }
}

GaugeFn covariantizing_gauge_function(Dim dim, const UniversePtr& u) {
  PolyExpr t = PolyExpr::symbol(u, "t");
  PolyExpr x = PolyExpr::symbol(u, "x");
  switch (dim.spatial) {
    case 2: {
      PolyExpr y = PolyExpr::symbol(u, "y");
      PolyExpr rho = PolyExpr::symbol(u, "rho");
      PolyExpr lam = (t * x * x + t * y * y).scale(GaussianRational(quarter())) +
                     t.pow(3).scale(GaussianRational(Rational(1, 12)));
      return GaugeFn{dim, -(rho * lam)};
    }
    case 1: {
      PolyExpr zeta = PolyExpr::symbol(u, "zeta");
      PolyExpr lam = (t * x * x + t.pow(3).scale(GaussianRational(Rational(1, 3))))
                         .scale(GaussianRational(quarter()));
      return GaugeFn{dim, -(zeta * lam)};
    }
    default:
      throw DimensionMismatchError("gauge functions are defined in (1+1) and (2+1)");
  }
}

}  // namespace dirosc
