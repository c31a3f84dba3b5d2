#include "dirosc/minkowski.hpp"

namespace dirosc {

FourVector::FourVector(Dim dim, std::vector<PolyExpr> components, Variance variance)
    : dim_(dim), variance_(variance), comps_(std::move(components)) {
  if (comps_.size() != static_cast<std::size_t>(dim_.total()))
    throw DimensionMismatchError("four-vector component count does not match dimension");
}

FourVector FourVector::zero(Dim dim, const UniversePtr& u) {
  return FourVector(dim, std::vector<PolyExpr>(static_cast<std::size_t>(dim.total()),
                                               PolyExpr::zero(u)));
}

FourVector FourVector::coordinate(Dim dim, const UniversePtr& u) {
  std::vector<PolyExpr> comps;
  for (const auto& name : coordinate_names(dim)) comps.push_back(PolyExpr::symbol(u, name));
  return FourVector(dim, std::move(comps));
}

FourVector FourVector::rest_velocity(Dim dim, const UniversePtr& u) {
  std::vector<PolyExpr> comps(static_cast<std::size_t>(dim.total()), PolyExpr::zero(u));
  comps[0] = PolyExpr::constant(u, 1);
  return FourVector(dim, std::move(comps));
}

FourVector FourVector::lower() const {
  if (variance_ != Variance::Contravariant)
    throw VarianceError("lower() requires a contravariant vector");
  std::vector<PolyExpr> comps = comps_;
  for (int mu = 1; mu < dim_.total(); ++mu) comps[static_cast<std::size_t>(mu)] =
      -comps[static_cast<std::size_t>(mu)];
  return FourVector(dim_, std::move(comps), Variance::Covariant);
}

FourVector FourVector::raise() const {
  if (variance_ != Variance::Covariant)
    throw VarianceError("raise() requires a covariant vector");
  std::vector<PolyExpr> comps = comps_;
  for (int mu = 1; mu < dim_.total(); ++mu) comps[static_cast<std::size_t>(mu)] =
      -comps[static_cast<std::size_t>(mu)];
  return FourVector(dim_, std::move(comps), Variance::Contravariant);
}

FourVector FourVector::scaled(const PolyExpr& s) const {
  std::vector<PolyExpr> comps;
  comps.reserve(comps_.size());
  for (const auto& c : comps_) comps.push_back(c * s);
  return FourVector(dim_, std::move(comps), variance_);
}

bool operator==(const FourVector& a, const FourVector& b) {
  if (a.dim_ != b.dim_ || a.variance_ != b.variance_) return false;
  return a.comps_ == b.comps_;
}

std::string FourVector::str() const {
  std::string s = "(";
  for (int mu = 0; mu < dim_.total(); ++mu) {
    if (mu) s += ", ";
    s += (*this)[mu].str();
  }
  return s + ")";
}

PolyExpr dot(const FourVector& u, const FourVector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatchError("dot of vectors with different dimension");
  if (u.variance() != Variance::Contravariant || v.variance() != Variance::Contravariant)
    throw VarianceError("dot() takes contravariant vectors; lowering is internal");
  PolyExpr acc = u[0] * v[0];
  for (int mu = 1; mu < u.dim().total(); ++mu) acc -= u[mu] * v[mu];
  return acc;
}

}  // namespace dirosc
