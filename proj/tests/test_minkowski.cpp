#include "doctest.h"

#include "dirosc/minkowski.hpp"

using namespace dirosc;

namespace {
PolyExpr P(const UniversePtr& u, const std::string& s) { return PolyExpr::parse(u, s); }
}  // namespace

TEST_CASE("U.x = t in the rest frame") {
  for (Dim dim : {Dim::d1(), Dim::d2(), Dim::d3()}) {
    auto u = standard_universe(dim);
    FourVector U = FourVector::rest_velocity(dim, u);
    FourVector x = FourVector::coordinate(dim, u);
    CHECK(dot(U, x) == P(u, "t"));
    CHECK(dot(U, U) == P(u, "1"));
  }
}

TEST_CASE("x.x = t^2 - r^2") {
  auto u = standard_universe(Dim::d2());
  FourVector x = FourVector::coordinate(Dim::d2(), u);
  CHECK(dot(x, x) == P(u, "t^2 - x^2 - y^2"));
}

TEST_CASE("dot with the zero vector vanishes and dot is symmetric") {
  auto u = standard_universe(Dim::d2());
  FourVector x = FourVector::coordinate(Dim::d2(), u);
  FourVector z = FourVector::zero(Dim::d2(), u);
  CHECK(dot(x, z).is_zero());
  FourVector v(Dim::d2(), {P(u, "t + x"), P(u, "rho*y"), P(u, "3*x^2")});
  CHECK(dot(x, v) == dot(v, x));
}

TEST_CASE("lowering negates spatial components") {
  auto u = standard_universe(Dim::d2());
  FourVector x = FourVector::coordinate(Dim::d2(), u);
  FourVector xl = x.lower();
  CHECK(xl[0] == P(u, "t"));
  CHECK(xl[1] == P(u, "-x"));
  CHECK(xl[2] == P(u, "-y"));

  FourVector v(Dim::d2(), {P(u, "0"), P(u, "y"), P(u, "-x")});
  FourVector vl = v.lower();
  CHECK(vl[1] == P(u, "-y"));
  CHECK(vl[2] == P(u, "x"));
}

TEST_CASE("variance is tracked: lowering twice is an error") {
  auto u = standard_universe(Dim::d1());
  FourVector x = FourVector::coordinate(Dim::d1(), u);
  FourVector xl = x.lower();
  CHECK_THROWS_AS(xl.lower(), VarianceError);
  CHECK(xl.raise() == x);
  CHECK_THROWS_AS(x.raise(), VarianceError);
  CHECK_THROWS_AS(dot(x, xl), VarianceError);
}

TEST_CASE("dimension mismatch is rejected") {
  auto u1 = standard_universe(Dim::d1());
  auto u2 = standard_universe(Dim::d2());
  FourVector a = FourVector::coordinate(Dim::d1(), u1);
  FourVector b = FourVector::coordinate(Dim::d2(), u2);
  CHECK_THROWS_AS(dot(a, b), DimensionMismatchError);
  CHECK_THROWS_AS(FourVector(Dim::d2(), {PolyExpr::zero(u2), PolyExpr::zero(u2)}),
                  DimensionMismatchError);
}
