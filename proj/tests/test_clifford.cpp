#include "doctest.h"

#include <vector>

#include "dirosc/clifford.hpp"

using namespace dirosc;

namespace {

const GaussianRational I_(0, 1);

std::vector<GammaRep> all_reps() {
  return {make_rep(Dim::d1()), make_rep(Dim::d2()), make_rep(Dim::d2(), false, true),
          make_rep(Dim::d2(), true), make_rep(Dim::d3())};
}

SpinorMatrix m2(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d) {
  SpinorMatrix m = spinor_zero(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("anticommutation {g^mu, g^nu} = 2 eta I holds bit-exactly in every rep") {
  for (const auto& rep : all_reps()) {
    const SpinorMatrix id = spinor_identity(rep.size);
    for (int mu = 0; mu < rep.dim.total(); ++mu) {
      for (int nu = 0; nu < rep.dim.total(); ++nu) {
        SpinorMatrix anti = rep.gamma(mu) * rep.gamma(nu) + rep.gamma(nu) * rep.gamma(mu);
        if (mu == nu)
          CHECK(anti == id.scaled(GaussianRational(2 * metric_sign(mu))));
        else
          CHECK(anti.is_zero());
      }
    }
  }
}

TEST_CASE("(1+1): gamma0 = diag(1,-1), gamma1 = i*sigma1, and the algebra") {
  GammaRep rep = make_rep(Dim::d1());
  CHECK(rep.gamma(0) == m2(1, 0, 0, -1));
  CHECK(rep.gamma(1) == m2(0, I_, I_, 0));
  CHECK(rep.gamma(1) * rep.gamma(1) == -spinor_identity(2));
  CHECK((rep.gamma(0) * rep.gamma(1) + rep.gamma(1) * rep.gamma(0)).is_zero());
}

TEST_CASE("(3+1): gammas are traceless") {
  GammaRep rep = make_rep(Dim::d3());
  for (int mu = 0; mu < 4; ++mu) CHECK(rep.gamma(mu).trace() == GaussianRational(0));
  CHECK(rep.gamma5().trace() == GaussianRational(0));
}

TEST_CASE("hermiticity pattern: gamma0 hermitian, gamma^i anti-hermitian") {
  for (const auto& rep : all_reps()) {
    CHECK(rep.gamma(0).is_hermitian());
    for (int j = 1; j < rep.dim.total(); ++j)
      CHECK(rep.gamma(j).conj_transpose() == -rep.gamma(j));
  }
}

TEST_CASE("derived matrices: beta = gamma0, alpha_j = gamma0 gamma^j") {
  for (const auto& rep : all_reps()) {
    auto d = derived(rep);
    CHECK(d.beta == rep.gamma(0));
    CHECK(d.beta * d.beta == spinor_identity(rep.size));
    for (std::size_t j = 0; j < d.alphas.size(); ++j) {
      const auto& a = d.alphas[j];
      CHECK(a.is_hermitian());
      CHECK(a * a == spinor_identity(rep.size));
      CHECK((a * d.beta + d.beta * a).is_zero());
    }
  }
}

TEST_CASE("(2+1): alpha1 against the direct 2x2 multiplication oracle") {
  // gamma0 gamma1 = sigma3 * (i sigma1) = [[0, i], [-i, 0]]
  GammaRep rep = make_rep(Dim::d2());
  SpinorMatrix expected = m2(0, I_, -I_, 0);
  auto d = derived(rep);
  CHECK(d.alphas[0] == expected);
  CHECK(d.alphas[0].is_hermitian());
  CHECK(d.alphas[0] * d.alphas[0] == spinor_identity(2));
}

TEST_CASE("sigma^mu^nu: antisymmetry, sigma^0i = i alpha_i, adjoint rule") {
  for (const auto& rep : all_reps()) {
    auto d = derived(rep);
    for (int mu = 0; mu < rep.dim.total(); ++mu) {
      CHECK(sigma(rep, mu, mu).is_zero());
      for (int nu = 0; nu < rep.dim.total(); ++nu) {
        SpinorMatrix s = sigma(rep, mu, nu);
        CHECK(s == -sigma(rep, nu, mu));
        // sigma^dagger = gamma0 sigma gamma0
        CHECK(s.conj_transpose() == rep.gamma(0) * s * rep.gamma(0));
      }
    }
    for (int i = 1; i < rep.dim.total(); ++i)
      CHECK(sigma(rep, 0, i) == d.alphas[static_cast<std::size_t>(i - 1)].scaled(I_));
  }
  CHECK_THROWS_AS(sigma(make_rep(Dim::d1()), 0, 2), DimensionMismatchError);
}

TEST_CASE("sigma^01 equals the hand-expanded (i/2)[gamma0, gamma1] in (1+1)") {
  GammaRep rep = make_rep(Dim::d1());
  // gamma0 gamma1 = [[0, i], [-i, 0]], gamma1 gamma0 = [[0, -i], [i, 0]]
  SpinorMatrix expected =
      (m2(0, I_, -I_, 0) - m2(0, -I_, I_, 0)).scaled(I_ * GaussianRational(Rational(1, 2)));
  CHECK(sigma(rep, 0, 1) == expected);
}

TEST_CASE("chiral projectors: completeness, idempotence, annihilation") {
  for (Dim dim : {Dim::d1(), Dim::d3()}) {
    GammaRep rep = make_rep(dim);
    auto p = chiral_projectors(rep);
    CHECK(p.P_R + p.P_L == spinor_identity(rep.size));
    CHECK(p.P_R * p.P_R == p.P_R);
    CHECK(p.P_L * p.P_L == p.P_L);
    CHECK((p.P_R * p.P_L).is_zero());
    CHECK((p.P_L * p.P_R).is_zero());
  }
  GammaRep red = make_rep(Dim::d2(), true);
  auto p = chiral_projectors(red);
  CHECK(p.P_R + p.P_L == spinor_identity(4));
  CHECK((p.P_R * p.P_L).is_zero());
}

TEST_CASE("gamma5 squares to I and anticommutes with every gamma") {
  for (const auto& rep : all_reps()) {
    if (!rep.has_gamma5()) continue;
    CHECK(rep.gamma5() * rep.gamma5() == spinor_identity(rep.size));
    CHECK(rep.gamma5().is_hermitian());
    for (int mu = 0; mu < rep.dim.total(); ++mu)
      CHECK((rep.gamma5() * rep.gamma(mu) + rep.gamma(mu) * rep.gamma5()).is_zero());
  }
}

TEST_CASE("(1+1) gamma5 = gamma0 gamma1 squares to I by the anticommutation oracle") {
  GammaRep rep = make_rep(Dim::d1());
  // g0 g1 g0 g1 = -g0 g0 g1 g1 = -(I)(-I) = I
  SpinorMatrix g5 = rep.gamma(0) * rep.gamma(1);
  CHECK(rep.gamma5() == g5);
  CHECK(g5 * g5 == spinor_identity(2));
}

TEST_CASE("irreducible (2+1) has no chirality; gamma0 gamma1 gamma2 is proportional to I") {
  GammaRep rep = make_rep(Dim::d2());
  CHECK_THROWS_AS(chiral_projectors(rep), NoChiralityError);
  SpinorMatrix prod = rep.gamma(0) * rep.gamma(1) * rep.gamma(2);
  CHECK(prod == spinor_identity(2).scaled(-I_));
  // the variant representation flips the proportionality constant
  GammaRep var = make_rep(Dim::d2(), false, true);
  CHECK(var.gamma(0) * var.gamma(1) * var.gamma(2) == spinor_identity(2).scaled(I_));
}

TEST_CASE("reducible is only available in (2+1)") {
  CHECK_THROWS_AS(make_rep(Dim::d1(), true), Error);
  CHECK_THROWS_AS(make_rep(Dim::d3(), true), Error);
}

TEST_CASE("gamma word algebra matches matrix products in every rep") {
  for (const auto& rep : all_reps()) {
    std::uint32_t all = (1u << rep.dim.total()) - 1;
    for (std::uint32_t ma = 0; ma <= all; ++ma) {
      for (std::uint32_t mb = 0; mb <= all; ++mb) {
        GammaWord a{1, ma}, b{1, mb};
        GammaWord ab = gamma_word_mul(a, b);
        CHECK(realize(rep, a) * realize(rep, b) == realize(rep, ab));
      }
    }
  }
}

TEST_CASE("gamma word parity and printing") {
  CHECK(!gamma_word_odd(0));
  CHECK(gamma_word_odd(0b001));
  CHECK(!gamma_word_odd(0b011));
  CHECK(gamma_word_str(GammaWord{1, 0}) == "I");
  CHECK(gamma_word_str(GammaWord{-1, 0b011}) == "-g0*g1");
  // g1 g0 = -g0 g1
  GammaWord r = gamma_word_mul(GammaWord{1, 0b010}, GammaWord{1, 0b001});
  CHECK(r.sign == -1);
  CHECK(r.mask == 0b011);
  // g1 g1 = -I
  r = gamma_word_mul(GammaWord{1, 0b010}, GammaWord{1, 0b010});
  CHECK(r.sign == -1);
  CHECK(r.mask == 0);
}
