#include "dirosc/clifford.hpp"

#include <array>

namespace dirosc {

namespace {

const GaussianRational kZero(0);
const GaussianRational kOne(1);
const GaussianRational kI = GaussianRational::i();

SpinorMatrix pauli(int k) {
  SpinorMatrix m = spinor_zero(2);
  switch (k) {
    case 1:
      m(0, 1) = kOne;
      m(1, 0) = kOne;
      break;
    case 2:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case 3:
      m(0, 0) = kOne;
      m(1, 1) = -kOne;
      break;
    default:
      throw Error("pauli index out of range");
  }
  return m;
}

SpinorMatrix block_diag(const SpinorMatrix& a, const SpinorMatrix& b) {
  std::size_t n = a.size();
  SpinorMatrix m = spinor_zero(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(n + i, n + j) = b(i, j);
    }
  return m;
}

void verify_clifford(const GammaRep& rep) {
  const SpinorMatrix id = spinor_identity(rep.size);
  for (int mu = 0; mu < rep.dim.total(); ++mu) {
    for (int nu = 0; nu < rep.dim.total(); ++nu) {
      SpinorMatrix anti = rep.gamma(mu) * rep.gamma(nu) + rep.gamma(nu) * rep.gamma(mu);
      SpinorMatrix expected =
          mu == nu ? id.scaled(GaussianRational(2 * metric_sign(mu))) : spinor_zero(rep.size);
      if (anti != expected) throw Error("gamma representation violates the Clifford algebra");
    }
  }
}

std::vector<SpinorMatrix> irreducible_2p1(bool variant) {
  std::vector<SpinorMatrix> g;
  g.push_back(pauli(3));
  g.push_back(pauli(1).scaled(kI));
  g.push_back(pauli(2).scaled(variant ? -kI : kI));
  return g;
}

}  // namespace

const SpinorMatrix& GammaRep::gamma5() const {
  if (gamma5_.empty()) throw NoChiralityError("representation has no gamma5");
  return gamma5_.front();
}

GammaRep make_rep(Dim dim, bool reducible, bool variant) {
  if (reducible && dim.spatial != 2)
    throw Error("a reducible representation is only provided in (2+1)");

  GammaRep rep;
  rep.dim = dim;
  rep.reducible = reducible;
  rep.variant = variant;

  switch (dim.spatial) {
    case 1: {
      rep.size = 2;
      rep.gammas.push_back(pauli(3));
      rep.gammas.push_back(pauli(1).scaled(kI));
      rep.gamma5_.push_back(rep.gamma(0) * rep.gamma(1));
      break;
    }
    case 2: {
      if (!reducible) {
        rep.size = 2;
        rep.gammas = irreducible_2p1(variant);
        // gamma0*gamma1*gamma2 is proportional to the identity: no gamma5.
      } else {
        rep.size = 4;
        auto g = irreducible_2p1(variant);
        for (const auto& gk : g) rep.gammas.push_back(block_diag(gk, -gk));
        SpinorMatrix g5 = spinor_zero(4);
        for (std::size_t i = 0; i < 2; ++i) {
          g5(i, 2 + i) = kOne;
          g5(2 + i, i) = kOne;
        }
        rep.gamma5_.push_back(std::move(g5));
      }
      break;
    }
    case 3: {
      rep.size = 4;
      SpinorMatrix g0 = spinor_zero(4);
      g0(0, 0) = kOne;
      g0(1, 1) = kOne;
      g0(2, 2) = -kOne;
      g0(3, 3) = -kOne;
      rep.gammas.push_back(std::move(g0));
      for (int k = 1; k <= 3; ++k) {
        SpinorMatrix gk = spinor_zero(4);
        SpinorMatrix s = pauli(k);
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) {
            gk(i, 2 + j) = s(i, j);
            gk(2 + i, j) = -s(i, j);
          }
        rep.gammas.push_back(std::move(gk));
      }
      rep.gamma5_.push_back(
          (rep.gamma(0) * rep.gamma(1) * rep.gamma(2) * rep.gamma(3)).scaled(kI));
      break;
    }
    default:
      throw DimensionMismatchError("supported spatial dimensions are 1, 2, 3");
  }

  verify_clifford(rep);
  return rep;
}

DiracMatrices derived(const GammaRep& rep) {
  DiracMatrices d{rep.gamma(0), {}};
  for (int j = 1; j < rep.dim.total(); ++j) d.alphas.push_back(rep.gamma(0) * rep.gamma(j));
  return d;
}

SpinorMatrix sigma(const GammaRep& rep, int mu, int nu) {
  if (mu < 0 || nu < 0 || mu >= rep.dim.total() || nu >= rep.dim.total())
    throw DimensionMismatchError("sigma index out of range");
  SpinorMatrix comm = rep.gamma(mu) * rep.gamma(nu) - rep.gamma(nu) * rep.gamma(mu);
  return comm.scaled(kI * GaussianRational(Rational(1, 2)));
}

ChiralProjectors chiral_projectors(const GammaRep& rep) {
  if (!rep.has_gamma5())
    throw NoChiralityError(
        "no chirality in the irreducible (2+1) representation; use the reducible one");
  const SpinorMatrix id = spinor_identity(rep.size);
  GaussianRational half(Rational(1, 2));
  return {(id + rep.gamma5()).scaled(half), (id - rep.gamma5()).scaled(half)};
}

GammaWord gamma_word_mul(const GammaWord& a, const GammaWord& b) {
  // Concatenate the two ascending index sequences, then sort back to
  // ascending order: each swap of distinct neighbours flips the sign, and
  // an equal pair collapses to eta^mu^mu.
  std::array<int, 16> seq{};
  int len = 0;
  for (int k = 0; k < 8; ++k)
    if (a.mask & (1u << k)) seq[static_cast<std::size_t>(len++)] = k;
  for (int k = 0; k < 8; ++k)
    if (b.mask & (1u << k)) seq[static_cast<std::size_t>(len++)] = k;

  int sign = a.sign * b.sign;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < len; ++i) {
      if (seq[static_cast<std::size_t>(i)] == seq[static_cast<std::size_t>(i + 1)]) {
        sign *= metric_sign(seq[static_cast<std::size_t>(i)]);
        for (int j = i; j + 2 < len; ++j)
          seq[static_cast<std::size_t>(j)] = seq[static_cast<std::size_t>(j + 2)];
        len -= 2;
        changed = true;
        break;
      }
      if (seq[static_cast<std::size_t>(i)] > seq[static_cast<std::size_t>(i + 1)]) {
        std::swap(seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(i + 1)]);
        sign = -sign;
        changed = true;
      }
    }
  }

  GammaWord out;
  out.sign = sign;
  for (int i = 0; i < len; ++i) out.mask |= 1u << seq[static_cast<std::size_t>(i)];
  return out;
}

SpinorMatrix realize(const GammaRep& rep, const GammaWord& word) {
  SpinorMatrix m = spinor_identity(rep.size);
  for (int k = 0; k < rep.dim.total(); ++k)
    if (word.mask & (1u << k)) m = m * rep.gamma(k);
  if (word.sign < 0) m = -m;
  return m;
}

std::string gamma_word_str(const GammaWord& word) {
  std::string s = word.sign < 0 ? "-" : "";
  if (word.mask == 0) return s + "I";
  bool first = true;
  for (int k = 0; k < 8; ++k) {
    if (!(word.mask & (1u << k))) continue;
    if (!first) s += "*";
    s += "g" + std::to_string(k);
    first = false;
  }
  return s;
}

}  // namespace dirosc
