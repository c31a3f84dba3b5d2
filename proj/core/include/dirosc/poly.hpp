#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "dirosc/rational.hpp"
#include "dirosc/universe.hpp"

namespace dirosc {

// Exponent vector over the universe's symbols.
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic, descending: higher total degree first, ties broken
// by the leftmost differing exponent (universe order). Map iteration in
// this order is the canonical printing order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact multivariate polynomial over the spacetime coordinates and the
// declared symbolic constants, with Gaussian-rational coefficients. No
// stored zero coefficients; q*q_inv collapses for declared inverse pairs.
// Immutable in use: every operation returns a fresh value.
class PolyExpr {
 public:
  using TermMap = std::map<Monomial, GaussianRational, GrlexGreater>;

  explicit PolyExpr(UniversePtr universe);

  static PolyExpr zero(UniversePtr universe) { return PolyExpr(std::move(universe)); }
  static PolyExpr constant(UniversePtr universe, GaussianRational c);
  static PolyExpr symbol(UniversePtr universe, const std::string& name, std::uint32_t power = 1);
  static PolyExpr imaginary_unit(UniversePtr universe) {
    return constant(std::move(universe), GaussianRational::i());
  }

  const UniversePtr& universe() const { return universe_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The coefficient of the empty monomial (zero if absent); error if the
  // polynomial has non-constant terms.
  GaussianRational constant_value() const;

  PolyExpr operator-() const;
  PolyExpr& operator+=(const PolyExpr& o);
  PolyExpr& operator-=(const PolyExpr& o);
  friend PolyExpr operator+(PolyExpr a, const PolyExpr& b) { return a += b; }
  friend PolyExpr operator-(PolyExpr a, const PolyExpr& b) { return a -= b; }
  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);

  PolyExpr scale(const GaussianRational& c) const;
  PolyExpr pow(std::uint32_t k) const;
  PolyExpr conj() const;  // conjugate coefficients; symbols are real

  // Formal partial derivative with respect to a coordinate.
  PolyExpr partial(std::size_t coord_index) const;
  PolyExpr partial(const std::string& coord_name) const;

  // Exact substitution of constants by polynomials (acyclic bindings).
  PolyExpr substitute(const std::map<std::string, PolyExpr>& bindings) const;

  // Numeric evaluation; every symbol occurring with nonzero exponent must
  // be bound.
  std::complex<double> eval(const std::map<std::string, std::complex<double>>& bindings) const;

  friend bool operator==(const PolyExpr& a, const PolyExpr& b);
  friend bool operator!=(const PolyExpr& a, const PolyExpr& b) { return !(a == b); }

  // Canonical text, monomials in descending grlex order. Round-trips
  // exactly through parse().
  std::string str() const;
  static PolyExpr parse(UniversePtr universe, const std::string& text);

 private:
  void add_term(const Monomial& m, const GaussianRational& c);
  void reduce_inverses(Monomial& m) const;
  void check_same_universe(const PolyExpr& o) const;

  UniversePtr universe_;
  TermMap terms_;
};

inline PolyExpr operator*(const PolyExpr& p, const GaussianRational& c) { return p.scale(c); }
inline PolyExpr operator*(const GaussianRational& c, const PolyExpr& p) { return p.scale(c); }

inline PolyExpr conj(const PolyExpr& p) { return p.conj(); }

}  // namespace dirosc
