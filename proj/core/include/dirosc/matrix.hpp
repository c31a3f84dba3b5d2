#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dirosc/errors.hpp"
#include "dirosc/poly.hpp"
#include "dirosc/rational.hpp"

namespace dirosc {

// Dense square matrix over an exact ring (GaussianRational or PolyExpr).
template <class T>
class Matrix {
 public:
  Matrix(std::size_t n, const T& fill) : n_(n), a_(n * n, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t size() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_size(b);
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_size(b);
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_size(b);
    Matrix c(a.n_, a.a_[0]);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t j = 0; j < a.n_; ++j) {
        T acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.n_; ++k) acc += a(i, k) * b(k, j);
        c(i, j) = acc;
      }
    }
    return c;
  }

  template <class S>
  Matrix scaled(const S& s) const {
    Matrix r = *this;
    for (auto& v : r.a_) v = v * s;
    return r;
  }

  Matrix transpose() const {
    Matrix r = *this;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  Matrix conj_transpose() const {
    using dirosc::conj;
    Matrix r = *this;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(i, j) = conj((*this)(j, i));
    return r;
  }

  T trace() const {
    T acc = (*this)(0, 0);
    for (std::size_t i = 1; i < n_; ++i) acc += (*this)(i, i);
    return acc;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  bool is_hermitian() const { return *this == conj_transpose(); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    a.check_size(b);
    return a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) s += ", ";
        s += (*this)(i, j).str();
      }
      s += "]";
      if (i + 1 < n_) s += "\n";
    }
    return s;
  }

 private:
  void check_size(const Matrix& o) const {
    if (n_ != o.n_) throw DimensionMismatchError("matrix size mismatch");
  }

  std::size_t n_;
  std::vector<T> a_;
};

using SpinorMatrix = Matrix<GaussianRational>;
using PolyMatrix = Matrix<PolyExpr>;

inline SpinorMatrix spinor_identity(std::size_t n) {
  return SpinorMatrix::identity(n, GaussianRational(0), GaussianRational(1));
}

inline SpinorMatrix spinor_zero(std::size_t n) { return SpinorMatrix(n, GaussianRational(0)); }

inline PolyMatrix poly_zero_matrix(std::size_t n, const UniversePtr& u) {
  return PolyMatrix(n, PolyExpr::zero(u));
}

inline PolyMatrix to_poly_matrix(const SpinorMatrix& m, const UniversePtr& u) {
  PolyMatrix r = poly_zero_matrix(m.size(), u);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = PolyExpr::constant(u, m(i, j));
  return r;
}

}  // namespace dirosc
