#pragma once

#include <cstddef>
#include <vector>

#include "ncreal/errors.hpp"
#include "ncreal/rational.hpp"

namespace ncreal {

// Dense rational matrix; just enough linear algebra for exact certificates,
// matrix points and the constant-matrix radical case.
struct QMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  QMatrix transpose() const {
    QMatrix m(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool is_symmetric() const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = i + 1; j < cols; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const Rational& x : a)
      if (x != 0) return false;
    return true;
  }

  QMatrix operator*(const QMatrix& o) const {
    if (cols != o.rows) throw SizeMismatchError("matrix product size mismatch");
    QMatrix m(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        const Rational& x = at(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols; ++j) m.at(i, j) += x * o.at(k, j);
      }
    return m;
  }

  QMatrix operator+(const QMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw SizeMismatchError("matrix sum size mismatch");
    QMatrix m = *this;
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] += o.a[i];
    return m;
  }

  QMatrix operator-(const QMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw SizeMismatchError("matrix difference size mismatch");
    QMatrix m = *this;
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] -= o.a[i];
    return m;
  }

  friend QMatrix operator*(const Rational& c, const QMatrix& m) {
    QMatrix r = m;
    for (Rational& x : r.a) x *= c;
    return r;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (cols != v.size()) throw SizeMismatchError("matrix-vector size mismatch");
    std::vector<Rational> r(rows, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
  }

  bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }
};

// Frobenius inner product <A,B> = tr(A^T B).
inline Rational frobenius_inner(const QMatrix& x, const QMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw SizeMismatchError("inner product size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.a.size(); ++i) s += x.a[i] * y.a[i];
  return s;
}

inline Rational trace(const QMatrix& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.rows && i < x.cols; ++i) s += x.at(i, i);
  return s;
}

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(QMatrix& m);

// Rank via rref on a copy.
std::size_t rank(const QMatrix& m);

// Solves m x = rhs exactly; returns false when the system is inconsistent.
// Free variables are set to zero.
bool solve_linear(const QMatrix& m, const std::vector<Rational>& rhs, std::vector<Rational>& x);

// Basis of the null space {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// Upper-triangle coordinates of a symmetric matrix in row-major order, and
// the inverse.
std::vector<Rational> sym_flatten(const QMatrix& a);
QMatrix sym_unflatten(const std::vector<Rational>& t, std::size_t dim);

} // namespace ncreal
