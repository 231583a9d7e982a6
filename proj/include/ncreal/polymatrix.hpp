#pragma once

#include <cstddef>
#include <vector>

#include "ncreal/qmatrix.hpp"
#include "ncreal/unipoly.hpp"

namespace ncreal {

// Dense rectangular matrix over Q[x].
struct UniPolyMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<UniPoly> a; // row-major

  UniPolyMatrix() = default;
  UniPolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  UniPoly& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const UniPoly& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static UniPolyMatrix identity(std::size_t n);
  static UniPolyMatrix from_constant(const QMatrix& m);

  // The involution: transpose with entries unchanged (x is a symmetric
  // variable and the coefficients are rational).
  UniPolyMatrix transpose() const;

  bool is_zero() const;
  bool is_constant() const;       // every entry has degree <= 0
  QMatrix constant_part() const;  // valid when is_constant()

  int max_degree() const; // -1 for the zero matrix

  UniPolyMatrix operator+(const UniPolyMatrix& o) const;
  UniPolyMatrix operator-(const UniPolyMatrix& o) const;
  UniPolyMatrix operator*(const UniPolyMatrix& o) const;
  bool operator==(const UniPolyMatrix& o) const;

  QMatrix eval(const Rational& x) const;
};

UniPolyMatrix operator*(const UniPoly& s, const UniPolyMatrix& m);

UniPoly det(const UniPolyMatrix& m);

// P = U * D * V with U, V products of elementary matrices (so invertible over
// Q[x] with rational nonzero determinant), D diagonal with monic entries
// satisfying the divisibility chain d_1 | d_2 | ... and zeros last.  The
// inverses are accumulated alongside so that callers never have to invert a
// polynomial matrix.
struct SmithForm {
  UniPolyMatrix U, D, V;
  UniPolyMatrix Uinv, Vinv;    // Uinv * P * Vinv = D
  std::vector<UniPoly> diag;   // all n diagonal entries of D, zeros included
};

SmithForm smith_normal_form(const UniPolyMatrix& P);

// Collapses a list of generators of a left ideal into the single hermitian
// generator P = sum_i P_i^T P_i, which has the same real radical.
UniPolyMatrix principal_reduce(const std::vector<UniPolyMatrix>& gens);

// The real radical of the left ideal generated by `gens`: with P = U D V and
// r_i the real radical generator of (d_i) in Q[x] (r_i = 0 when d_i = 0), the
// radical is the left ideal generated by G = diag(r_1,...,r_n) * V.
struct ERadical {
  UniPolyMatrix G;
  SmithForm smith;
  std::vector<UniPoly> radicals; // r_1, ..., r_n
};

ERadical eradical_full(const std::vector<UniPolyMatrix>& gens, int degree_cap = 12);
UniPolyMatrix eradical_matpoly(const std::vector<UniPolyMatrix>& gens, int degree_cap = 12);

// Q lies in the radical iff every entry of column i of Q * V^{-1} is divisible
// by r_i (a zero r_i forces the column to vanish).
bool eradical_member(const UniPolyMatrix& Q, const std::vector<UniPolyMatrix>& gens,
                     int degree_cap = 12);
bool eradical_member_of(const UniPolyMatrix& Q, const ERadical& rad);

// Constant-coefficient case: the left ideal generated by constant matrices is
// its own radical, and membership is row-space containment.  Returns a reduced
// row-echelon basis of the row space of the stacked generators.
QMatrix eradical_constant(const std::vector<QMatrix>& gens);
bool eradical_constant_member(const QMatrix& C, const std::vector<QMatrix>& gens);

} // namespace ncreal
