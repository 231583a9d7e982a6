#include "ncreal/polymatrix.hpp"

#include <utility>

#include "ncreal/errors.hpp"

namespace ncreal {

UniPolyMatrix UniPolyMatrix::identity(std::size_t n) {
  UniPolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = UniPoly::constant(1);
  return m;
}

UniPolyMatrix UniPolyMatrix::from_constant(const QMatrix& q) {
  UniPolyMatrix m(q.rows, q.cols);
  for (std::size_t i = 0; i < q.rows * q.cols; ++i) m.a[i] = UniPoly::constant(q.a[i]);
  return m;
}

UniPolyMatrix UniPolyMatrix::transpose() const {
  UniPolyMatrix m(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool UniPolyMatrix::is_zero() const {
  for (const auto& e : a)
    if (!e.is_zero()) return false;
  return true;
}

bool UniPolyMatrix::is_constant() const {
  for (const auto& e : a)
    if (e.degree() > 0) return false;
  return true;
}

QMatrix UniPolyMatrix::constant_part() const {
  QMatrix q(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) q.a[i] = a[i].coeff(0);
  return q;
}

int UniPolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& e : a) d = std::max(d, e.degree());
  return d;
}

UniPolyMatrix UniPolyMatrix::operator+(const UniPolyMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw SizeMismatchError("matrix addition shape mismatch");
  UniPolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
  return m;
}

UniPolyMatrix UniPolyMatrix::operator-(const UniPolyMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw SizeMismatchError("matrix subtraction shape mismatch");
  UniPolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] - o.a[i];
  return m;
}

UniPolyMatrix UniPolyMatrix::operator*(const UniPolyMatrix& o) const {
  if (cols != o.rows) throw SizeMismatchError("matrix product shape mismatch");
  UniPolyMatrix m(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols; ++j)
        m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
    }
  return m;
}

bool UniPolyMatrix::operator==(const UniPolyMatrix& o) const {
  return rows == o.rows && cols == o.cols && a == o.a;
}

QMatrix UniPolyMatrix::eval(const Rational& x) const {
  QMatrix q(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) q.a[i] = a[i].eval(x);
  return q;
}

UniPolyMatrix operator*(const UniPoly& s, const UniPolyMatrix& m) {
  UniPolyMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = s * m.a[i];
  return out;
}

UniPoly det(const UniPolyMatrix& m) {
  if (m.rows != m.cols) throw SizeMismatchError("determinant of a non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return UniPoly::constant(1);
  if (n == 1) return m.at(0, 0);
  UniPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    UniPolyMatrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        sub.at(i - 1, cc++) = m.at(i, k);
      }
    }
    UniPoly term = m.at(0, j) * det(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

namespace {

// Row/column operations on D with the transforms U, Uinv, V, Vinv kept in
// lockstep, preserving P = U * D * V at every step.
struct SmithState {
  UniPolyMatrix D, U, Uinv, V, Vinv;
  std::size_t n;

  explicit SmithState(const UniPolyMatrix& P)
      : D(P),
        U(UniPolyMatrix::identity(P.rows)),
        Uinv(UniPolyMatrix::identity(P.rows)),
        V(UniPolyMatrix::identity(P.rows)),
        Vinv(UniPolyMatrix::identity(P.rows)),
        n(P.rows) {}

  void row_swap(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(D.at(i, j), D.at(k, j));
      std::swap(Uinv.at(i, j), Uinv.at(k, j));
      std::swap(U.at(j, i), U.at(j, k));
    }
  }
  // row i += c * row k
  void row_add(std::size_t i, std::size_t k, const UniPoly& c) {
    if (c.is_zero()) return;
    for (std::size_t j = 0; j < n; ++j) {
      D.at(i, j) = D.at(i, j) + c * D.at(k, j);
      Uinv.at(i, j) = Uinv.at(i, j) + c * Uinv.at(k, j);
      U.at(j, k) = U.at(j, k) - c * U.at(j, i);
    }
  }
  void row_scale(std::size_t i, const Rational& c) {
    Rational inv = Rational(1) / c;
    for (std::size_t j = 0; j < n; ++j) {
      D.at(i, j) = c * D.at(i, j);
      Uinv.at(i, j) = c * Uinv.at(i, j);
      U.at(j, i) = inv * U.at(j, i);
    }
  }
  void col_swap(std::size_t j, std::size_t l) {
    if (j == l) return;
    for (std::size_t i = 0; i < n; ++i) {
      std::swap(D.at(i, j), D.at(i, l));
      std::swap(Vinv.at(i, j), Vinv.at(i, l));
      std::swap(V.at(j, i), V.at(l, i));
    }
  }
  // col j += c * col k
  void col_add(std::size_t j, std::size_t k, const UniPoly& c) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < n; ++i) {
      D.at(i, j) = D.at(i, j) + c * D.at(i, k);
      Vinv.at(i, j) = Vinv.at(i, j) + c * Vinv.at(i, k);
      V.at(k, i) = V.at(k, i) - c * V.at(j, i);
    }
  }

  // Euclid-clears column t below the pivot and row t to its right.  Assumes
  // D(t,t) != 0 and that rows/columns before t are already final (zero apart
  // from their diagonal entry), so operations stay inside the trailing block.
  void reduce_pivot(std::size_t t) {
    while (true) {
      bool swapped = false;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (D.at(i, t).is_zero()) continue;
        auto [q, r] = UniPoly::divmod(D.at(i, t), D.at(t, t));
        row_add(i, t, -q);
        if (!D.at(i, t).is_zero()) {
          row_swap(t, i); // strictly smaller-degree pivot
          swapped = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D.at(t, j).is_zero()) continue;
        auto [q, r] = UniPoly::divmod(D.at(t, j), D.at(t, t));
        col_add(j, t, -q);
        if (!D.at(t, j).is_zero()) {
          col_swap(t, j);
          swapped = true;
        }
      }
      if (swapped) continue;
      bool clear = true;
      for (std::size_t i = t + 1; i < n && clear; ++i)
        if (!D.at(i, t).is_zero()) clear = false;
      for (std::size_t j = t + 1; j < n && clear; ++j)
        if (!D.at(t, j).is_zero()) clear = false;
      if (clear) return;
    }
  }
};

} // namespace

SmithForm smith_normal_form(const UniPolyMatrix& P) {
  if (P.rows != P.cols) throw SizeMismatchError("Smith normal form needs a square matrix");
  SmithState st(P);
  std::size_t n = st.n;

  for (std::size_t t = 0; t < n; ++t) {
    // Minimal-degree nonzero pivot in the trailing block.
    std::size_t bi = n, bj = n;
    int bd = -1;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j) {
        int d = st.D.at(i, j).degree();
        if (d >= 0 && (bd < 0 || d < bd)) { bd = d; bi = i; bj = j; }
      }
    if (bd < 0) break; // trailing block is zero
    st.row_swap(t, bi);
    st.col_swap(t, bj);
    st.reduce_pivot(t);
  }

  // Enforce the divisibility chain d_t | d_{t+1}.  A violating pair is merged
  // by pulling d_{t+1} into column t and re-reducing, which leaves
  // gcd at (t,t) and a unit multiple of lcm at (t+1,t+1).
  while (true) {
    std::size_t bad = n;
    for (std::size_t t = 0; t + 1 < n; ++t) {
      const UniPoly& a = st.D.at(t, t);
      const UniPoly& b = st.D.at(t + 1, t + 1);
      if (a.is_zero() || b.is_zero()) continue;
      if (!UniPoly::divmod(b, a).second.is_zero()) { bad = t; break; }
    }
    if (bad == n) break;
    st.col_add(bad, bad + 1, UniPoly::constant(1));
    st.reduce_pivot(bad);
  }

  for (std::size_t t = 0; t < n; ++t) {
    const UniPoly& d = st.D.at(t, t);
    if (!d.is_zero() && d.coeff(d.degree()) != 1)
      st.row_scale(t, Rational(1) / d.coeff(d.degree()));
  }

  SmithForm out;
  out.D = st.D;
  out.U = std::move(st.U);
  out.Uinv = std::move(st.Uinv);
  out.V = std::move(st.V);
  out.Vinv = std::move(st.Vinv);
  out.diag.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.diag.push_back(st.D.at(t, t));
  return out;
}

UniPolyMatrix principal_reduce(const std::vector<UniPolyMatrix>& gens) {
  if (gens.empty()) throw EmptyGeneratorsError("no matrix generators given");
  std::size_t n = gens[0].rows;
  for (const auto& g : gens)
    if (g.rows != n || g.cols != n)
      throw SizeMismatchError("matrix generators must be square of a common size");
  UniPolyMatrix P(n, n);
  for (const auto& g : gens) P = P + g.transpose() * g;
  return P;
}

ERadical eradical_full(const std::vector<UniPolyMatrix>& gens, int degree_cap) {
  ERadical out;
  UniPolyMatrix P = principal_reduce(gens);
  out.smith = smith_normal_form(P);
  std::size_t n = P.rows;
  out.radicals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const UniPoly& d = out.smith.diag[i];
    if (d.is_zero()) out.radicals.push_back(UniPoly());
    else if (d.degree() == 0) out.radicals.push_back(UniPoly::constant(1));
    else out.radicals.push_back(real_radical_unipoly(d, degree_cap));
  }
  UniPolyMatrix R(n, n);
  for (std::size_t i = 0; i < n; ++i) R.at(i, i) = out.radicals[i];
  out.G = R * out.smith.V;
  return out;
}

UniPolyMatrix eradical_matpoly(const std::vector<UniPolyMatrix>& gens, int degree_cap) {
  return eradical_full(gens, degree_cap).G;
}

bool eradical_member_of(const UniPolyMatrix& Q, const ERadical& rad) {
  std::size_t n = rad.G.rows;
  if (Q.rows != n || Q.cols != n)
    throw SizeMismatchError("membership query shape differs from the generators");
  UniPolyMatrix W = Q * rad.smith.Vinv;
  for (std::size_t j = 0; j < n; ++j) {
    const UniPoly& r = rad.radicals[j];
    for (std::size_t i = 0; i < n; ++i) {
      const UniPoly& e = W.at(i, j);
      if (r.is_zero()) {
        if (!e.is_zero()) return false;
      } else if (r.degree() == 0) {
        // unit: always divisible
      } else if (!UniPoly::divmod(e, r).second.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool eradical_member(const UniPolyMatrix& Q, const std::vector<UniPolyMatrix>& gens,
                     int degree_cap) {
  return eradical_member_of(Q, eradical_full(gens, degree_cap));
}

QMatrix eradical_constant(const std::vector<QMatrix>& gens) {
  if (gens.empty()) throw EmptyGeneratorsError("no matrix generators given");
  std::size_t n = gens[0].cols;
  std::size_t total = 0;
  for (const auto& g : gens) {
    if (g.cols != n) throw SizeMismatchError("matrix generators must share a column count");
    total += g.rows;
  }
  QMatrix stacked(total, n);
  std::size_t r = 0;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < g.rows; ++i, ++r)
      for (std::size_t j = 0; j < n; ++j) stacked.at(r, j) = g.at(i, j);
  rref(stacked);
  std::size_t rk = 0;
  for (std::size_t i = 0; i < stacked.rows; ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < n; ++j)
      if (stacked.at(i, j) != 0) { nz = true; break; }
    if (nz) ++rk;
  }
  QMatrix basis(rk, n);
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = stacked.at(i, j);
  return basis;
}

bool eradical_constant_member(const QMatrix& C, const std::vector<QMatrix>& gens) {
  QMatrix basis = eradical_constant(gens);
  if (C.cols != basis.cols) throw SizeMismatchError("membership query shape differs from the generators");
  QMatrix stacked(basis.rows + C.rows, basis.cols);
  for (std::size_t i = 0; i < basis.rows; ++i)
    for (std::size_t j = 0; j < basis.cols; ++j) stacked.at(i, j) = basis.at(i, j);
  for (std::size_t i = 0; i < C.rows; ++i)
    for (std::size_t j = 0; j < C.cols; ++j) stacked.at(basis.rows + i, j) = C.at(i, j);
  return rank(stacked) == basis.rows;
}

} // namespace ncreal
