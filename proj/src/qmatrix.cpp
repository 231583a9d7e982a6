#include "ncreal/qmatrix.hpp"

namespace ncreal {

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(sel, j));
    Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const QMatrix& m) {
  QMatrix c = m;
  return rref(c).size();
}

bool solve_linear(const QMatrix& m, const std::vector<Rational>& rhs, std::vector<Rational>& x) {
  if (rhs.size() != m.rows) throw SizeMismatchError("solve_linear rhs size mismatch");
  QMatrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = rhs[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return false; // pivot in the rhs column
  x.assign(m.cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
  return true;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[free] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -r.at(p, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> sym_flatten(const QMatrix& a) {
  std::vector<Rational> t;
  t.reserve(a.rows * (a.rows + 1) / 2);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = i; j < a.cols; ++j) t.push_back(a.at(i, j));
  return t;
}

QMatrix sym_unflatten(const std::vector<Rational>& t, std::size_t dim) {
  QMatrix a(dim, dim);
  std::size_t k = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      a.at(i, j) = t[k];
      a.at(j, i) = t[k];
      ++k;
    }
  return a;
}

} // namespace ncreal
