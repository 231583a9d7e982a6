#include "ncreal/point.hpp"

#include <algorithm>

#include "ncreal/errors.hpp"

namespace ncreal {

MatrixPoint make_point(std::vector<QMatrix> mats, std::vector<Rational> v) {
  MatrixPoint pt;
  pt.g = static_cast<int>(mats.size());
  pt.n = v.size();
  for (const QMatrix& m : mats)
    if (m.rows != pt.n || m.cols != pt.n)
      throw SizeMismatchError("point matrices must be square of the vector's size");
  pt.act = std::move(mats);
  pt.act_star.reserve(pt.act.size());
  for (const QMatrix& m : pt.act) pt.act_star.push_back(m.transpose());
  pt.vec = std::move(v);
  return pt;
}

std::vector<Rational> evaluate(const NcPoly& p, const MatrixPoint& pt) {
  if (p.max_var() > pt.g) throw SizeMismatchError("polynomial uses more variables than the point");
  std::vector<Rational> out(pt.n, Rational(0));
  for (const auto& [w, c] : p.terms()) {
    std::vector<Rational> u = pt.vec;
    for (std::size_t i = w.length(); i-- > 0;) {
      Letter l = w.at(i);
      const QMatrix& m = l.starred ? pt.act_star[l.var - 1] : pt.act[l.var - 1];
      u = m.apply(u);
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * u[i];
  }
  return out;
}

namespace {

// Reduced-echelon insert: basis vectors have distinct pivot coordinates,
// entry 1 at the own pivot, 0 at every other basis vector's pivot.
bool echelon_insert(std::vector<std::vector<Rational>>& basis,
                    std::vector<std::size_t>& pivots, std::vector<Rational> v) {
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const Rational& c = v[pivots[s]];
    if (c == 0) continue;
    Rational f = c;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[s][j];
  }
  std::size_t piv = v.size();
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) { piv = j; break; }
  if (piv == v.size()) return false;
  Rational inv = Rational(1) / v[piv];
  for (Rational& x : v) x *= inv;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    Rational f = basis[s][piv];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) basis[s][j] -= f * v[j];
  }
  basis.push_back(std::move(v));
  pivots.push_back(piv);
  return true;
}

} // namespace

CompressedPoint compress_point(const MatrixPoint& pt, int d) {
  CompressedPoint cp;
  // Breadth-first closure of span{v} under all 2g letter actions, depth d.
  std::vector<std::vector<Rational>> frontier;
  if (echelon_insert(cp.basis, cp.pivots, pt.vec)) frontier.push_back(pt.vec);
  for (int depth = 0; depth < d && !frontier.empty() && cp.basis.size() < pt.n; ++depth) {
    std::vector<std::vector<Rational>> next;
    for (const auto& u : frontier) {
      for (int i = 0; i < pt.g; ++i) {
        for (const QMatrix* m : {&pt.act[i], &pt.act_star[i]}) {
          std::vector<Rational> w = m->apply(u);
          if (echelon_insert(cp.basis, cp.pivots, w)) next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }

  std::size_t r = cp.basis.size();
  auto coords = [&](const std::vector<Rational>& u) {
    std::vector<Rational> c(r);
    for (std::size_t s = 0; s < r; ++s) c[s] = u[cp.pivots[s]];
    return c;
  };
  auto compress_action = [&](const QMatrix& m) {
    QMatrix out(r, r);
    for (std::size_t s = 0; s < r; ++s) {
      std::vector<Rational> col = coords(m.apply(cp.basis[s]));
      for (std::size_t t = 0; t < r; ++t) out.at(t, s) = col[t];
    }
    return out;
  };

  cp.point.g = pt.g;
  cp.point.n = r;
  cp.point.vec = coords(pt.vec);
  for (int i = 0; i < pt.g; ++i) {
    cp.point.act.push_back(compress_action(pt.act[i]));
    cp.point.act_star.push_back(compress_action(pt.act_star[i]));
  }
  return cp;
}

std::vector<Rational> lift(const CompressedPoint& cp, const std::vector<Rational>& coords) {
  if (coords.size() != cp.basis.size()) throw SizeMismatchError("coordinate size mismatch in lift");
  std::size_t n = cp.basis.empty() ? 0 : cp.basis[0].size();
  std::vector<Rational> u(n, Rational(0));
  for (std::size_t s = 0; s < coords.size(); ++s)
    for (std::size_t j = 0; j < n; ++j) u[j] += coords[s] * cp.basis[s][j];
  return u;
}

} // namespace ncreal
