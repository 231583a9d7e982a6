#pragma once

#include <cstddef>
#include <vector>

#include "ncreal/poly.hpp"
#include "ncreal/qmatrix.hpp"

namespace ncreal {

// A tuple of square rational matrices X1..Xg together with a vector v.
// Evaluation sends xi -> act[i-1] and xi* -> act_star[i-1]; for points built
// with make_point the starred action is the transpose, so evaluation is a
// *-representation.  Compressed points (below) carry an explicitly computed
// starred action instead, because compression projects along a coordinate
// complement rather than orthogonally.
struct MatrixPoint {
  int g = 0;
  std::size_t n = 0;
  std::vector<QMatrix> act;
  std::vector<QMatrix> act_star;
  std::vector<Rational> vec;
};

// Validates shapes and fills act_star with transposes.
MatrixPoint make_point(std::vector<QMatrix> mats, std::vector<Rational> v);

// p(X)[v], exact.  Requires p.max_var() <= pt.g.
std::vector<Rational> evaluate(const NcPoly& p, const MatrixPoint& pt);

// Restriction of a point to V = span{ p(X)v : deg p <= d }, in coordinates of
// a reduced-echelon basis of V.  The projection onto V fixes V pointwise and
// kills the complementary coordinates, so r(X')[v'] lifts to r(X)[v] exactly
// for every r of degree <= d.
struct CompressedPoint {
  MatrixPoint point;
  std::vector<std::vector<Rational>> basis; // basis vectors of V, length n each
  std::vector<std::size_t> pivots;          // pivot coordinate of each basis vector
};

CompressedPoint compress_point(const MatrixPoint& pt, int d);

// Maps coordinates back to the ambient space of the original point.
std::vector<Rational> lift(const CompressedPoint& cp, const std::vector<Rational>& coords);

} // namespace ncreal
