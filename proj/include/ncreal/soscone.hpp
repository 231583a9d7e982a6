#pragma once

#include <optional>
#include <vector>

#include "ncreal/ideal.hpp"
#include "ncreal/qmatrix.hpp"
#include "ncreal/span.hpp"

namespace ncreal {

// Echelon basis of the hermitian part of (I + I*) truncated at a degree.
struct SymSpan {
  SpanBasis basis;
};

// Parameterizes the hermitian elements of (I + I*) that are expressible as
// v^T A v over the complement basis v: mats is an echelon basis (in flattened
// upper-triangle coordinates) of the space of symmetric rational matrices A
// with sum_ij A_ij v_i* v_j in (I + I*).  Row index = starred factor.
struct GramSubspace {
  Complement v;
  std::vector<QMatrix> mats;
};

// Graded echelon of {f + f* : f in the degree-e truncation of I}.  Every
// hermitian u = p + q* rewrites as f + f* with f = (p + q)/2 in I, so this
// is a subspace of the hermitian part of (I + I*)_e, and all of it once
// e >= 2d - 1 (parts of f of degree >= 2d reduce inside I_e then).  Smaller
// e gives a sound under-approximation, which membership searches may use.
SymSpan sym_span_of_ideal(const NormalizedIdeal& n, int e);

// The exact span at the SOS stage's degree 2d - 2 (computed at 2d - 1 and
// sliced).
SymSpan sym_span_of_ideal(const NormalizedIdeal& n);

// Solves v^T A v in span(iota_1..iota_p) for symmetric A exactly.  The words
// v_i* v_j are concrete monomials (v is a monomial complement), so the
// solution space splits into canonical preimages of the supported part of the
// span plus the kernel of A |-> v^T A v, which lives on words with several
// factorizations.
GramSubspace gram_subspace(const NormalizedIdeal& n, const Complement& v, const SymSpan& s);

// The polynomial sum_ij A_ij v_i* v_j.
NcPoly gram_apply(const Complement& v, const QMatrix& a);

// Affine family of symmetric Gram matrices over a fixed monomial support:
// every member G = base + sum_i t_i directions[i] satisfies
//   sum_jk G_jk s_j* s_k - target in span(mod),
// and conversely every solution has that form.  mod may be null (or empty)
// to require equality with target on the nose.
struct AffineGram {
  std::vector<Word> support;
  QMatrix base;
  std::vector<QMatrix> directions;
};

// Solves the word-by-word linear system for the family above; nullopt when
// no symmetric Gram matrix works over this support.
std::optional<AffineGram> gram_solve_affine(const std::vector<Word>& support, const NcPoly& target,
                                            const SymSpan* mod = nullptr);

} // namespace ncreal
