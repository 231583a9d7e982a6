#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncreal/ideal.hpp"
#include "ncreal/qmatrix.hpp"
#include "ncreal/rational.hpp"

namespace ncreal {

// Search budget and rounding knobs for the feasibility search.
struct FeasConfig {
  int max_iterations = 10000;
  double numeric_tolerance = 1e-9;
  BigInt rounding_denominator_cap = 1000000;
  unsigned random_seed = 1;
};

// Exact symmetric-pivoted factorization P A P^T = L D L^T with unit lower
// triangular L.  perm[k] is the original index moved into factor position k.
// psd means the factorization completed with every pivot >= 0; pd that all n
// pivots are > 0.  When a matrix is not PSD the scan stops at the witness
// (a negative diagonal entry, or a zero diagonal with a nonzero row) and psd
// stays false.
struct ExactLdl {
  std::vector<std::size_t> perm;
  QMatrix l;
  std::vector<Rational> d;
  bool psd = false;
  bool pd = false;
};

ExactLdl exact_ldl(const QMatrix& a);

// True when P A P^T equals L D L^T entry for entry.
bool ldl_reconstructs(const QMatrix& a, const ExactLdl& f);

// Nonzero PSD element of span(mats), as exact coordinates plus a verified
// factorization.
struct FeasibleCert {
  std::vector<Rational> alpha;
  QMatrix b;
  ExactLdl ldl;
};

// Positive-definite witness orthogonal to every A_t: any PSD member of the
// span then has zero inner product with a PD matrix, hence is zero.
// orthogonality records the inner products <w, A_t> (all exactly zero).
struct InfeasibleCert {
  QMatrix w;
  ExactLdl ldl;
  std::vector<Rational> orthogonality;
};

struct PsdCertificate {
  enum class Kind { Feasible, Infeasible };
  Kind kind = Kind::Infeasible;
  FeasibleCert feasible;
  InfeasibleCert infeasible;
};

// Raised when neither certificate is found within the budget.
struct UndecidedError : std::runtime_error {
  explicit UndecidedError(const std::string& what) : std::runtime_error(what) {}
};

// Decides whether span(mats) contains a nonzero PSD matrix.  Tries exact
// shortcuts first (each basis matrix and its negative; the exactly projected
// complement of the identity), then numeric alternating projections whose
// candidates are rounded to rationals and verified exactly.  Throws
// UndecidedError when the budget runs out, never guesses.
PsdCertificate find_nonzero_psd(const std::vector<QMatrix>& mats, const FeasConfig& cfg);

// PSD member of the affine family base + sum_i t_i dirs[i], or nullopt when
// none is found within the budget (absence is not certified).  Exact
// attempts (base alone, base +/- each direction) come first, then
// alternating projections between the PSD cone and the affine set, with
// every candidate rounded to rationals and verified by exact_ldl.  In the
// result, alpha holds the coordinates t and b the PSD member (b may be zero
// when the zero matrix lies in the family).
std::optional<FeasibleCert> find_affine_psd(const QMatrix& base, const std::vector<QMatrix>& dirs,
                                            const FeasConfig& cfg);

// Square-root rows of B = sum_i d_i u_i u_i^T paired with the complement
// basis: q_i = sum_k L[k][i] v_{perm[k]} over the positive pivots i.  Literal
// square roots would scale each row by sqrt(d_i), which changes nothing about
// the generated left ideal; keeping rows rational preserves exactness via
// sum_i d_i q_i* q_i = v^T B v.
std::vector<NcPoly> extract_generators(const FeasibleCert& cert, const Complement& v);

} // namespace ncreal
