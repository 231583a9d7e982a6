#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ncreal/ideal.hpp"
#include "ncreal/psdfeas.hpp"
#include "ncreal/soscone.hpp"

namespace ncreal {

// Three-valued answer for membership questions that quantify over degrees we
// cannot search exhaustively.
enum class Ternary { yes, no, unknown };

// One round of the radical iteration.
struct RealRadicalRound {
  int k = 0;
  std::vector<NcPoly> generators;  // pruned generating set entering this round
  int degree_bound = 0;            // max degree d over those generators
  std::size_t low_dim = 0;         // dim of the ideal's degree <= d-1 slice
  bool fast_path = false;          // squares found by decomposing one generator
  bool gram_empty = false;         // no Gram matrices existed, vacuous finish
  bool has_certificate = false;
  PsdCertificate certificate;      // present iff has_certificate; fast-path
                                   // rounds store the affine search's result
  std::vector<NcPoly> extracted;   // parts adjoined to the next round's ideal
};

struct RealRadicalTrace {
  std::vector<RealRadicalRound> rounds;
};

struct RealRadicalResult {
  NormalizedIdeal ideal;  // the real radical, in normalized form
  RealRadicalTrace trace;
};

// The feasibility search exhausted its budget; carries the finished rounds.
struct RealRadicalUndecided : std::runtime_error {
  RealRadicalTrace trace;
  RealRadicalUndecided(const std::string& what, RealRadicalTrace t)
      : std::runtime_error(what), trace(std::move(t)) {}
};

// Smallest real left ideal containing the generators.  Each round looks for a
// sum of hermitian squares lying in I + I* whose squared parts are not all in
// I, adjoins those parts, and renormalizes; it stops when an exact
// infeasibility certificate (or an empty search space) shows no such sum
// remains.  g fixes the ambient variable count, -1 infers it.
RealRadicalResult real_radical(const std::vector<NcPoly>& gens, int g = -1,
                               const FeasConfig& cfg = FeasConfig{});

// True when the first round already terminates: no sum of hermitian squares
// in I + I* has a part outside I.
bool is_real(const std::vector<NcPoly>& gens, int g = -1,
             const FeasConfig& cfg = FeasConfig{});

// Membership of a in {p : p*p + sigma lies in I + I* for some sum of
// hermitian squares sigma}.  yes always rests on an exact certificate: either
// a*a falls in the hermitian part of I + I* directly, or a Gram search over
// words of degree <= degree_cap finds sigma.  no rests on the exact
// obstruction that members must lie in I + A_{d-1}.  unknown means the
// bounded search was inconclusive; larger caps may settle it.
Ternary alpha_member(const NcPoly& a, const std::vector<NcPoly>& gens,
                     int degree_cap, int g = -1,
                     const FeasConfig& cfg = FeasConfig{});

// Replays a finished radical computation as a chain of square-membership
// steps: every extracted part must certify as an alpha member over the ideal
// it was extracted from, and the final ideal must test real.
bool beta_consistency(const std::vector<NcPoly>& gens, int g = -1,
                      const FeasConfig& cfg = FeasConfig{});

}  // namespace ncreal
