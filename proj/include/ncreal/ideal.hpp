#pragma once

#include <unordered_map>
#include <vector>

#include "ncreal/errors.hpp"
#include "ncreal/span.hpp"

namespace ncreal {

// A finitely generated left ideal I, normalized at its generating degree d:
// pivots are degree-d members whose leading polynomials are linearly
// independent, low is an echelon basis of I cap A_{d-1}, and
// I = (+) A pivot_i (+) span(low).  basis holds the full echelon of I cap A_d
// (= pivots together with low).
struct NormalizedIdeal {
  int g = 0;           // ambient number of variables
  int d = 0;           // degree bound (max degree of the generating set)
  bool unit_flag = false;  // true iff 1 lies in the ideal
  SpanBasis basis;
  std::vector<NcPoly> pivots;
  SpanBasis low;

  // Leading polynomials of the pivots and their pivot-word index.  The
  // leadings inherit reduced-echelon form from basis, so membership layers
  // reduce against them directly.
  std::vector<NcPoly> pivot_leadings;
  std::unordered_map<Word, std::size_t, WordHash> leading_index;
};

// Echelon basis of the degree-cap truncation of the left ideal generated by
// gens inside the algebra on g variables.  Iterates letter-multiplication
// sweeps to a fixpoint: a sweep adjoins l*e for every basis element e and
// letter l with deg(l*e) <= cap, and sweeps repeat until no dimension grows.
// Letter closure of the lower degrees then gives word closure, so the
// fixpoint span is exactly the truncated ideal.  Requires cap >= max degree
// of the generators (cancellation from above is impossible at or beyond that
// degree); throws DegreeTooSmallError otherwise, EmptyGeneratorsError when no
// generator is nonzero.
SpanBasis ideal_truncation(const std::vector<NcPoly>& gens, int g, int cap);

// Normalization at d = max degree of the generators.  g < 0 means infer the
// ambient variable count from the generators.
NormalizedIdeal normalize_ideal(const std::vector<NcPoly>& gens, int g = -1);

// Basis of the degree-D leading space of the ideal, span{m p' : |m| = D - d}.
// Throws DegreeTooSmallError when D < n.d.
SpanBasis leading_space(const NormalizedIdeal& n, int big_d);

// Monomial complement V with A_{d-1} = I_{d-1} (+) V: all words of degree
// <= d-1 that are not pivot words of low, listed by descending degree and
// ascending canonical order within a degree.
struct Complement {
  std::vector<Word> words;
  std::vector<NcPoly> polys() const;
};
Complement complement_low(const NormalizedIdeal& n);

// Degree-d words outside the pivot-word set, a monomial complement G with
// A^H_d = I^l_d (+) span G.
std::vector<Word> leading_complement(const NormalizedIdeal& n);

// Peels top layers off q: while deg q >= d, the top homogeneous part must
// split by length-(deg q - d) prefixes into combinations of the pivots'
// leading polynomials; matching layers are subtracted (with the pivots' full
// lower-order tails), dropping the degree.  stalled reports a layer that
// failed, which certifies q lies outside I + A_{d-1}.
struct HighReduction {
  NcPoly remainder;
  bool stalled = false;
};
HighReduction reduce_high(const NormalizedIdeal& n, NcPoly q);

// Exact left-ideal membership (no degree slack is needed: independent pivot
// leadings rule out degree drops in any witness).
bool member(const NormalizedIdeal& n, const NcPoly& q);

// True iff q lies in I + A_{d-1}.
bool in_ideal_plus_lowdeg(const NormalizedIdeal& n, const NcPoly& q);

} // namespace ncreal
