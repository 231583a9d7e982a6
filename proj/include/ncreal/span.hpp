#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncreal/poly.hpp"
#include "ncreal/word.hpp"

namespace ncreal {

// All words of the given length over x1..xg and adjoints, in canonical
// (lexicographic) order; words_up_to concatenates lengths 0..cap.
std::vector<Word> words_of_length(int g, int len);
std::vector<Word> words_up_to(int g, int cap);

// Dimension of the span of all words of degree <= cap, i.e. sum (2g)^j.
std::size_t free_dim(int g, int cap);

// Reduced echelon basis of a subspace of the free algebra with respect to the
// canonical monomial order.  Each element is monic in its pivot (= highest)
// word and that word occurs in no other element, so representations are
// unique and a degree-e slice of the span is spanned by the degree-e basis
// elements.  Elements are kept sorted by pivot word.
class SpanBasis {
 public:
  SpanBasis() = default;

  // Adjoins p modulo the current span; returns true when the dimension grew.
  bool insert(const NcPoly& p);
  std::size_t insert_all(const std::vector<NcPoly>& ps);

  // Normal form: eliminates every occurrence of a pivot word.
  NcPoly reduce(NcPoly p) const;
  bool contains(const NcPoly& p) const { return reduce(p).is_zero(); }

  std::size_t dim() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  int max_degree() const { return elems_.empty() ? -1 : elems_.back().degree(); }

  const std::vector<NcPoly>& elements() const { return elems_; }
  bool has_pivot(const Word& w) const { return index_.find(w) != index_.end(); }
  std::vector<Word> pivot_words() const;

  // Basis elements with lo <= degree <= hi (a basis of that slice of the span).
  std::vector<NcPoly> slice(int lo, int hi) const;
  // dims[e] = number of basis elements of degree exactly e.
  std::vector<int> dims_by_degree() const;

 private:
  std::vector<NcPoly> elems_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

SpanBasis echelonize(const std::vector<NcPoly>& polys);

// Gaussian elimination on (main, shadow) pairs: row operations act on both
// parts, pivots are chosen on main only.  A row whose main part cancels to
// zero surrenders its shadow.  Feeding (u, u) for a basis of U and then
// (w, 0) for a basis of W makes the surrendered shadows span U cap W.
class AugmentedEchelon {
 public:
  // Returns true when the row survived with a nonzero main part.
  bool insert(NcPoly main, NcPoly shadow);
  const std::vector<std::pair<NcPoly, NcPoly>>& rows() const { return rows_; }
  const SpanBasis& captured() const { return captured_; }

 private:
  std::vector<std::pair<NcPoly, NcPoly>> rows_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  SpanBasis captured_;
};

// Exact intersection of spans (Zassenhaus trick via AugmentedEchelon).
SpanBasis sym_intersection(const SpanBasis& u, const SpanBasis& w);
SpanBasis sym_intersection(const std::vector<SpanBasis>& bases);

} // namespace ncreal
