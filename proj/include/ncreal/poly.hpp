#pragma once

#include <utility>
#include <vector>

#include "ncreal/rational.hpp"
#include "ncreal/word.hpp"

namespace ncreal {

// Element of the free *-algebra with rational coefficients.  Terms are kept
// sorted ascending in the canonical order (graded by length, then lex), with
// no zero coefficients, so the representation is unique and the leading
// (top-degree homogeneous) part is a suffix of the term list.
class NcPoly {
 public:
  using Term = std::pair<Word, Rational>;

  NcPoly() = default;

  static NcPoly zero() { return NcPoly(); }
  static NcPoly constant(const Rational& c) { return monomial(Word::one(), c); }
  static NcPoly one() { return constant(1); }
  static NcPoly variable(int i, bool starred = false) { return monomial(Word::var(i, starred), 1); }
  static NcPoly monomial(const Word& w, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  // Degree of the zero polynomial is the marker value -1.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().first.length()); }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  int max_var() const;
  bool is_hermitian() const { return *this == adjoint(); }

  NcPoly adjoint() const;
  // Top-degree homogeneous component (zero polynomial for zero input).
  NcPoly leading_polynomial() const;
  // Terms of degree <= e.
  NcPoly truncated(int e) const;

  NcPoly operator-() const;
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const NcPoly& o) const;
  NcPoly& operator+=(const NcPoly& o) { *this = *this + o; return *this; }
  NcPoly& operator-=(const NcPoly& o) { *this = *this - o; return *this; }
  NcPoly& operator*=(const NcPoly& o) { *this = *this * o; return *this; }

  friend NcPoly operator*(const Rational& c, const NcPoly& p);
  NcPoly operator*(const Rational& c) const { return c * *this; }

  bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NcPoly& o) const { return terms_ != o.terms_; }

  // Builds from an arbitrary (unsorted, duplicated) term list.
  static NcPoly from_terms(std::vector<Term> raw);

 private:
  std::vector<Term> terms_;
};

} // namespace ncreal
