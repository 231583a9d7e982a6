#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ncreal/rational.hpp"

namespace ncreal {

// Dense univariate polynomial over Q; coefficient k is the x^k coefficient,
// trailing zeros stripped so degree() is the true degree (-1 for zero).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rational& a) { return UniPoly({a}); }
  static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
  static UniPoly monomial(std::size_t k, const Rational& a);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& a) const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  friend UniPoly operator*(const Rational& a, const UniPoly& p);
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

  UniPoly derivative() const;
  UniPoly monic() const;

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

 private:
  void strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Monic gcd (zero if both zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& p);

// Yun's algorithm: pairwise-coprime squarefree b_i with p = lc * prod b_i^i;
// returned as (b_i, i) for the nonconstant b_i.
std::vector<std::pair<UniPoly, int>> yun_squarefree(const UniPoly& p);

// Monic product of the distinct irreducible factors, i.e. p / gcd(p, p').
UniPoly squarefree_part(const UniPoly& p);

// Sturm sequence of a squarefree polynomial.
std::vector<UniPoly> sturm_chain(const UniPoly& squarefree);

// Number of distinct real roots, over all of R or in the closed interval
// [a, b].  Input need not be squarefree.
int count_real_roots(const UniPoly& p);
int count_real_roots(const UniPoly& p, const Rational& a, const Rational& b);

// Monic irreducible factors of a nonzero polynomial (with repetition
// according to multiplicity).  Rational-root extraction plus Kronecker
// interpolation search; inputs of degree beyond degree_cap, and searches
// whose interpolation values grow beyond factoring reach, raise
// DegreeCapExceededError.
std::vector<UniPoly> factor_unipoly(const UniPoly& p, int degree_cap = 12);

// Generator of the vanishing ideal of the real zero set of p: the monic
// product of those distinct irreducible factors having a real root.
// p must be nonzero.
UniPoly real_radical_unipoly(const UniPoly& p, int degree_cap = 12);

} // namespace ncreal
