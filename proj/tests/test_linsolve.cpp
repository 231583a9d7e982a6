#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ncreal/ideal.hpp"
#include "ncreal/qmatrix.hpp"
#include "ncreal/span.hpp"
#include "testutil.hpp"

using namespace ncreal;

namespace {

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  QMatrix m(r, c);
  for (Rational& x : m.a)
    x = Rational(static_cast<int>(rng() % 9) - 4) / (static_cast<int>(rng() % 3) + 1);
  return m;
}

}  // namespace

TEST_CASE("rref is idempotent and reduced") {
  std::mt19937 rng(31);
  for (int t = 0; t < 50; ++t) {
    QMatrix m = random_matrix(rng, 3 + rng() % 3, 3 + rng() % 3);
    const auto pivots = rref(m);
    QMatrix again = m;
    const auto pivots2 = rref(again);
    CHECK(again == m);
    CHECK(pivots2 == pivots);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      CHECK(m.at(r, pivots[r]) == 1);
      for (std::size_t i = 0; i < m.rows; ++i)
        if (i != r) CHECK(m.at(i, pivots[r]) == 0);
    }
  }
}

TEST_CASE("hilbert system solves exactly") {
  // Classic ill-conditioned instance: floating point would drift, rationals
  // recover the planted solution exactly.
  const std::size_t n = 8;
  QMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h.at(i, j) = Rational(1) / Rational(static_cast<int>(i + j + 1));
  std::vector<Rational> planted(n);
  for (std::size_t i = 0; i < n; ++i) planted[i] = Rational(static_cast<int>(i) - 3);
  const std::vector<Rational> rhs = h.apply(planted);
  std::vector<Rational> x;
  REQUIRE(solve_linear(h, rhs, x));
  CHECK(x == planted);
}

TEST_CASE("solve_linear detects inconsistency and kernel matches rank") {
  std::mt19937 rng(32);
  for (int t = 0; t < 100; ++t) {
    const QMatrix m = random_matrix(rng, 2 + rng() % 4, 2 + rng() % 4);
    const auto kernel = kernel_basis(m);
    CHECK(kernel.size() == m.cols - rank(m));
    for (const auto& k : kernel) {
      const auto mk = m.apply(k);
      for (const Rational& x : mk) CHECK(x == 0);
    }
    // a consistent right-hand side from a planted solution
    std::vector<Rational> planted(m.cols);
    for (Rational& x : planted) x = Rational(static_cast<int>(rng() % 5) - 2);
    std::vector<Rational> x;
    REQUIRE(solve_linear(m, m.apply(planted), x));
    CHECK(m.apply(x) == m.apply(planted));
  }
  QMatrix bad(2, 1);
  bad.at(0, 0) = 1;
  bad.at(1, 0) = 1;
  std::vector<Rational> x;
  CHECK(!solve_linear(bad, {Rational(0), Rational(1)}, x));
}

TEST_CASE("symmetric flattening round trips") {
  std::mt19937 rng(33);
  for (int t = 0; t < 50; ++t) {
    QMatrix s = random_matrix(rng, 4, 4);
    s = s + s.transpose();
    CHECK(sym_unflatten(sym_flatten(s), 4) == s);
  }
}

TEST_CASE("span basis is reduced echelon with unique reductions") {
  std::mt19937 rng(34);
  for (int t = 0; t < 50; ++t) {
    SpanBasis b;
    std::vector<NcPoly> polys;
    for (int i = 0; i < 6; ++i) {
      const NcPoly p = testutil::random_poly(rng, 2, 3, 4);
      polys.push_back(p);
      b.insert(p);
    }
    for (const NcPoly& p : polys) CHECK(b.contains(p));
    const auto& elems = b.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const Word pivot = elems[i].terms().back().first;
      CHECK(elems[i].terms().back().second == 1);  // monic
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (j != i) CHECK(elems[j].coefficient(pivot) == 0);
      if (i + 1 < elems.size()) CHECK(pivot < elems[i + 1].terms().back().first);
    }
    // random combinations stay inside, and reduce to zero
    NcPoly combo;
    for (const NcPoly& p : polys)
      combo += testutil::random_coeff(rng) * p;
    CHECK(b.reduce(combo).is_zero());
  }
}

TEST_CASE("span slices are degree-exact") {
  SpanBasis b;
  b.insert(NcPoly::variable(1) + NcPoly::one());
  b.insert(NcPoly::variable(1) * NcPoly::variable(2));
  CHECK(b.slice(0, 1).size() == 1);
  CHECK(b.slice(2, 2).size() == 1);
  CHECK(b.dim() == 2);
  CHECK(free_dim(2, 1) == 5);   // 1 + 4 letters
  CHECK(free_dim(1, 2) == 7);   // 1 + 2 + 4
}

TEST_CASE("ideal truncation matches the brute product span") {
  std::mt19937 rng(35);
  for (int t = 0; t < 12; ++t) {
    const int g = 1 + static_cast<int>(rng() % 2);
    std::vector<NcPoly> gens;
    const int count = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i)
      gens.push_back(testutil::random_poly(rng, g, 2, 3));
    int d = 0;
    for (const NcPoly& p : gens) d = std::max(d, p.degree());
    const int cap = d + 1;
    const SpanBasis fast = ideal_truncation(gens, g, cap);

    // Oracle: echelon of every product m * p with deg <= r.  Combinations of
    // products above the cap can cancel down to degree <= cap, so products
    // bounded by the cap alone under-approximate; grow the room r until the
    // degree <= cap slice stops moving.  Slicing a graded echelon by degree
    // is exact: a combination's degree is the largest contributing pivot's.
    SpanBasis accum;
    std::size_t sliced_dim = 0;
    for (int r = cap; r <= cap + 4; ++r) {
      accum = SpanBasis();
      for (const NcPoly& p : gens) {
        std::vector<Word> words{Word::one()};
        for (int len = 0; len + p.degree() <= r; ++len) {
          if (len > 0) {
            std::vector<Word> next;
            for (const Word& w : words)
              for (int v = 1; v <= g; ++v)
                for (int s = 0; s < 2; ++s) next.push_back(w * Word::var(v, s != 0));
            words = std::move(next);
          }
          for (const Word& w : words) accum.insert(NcPoly::monomial(w, 1) * p);
        }
      }
      sliced_dim = 0;
      bool all_found = true;
      for (const NcPoly& p : fast.elements())
        if (!accum.contains(p)) all_found = false;
      for (const NcPoly& p : accum.elements())
        if (p.degree() <= cap) ++sliced_dim;
      if (all_found) break;
    }
    CHECK(sliced_dim == fast.dim());
    for (const NcPoly& p : fast.elements()) CHECK(accum.contains(p));
    for (const NcPoly& p : accum.elements())
      if (p.degree() <= cap) CHECK(fast.contains(p));
  }
}

TEST_CASE("truncation rejects caps below the generator degree") {
  CHECK_THROWS_AS(
      ideal_truncation({NcPoly::variable(1) * NcPoly::variable(1)}, 1, 1),
      DegreeTooSmallError);
}

TEST_CASE("membership and the unit shortcut") {
  const NcPoly x1 = NcPoly::variable(1), x2 = NcPoly::variable(2);
  const NormalizedIdeal n = normalize_ideal({x1 * x1 + x2}, 2);
  CHECK(member(n, (x2 * x1 - NcPoly::one()) * (x1 * x1 + x2)));
  CHECK(!member(n, x1));
  CHECK(!member(n, NcPoly::one()));

  const NormalizedIdeal unit = normalize_ideal({x1, x1 + NcPoly::one()}, 1);
  CHECK(unit.unit_flag);
  std::mt19937 rng(36);
  CHECK(member(unit, testutil::random_poly(rng, 1, 3, 3)));
}

TEST_CASE("reduce_high stalls exactly outside I plus low degrees") {
  const NcPoly x1 = NcPoly::variable(1);
  const NormalizedIdeal n = normalize_ideal({x1.adjoint() * x1}, 1);
  CHECK(in_ideal_plus_lowdeg(n, x1));                       // degree < d
  CHECK(in_ideal_plus_lowdeg(n, x1 * x1.adjoint() * x1));   // m p + low
  CHECK(!in_ideal_plus_lowdeg(n, x1 * x1));                 // stalls
}

TEST_CASE("leading space matches shifted pivot leadings") {
  std::mt19937 rng(37);
  for (int t = 0; t < 30; ++t) {
    const int g = 1 + static_cast<int>(rng() % 2);
    const NormalizedIdeal n =
        normalize_ideal({testutil::random_poly_exact_degree(rng, g, 2, 3)}, g);
    if (n.unit_flag) continue;
    const SpanBasis lead = leading_space(n, n.d + 1);
    for (const NcPoly& p : n.pivots)
      for (int v = 1; v <= g; ++v) {
        CHECK(lead.contains(NcPoly::variable(v) * p.leading_polynomial()));
        CHECK(lead.contains(NcPoly::variable(v, true) * p.leading_polynomial()));
      }
  }
}
