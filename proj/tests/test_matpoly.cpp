#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ncreal/parse.hpp"
#include "ncreal/polymatrix.hpp"
#include "testutil.hpp"

using namespace ncreal;

namespace {

// Full invariant battery for one decomposition.
bool smith_ok(const UniPolyMatrix& p) {
  const SmithForm f = smith_normal_form(p);
  if (!(f.U * f.D * f.V == p)) return false;
  if (!(f.Uinv * p * f.Vinv == f.D)) return false;
  if (det(f.U).degree() != 0 || det(f.V).degree() != 0) return false;
  for (std::size_t i = 0; i + 1 < f.diag.size(); ++i) {
    if (f.diag[i].is_zero() && !f.diag[i + 1].is_zero()) return false;
    if (!f.diag[i].is_zero() && !divides(f.diag[i], f.diag[i + 1])) return false;
  }
  for (const UniPoly& d : f.diag)
    if (!d.is_zero() && d.leading() != 1) return false;
  return true;
}

UniPoly random_unipoly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-3, 3);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (Rational& x : c) x = coef(rng);
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("univariate gcd, squarefree split and factoring") {
  const UniPoly p = parse_unipoly("(x-1)^2*(x^2+1)");
  CHECK(gcd(p, parse_unipoly("(x-1)*(x+2)")) == parse_unipoly("x-1"));
  CHECK(divides(parse_unipoly("x-1"), p));
  CHECK(!divides(parse_unipoly("x-2"), p));
  CHECK(squarefree_part(p) == parse_unipoly("(x-1)*(x^2+1)"));

  const auto yun = yun_squarefree(p);
  REQUIRE(yun.size() == 2);
  CHECK(yun[0].first == parse_unipoly("x^2+1"));
  CHECK(yun[0].second == 1);
  CHECK(yun[1].first == parse_unipoly("x-1"));
  CHECK(yun[1].second == 2);

  auto factors = factor_unipoly(parse_unipoly("6*(x-1)^2*(x^2+1)"));
  REQUIRE(factors.size() == 3);
  std::sort(factors.begin(), factors.end(),
            [](const UniPoly& a, const UniPoly& b) { return a.degree() < b.degree(); });
  CHECK(factors[0] == parse_unipoly("x-1"));
  CHECK(factors[1] == parse_unipoly("x-1"));
  CHECK(factors[2] == parse_unipoly("x^2+1"));
}

TEST_CASE("real root counting via sturm sequences") {
  CHECK(count_real_roots(parse_unipoly("x^2+1")) == 0);
  CHECK(count_real_roots(parse_unipoly("x^2-2")) == 2);
  CHECK(count_real_roots(parse_unipoly("(x-1)*(x-2)*(x^2+1)")) == 2);
  CHECK(count_real_roots(parse_unipoly("(x-1)*(x-2)*(x^2+1)"), Rational(0), Rational(1)) == 1);
  CHECK(count_real_roots(parse_unipoly("(x-1)^3")) == 1);  // distinct roots only
}

TEST_CASE("vanishing-ideal generator keeps only factors with real roots") {
  CHECK(real_radical_unipoly(parse_unipoly("(x-1)^2")) == parse_unipoly("x-1"));
  CHECK(real_radical_unipoly(parse_unipoly("x^2+1")) == UniPoly::constant(1));
  CHECK(real_radical_unipoly(parse_unipoly("(x^2+1)*(x-1)^2*(x-2)")) ==
        parse_unipoly("(x-1)*(x-2)"));
  CHECK(real_radical_unipoly(parse_unipoly("7")) == UniPoly::constant(1));
}

TEST_CASE("smith form on fixed shapes") {
  const UniPolyMatrix m1 = parse_unipoly_matrix("[x, 0; 0, x^2]");
  CHECK(smith_ok(m1));
  CHECK(smith_normal_form(m1).D == m1);

  const UniPolyMatrix m2 = parse_unipoly_matrix("[x, 1; 0, x]");
  CHECK(smith_ok(m2));
  const SmithForm f2 = smith_normal_form(m2);
  CHECK(f2.diag[0] == UniPoly::constant(1));
  CHECK(f2.diag[1] == parse_unipoly("x^2"));

  // rank deficiency: zero invariant factors sort to the end
  const UniPolyMatrix m3 = parse_unipoly_matrix("[x, x; x, x]");
  CHECK(smith_ok(m3));
  const SmithForm f3 = smith_normal_form(m3);
  CHECK(f3.diag[0] == parse_unipoly("x"));
  CHECK(f3.diag[1].is_zero());
}

TEST_CASE("smith form recovers planted invariant factors") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    UniPolyMatrix d0(3, 3);
    d0.at(0, 0) = UniPoly::constant(1);
    d0.at(1, 1) = parse_unipoly("x+1");
    d0.at(2, 2) = parse_unipoly("(x+1)*(x^2+3)");
    UniPolyMatrix u0 = UniPolyMatrix::identity(3), v0 = UniPolyMatrix::identity(3);
    for (int s = 0; s < 6; ++s) {
      UniPolyMatrix e = UniPolyMatrix::identity(3);
      const std::size_t i = rng() % 3, j = rng() % 3;
      if (i == j) continue;
      const int c = static_cast<int>(rng() % 5) - 2;
      e.at(i, j) = UniPoly::monomial(rng() % 3, Rational(c));
      if (s % 2 == 0)
        u0 = u0 * e;
      else
        v0 = e * v0;
    }
    const UniPolyMatrix p = u0 * d0 * v0;
    CHECK(smith_ok(p));
    const SmithForm f = smith_normal_form(p);
    CHECK(f.diag[0] == d0.at(0, 0));
    CHECK(f.diag[1] == d0.at(1, 1).monic());
    CHECK(f.diag[2] == d0.at(2, 2).monic());
  }
}

TEST_CASE("smith form invariants on random matrices") {
  std::mt19937 rng(52);
  std::uniform_int_distribution<int> sz(1, 3);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = static_cast<std::size_t>(sz(rng));
    UniPolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 3 != 0) m.at(i, j) = random_unipoly(rng, 2);
    CHECK(smith_ok(m));
  }
}

TEST_CASE("stacked hermitian square of the generators") {
  QMatrix e11(2, 2), e22(2, 2);
  e11.at(0, 0) = 1;
  e22.at(1, 1) = 1;
  CHECK(principal_reduce({UniPolyMatrix::from_constant(e11),
                          UniPolyMatrix::from_constant(e22)}) ==
        UniPolyMatrix::identity(2));

  const UniPolyMatrix g1 = parse_unipoly_matrix("[x, 0; 0, 0]");
  const UniPolyMatrix g2 = parse_unipoly_matrix("[0, 0; 0, x-1]");
  CHECK(principal_reduce({g1, g2}) == parse_unipoly_matrix("[x^2, 0; 0, (x-1)^2]"));

  const UniPolyMatrix g3 = parse_unipoly_matrix("[x, 1; 0, x]");
  CHECK(principal_reduce({g3}) == g3.transpose() * g3);
}

TEST_CASE("matrix radical of a diagonal instance") {
  const UniPolyMatrix gen = parse_unipoly_matrix("[x^2, 0; 0, x^2+1]");
  const UniPolyMatrix g = eradical_matpoly({gen});
  const ERadical full = eradical_full({gen});

  // same left ideal as diag(x, 1)
  const UniPolyMatrix want = parse_unipoly_matrix("[x, 0; 0, 1]");
  CHECK(eradical_member(want, {gen}));
  CHECK(eradical_member_of(want, full));
  CHECK(eradical_member_of(g, full));

  CHECK(!eradical_member(parse_unipoly_matrix("[1, 0; 0, 0]"), {gen}));
  CHECK(eradical_member(parse_unipoly_matrix("[x, 0; 0, 0]"), {gen}));
  CHECK(eradical_member(parse_unipoly_matrix("[0, 0; 0, 1]"), {gen}));
}

TEST_CASE("matrix radical scalar case matches the univariate radical") {
  UniPolyMatrix one(1, 1);
  one.at(0, 0) = parse_unipoly("(x^2+1)*(x-1)^2");
  CHECK(eradical_matpoly({one}).at(0, 0) == parse_unipoly("x-1"));

  const ERadical full = eradical_full({UniPolyMatrix::identity(2)});
  CHECK(eradical_member_of(UniPolyMatrix::identity(2), full));
}

TEST_CASE("matrix radical is stable and invariant under unimodular moves") {
  const std::vector<UniPolyMatrix> gens = {parse_unipoly_matrix("[x^2, x; 0, (x-1)^2]")};
  const UniPolyMatrix g = eradical_matpoly(gens);
  const ERadical rg = eradical_full({g});
  const ERadical orig = eradical_full(gens);
  CHECK(eradical_member_of(rg.G, orig));
  CHECK(eradical_member_of(orig.G, rg));

  const UniPolyMatrix u = parse_unipoly_matrix("[1, x^2; 0, 1]");
  const ERadical moved = eradical_full({u * gens[0]});
  CHECK(eradical_member_of(moved.G, orig));
  CHECK(eradical_member_of(orig.G, moved));
}

TEST_CASE("constant-matrix radical is the row space") {
  QMatrix e11(2, 2), e22(2, 2);
  e11.at(0, 0) = 1;
  e22.at(1, 1) = 1;
  CHECK(eradical_constant_member(e11, {e11}));
  CHECK(!eradical_constant_member(e22, {e11}));
  CHECK(eradical_constant_member(e22, {e11, e22}));
  CHECK(eradical_constant({e11, e22}).rows == 2);
}
