// Acceptance battery.  Each criterion prints exactly one line
//   criterion N (<what it checks>): PASS|FAIL
// optionally followed by indented notes.  All checks are exact rational
// arithmetic; the only pinned numeric knobs are the wall-clock budget for the
// end-to-end run and the default search budget of FeasConfig.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "ncreal/parse.hpp"
#include "ncreal/point.hpp"
#include "ncreal/polymatrix.hpp"
#include "ncreal/realrad.hpp"
#include "ncreal/serialize.hpp"
#include "testutil.hpp"

using namespace ncreal;

namespace {

constexpr double kShowcaseWallSeconds = 60.0;  // criterion 1 budget

int failures = 0;

void report(int k, const char* label, bool ok) {
  std::printf("criterion %d (%s): %s\n", k, label, ok ? "PASS" : "FAIL");
  std::fflush(stdout);
  if (!ok) ++failures;
}

void note(const std::string& msg) {
  std::printf("    note: %s\n", msg.c_str());
  std::fflush(stdout);
}

NcPoly showcase_generator() {
  const NcPoly q = parse_poly("x1*x1 + x2x3x3*x2*");
  return q * q + parse_poly("x4*x4");
}

std::vector<NcPoly> showcase_target() {
  return {parse_poly("x1"), parse_poly("x3*x2*"), parse_poly("x4")};
}

bool same_ideal(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b, int g) {
  const NormalizedIdeal na = normalize_ideal(a, g), nb = normalize_ideal(b, g);
  for (const NcPoly& p : a)
    if (!member(nb, p)) return false;
  for (const NcPoly& p : b)
    if (!member(na, p)) return false;
  return true;
}

bool spans_equal(const SpanBasis& a, const SpanBasis& b) {
  if (a.dim() != b.dim()) return false;
  for (const NcPoly& p : a.elements())
    if (!b.contains(p)) return false;
  return true;
}

// ---------------------------------------------------------------- criterion 1
bool criterion_showcase() {
  const auto t0 = std::chrono::steady_clock::now();
  const RealRadicalResult r = real_radical({showcase_generator()}, 4, FeasConfig{});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool ok = !r.trace.rounds.empty() && secs < kShowcaseWallSeconds;
  if (ok) {
    const RealRadicalRound& last = r.trace.rounds.back();
    ok = last.has_certificate &&
         last.certificate.kind == PsdCertificate::Kind::Infeasible &&
         same_ideal(ideal_generators(r.ideal), showcase_target(), 4);
  }
  report(1, "degree-8 generator reduces to the known three-generator radical", ok);
  note("completed in " + std::to_string(secs) + " s");
  return ok;
}

// ---------------------------------------------------------------- criterion 2
bool criterion_hand_trace() {
  const NormalizedIdeal n = normalize_ideal(showcase_target(), 4);
  const Complement v = complement_low(n);
  const SymSpan s = sym_span_of_ideal(n);
  const GramSubspace gs = gram_subspace(n, v, s);

  // the complement basis the hand computation works over
  bool order_ok = v.words.size() == 7;
  const char* expect_v[] = {"x1*", "x2", "x2*", "x3", "x3*", "x4*", "1"};
  for (std::size_t i = 0; order_ok && i < 7; ++i)
    order_ok = print_poly(NcPoly::monomial(v.words[i], 1)) == expect_v[i];

  // the hand count arrives at a one-parameter family spanned by the single
  // pairing matrix with ones at the (x2*, x3) positions
  QMatrix claimed(7, 7);
  claimed.at(2, 3) = 1;
  claimed.at(3, 2) = 1;

  const bool ok = order_ok && gs.mats.size() == 1 && gs.mats[0] == claimed;
  report(2, "hand-counted parameterization of the final certificate stage", ok);
  if (!ok) {
    // document exactly how far the computed family agrees with the hand count
    bool hollow = true;
    for (const QMatrix& a : gs.mats)
      for (std::size_t i = 0; i < a.rows; ++i)
        if (a.at(i, i) != 0) hollow = false;

    bool claimed_in_span = false;
    if (!gs.mats.empty()) {
      QMatrix stack(gs.mats.size(), sym_flatten(claimed).size());
      for (std::size_t t = 0; t < gs.mats.size(); ++t) {
        const auto row = sym_flatten(gs.mats[t]);
        for (std::size_t j = 0; j < row.size(); ++j) stack.at(t, j) = row[j];
      }
      std::vector<Rational> coords;
      claimed_in_span = solve_linear(stack.transpose(), sym_flatten(claimed), coords);
    }

    bool still_infeasible = false;
    if (!gs.mats.empty()) {
      const PsdCertificate c = find_nonzero_psd(gs.mats, FeasConfig{});
      still_infeasible = c.kind == PsdCertificate::Kind::Infeasible &&
                         c.infeasible.w == QMatrix::identity(7);
    }
    note("computed family has dimension " + std::to_string(gs.mats.size()) +
         ", not 1: the hand count omits the products against the constant "
         "complement word (x1 + x1* and x4 + x4* also land in the span), plus "
         "two kernel directions on words with several factorizations");
    note(std::string("sound parts verified: claimed matrix inside the computed "
                     "family (") +
         (claimed_in_span ? "yes" : "NO") + "), every member hollow (" +
         (hollow ? "yes" : "NO") +
         "), stage still infeasible with the identity witness (" +
         (still_infeasible ? "yes" : "NO") +
         "), so the final radical is unaffected");
  }
  return ok;
}

// ---------------------------------------------------------------- criterion 3
bool criterion_relaxation_triple() {
  const FeasConfig cfg;
  bool ok = alpha_member(parse_poly("x1"), {parse_poly("x1*x1")}, 2, -1, cfg) ==
            Ternary::yes;
  ok = ok && alpha_member(parse_poly("x1 x1"), {parse_poly("x1*x1")}, 2, -1, cfg) ==
                 Ternary::no;
  const RealRadicalResult r = real_radical({parse_poly("x1*x1")}, -1, cfg);
  ok = ok && same_ideal(ideal_generators(r.ideal), {parse_poly("x1")}, 1);
  report(3, "square-root membership: yes certificate, no obstruction, radical", ok);
  return ok;
}

// ---------------------------------------------------------------- criterion 4
bool criterion_random_runs() {
  std::mt19937 rng(104);
  std::uniform_int_distribution<int> count(1, 3), terms(1, 4);
  // degree shrinks as the variable count grows, keeping the hermitian span at
  // degree 2d-1 (the per-round workspace) around a thousand words at most
  const int shapes[][2] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1},
                           {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  bool ok = true;
  for (int t = 0; t < 100 && ok; ++t) {
    const int g = shapes[t % 9][0], max_deg = shapes[t % 9][1];
    std::vector<NcPoly> gens;
    for (int i = count(rng); i > 0; --i)
      gens.push_back(testutil::random_poly(rng, g, max_deg, terms(rng)));

    try {
      const RealRadicalResult r = real_radical(gens, g, FeasConfig{});
      const auto& rounds = r.trace.rounds;
      const int d0 = rounds[0].degree_bound;

      // extraction rounds are bounded by the dimension of the space the low
      // slices grow in
      ok = ok && rounds.size() - 1 <= free_dim(g, d0 - 1);

      std::size_t prev_dim = 0;
      for (std::size_t k = 0; k < rounds.size() && ok; ++k) {
        for (const NcPoly& q : rounds[k].extracted)
          ok = ok && q.degree() < rounds[k].degree_bound;
        if (rounds.size() == 1) break;
        // the ideal measured at the starting degree grows strictly per round
        std::size_t dim = 0;
        for (const NcPoly& e :
             ideal_truncation(rounds[k].generators, g, d0).elements())
          if (e.degree() <= d0 - 1) ++dim;
        ok = ok && (k == 0 || dim > prev_dim);
        prev_dim = dim;
      }
    } catch (const RealRadicalUndecided&) {
      ok = false;
    }
  }
  report(4, "random radical runs stay within the round bound and grow strictly", ok);
  return ok;
}

// ---------------------------------------------------------------- criterion 5
struct LemmaTally {
  int checked = 0;
  int failed = 0;
  void count(bool pass) {
    ++checked;
    if (!pass) ++failed;
  }
  bool good(int need) const { return failed == 0 && checked >= need; }
  std::string show() const {
    return std::to_string(checked) + "/" + std::to_string(failed);
  }
};

// leading polynomials of the degree-D elements of the truncated ideal
SpanBasis observed_leading_space(const std::vector<NcPoly>& gens, int g, int big_d) {
  SpanBasis out;
  for (const NcPoly& e : ideal_truncation(gens, g, big_d).elements())
    if (e.degree() == big_d) out.insert(e.leading_polynomial());
  return out;
}

// span of  left* . (words of length mid) . right
SpanBasis sandwich_span(const std::vector<NcPoly>& left, int g, int mid,
                        const std::vector<NcPoly>& right) {
  SpanBasis out;
  for (const Word& m : words_of_length(g, mid)) {
    const NcPoly mm = NcPoly::monomial(m, 1);
    for (const NcPoly& a : left)
      for (const NcPoly& b : right) out.insert(a.adjoint() * mm * b);
  }
  return out;
}

bool criterion_structure_lemmas() {
  std::mt19937 rng(105);
  LemmaTally independence, leading_formula, idempotence, zero_intersection,
      three_block, span_equality, product_rank;
  std::uniform_int_distribution<int> small(1, 2), coeff(-2, 2);

  auto sample = [&](int g, int d, std::vector<NcPoly>& gens) -> NormalizedIdeal {
    for (;;) {
      gens.clear();
      gens.push_back(testutil::random_poly_exact_degree(rng, g, d, 3));
      for (int i = small(rng) - 1; i > 0; --i)
        gens.push_back(testutil::random_poly(rng, g, d, 3));
      NormalizedIdeal n = normalize_ideal(gens, g);
      if (!n.unit_flag) return n;
    }
  };

  // split of the doubled-degree leading space into three blocks, with the
  // pure-product complement filling the rest of the homogeneous slice
  auto check_three_block = [&](const NormalizedIdeal& n,
                               const std::vector<NcPoly>& gens, int big_d) {
    const int g = n.g, d = n.d, mid = 2 * (big_d - d);
    std::vector<NcPoly> gpolys;
    for (const Word& w : leading_complement(n)) gpolys.push_back(NcPoly::monomial(w, 1));

    const SpanBasis b1 = sandwich_span(n.pivot_leadings, g, mid, n.pivot_leadings);
    const SpanBasis b2 = sandwich_span(gpolys, g, mid, n.pivot_leadings);
    const SpanBasis b3 = sandwich_span(n.pivot_leadings, g, mid, gpolys);
    SpanBasis all = b1;
    for (const NcPoly& p : b2.elements()) all.insert(p);
    for (const NcPoly& p : b3.elements()) all.insert(p);
    bool pass = all.dim() == b1.dim() + b2.dim() + b3.dim();

    SpanBasis lhs;
    {
      SpanBasis both;
      for (const NcPoly& f : ideal_truncation(gens, g, 2 * big_d).elements()) {
        both.insert(f);
        both.insert(f.adjoint());
      }
      for (const NcPoly& e : both.elements())
        if (e.degree() == 2 * big_d) lhs.insert(e.leading_polynomial());
    }
    pass = pass && spans_equal(lhs, all);

    const SpanBasis w = sandwich_span(gpolys, g, mid, gpolys);
    SpanBasis whole = lhs;
    for (const NcPoly& p : w.elements()) whole.insert(p);
    pass = pass && whole.dim() == lhs.dim() + w.dim() &&
           whole.dim() == words_of_length(g, 2 * big_d).size();
    three_block.count(pass);
  };

  // a mixed basis of the shifted complement has products of full rank
  auto check_product_rank = [&](const NormalizedIdeal& n, int big_d) {
    const int g = n.g, d = n.d;
    const std::vector<Word> gw = leading_complement(n);
    std::vector<NcPoly> basis;
    for (const Word& m : words_of_length(g, big_d - d))
      for (const Word& w : gw) basis.push_back(NcPoly::monomial(m * w, 1));
    const std::size_t k = basis.size();
    if (k == 0 || k > 18) return;  // keep the k^2 product pass affordable

    std::vector<NcPoly> mixed = basis;  // random invertible recombination
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const int c = coeff(rng);
        if (c != 0) mixed[i] += Rational(c) * basis[j];
      }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        const int c = coeff(rng);
        if (c != 0) mixed[i] += Rational(c) * mixed[j];
      }

    SpanBasis products;
    for (const NcPoly& qi : mixed)
      for (const NcPoly& qj : mixed) products.insert(qi.adjoint() * qj);
    product_rank.count(products.dim() == k * k);
  };

  const int shapes[][2] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (int t = 0; t < 230; ++t) {
    const int g = shapes[t % 4][0], d = shapes[t % 4][1];
    std::vector<NcPoly> gens;
    const NormalizedIdeal n = sample(g, d, gens);

    // pivot leadings independent; truncation basis = pivots plus low slice;
    // observed leading spaces match the computed ones
    {
      bool pass = echelonize(n.pivot_leadings).dim() == n.pivots.size() &&
                  n.basis.dim() == n.pivots.size() + n.low.dim();
      for (int big_d = d; big_d <= d + 1 && pass; ++big_d)
        pass = spans_equal(observed_leading_space(gens, g, big_d),
                           leading_space(n, big_d));
      independence.count(pass);
    }

    // the leading space two above the generating degree is still a letter shift
    leading_formula.count(spans_equal(observed_leading_space(gens, g, d + 2),
                                      leading_space(n, d + 2)));

    // normalization is idempotent on its own output
    {
      std::vector<NcPoly> regen = n.pivots;
      for (const NcPoly& q : n.low.elements()) regen.push_back(q);
      const NormalizedIdeal n2 = normalize_ideal(regen, g);
      idempotence.count(n2.d == n.d && n2.unit_flag == n.unit_flag &&
                        n2.pivots == n.pivots &&
                        n2.low.elements() == n.low.elements() &&
                        n2.basis.elements() == n.basis.elements());
    }

    // the ideal meets the module on the leading complement only in zero
    {
      const std::vector<Word> gw = leading_complement(n);
      if (!gw.empty()) {
        bool pass = true;
        for (int trial = 0; trial < 3; ++trial) {
          NcPoly u;
          for (int j = small(rng); j > 0; --j)
            u += testutil::random_poly(rng, g, 2, 2) *
                 NcPoly::monomial(gw[rng() % gw.size()], 1);
          pass = pass && member(n, u) == u.is_zero();
        }
        zero_intersection.count(pass);
      }
    }

    check_three_block(n, gens, d);
    check_product_rank(n, d);
    if (words_of_length(g, 2 * (d + 1)).size() <= 1024) {
      check_three_block(n, gens, d + 1);
      check_product_rank(n, d + 1);
    }

    // the hermitian span equals the explicit pivot/low spanning set
    {
      const SymSpan s = sym_span_of_ideal(n, 2 * d - 1);
      SpanBasis rhs;
      for (const NcPoly& p : n.pivots)
        for (const Word& m : words_up_to(g, d - 1)) {
          const NcPoly mp = NcPoly::monomial(m, 1) * p;
          rhs.insert(mp + mp.adjoint());
        }
      for (const NcPoly& q : n.low.elements()) rhs.insert(q + q.adjoint());
      span_equality.count(spans_equal(s.basis, rhs));
    }
  }

  // extra light-shape rounds so the doubled-degree identities also reach 200
  // instances at the shifted degree
  const int light[][2] = {{1, 1}, {1, 2}, {2, 1}};
  for (int t = 0; t < 60; ++t) {
    const int g = light[t % 3][0], d = light[t % 3][1];
    std::vector<NcPoly> gens;
    const NormalizedIdeal n = sample(g, d, gens);
    check_three_block(n, gens, d);
    check_three_block(n, gens, d + 1);
    check_product_rank(n, d);
    check_product_rank(n, d + 1);
  }

  const bool ok = independence.good(200) && leading_formula.good(200) &&
                  idempotence.good(200) && zero_intersection.good(200) &&
                  three_block.good(200) && span_equality.good(200) &&
                  product_rank.good(200);
  report(5, "normalized-ideal structure identities on random instances", ok);
  if (!ok)
    note("checked/failed: independence " + independence.show() +
         ", leading formula " + leading_formula.show() + ", idempotence " +
         idempotence.show() + ", zero intersection " + zero_intersection.show() +
         ", three block " + three_block.show() + ", span equality " +
         span_equality.show() + ", product rank " + product_rank.show());
  return ok;
}

// ---------------------------------------------------------------- criterion 6
bool criterion_certificates() {
  const FeasConfig cfg;
  bool ok = true;

  // feasible endpoints, with the quadratic form checked against the span
  const std::vector<std::vector<NcPoly>> feasible_ideals = {
      {parse_poly("x1*x1")},
      {parse_poly("x1*x1 + x2*x2")},
  };
  for (const auto& gens : feasible_ideals) {
    const NormalizedIdeal n = normalize_ideal(gens, -1);
    const Complement v = complement_low(n);
    const SymSpan s = sym_span_of_ideal(n);
    const GramSubspace gs = gram_subspace(n, v, s);
    const PsdCertificate c = find_nonzero_psd(gs.mats, cfg);
    if (c.kind != PsdCertificate::Kind::Feasible) {
      ok = false;
      break;
    }
    const FeasibleCert& f = c.feasible;
    ok = ok && f.ldl.psd && ldl_reconstructs(f.b, f.ldl) && !f.b.is_zero();
    for (const Rational& pivot : f.ldl.d) ok = ok && pivot >= 0;
    QMatrix combo(f.b.rows, f.b.cols);
    for (std::size_t t = 0; t < gs.mats.size(); ++t)
      combo = combo + f.alpha[t] * gs.mats[t];
    ok = ok && combo == f.b && s.basis.contains(gram_apply(gs.v, f.b));
  }

  // infeasible endpoint: positive definite witness exactly orthogonal to the
  // whole family
  {
    const NormalizedIdeal n = normalize_ideal(showcase_target(), 4);
    const GramSubspace gs = gram_subspace(n, complement_low(n), sym_span_of_ideal(n));
    const PsdCertificate c = find_nonzero_psd(gs.mats, cfg);
    ok = ok && c.kind == PsdCertificate::Kind::Infeasible;
    if (c.kind == PsdCertificate::Kind::Infeasible) {
      const InfeasibleCert& w = c.infeasible;
      ok = ok && w.ldl.pd && ldl_reconstructs(w.w, w.ldl);
      for (const Rational& pivot : w.ldl.d) ok = ok && pivot > 0;
      for (std::size_t t = 0; t < gs.mats.size(); ++t)
        ok = ok && frobenius_inner(w.w, gs.mats[t]) == 0;
      for (const Rational& o : w.orthogonality) ok = ok && o == 0;
    }
  }

  // every certificate produced along a full run factors exactly
  const RealRadicalResult r1 = real_radical({showcase_generator()}, 4, cfg);
  for (const RealRadicalRound& rd : r1.trace.rounds) {
    if (!rd.has_certificate) continue;
    if (rd.certificate.kind == PsdCertificate::Kind::Feasible) {
      const FeasibleCert& f = rd.certificate.feasible;
      ok = ok && f.ldl.psd && ldl_reconstructs(f.b, f.ldl);
    } else {
      const InfeasibleCert& w = rd.certificate.infeasible;
      ok = ok && w.ldl.pd && ldl_reconstructs(w.w, w.ldl);
    }
  }

  // byte determinism of the full report under the fixed seed
  const RealRadicalResult r2 = real_radical({showcase_generator()}, 4, cfg);
  ok = ok && to_json(r1.trace).dump() == to_json(r2.trace).dump() &&
       to_json(r1.ideal).dump() == to_json(r2.ideal).dump();

  report(6, "certificates factor exactly and runs are byte deterministic", ok);
  return ok;
}

// ---------------------------------------------------------------- criterion 7
bool criterion_compression() {
  std::mt19937 rng(107);
  std::uniform_int_distribution<int> pick_g(1, 3), pick_n(1, 4), pick_d(1, 3);
  std::uniform_int_distribution<int> entry(-2, 2), den(1, 2);
  bool ok = true;
  for (int t = 0; t < 200 && ok; ++t) {
    const int g = pick_g(rng), d = pick_d(rng);
    const std::size_t n = static_cast<std::size_t>(pick_n(rng));
    std::vector<QMatrix> mats;
    for (int i = 0; i < g; ++i) {
      QMatrix m(n, n);
      for (Rational& x : m.a) x = Rational(entry(rng), den(rng));
      mats.push_back(std::move(m));
    }
    std::vector<Rational> vec(n);
    for (Rational& x : vec) x = entry(rng);
    bool zero = true;
    for (const Rational& x : vec) zero = zero && x == 0;
    if (zero) vec[0] = 1;

    const MatrixPoint pt = make_point(std::move(mats), std::move(vec));
    const CompressedPoint cp = compress_point(pt, d);
    for (const Word& w : words_up_to(g, d)) {
      const NcPoly mono = NcPoly::monomial(w, 1);
      ok = ok && lift(cp, evaluate(mono, cp.point)) == evaluate(mono, pt);
      if (!ok) break;
    }
  }
  report(7, "matrix-point compression reproduces every low-degree evaluation", ok);
  return ok;
}

// ---------------------------------------------------------------- criterion 8
bool criterion_membership_oracle() {
  std::mt19937 rng(108);
  std::uniform_int_distribution<int> count(1, 2);
  bool ok = true;
  int queries = 0;
  for (int inst = 0; inst < 25 && ok; ++inst) {
    const int g = 1 + inst % 2;
    const int qdeg = g == 1 ? 3 : 2;
    std::vector<NcPoly> gens;
    for (int i = count(rng); i > 0; --i)
      gens.push_back(testutil::random_poly(rng, g, 2, 3));
    const NormalizedIdeal n = normalize_ideal(gens, g);

    // brute oracle: echelon of the generators times all monomials up to the
    // query degree plus two
    SpanBasis oracle;
    for (const Word& m : words_up_to(g, qdeg + 2))
      for (const NcPoly& p : gens) oracle.insert(NcPoly::monomial(m, 1) * p);

    for (int j = 0; j < 20 && ok; ++j, ++queries) {
      NcPoly q;
      if (j % 3 == 0) {
        // planted member with an explicit low-degree witness
        for (int piece = count(rng); piece > 0; --piece)
          q += testutil::random_poly(rng, g, 2, 2) * gens[rng() % gens.size()];
        if (q.is_zero()) q = gens[0];
        ok = ok && member(n, q);
      } else {
        q = testutil::random_poly(rng, g, qdeg, 4);
      }
      ok = ok && member(n, q) == oracle.contains(q);
    }
  }
  ok = ok && queries == 500;
  report(8, "membership agrees with the product-span oracle", ok);
  return ok;
}

// ---------------------------------------------------------------- criterion 9
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

QMatrix stack_rows(const std::vector<QMatrix>& mats) {
  std::size_t rows = 0;
  for (const QMatrix& m : mats) rows += m.rows;
  QMatrix out(rows, mats.empty() ? 0 : mats[0].cols);
  std::size_t r = 0;
  for (const QMatrix& m : mats)
    for (std::size_t i = 0; i < m.rows; ++i, ++r)
      for (std::size_t j = 0; j < m.cols; ++j) out.at(r, j) = m.at(i, j);
  return out;
}

bool criterion_matrix_toolkit() {
  std::mt19937 rng(109);
  bool ok = true;

  // factorization invariants on random matrices
  {
    std::uniform_int_distribution<int> sz(1, 4), deg(0, 4), coef(-3, 3);
    for (int t = 0; t < 100 && ok; ++t) {
      const std::size_t n = static_cast<std::size_t>(sz(rng));
      UniPolyMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (rng() % 2 != 0) continue;  // sparse
          std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
          for (Rational& x : c) x = coef(rng);
          m.at(i, j) = UniPoly(std::move(c));
        }
      ok = ok && smith_ok(m);
    }
  }

  // scalar vanishing-ideal generator keeps exactly the really-rooted factors
  ok = ok && real_radical_unipoly(parse_unipoly("(x^2+1)*(x-1)^2*(x-2)")) ==
                 parse_unipoly("(x-1)*(x-2)");

  // sampled-evaluation soundness: the radical must kill every vector the
  // generators kill, at every sampled rational point
  {
    const std::vector<std::vector<UniPolyMatrix>> instances = {
        {parse_unipoly_matrix("[x*(x-1), 0; 0, x-1]")},
        {parse_unipoly_matrix("[x, 1; 0, x]")},
        {parse_unipoly_matrix("[x*(x-2), 0; 0, x]"),
         parse_unipoly_matrix("[x*(x-2), 0; 0, x*(x-1)]")},
        {parse_unipoly_matrix("[(x^2+1)*(x-1)^2]")},
    };
    const Rational points[] = {Rational(0), Rational(1), Rational(-1), Rational(2),
                               Rational(1) / 2, Rational(3), Rational(-2)};
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& gens : instances) {
      const UniPolyMatrix rad = eradical_matpoly(gens);
      // collect every sampled point where the generators have common kernel
      std::vector<std::pair<Rational, std::vector<std::vector<Rational>>>> spots;
      for (const Rational& a : points) {
        std::vector<QMatrix> evals;
        for (const UniPolyMatrix& gm : gens) evals.push_back(gm.eval(a));
        auto kern = kernel_basis(stack_rows(evals));
        if (!kern.empty()) spots.emplace_back(a, std::move(kern));
      }
      ok = ok && !spots.empty();
      for (int t = 0; t < 50 && ok; ++t) {
        const auto& [a, kern] = spots[static_cast<std::size_t>(t) % spots.size()];
        std::vector<Rational> v(kern[0].size(), Rational(0));
        if (t < static_cast<int>(kern.size())) {
          v = kern[static_cast<std::size_t>(t)];  // the basis vectors themselves
        } else {
          for (const auto& kv : kern) {
            const int c = coef(rng);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(c) * kv[i];
          }
        }
        for (const Rational& x : rad.eval(a).apply(v)) ok = ok && x == 0;
      }
    }
  }

  // constant case: membership is exactly the row-space rank test
  {
    std::uniform_int_distribution<int> sz(2, 3), entry(-2, 2), count(1, 2);
    for (int t = 0; t < 200 && ok; ++t) {
      const std::size_t n = static_cast<std::size_t>(sz(rng));
      std::vector<QMatrix> gens;
      for (int i = count(rng); i > 0; --i) {
        QMatrix m(n, n);
        for (Rational& x : m.a) x = entry(rng);
        gens.push_back(std::move(m));
      }
      QMatrix c(n, n);
      for (Rational& x : c.a) x = entry(rng);
      std::vector<QMatrix> with = gens;
      with.push_back(c);
      const bool by_rank = rank(stack_rows(with)) == rank(stack_rows(gens));
      ok = ok && eradical_constant_member(c, gens) == by_rank;
    }
  }

  report(9, "univariate matrix toolkit: invariants, radicals, rank test", ok);
  return ok;
}

// --------------------------------------------------------------- criterion 10
bool criterion_round_trip() {
  std::mt19937 rng(110);
  std::uniform_int_distribution<int> pick_g(1, 3);
  bool ok = true;
  for (int t = 0; t < 10000 && ok; ++t) {
    const NcPoly p = testutil::random_poly(rng, pick_g(rng), 4, 6);
    const std::string text = print_poly(p);
    const NcPoly back = parse_poly(text);
    ok = ok && back == p && print_poly(back) == text;
  }
  report(10, "printer output reparses to the same polynomial", ok);
  return ok;
}

}  // namespace

// With no arguments every criterion runs; numeric arguments select a subset.
int main(int argc, char** argv) {
  std::vector<bool> want(11, argc <= 1);
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k >= 1 && k <= 10) want[static_cast<std::size_t>(k)] = true;
  }
  if (want[1]) criterion_showcase();
  if (want[2]) criterion_hand_trace();
  if (want[3]) criterion_relaxation_triple();
  if (want[4]) criterion_random_runs();
  if (want[5]) criterion_structure_lemmas();
  if (want[6]) criterion_certificates();
  if (want[7]) criterion_compression();
  if (want[8]) criterion_membership_oracle();
  if (want[9]) criterion_matrix_toolkit();
  if (want[10]) criterion_round_trip();
  return failures == 0 ? 0 : 1;
}
