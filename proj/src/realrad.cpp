#include "ncreal/realrad.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "ncreal/errors.hpp"

namespace ncreal {

namespace {

// Deterministic generator order: by degree, then term lists.
bool poly_less(const NcPoly& a, const NcPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return ta.size() < tb.size();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!(ta[i].first == tb[i].first)) return ta[i].first < tb[i].first;
    if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
  }
  return false;
}

// Drops zeros and generators already in the left ideal of the earlier ones.
// Sorting first makes the kept set independent of input order and prefers
// low-degree generators, which keeps the per-round degree bound small.
std::vector<NcPoly> prune_generators(std::vector<NcPoly> gens, int g) {
  std::sort(gens.begin(), gens.end(), poly_less);
  std::vector<NcPoly> kept;
  for (const NcPoly& p : gens) {
    if (p.is_zero()) continue;
    if (!kept.empty()) {
      const NormalizedIdeal n = normalize_ideal(kept, g);
      if (n.unit_flag || member(n, p)) continue;
    }
    kept.push_back(p);
  }
  return kept;
}

int infer_vars(const std::vector<NcPoly>& gens, int g) {
  int m = 0;
  for (const NcPoly& p : gens) m = std::max(m, p.max_var());
  if (g < 0) return std::max(m, 1);
  if (g < m)
    throw SizeMismatchError("ambient variable count below a generator's");
  return g;
}

// Words m whose hermitian square m*m appears among p's words.  A generator of
// the shape sum_i q_i* q_i necessarily shows such words on its diagonal, so
// they are the natural support for decomposing p directly.
std::vector<Word> chip_support(const NcPoly& p) {
  std::vector<Word> out;
  for (const auto& term : p.terms()) {
    const Word& w = term.first;
    if (w.length() % 2 != 0) continue;
    const std::size_t h = w.length() / 2;
    const Word suf = w.suffix_from(h);
    if (!(w.prefix(h).adjoint() == suf)) continue;
    if (std::find(out.begin(), out.end(), suf) == out.end()) out.push_back(suf);
  }
  return out;
}

struct RoundOutcome {
  bool terminal = false;
  bool fast = false;
  bool gram_empty = false;
  bool has_cert = false;
  PsdCertificate cert;
  std::vector<NcPoly> extracted;
};

// One search round over the normalized ideal.  First tries to write a single
// generator as an exact sum of hermitian squares over its own diagonal words;
// when that fails for every generator, runs the full Gram-subspace search
// over the complement of the low-degree slice.
RoundOutcome run_round(const NormalizedIdeal& n,
                       const std::vector<NcPoly>& gens, const FeasConfig& cfg) {
  RoundOutcome out;

  for (const NcPoly& p : gens) {
    const std::vector<Word> support = chip_support(p);
    if (support.empty()) continue;
    const std::optional<AffineGram> af = gram_solve_affine(support, p);
    if (!af) continue;
    std::optional<FeasibleCert> cert =
        find_affine_psd(af->base, af->directions, cfg);
    if (!cert) continue;
    Complement v;
    v.words = af->support;
    std::vector<NcPoly> qs = extract_generators(*cert, v);
    std::vector<NcPoly> fresh;
    for (NcPoly& q : qs)
      if (!member(n, q)) fresh.push_back(std::move(q));
    if (fresh.empty()) continue;
    out.fast = true;
    out.has_cert = true;
    out.cert.kind = PsdCertificate::Kind::Feasible;
    out.cert.feasible = std::move(*cert);
    out.extracted = std::move(fresh);
    return out;
  }

  const Complement v = complement_low(n);
  const SymSpan s = sym_span_of_ideal(n);
  const GramSubspace gs = gram_subspace(n, v, s);
  if (gs.mats.empty()) {
    out.terminal = true;
    out.gram_empty = true;
    return out;
  }
  out.cert = find_nonzero_psd(gs.mats, cfg);  // UndecidedError propagates
  out.has_cert = true;
  if (out.cert.kind == PsdCertificate::Kind::Infeasible) {
    out.terminal = true;
    return out;
  }
  std::vector<NcPoly> qs = extract_generators(out.cert.feasible, gs.v);
  for (NcPoly& q : qs) {
    // rows of a nonzero PSD Gram matrix span outside the ideal's low slice
    if (member(n, q))
      throw std::logic_error("extracted square part lies in the ideal");
    out.extracted.push_back(std::move(q));
  }
  if (out.extracted.empty())
    throw std::logic_error("feasible certificate produced no square parts");
  return out;
}

}  // namespace

RealRadicalResult real_radical(const std::vector<NcPoly>& gens, int g,
                               const FeasConfig& cfg) {
  const int ga = infer_vars(gens, g);
  std::vector<NcPoly> current = gens;

  RealRadicalTrace trace;
  std::size_t round_bound = 0;
  int prev_d = -1;
  std::size_t prev_low = 0;
  for (int k = 0;; ++k) {
    const std::vector<NcPoly> pruned = prune_generators(current, ga);
    if (pruned.empty())
      throw EmptyGeneratorsError("real radical needs a nonzero generator");
    NormalizedIdeal n = normalize_ideal(pruned, ga);

    RealRadicalRound rec;
    rec.k = k;
    rec.generators = pruned;
    rec.degree_bound = n.d;
    rec.low_dim = n.low.dim();

    if (n.unit_flag) {
      trace.rounds.push_back(std::move(rec));
      return RealRadicalResult{std::move(n), std::move(trace)};
    }

    // The low slices grow strictly inside a space of this fixed dimension,
    // so the iteration count is bounded.
    if (k == 0) round_bound = free_dim(ga, n.d - 1) + 1;
    if (static_cast<std::size_t>(k) > round_bound)
      throw std::logic_error("radical iteration exceeded its round bound");
    if (prev_d >= 0 && n.d > prev_d)
      throw std::logic_error("radical iteration raised the degree bound");
    if (prev_d == n.d && rec.low_dim <= prev_low)
      throw std::logic_error("radical iteration failed to grow the ideal");
    prev_d = n.d;
    prev_low = rec.low_dim;

    RoundOutcome oc;
    try {
      oc = run_round(n, pruned, cfg);
    } catch (const UndecidedError& e) {
      trace.rounds.push_back(std::move(rec));
      throw RealRadicalUndecided(e.what(), std::move(trace));
    }
    rec.fast_path = oc.fast;
    rec.gram_empty = oc.gram_empty;
    rec.has_certificate = oc.has_cert;
    if (oc.has_cert) rec.certificate = std::move(oc.cert);
    rec.extracted = oc.extracted;
    for (const NcPoly& q : rec.extracted)
      if (q.degree() > n.d - 1)
        throw std::logic_error("extracted square part exceeds degree d - 1");
    trace.rounds.push_back(std::move(rec));

    if (oc.terminal) return RealRadicalResult{std::move(n), std::move(trace)};

    current = pruned;
    for (NcPoly& q : oc.extracted) current.push_back(std::move(q));
  }
}

bool is_real(const std::vector<NcPoly>& gens, int g, const FeasConfig& cfg) {
  const int ga = infer_vars(gens, g);
  const std::vector<NcPoly> pruned = prune_generators(gens, ga);
  if (pruned.empty())
    throw EmptyGeneratorsError("reality test needs a nonzero generator");
  const NormalizedIdeal n = normalize_ideal(pruned, ga);
  if (n.unit_flag) return true;
  return run_round(n, pruned, cfg).terminal;
}

Ternary alpha_member(const NcPoly& a, const std::vector<NcPoly>& gens,
                     int degree_cap, int g, const FeasConfig& cfg) {
  if (a.is_zero()) return Ternary::yes;
  std::vector<NcPoly> nz;
  for (const NcPoly& p : gens)
    if (!p.is_zero()) nz.push_back(p);
  if (nz.empty())
    throw EmptyGeneratorsError("membership needs a nonzero generator");
  const int ga = std::max(infer_vars(nz, g), a.max_var());
  if (g >= 0 && g < a.max_var())
    throw SizeMismatchError("ambient variable count below the candidate's");
  const NormalizedIdeal n = normalize_ideal(nz, ga);
  if (n.unit_flag) return Ternary::yes;

  const NcPoly aa = a.adjoint() * a;

  // sigma = 0 case: a*a already lies in the hermitian part of I + I*.
  if (sym_span_of_ideal(n, aa.degree()).basis.contains(aa)) return Ternary::yes;

  // Exact obstruction: any member a has a*a + sigma in I + I*, which forces
  // a itself into I + A_{d-1}; failing that settles the answer negatively.
  if (!in_ideal_plus_lowdeg(n, a)) return Ternary::no;

  if (degree_cap < 0) return Ternary::unknown;

  // Gram search for sigma: find a PSD matrix G over a word support with
  // v^T G v + a*a in the hermitian span.  Support words come from a itself
  // and from halves of hermitian-square words seen in the span and in a*a.
  const SymSpan s = sym_span_of_ideal(n, 2 * degree_cap);
  std::set<Word> support;
  const auto add_halves = [&](const NcPoly& p) {
    for (const auto& term : p.terms()) {
      const Word& w = term.first;
      if (w.length() % 2 != 0) continue;
      const std::size_t h = w.length() / 2;
      if (static_cast<int>(h) > degree_cap) continue;
      const Word suf = w.suffix_from(h);
      if (w.prefix(h).adjoint() == suf) support.insert(suf);
    }
  };
  for (const auto& term : a.terms())
    if (static_cast<int>(term.first.length()) <= degree_cap)
      support.insert(term.first);
  add_halves(aa);
  for (const NcPoly& f : s.basis.elements()) add_halves(f);
  if (support.empty()) return Ternary::unknown;

  const std::vector<Word> words(support.begin(), support.end());
  const std::optional<AffineGram> af =
      gram_solve_affine(words, Rational(-1) * aa, &s);
  if (!af) return Ternary::unknown;
  if (find_affine_psd(af->base, af->directions, cfg)) return Ternary::yes;
  return Ternary::unknown;
}

bool beta_consistency(const std::vector<NcPoly>& gens, int g,
                      const FeasConfig& cfg) {
  const RealRadicalResult res = real_radical(gens, g, cfg);
  for (const RealRadicalRound& round : res.trace.rounds) {
    if (round.extracted.empty()) continue;
    int cap = 1;
    for (const NcPoly& q : round.extracted) cap = std::max(cap, q.degree());
    for (const NcPoly& q : round.extracted)
      if (alpha_member(q, round.generators, cap, g, cfg) != Ternary::yes)
        return false;
  }
  return is_real(res.trace.rounds.back().generators, g, cfg);
}

}  // namespace ncreal
