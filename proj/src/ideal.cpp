#include "ncreal/ideal.hpp"

#include <algorithm>
#include <map>

namespace ncreal {

namespace {

std::vector<NcPoly> letter_polys(int g) {
  std::vector<NcPoly> ls;
  ls.reserve(2 * static_cast<std::size_t>(g));
  for (int v = 1; v <= g; ++v) {
    ls.push_back(NcPoly::variable(v, false));
    ls.push_back(NcPoly::variable(v, true));
  }
  return ls;
}

SpanBasis full_monomial_basis(int g, int cap) {
  SpanBasis b;
  for (const Word& w : words_up_to(g, cap)) b.insert(NcPoly::monomial(w, 1));
  return b;
}

} // namespace

SpanBasis ideal_truncation(const std::vector<NcPoly>& gens, int g, int cap) {
  std::vector<NcPoly> live;
  for (const NcPoly& p : gens)
    if (!p.is_zero()) live.push_back(p);
  if (live.empty()) throw EmptyGeneratorsError("ideal truncation needs a nonzero generator");
  int need = 0;
  for (const NcPoly& p : live) need = std::max(need, p.degree());
  if (cap < need) throw DegreeTooSmallError("truncation degree below generator degree");

  SpanBasis basis = echelonize(live);
  const std::vector<NcPoly> letters = letter_polys(g);
  bool grew = true;
  while (grew) {
    if (basis.has_pivot(Word::one())) return full_monomial_basis(g, cap);
    grew = false;
    const std::vector<NcPoly> snapshot = basis.elements();
    for (const NcPoly& e : snapshot) {
      if (e.degree() + 1 > cap) continue;
      for (const NcPoly& l : letters)
        if (basis.insert(l * e)) grew = true;
    }
  }
  if (basis.has_pivot(Word::one())) return full_monomial_basis(g, cap);
  return basis;
}

NormalizedIdeal normalize_ideal(const std::vector<NcPoly>& gens, int g) {
  int inferred = 0, d = 0;
  bool any = false;
  for (const NcPoly& p : gens) {
    if (p.is_zero()) continue;
    any = true;
    inferred = std::max(inferred, p.max_var());
    d = std::max(d, p.degree());
  }
  if (!any) throw EmptyGeneratorsError("normalize_ideal needs a nonzero generator");
  if (g < 0) g = inferred;
  if (g < inferred) throw SizeMismatchError("generator uses a variable beyond the ambient count");

  NormalizedIdeal n;
  n.g = g;
  n.d = d;
  n.basis = ideal_truncation(gens, g, d);
  n.unit_flag = n.basis.has_pivot(Word::one());
  n.pivots = n.basis.slice(d, d);
  for (const NcPoly& q : n.basis.slice(0, d - 1)) n.low.insert(q);
  n.pivot_leadings.reserve(n.pivots.size());
  for (std::size_t i = 0; i < n.pivots.size(); ++i) {
    n.pivot_leadings.push_back(n.pivots[i].leading_polynomial());
    n.leading_index.emplace(n.pivots[i].terms().back().first, i);
  }
  return n;
}

SpanBasis leading_space(const NormalizedIdeal& n, int big_d) {
  if (big_d < n.d) throw DegreeTooSmallError("leading space degree below the ideal degree bound");
  SpanBasis out;
  for (const Word& m : words_of_length(n.g, big_d - n.d)) {
    NcPoly mono = NcPoly::monomial(m, 1);
    for (const NcPoly& lead : n.pivot_leadings) out.insert(mono * lead);
  }
  return out;
}

std::vector<NcPoly> Complement::polys() const {
  std::vector<NcPoly> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(NcPoly::monomial(w, 1));
  return out;
}

Complement complement_low(const NormalizedIdeal& n) {
  Complement v;
  for (int e = n.d - 1; e >= 0; --e)
    for (const Word& w : words_of_length(n.g, e))
      if (!n.low.has_pivot(w)) v.words.push_back(w);
  return v;
}

std::vector<Word> leading_complement(const NormalizedIdeal& n) {
  std::vector<Word> g;
  for (const Word& w : words_of_length(n.g, n.d))
    if (n.leading_index.find(w) == n.leading_index.end()) g.push_back(w);
  return g;
}

HighReduction reduce_high(const NormalizedIdeal& n, NcPoly q) {
  while (!q.is_zero() && q.degree() >= n.d) {
    const std::size_t plen = static_cast<std::size_t>(q.degree() - n.d);
    // Split the top homogeneous part by its length-plen prefixes; suffix
    // groups are ordered for determinism.
    const NcPoly top = q.leading_polynomial();
    std::map<Word, NcPoly> groups;
    for (const auto& t : top.terms())
      groups[t.first.prefix(plen)] += NcPoly::monomial(t.first.suffix_from(plen), t.second);
    for (const auto& [w, suffix] : groups) {
      NcPoly s = suffix;
      NcPoly mono = NcPoly::monomial(w, 1);
      while (!s.is_zero()) {
        auto f = n.leading_index.find(s.terms().back().first);
        if (f == n.leading_index.end()) return {q, true};
        Rational c = s.terms().back().second;
        s -= c * n.pivot_leadings[f->second];
        q -= c * (mono * n.pivots[f->second]);
      }
    }
  }
  return {q, false};
}

bool member(const NormalizedIdeal& n, const NcPoly& q) {
  HighReduction hr = reduce_high(n, q);
  if (hr.stalled) return false;
  return n.basis.reduce(hr.remainder).is_zero();
}

bool in_ideal_plus_lowdeg(const NormalizedIdeal& n, const NcPoly& q) {
  return !reduce_high(n, q).stalled;
}

} // namespace ncreal
