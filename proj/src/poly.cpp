#include "ncreal/poly.hpp"

#include <algorithm>

namespace ncreal {

NcPoly NcPoly::monomial(const Word& w, const Rational& c) {
  NcPoly p;
  if (c != 0) p.terms_.push_back({w, c});
  return p;
}

Rational NcPoly::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& v) { return t.first < v; });
  if (it != terms_.end() && it->first == w) return it->second;
  return 0;
}

int NcPoly::max_var() const {
  int g = 0;
  for (const Term& t : terms_) g = std::max(g, t.first.max_var());
  return g;
}

NcPoly NcPoly::adjoint() const {
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const Term& t : terms_) raw.push_back({t.first.adjoint(), t.second});
  return from_terms(std::move(raw));
}

NcPoly NcPoly::leading_polynomial() const {
  NcPoly p;
  if (terms_.empty()) return p;
  std::size_t top = terms_.back().first.length();
  auto it = terms_.begin();
  while (it != terms_.end() && it->first.length() < top) ++it;
  p.terms_.assign(it, terms_.end());
  return p;
}

NcPoly NcPoly::truncated(int e) const {
  NcPoly p;
  for (const Term& t : terms_) {
    if (static_cast<int>(t.first.length()) > e) break;
    p.terms_.push_back(t);
  }
  return p;
}

NcPoly NcPoly::operator-() const {
  NcPoly p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.first, -t.second});
  return p;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly p;
  p.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      p.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      p.terms_.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) p.terms_.push_back({a->first, c});
      ++a; ++b;
    }
  }
  return p;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly NcPoly::operator*(const NcPoly& o) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size() * o.terms_.size());
  for (const Term& s : terms_)
    for (const Term& t : o.terms_)
      raw.push_back({s.first * t.first, s.second * t.second});
  return from_terms(std::move(raw));
}

NcPoly operator*(const Rational& c, const NcPoly& p) {
  NcPoly q;
  if (c == 0) return q;
  q.terms_.reserve(p.terms_.size());
  for (const NcPoly::Term& t : p.terms_) q.terms_.push_back({t.first, c * t.second});
  return q;
}

NcPoly NcPoly::from_terms(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  NcPoly p;
  for (Term& t : raw) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

} // namespace ncreal
