#include "ncreal/span.hpp"

#include <algorithm>

namespace ncreal {

std::vector<Word> words_of_length(int g, int len) {
  std::vector<Word> out;
  if (len == 0) {
    out.push_back(Word::one());
    return out;
  }
  if (g <= 0) return out;
  const int nletters = 2 * g;
  // Odometer over letter codes; lexicographic order on code strings is the
  // canonical order within a fixed length.
  std::vector<int> digits(len, 0);
  while (true) {
    std::vector<Letter> letters;
    letters.reserve(len);
    for (int c : digits) letters.push_back(letter_from_code(static_cast<unsigned char>(c)));
    out.push_back(Word(letters));
    int pos = len - 1;
    while (pos >= 0 && digits[pos] == nletters - 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
  return out;
}

std::vector<Word> words_up_to(int g, int cap) {
  std::vector<Word> out;
  for (int len = 0; len <= cap; ++len) {
    std::vector<Word> w = words_of_length(g, len);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::size_t free_dim(int g, int cap) {
  std::size_t total = 0, pow = 1;
  for (int len = 0; len <= cap; ++len) {
    total += pow;
    pow *= static_cast<std::size_t>(2 * g);
  }
  return total;
}

bool SpanBasis::insert(const NcPoly& p) {
  NcPoly r = reduce(p);
  if (r.is_zero()) return false;
  const Word piv = r.terms().back().first;
  r = (Rational(1) / r.terms().back().second) * r;
  // Clear the new pivot word from existing elements.  Elements with a smaller
  // pivot cannot contain piv at all, so only larger rows change, and they only
  // gain words below their own pivot.
  for (NcPoly& e : elems_) {
    Rational c = e.coefficient(piv);
    if (c != 0) e -= c * r;
  }
  std::size_t pos = elems_.size();
  while (pos > 0 && piv < elems_[pos - 1].terms().back().first) --pos;
  elems_.insert(elems_.begin() + pos, std::move(r));
  for (auto& kv : index_)
    if (kv.second >= pos) ++kv.second;
  index_.emplace(piv, pos);
  return true;
}

std::size_t SpanBasis::insert_all(const std::vector<NcPoly>& ps) {
  std::size_t grew = 0;
  for (const NcPoly& p : ps)
    if (insert(p)) ++grew;
  return grew;
}

NcPoly SpanBasis::reduce(NcPoly p) const {
  if (index_.empty()) return p;
  while (true) {
    const auto& ts = p.terms();
    bool hit = false;
    // Scan from the highest word down; eliminating a pivot occurrence only
    // introduces smaller words, so every pass strictly shrinks the top.
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
      auto f = index_.find(it->first);
      if (f != index_.end()) {
        p -= it->second * elems_[f->second];
        hit = true;
        break;
      }
    }
    if (!hit) return p;
  }
}

std::vector<Word> SpanBasis::pivot_words() const {
  std::vector<Word> out;
  out.reserve(elems_.size());
  for (const NcPoly& e : elems_) out.push_back(e.terms().back().first);
  return out;
}

std::vector<NcPoly> SpanBasis::slice(int lo, int hi) const {
  std::vector<NcPoly> out;
  for (const NcPoly& e : elems_)
    if (e.degree() >= lo && e.degree() <= hi) out.push_back(e);
  return out;
}

std::vector<int> SpanBasis::dims_by_degree() const {
  std::vector<int> dims(static_cast<std::size_t>(max_degree() + 1), 0);
  for (const NcPoly& e : elems_) ++dims[static_cast<std::size_t>(e.degree())];
  return dims;
}

SpanBasis echelonize(const std::vector<NcPoly>& polys) {
  SpanBasis b;
  b.insert_all(polys);
  return b;
}

bool AugmentedEchelon::insert(NcPoly main, NcPoly shadow) {
  while (true) {
    if (main.is_zero()) {
      captured_.insert(shadow);
      return false;
    }
    auto f = index_.find(main.terms().back().first);
    if (f == index_.end()) break;
    const auto& row = rows_[f->second];
    Rational c = main.terms().back().second;
    main -= c * row.first;
    shadow -= c * row.second;
  }
  Rational lead = main.terms().back().second;
  main = (Rational(1) / lead) * main;
  shadow = (Rational(1) / lead) * shadow;
  index_.emplace(main.terms().back().first, rows_.size());
  rows_.emplace_back(std::move(main), std::move(shadow));
  return true;
}

SpanBasis sym_intersection(const SpanBasis& u, const SpanBasis& w) {
  AugmentedEchelon ech;
  for (const NcPoly& p : u.elements()) ech.insert(p, p);
  for (const NcPoly& p : w.elements()) ech.insert(p, NcPoly::zero());
  return ech.captured();
}

SpanBasis sym_intersection(const std::vector<SpanBasis>& bases) {
  if (bases.empty()) return SpanBasis();
  SpanBasis acc = bases.front();
  for (std::size_t i = 1; i < bases.size(); ++i) acc = sym_intersection(acc, bases[i]);
  return acc;
}

} // namespace ncreal
