#include "ncreal/soscone.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ncreal {

SymSpan sym_span_of_ideal(const NormalizedIdeal& n, int e) {
  std::vector<NcPoly> gens = n.pivots;
  for (const NcPoly& q : n.low.elements()) gens.push_back(q);
  const int cap = std::max(e, n.d);
  const SpanBasis trunc = ideal_truncation(gens, n.g, cap);
  SpanBasis full;
  for (const NcPoly& f : trunc.elements()) full.insert(f + f.adjoint());
  SymSpan s;
  for (const NcPoly& f : full.slice(0, e)) s.basis.insert(f);
  return s;
}

SymSpan sym_span_of_ideal(const NormalizedIdeal& n) {
  // Go one degree past the 2d-2 cut before slicing so the slice is exact.
  SymSpan wide = sym_span_of_ideal(n, 2 * n.d - 1);
  SymSpan s;
  for (const NcPoly& f : wide.basis.slice(0, 2 * n.d - 2)) s.basis.insert(f);
  return s;
}

std::optional<AffineGram> gram_solve_affine(const std::vector<Word>& support, const NcPoly& target,
                                            const SymSpan* mod) {
  const std::size_t l = support.size();
  const std::size_t ng = l * (l + 1) / 2;
  const std::size_t nb = mod ? mod->basis.dim() : 0;
  // Upper-triangle index of the Gram entry (i, j), j >= i.
  auto ut = [l](std::size_t i, std::size_t j) { return i * l - i * (i + 1) / 2 + j; };

  // One equation per word: Gram multiplicities minus the span coordinates
  // must meet the target coefficient.
  std::map<Word, std::vector<Rational>> rows;
  auto row = [&](const Word& w) -> std::vector<Rational>& {
    auto it = rows.find(w);
    if (it == rows.end()) it = rows.emplace(w, std::vector<Rational>(ng + nb, Rational(0))).first;
    return it->second;
  };
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i; j < l; ++j) {
      row(support[i].adjoint() * support[j])[ut(i, j)] += 1;
      if (i != j) row(support[j].adjoint() * support[i])[ut(i, j)] += 1;
    }
  if (mod) {
    const auto& elems = mod->basis.elements();
    for (std::size_t r = 0; r < elems.size(); ++r)
      for (const auto& [w, c] : elems[r].terms()) row(w)[ng + r] -= c;
  }
  for (const auto& [w, c] : target.terms()) row(w);

  QMatrix m(rows.size(), ng + nb);
  std::vector<Rational> b(rows.size(), Rational(0));
  std::size_t r = 0;
  for (const auto& [w, vec] : rows) {
    for (std::size_t c = 0; c < vec.size(); ++c) m.at(r, c) = vec[c];
    b[r] = target.coefficient(w);
    ++r;
  }
  std::vector<Rational> x;
  if (!solve_linear(m, b, x)) return std::nullopt;

  AffineGram out;
  out.support = support;
  out.base = sym_unflatten(std::vector<Rational>(x.begin(), x.begin() + ng), l);
  for (const auto& k : kernel_basis(m)) {
    QMatrix dir = sym_unflatten(std::vector<Rational>(k.begin(), k.begin() + ng), l);
    if (!dir.is_zero()) out.directions.push_back(std::move(dir));
  }
  return out;
}

NcPoly gram_apply(const Complement& v, const QMatrix& a) {
  NcPoly out;
  for (std::size_t i = 0; i < v.words.size(); ++i)
    for (std::size_t j = 0; j < v.words.size(); ++j)
      if (a.at(i, j) != 0)
        out += NcPoly::monomial(v.words[i].adjoint() * v.words[j], a.at(i, j));
  return out;
}

GramSubspace gram_subspace(const NormalizedIdeal& n, const Complement& v, const SymSpan& s) {
  GramSubspace out;
  out.v = v;
  const std::size_t l = v.words.size();
  if (l == 0) return out;

  // Ordered factorizations of each product word; i-major construction makes
  // groups.front() the canonical (lexicographically first) factorization.
  std::map<Word, std::vector<std::pair<std::size_t, std::size_t>>> groups;
  SpanBasis support;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      Word w = v.words[i].adjoint() * v.words[j];
      groups[w].emplace_back(i, j);
      support.insert(NcPoly::monomial(w, 1));
    }

  // Part of the hermitian span supported on the product words.
  SpanBasis supported = sym_intersection(s.basis, support);

  std::vector<QMatrix> raw;
  // Canonical symmetric preimage of each supported basis element.
  for (const NcPoly& elem : supported.elements()) {
    QMatrix a(l, l);
    for (const auto& [w, c] : elem.terms()) {
      Word ws = w.adjoint();
      if (ws < w) continue; // adjoint partner already handled
      auto [i, j] = groups.at(w).front();
      if (i == j) {
        a.at(i, i) += c;
      } else if (w == ws) {
        a.at(i, j) += c / 2;
        a.at(j, i) += c / 2;
      } else {
        a.at(i, j) += c;
        a.at(j, i) += c;
      }
    }
    raw.push_back(std::move(a));
  }

  // Kernel of A |-> v^T A v on symmetric matrices.  Constraints decouple by
  // adjoint class of the product word: the entry sums over each class must
  // vanish, so words with a single unordered factorization contribute nothing
  // and classes with several yield scaled differences.
  for (const auto& [w, fac] : groups) {
    Word ws = w.adjoint();
    if (ws < w) continue; // one class per adjoint pair
    // Unordered factorizations with the coefficient each contributes.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>> cls;
    for (const auto& [i, j] : fac) {
      std::pair<std::size_t, std::size_t> u = {std::min(i, j), std::max(i, j)};
      bool found = false;
      for (auto& e : cls)
        if (e.first == u) {
          e.second += 1;
          found = true;
        }
      if (!found) cls.emplace_back(u, Rational(1));
    }
    for (std::size_t k = 1; k < cls.size(); ++k) {
      QMatrix a(l, l);
      const auto& [u0, c0] = cls.front();
      const auto& [uk, ck] = cls[k];
      a.at(u0.first, u0.second) = ck;
      a.at(u0.second, u0.first) = ck;
      a.at(uk.first, uk.second) = -c0;
      a.at(uk.second, uk.first) = -c0;
      raw.push_back(std::move(a));
    }
  }

  if (raw.empty()) return out;

  // Echelonize in flattened coordinates for a canonical basis.
  QMatrix flat(raw.size(), l * (l + 1) / 2);
  for (std::size_t r = 0; r < raw.size(); ++r) {
    std::vector<Rational> t = sym_flatten(raw[r]);
    for (std::size_t c = 0; c < t.size(); ++c) flat.at(r, c) = t[c];
  }
  rref(flat);
  for (std::size_t r = 0; r < flat.rows; ++r) {
    std::vector<Rational> t(flat.cols);
    bool nonzero = false;
    for (std::size_t c = 0; c < flat.cols; ++c) {
      t[c] = flat.at(r, c);
      if (t[c] != 0) nonzero = true;
    }
    if (nonzero) out.mats.push_back(sym_unflatten(t, l));
  }
  return out;
}

} // namespace ncreal
