#include "ncreal/unipoly.hpp"

#include <algorithm>
#include <map>

#include "ncreal/errors.hpp"

namespace ncreal {

UniPoly UniPoly::monomial(std::size_t k, const Rational& a) {
  if (a == 0) return UniPoly();
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = a;
  return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& a) const {
  Rational r = 0;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * a + c_[k];
  return r;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> c = c_;
  for (Rational& x : c) x = -x;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& a, const UniPoly& p) {
  std::vector<Rational> c = p.c_;
  for (Rational& x : c) x *= a;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = Rational(k) * c_[k];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw ZeroPolynomialError("division by the zero polynomial");
  UniPoly r = num;
  if (num.degree() < den.degree()) return {UniPoly(), r};
  std::vector<Rational> q(num.degree() - den.degree() + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= den.degree()) {
    std::size_t shift = r.degree() - den.degree();
    Rational f = r.leading() / den.leading();
    q[shift] = f;
    r = r - UniPoly::monomial(shift, f) * den;
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = UniPoly::divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

bool divides(const UniPoly& d, const UniPoly& p) {
  if (d.is_zero()) return p.is_zero();
  return UniPoly::divmod(p, d).second.is_zero();
}

std::vector<std::pair<UniPoly, int>> yun_squarefree(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() < 1) return out;
  UniPoly a = p.monic();
  UniPoly g = gcd(a, a.derivative());
  UniPoly b = UniPoly::divmod(a, g).first;
  UniPoly c = UniPoly::divmod(a.derivative(), g).first;
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    UniPoly f = gcd(b, d);
    if (f.degree() >= 1) out.push_back({f, i});
    b = UniPoly::divmod(b, f).first;
    c = UniPoly::divmod(d, f).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() < 1) return p.monic();
  UniPoly g = gcd(p, p.derivative());
  return UniPoly::divmod(p.monic(), g).first.monic();
}

std::vector<UniPoly> sturm_chain(const UniPoly& squarefree) {
  std::vector<UniPoly> chain;
  if (squarefree.is_zero()) return chain;
  chain.push_back(squarefree);
  if (squarefree.degree() == 0) return chain;
  chain.push_back(squarefree.derivative());
  while (!chain.back().is_zero() && chain.back().degree() >= 0) {
    UniPoly r = UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

int sgn(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sign variations ignoring zeros.
int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at(const std::vector<UniPoly>& chain, const Rational& a) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const UniPoly& f : chain) s.push_back(sgn(f.eval(a)));
  return variations(s);
}

int variations_at_inf(const std::vector<UniPoly>& chain, int dir) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const UniPoly& f : chain) {
    if (f.is_zero()) { s.push_back(0); continue; }
    int lead = sgn(f.leading());
    if (dir < 0 && f.degree() % 2 == 1) lead = -lead;
    s.push_back(lead);
  }
  return variations(s);
}

} // namespace

int count_real_roots(const UniPoly& p) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(squarefree_part(p));
  return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

int count_real_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.degree() < 1) return 0;
  if (b < a) return 0;
  UniPoly s = squarefree_part(p);
  if (a == b) return s.eval(a) == 0 ? 1 : 0;
  auto chain = sturm_chain(s);
  // Variation difference counts roots in (a, b]; add the endpoint a.
  int n = variations_at(chain, a) - variations_at(chain, b);
  if (s.eval(a) == 0) ++n;
  return n;
}

namespace {

// All divisors of |n| (n nonzero) via trial division; throws when a large
// composite cofactor resists factoring, since enumeration would be
// incomplete.
std::vector<BigInt> all_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::map<BigInt, int> fac;
  for (BigInt p = 2; p * p <= n && p < 2000000; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) { ++fac[p]; n /= p; }
  }
  if (n > 1) {
    if (n > BigInt(2000000) * 2000000)
      throw DegreeCapExceededError("interpolation value too large to factor in factor search");
    ++fac[n]; // n below the trial bound squared and unfactored, hence prime
  }
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : fac) {
    std::size_t sz = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Clears denominators and content: primitive integer polynomial, positive
// leading coefficient.
UniPoly primitive_integer(const UniPoly& p) {
  BigInt lcm_den = 1;
  for (const Rational& c : p.coeffs()) {
    BigInt d = denominator(c);
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  UniPoly q = Rational(lcm_den) * p;
  BigInt content = 0;
  for (const Rational& c : q.coeffs()) content = gcd(content, numerator(c));
  if (content == 0) return q;
  q = Rational(BigInt(1), content) * q;
  if (q.leading() < 0) q = -q;
  return q;
}

// Rational roots of a primitive integer polynomial.
std::vector<Rational> rational_roots(const UniPoly& p) {
  std::vector<Rational> roots;
  UniPoly q = p;
  while (!q.is_zero() && q.coeff(0) == 0) {
    roots.push_back(Rational(0));
    std::vector<Rational> c(q.coeffs().begin() + 1, q.coeffs().end());
    q = UniPoly(std::move(c));
    break; // squarefree input: the root 0 occurs once
  }
  if (q.degree() < 1) return roots;
  auto ps = all_divisors(numerator(q.coeff(0)) == 0 ? BigInt(1) : numerator(q.coeff(0)));
  auto qs = all_divisors(numerator(q.leading()));
  for (const BigInt& num : ps)
    for (const BigInt& den : qs)
      for (int s : {1, -1}) {
        Rational r(s * num, den);
        if (q.eval(r) == 0 &&
            std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Lagrange interpolation through (xs[i], ys[i]).
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UniPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly l = UniPoly::constant(1);
    Rational den = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      l = l * (UniPoly::x() - UniPoly::constant(xs[j]));
      den *= xs[i] - xs[j];
    }
    acc = acc + (ys[i] / den) * l;
  }
  return acc;
}

// Finds one nontrivial monic factor of a squarefree primitive integer
// polynomial without rational roots, or nullopt if irreducible.
std::optional<UniPoly> kronecker_factor(const UniPoly& s) {
  const long kComboBudget = 4000000;
  int n = s.degree();
  for (int k = 2; k <= n / 2; ++k) {
    // Evaluation points 0, 1, -1, 2, -2, ...
    std::vector<Rational> xs;
    for (int t = 0; static_cast<int>(xs.size()) < k + 1; ++t)
      xs.push_back(Rational(t % 2 == 1 ? (t + 1) / 2 : -(t / 2)));
    std::vector<std::vector<BigInt>> divs;
    long combos = 2; // leading sign choice folded into d_0 > 0 convention
    for (const Rational& x : xs) {
      BigInt v = numerator(s.eval(x)); // integer since s has integer coeffs
      auto d = all_divisors(v);
      combos *= static_cast<long>(d.size()) * 2;
      if (combos > kComboBudget)
        throw DegreeCapExceededError("divisor combination budget exhausted in factor search");
      divs.push_back(std::move(d));
    }
    std::vector<std::size_t> idx(k + 1, 0);
    std::vector<int> sign(k + 1, 1);
    while (true) {
      std::vector<Rational> ys(k + 1);
      for (int i = 0; i <= k; ++i) ys[i] = Rational(sign[i] * divs[i][idx[i]]);
      if (sign[0] > 0) { // fix overall sign: d_0 > 0
        UniPoly f = interpolate(xs, ys);
        bool integral = true;
        for (const Rational& c : f.coeffs())
          if (denominator(c) != 1) { integral = false; break; }
        if (integral && f.degree() == k && divides(f, s))
          return f.monic();
      }
      // Advance the (index, sign) odometer.
      int pos = 0;
      while (pos <= k) {
        if (sign[pos] == 1) { sign[pos] = -1; break; }
        sign[pos] = 1;
        if (++idx[pos] < divs[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos > k) break;
    }
  }
  return std::nullopt;
}

void factor_squarefree_into(const UniPoly& s, int degree_cap, std::vector<UniPoly>& out) {
  if (s.degree() < 1) return;
  if (s.degree() > degree_cap)
    throw DegreeCapExceededError("polynomial degree exceeds the factorization cap");
  UniPoly p = primitive_integer(s);
  for (const Rational& r : rational_roots(p)) {
    out.push_back(UniPoly::x() - UniPoly::constant(r));
    p = UniPoly::divmod(p, out.back()).first;
    p = primitive_integer(p);
  }
  if (p.degree() < 1) return;
  auto f = kronecker_factor(p);
  if (!f) {
    out.push_back(p.monic()); // no factor of degree <= deg/2: irreducible
    return;
  }
  out.push_back(*f);
  factor_squarefree_into(UniPoly::divmod(p, *f).first, degree_cap, out);
}

} // namespace

std::vector<UniPoly> factor_unipoly(const UniPoly& p, int degree_cap) {
  if (p.is_zero()) throw ZeroPolynomialError("cannot factor the zero polynomial");
  if (p.degree() > degree_cap)
    throw DegreeCapExceededError("polynomial degree exceeds the factorization cap");
  std::vector<UniPoly> out;
  for (const auto& [b, mult] : yun_squarefree(p)) {
    std::vector<UniPoly> factors;
    factor_squarefree_into(b, degree_cap, factors);
    for (int m = 0; m < mult; ++m) out.insert(out.end(), factors.begin(), factors.end());
  }
  std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

UniPoly real_radical_unipoly(const UniPoly& p, int degree_cap) {
  if (p.is_zero()) throw ZeroPolynomialError("real radical of the zero ideal is not principal here");
  if (p.degree() < 1) return UniPoly::constant(1); // unit ideal
  UniPoly s = squarefree_part(p);
  std::vector<UniPoly> factors;
  factor_squarefree_into(s, degree_cap, factors);
  UniPoly out = UniPoly::constant(1);
  for (const UniPoly& f : factors)
    if (count_real_roots(f) > 0) out = out * f;
  return out.monic();
}

} // namespace ncreal
