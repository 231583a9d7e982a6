#include "ncreal/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace ncreal {

std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rational(num, den);
}

double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

Rational round_to_rational(double x, const BigInt& max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot round non-finite value");
  if (max_den < 1) throw std::invalid_argument("max_den must be >= 1");

  // Exact rational value of the double.
  int exp = 0;
  double mant = std::frexp(x, &exp);
  BigInt num = 0;
  // 53 mantissa bits suffice.
  for (int i = 0; i < 53; ++i) {
    mant *= 2;
    double bit = std::floor(mant);
    num = num * 2 + BigInt(static_cast<long>(bit));
    mant -= bit;
  }
  exp -= 53;
  Rational exact(num, 1);
  if (exp > 0) exact *= Rational(BigInt(1) << exp, 1);
  if (exp < 0) exact /= Rational(BigInt(1) << (-exp), 1);

  if (denominator(exact) <= max_den) return exact;

  // Continued fraction of |exact|; track convergents h/k.
  bool neg = exact < 0;
  Rational r = neg ? Rational(-exact) : exact;
  BigInt h2 = 0, h1 = 1, k2 = 1, k1 = 0; // conv(-2), conv(-1)
  Rational best;
  while (true) {
    BigInt a = numerator(r) / denominator(r);
    BigInt h = a * h1 + h2;
    BigInt k = a * k1 + k2;
    if (k > max_den) {
      // Semiconvergent with the largest admissible partial quotient.
      BigInt ac = (max_den - k2) / k1;
      Rational prev(h1, k1);
      if (ac > 0) {
        Rational semi(ac * h1 + h2, ac * k1 + k2);
        Rational target = neg ? Rational(-exact) : exact;
        best = (abs(semi - target) <= abs(prev - target)) ? semi : prev;
      } else {
        best = prev;
      }
      break;
    }
    h2 = h1; h1 = h; k2 = k1; k1 = k;
    Rational frac = r - Rational(a);
    if (frac == 0) { best = Rational(h1, k1); break; }
    r = Rational(1) / frac;
  }
  return neg ? Rational(-best) : best;
}

} // namespace ncreal
