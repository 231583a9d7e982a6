#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ncreal {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Text form is "num" or "num/den" with den > 0.  Used wherever rationals
// cross a text boundary (files, JSON, CLI) so output stays exact.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

double rational_to_double(const Rational& q);

// Best rational approximation to x with denominator <= max_den, computed by
// walking the continued fraction of x (convergents plus the final
// semiconvergent).  max_den >= 1; throws std::invalid_argument on
// non-finite x.
Rational round_to_rational(double x, const BigInt& max_den);

} // namespace ncreal
