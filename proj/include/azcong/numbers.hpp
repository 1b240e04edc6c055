#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace azcong {

/// Signed arbitrary-precision integer. Exact +, -, *, and exact division
/// when the divisor divides the dividend.
using Integer = mpz_class;

/// Exact fraction, kept normalized: gcd(|num|, den) = 1, den >= 1.
using Rational = mpq_class;

/// Decimal rendering, '-' sign only, no separators. parse(render(x)) == x.
std::string render_integer(const Integer& x);

/// Strict parse of an optionally signed decimal string. Throws Error on
/// anything else (whitespace, hex prefixes, separators, empty input).
Integer parse_integer(std::string_view text);

/// Always "num/den", including "/1" for integral values.
std::string render_rational(const Rational& q);

/// Normalized fraction num/den with den > 0. Throws Error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// 3^exp as an exact integer.
Integer pow3(unsigned long exp);

}  // namespace azcong
