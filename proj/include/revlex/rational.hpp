#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace revlex {

using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& value, int digits);

/// Accepts "p", "p/q" and plain decimals such as "-0.25".
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "1,-1/2,0.5".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace revlex
