#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace urn {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "7", "-3", "2/5" or a plain decimal such as "0.4" into an exact
/// rational. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Decimal rendering with 17 significant digits.
std::string to_decimal(const Rational& q);

/// Canonical num/den.
Rational ratio(const BigInt& num, const BigInt& den);

BigInt binomial(std::int64_t n, std::int64_t k);
Rational pow(const Rational& base, std::int64_t exponent);

} // namespace urn
