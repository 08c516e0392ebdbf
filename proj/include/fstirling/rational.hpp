#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace fstirling {

using Integer = mpz_class;
// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// Parses "p/q", "p", with optional leading sign. Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

/// Decimal rendering rounded half away from zero to `digits` fractional digits.
std::string to_decimal(const Rational& value, int digits);

/// value^exponent; negative exponents invert (zero base throws std::domain_error).
Rational pow(const Rational& base, long exponent);

/// Exact d-th root if one exists in Q.
std::optional<Rational> exact_root(const Rational& value, unsigned long degree);

Integer factorial(long n);
Integer binomial(long n, long k);

inline Rational to_rational(const Integer& z) { return Rational(z); }

}  // namespace fstirling
