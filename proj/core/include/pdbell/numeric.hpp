#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pdbell {

/// Arbitrary-precision signed integer. Every counting value lives here.
using BigInt = mpz_class;

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using Rational = mpq_class;

BigInt factorial(int n);

/// C(n, k); zero when k < 0 or k > n. Throws DomainError for n < 0.
BigInt binomial(int n, int k);

BigInt power(const BigInt& base, unsigned exponent);
Rational power(const Rational& base, unsigned exponent);

/// Builds num/den in lowest terms. Throws DomainError if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// (-1)^k as a small integer.
constexpr int sign_power(int k) noexcept { return (k % 2 == 0) ? 1 : -1; }

std::string to_string(const BigInt& value);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "123", "-4.5", "1e-9", "2.5E+3" or "p/q" exactly.
/// Throws InputError on malformed text.
Rational parse_rational(std::string_view text);

/// Throws DomainError naming `what` if any argument is negative.
void require_nonnegative(const char* what, int a);
void require_nonnegative(const char* what, int a, int b);
void require_nonnegative(const char* what, int a, int b, int c);

}  // namespace pdbell

namespace pdbell {

/// Fixed-point decimal rendering with `digits` fractional digits, truncated
/// toward zero. Used for human-facing output of tolerance comparisons.
std::string to_decimal(const Rational& value, int digits);

}  // namespace pdbell
