#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace tid {

using BigInt = mpz_class;
using Rational = mpq_class;

// binom(a, b) by the multiplicative formula; zero when b < 0 or b > a.
BigInt binomial(long a, long b);

BigInt power(const BigInt& base, unsigned long exponent);

bool isPrime(std::uint64_t p);

// Canonical text form: integers as "n", rationals as "p/q".
inline std::string toString(const BigInt& v) { return v.get_str(); }
inline std::string toString(const Rational& v) { return v.get_str(); }

Rational parseRational(const std::string& text);

int sign(const BigInt& v);

}  // namespace tid
