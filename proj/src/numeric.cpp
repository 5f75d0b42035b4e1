#include "tid/numeric.hpp"

#include <cctype>

#include "tid/error.hpp"

namespace tid {

BigInt binomial(long a, long b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  // result stays an integer at each step: it equals binom(a - b + i, i).
  for (long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

bool isPrime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Rational parseRational(const std::string& text) {
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  Rational r;
  if (cleaned.empty() || r.set_str(cleaned, 10) != 0)
    throw Error("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

int sign(const BigInt& v) { return sgn(v); }

}  // namespace tid
