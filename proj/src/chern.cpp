#include "tid/chern.hpp"

#include <fmt/format.h>

#include "tid/error.hpp"

namespace tid {

namespace {

void requireRange(int n, int K) {
  if (n < 1) throw Error("Chern classes need n >= 1");
  if (K < 0 || K > n) throw Error(fmt::format("index K={} outside [0, {}]", K, n));
}

BigInt signedOne(int i) { return (i % 2 == 0) ? 1 : -1; }

BigInt evaluateCoeffs(const std::vector<BigInt>& coeffs, const BigInt& m) {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * m + *it;
  return acc;
}

}  // namespace

BigInt TwistPolynomial::evaluate(const BigInt& m) const { return evaluateCoeffs(coeffs, m); }

BigInt GapPolynomial::evaluate(const BigInt& m) const { return evaluateCoeffs(coeffs, m); }

int GapPolynomial::eventualSign() const {
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    if (*it != 0) return sgn(*it);
  return 0;
}

ChernVector chernCotangent(int n, int K) {
  requireRange(n, K);
  ChernVector out{n, {}};
  for (int i = 0; i <= K; ++i) out.coeffs.push_back(signedOne(i) * binomial(n + 1, i));
  return out;
}

ChernVector chernLogClosed(int n, int d, int K) {
  requireRange(n, K);
  if (d < 1) throw Error("divisor degree must be >= 1");
  ChernVector out{n, {}};
  for (int i = 0; i <= K; ++i) {
    BigInt c = 0;
    for (int j = 0; j <= i; ++j) c += signedOne(j) * binomial(n + 1, j) * power(d, i - j);
    out.coeffs.push_back(c);
  }
  return out;
}

ChernVector chernLogSeries(int n, int d, int K) {
  requireRange(n, K);
  if (d < 1) throw Error("divisor degree must be >= 1");
  // Everything lives modulo H^{n+1}.
  const auto len = static_cast<std::size_t>(n) + 1;

  std::vector<BigInt> cotangent(len, 0);
  cotangent[0] = 1;
  for (int f = 0; f < n + 1; ++f)
    for (std::size_t i = len - 1; i >= 1; --i) cotangent[i] -= cotangent[i - 1];

  std::vector<BigInt> divisor(len);
  divisor[0] = 1;
  for (std::size_t i = 1; i < len; ++i) divisor[i] = divisor[i - 1] * d;

  std::vector<BigInt> total(len, 0);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; i + j < len; ++j) total[i + j] += cotangent[i] * divisor[j];

  total.resize(static_cast<std::size_t>(K) + 1);
  return ChernVector{n, std::move(total)};
}

BigInt twistChern(const ChernVector& base, int rank, const BigInt& m, int k) {
  if (k < 0 || k > base.maxIndex())
    throw Error(fmt::format("k={} outside the computed range [0, {}]", k, base.maxIndex()));
  if (m < 0) throw Error("twist parameter m must be nonnegative");
  BigInt acc = 0;
  BigInt mPower = 1;
  for (int i = k; i >= 0; --i) {
    acc += mPower * binomial(rank - i, k - i) * base.coeffs[static_cast<std::size_t>(i)];
    mPower *= m;
  }
  return acc;
}

TwistPolynomial twistPolynomialInM(int n, int d, int k) {
  if (k < 1 || k > n) throw Error(fmt::format("k={} outside [1, {}]", k, n));
  const ChernVector base = chernLogClosed(n, d, k);
  TwistPolynomial out{n, d, k, std::vector<BigInt>(static_cast<std::size_t>(k) + 1, 0)};
  for (int i = 0; i <= k; ++i)
    out.coeffs[static_cast<std::size_t>(k - i)] = binomial(n - i, k - i) * base.coeffs[static_cast<std::size_t>(i)];
  return out;
}

IdentityCheck verifyIdentityP(int n, int k, int i) {
  if (!(1 <= i && i <= k && k <= n))
    throw Error(fmt::format("identity needs 1 <= i <= k <= n, got n={} k={} i={}", n, k, i));
  IdentityCheck out;
  out.lhs = 0;
  for (int j = 0; j <= i; ++j) out.lhs += signedOne(j) * binomial(n + 1, j) * binomial(n - k + i - j, i - j);
  out.rhs = signedOne(i) * binomial(k, i);
  out.holds = out.lhs == out.rhs;
  return out;
}

GapPolynomial obstructionGap(int n, int d, int l) {
  const int k = n - l - 1;
  if (l < -1) throw Error("singular locus dimension must be >= -1");
  if (k < 1) throw Error(fmt::format("codimension k={} must be >= 1 (l <= n-2)", k));
  const TwistPolynomial twist = twistPolynomialInM(n, d, k);
  GapPolynomial gap{n, d, l, k, std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0)};
  for (int j = 0; j <= k; ++j) gap.coeffs[static_cast<std::size_t>(j + n - k)] += twist.coeffs[static_cast<std::size_t>(j)];
  gap.coeffs[static_cast<std::size_t>(n)] -= power(d - 1, static_cast<unsigned long>(k));
  return gap;
}

std::optional<long> invarianceObstruction(int n, int d, int l, long mMax) {
  if (mMax < 2) throw Error("mMax must be >= 2");
  const GapPolynomial gap = obstructionGap(n, d, l);
  for (long m = 2; m <= mMax; ++m)
    if (gap.evaluate(m) < 0) return m;
  return std::nullopt;
}

}  // namespace tid
