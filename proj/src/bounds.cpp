#include "tid/bounds.hpp"

#include <cmath>

#include <fmt/format.h>

#include "tid/error.hpp"

namespace tid {

BoundReport maxInvariantDegree(int n, int l) {
  if (n < 2) throw Error("the degree bound needs n >= 2");
  if (l < -1 || l > n - 2) throw Error(fmt::format("singular locus dimension l={} outside [-1, {}]", l, n - 2));
  BoundReport r;
  r.n = n;
  r.l = l;
  r.k = n - l - 1;
  r.binomial = binomial(n, r.k);
  const auto k = static_cast<unsigned long>(r.k);
  long d = 1;
  while (power(d, k) < r.binomial) ++d;
  r.maxDegree = d;
  return r;
}

BoundReport applyQuadricExclusion(BoundReport report) {
  if (report.maxDegree == 2) {
    report.maxDegree = 1;
    report.exclusions.push_back(kQuadricExclusion);
  }
  return report;
}

BigInt phi(int l, int n) {
  if (l < -1) throw Error("l must be >= -1");
  if (n < l + 2) throw Error(fmt::format("phi_{} is defined for n >= {}", l, l + 2));
  return power(2, static_cast<unsigned long>(n - l - 1)) - binomial(n, l + 1);
}

ThresholdResult conjectureThreshold(int l) {
  if (l < -1) throw Error("l must be >= -1");
  ThresholdResult out;
  out.l = l;
  int n = std::max(4, l + 2);
  out.threshold = n;
  for (;; ++n) {
    const bool nonneg = phi(l, n) >= 0;
    if (!nonneg) out.threshold = n + 1;
    if (nonneg && n >= 2 * l + 1) break;
  }
  out.certifiedFrom = n;
  return out;
}

bool nkInequalityHolds(int k, long n) {
  const BigInt a = BigInt(n) - k - 1;
  return 2 * a * a >= BigInt(n) * (n - 1);
}

NkValue nK(int k) {
  if (k < 1) throw Error("n_k needs k >= 1");
  NkValue v;
  v.k = k;
  v.rationalPart = Rational(4 * k + 3, 2);
  v.radicand = Rational(BigInt(8) * k * k + 8 * k + 1, 4);
  v.radicand.canonicalize();
  v.rationalPart.canonicalize();
  // radicand = (8k^2 + 8k + 1) / 4 with an odd numerator, so it is a rational
  // square iff the numerator is an integer square.
  const BigInt num = BigInt(8) * k * k + 8 * k + 1;
  if (mpz_perfect_square_p(num.get_mpz_t())) {
    v.isExact = true;
    BigInt root = sqrt(num);
    v.exactValue = v.rationalPart + Rational(root, 2);
    v.exactValue.canonicalize();
  }
  v.approximation = v.rationalPart.get_d() + std::sqrt(v.radicand.get_d());
  // The quadratic also holds below its smaller root; start past the vertex
  // (4k + 3)/2.
  long n = 2L * k + 2;
  while (!nkInequalityHolds(k, n)) ++n;
  v.threshold = n;
  return v;
}

CorollaryReport corollaryReport(int n, int k) {
  if (k < 1 || k > n - 3) throw Error(fmt::format("codegree k={} outside [1, {}]", k, n - 3));
  CorollaryReport r;
  r.n = n;
  r.k = k;
  r.degree = n - k;
  const BigInt base = r.degree - 1;
  for (int l = -1; l <= n - 2; ++l) {
    const int codim = n - l - 1;
    if (power(base, static_cast<unsigned long>(codim)) < binomial(n, l + 1)) r.admissible.push_back(l);
  }
  r.nonNormalForced = true;
  for (int l : r.admissible)
    if (l <= n - 3) r.nonNormalForced = false;
  return r;
}

IsolatedVerdict classifyIsolated(int n, bool applyQuadricExclusionRule) {
  if (n < 3) throw Error("classifyIsolated needs n >= 3");
  IsolatedVerdict v;
  v.n = n;
  v.bound = maxInvariantDegree(n, 0);
  if (applyQuadricExclusionRule) v.bound = applyQuadricExclusion(v.bound);
  v.hyperplane = v.bound.maxDegree == 1;
  return v;
}

}  // namespace tid
