#pragma once

#include <string>
#include <vector>

#include "tid/numeric.hpp"

namespace tid {

// Degree bound for an irreducible totally invariant divisor whose singular
// locus has dimension l (l = -1 when smooth). With k = n - l - 1 the
// admissible degrees are exactly those d with (d-1)^k < binom(n, k).
struct BoundReport {
  int n = 0;
  int l = 0;
  int k = 0;
  BigInt binomial;
  long maxDegree = 1;
  // Names of imported exclusion rules that lowered maxDegree below the
  // numerical bound.
  std::vector<std::string> exclusions;
};

inline constexpr const char* kQuadricExclusion = "quadric";

BoundReport maxInvariantDegree(int n, int l);

// Quadrics are never totally invariant: a bound of 2 drops to 1.
BoundReport applyQuadricExclusion(BoundReport report);

// 2^{n-l-1} - binom(n, l+1), for n >= l + 2.
BigInt phi(int l, int n);

struct ThresholdResult {
  int l = 0;
  int threshold = 0;
  // Largest n examined; phi_l stays nonnegative beyond it because
  // binom(n+1, l+1) / binom(n, l+1) <= 2 once n >= 2l + 1.
  int certifiedFrom = 0;
};

// Smallest N >= 4 with phi_l(n) >= 0 for every n >= N.
ThresholdResult conjectureThreshold(int l);

// n_k = 2k + 3/2 + sqrt(2k^2 + 2k + 1/4), the larger root of
// (n - k - 1)^2 - n(n - 1)/2.
struct NkValue {
  int k = 0;
  Rational rationalPart;
  Rational radicand;
  bool isExact = false;
  Rational exactValue;  // meaningful only when isExact
  double approximation = 0.0;
  long threshold = 0;  // least integer n >= n_k
};

NkValue nK(int k);

// (n - k - 1)^2 >= n(n - 1)/2, tested on integers.
bool nkInequalityHolds(int k, long n);

struct CorollaryReport {
  int n = 0;
  int k = 0;  // codegree: the divisor has degree n - k
  int degree = 0;
  std::vector<int> admissible;  // singular-locus dimensions l allowed by the bound
  bool nonNormalForced = false;  // no admissible l <= n - 3
};

CorollaryReport corollaryReport(int n, int k);

struct IsolatedVerdict {
  int n = 0;
  BoundReport bound;
  bool hyperplane = false;
};

IsolatedVerdict classifyIsolated(int n, bool applyQuadricExclusionRule = true);

}  // namespace tid
