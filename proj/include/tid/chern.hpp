#pragma once

#include <optional>
#include <vector>

#include "tid/numeric.hpp"

// Chern classes on P^n, computed in Z[H]/(H^{n+1}).
namespace tid {

// Coefficients (c_0, ..., c_K) with c_i in units of H^i.
struct ChernVector {
  int n = 0;
  std::vector<BigInt> coeffs;

  int maxIndex() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const ChernVector&, const ChernVector&) = default;
};

// Polynomial in the twist parameter m; coeffs[j] multiplies m^j.
struct TwistPolynomial {
  int n = 0;
  int d = 0;
  int k = 0;
  std::vector<BigInt> coeffs;

  BigInt evaluate(const BigInt& m) const;
  friend bool operator==(const TwistPolynomial&, const TwistPolynomial&) = default;
};

// Chern classes of the cotangent bundle: (1 - H)^{n+1}, truncated at K.
ChernVector chernCotangent(int n, int K);

// c_i(Omega(log X)) for X of degree d, by the closed sum
//   c_i = sum_{j=0}^{i} (-1)^j binom(n+1, j) d^{i-j}.
ChernVector chernLogClosed(int n, int d, int K);

// Same classes from the Whitney product (1 - H)^{n+1} * sum_i d^i H^i, done as
// truncated power series multiplication.
ChernVector chernLogSeries(int n, int d, int K);

// c_k(E (x) O(m)) = sum_{i=0}^{k} m^{k-i} binom(rank - i, k - i) c_i(E).
BigInt twistChern(const ChernVector& base, int rank, const BigInt& m, int k);

// The full polynomial in m of c_k(Omega(log X) (x) O(m)).
TwistPolynomial twistPolynomialInM(int n, int d, int k);

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

// sum_{j=0}^{i} (-1)^j binom(n+1, j) binom(n-k+i-j, i-j) == (-1)^i binom(k, i),
// for 1 <= i <= k <= n.
IdentityCheck verifyIdentityP(int n, int k, int i);

// The comparison underlying the degree bound: with k = n - l - 1,
//   gap(m) = m^{n-k} c_k(Omega(log X)(m)) - (d-1)^k m^n.
// coeffs[j] multiplies m^j.
struct GapPolynomial {
  int n = 0;
  int d = 0;
  int l = 0;
  int k = 0;
  std::vector<BigInt> coeffs;

  BigInt evaluate(const BigInt& m) const;
  // Sign of gap(m) for all sufficiently large m (0 if gap vanishes identically).
  int eventualSign() const;
};

GapPolynomial obstructionGap(int n, int d, int l);

// Smallest m in [2, mMax] with gap(m) < 0.
std::optional<long> invarianceObstruction(int n, int d, int l, long mMax);

}  // namespace tid
