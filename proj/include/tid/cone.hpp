#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tid/endo.hpp"
#include "tid/fforacle.hpp"

namespace tid {

// H = {x_n = a_0 x_0 + ... + a_{n-1} x_{n-1}} in P^n. This normal form never
// contains P = (0 : ... : 0 : 1).
struct Hyperplane {
  int n = 0;
  std::vector<Rational> a;  // length n

  // a_0 x_0 + ... + a_{n-1} x_{n-1} in the n coordinates of H.
  Polynomial linearForm() const;
};

Hyperplane makeHyperplane(std::vector<Rational> a);

// Same equation as a divisor of P^k, read in P^n with n >= k.
struct ConeDivisor {
  Divisor base;
  int n = 0;
  Divisor lifted;
};

ConeDivisor makeCone(const Divisor& base, int n);

// (x_0 : ... : x_n) -> (x_0 : ... : x_{n-1} : sum a_i x_i); undefined at P.
ProjectiveMap projectFromPoint(const Hyperplane& H);

// F(x_0, ..., x_{n-1}, sum a_j x_j), a polynomial in the coordinates of H.
Polynomial restrictToHyperplane(const Polynomial& F, const Hyperplane& H);

struct HyperplaneSelection {
  Hyperplane H;
  Evidence evidence;
  int attempts = 0;
};

// Exact test, monomial maps only: is there a point of H where F_0, ...,
// F_{n-1} all vanish (i.e. a point sent to P, or a base point)?
bool hyperplaneMeetsBadLocusExact(const ProjectiveMap& f, const Hyperplane& H);

// First F_p-point of H where F_0, ..., F_{n-1} all vanish, if any.
std::optional<ProjectivePointFp> hyperplaneBadPointModP(const ProjectiveMap& f, const Hyperplane& H,
                                                        std::uint64_t p,
                                                        std::uint64_t cap = kDefaultPointCap);

// ModP(primes) when no prime exhibits a bad point, Unverified otherwise.
Evidence hyperplaneModPEvidence(const ProjectiveMap& f, const Hyperplane& H,
                                const std::vector<std::uint64_t>& primes,
                                std::uint64_t cap = kDefaultPointCap);

// Tries a = 0 first, then seeded random coefficients in [-3, 3]. Monomial
// maps are decided exactly; others are screened over the given primes.
HyperplaneSelection selectHyperplane(const ProjectiveMap& f, const std::vector<std::uint64_t>& primes,
                                     int attempts, std::uint64_t seed,
                                     std::uint64_t cap = kDefaultPointCap);

struct ReductionResult {
  ProjectiveMap g;  // on P^{n-1}
  Hyperplane H;
  Evidence hyperplaneEvidence;
  InvarianceReport ambient;  // f against the cone in P^n
  ConeDivisor reducedCone;   // cone over the same base in P^{n-1}
  InvarianceReport report;   // g against reducedCone
};

// g = pi_{P,H} o f|_H. Requires f to leave C invariant and C to be a proper
// cone (base dimension < n).
ReductionResult coneReduce(const ProjectiveMap& f, const ConeDivisor& C, const HyperplaneSelection& H);
ReductionResult coneReduce(const ProjectiveMap& f, const ConeDivisor& C, const Hyperplane& H);

}  // namespace tid
