#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tid/numeric.hpp"
#include "tid/polyring.hpp"

namespace tid {

// Epistemic status of a claim we cannot decide exactly in general, such as
// "this map has no base point" or "no point of H maps to P".
struct Evidence {
  enum class Kind { Unverified, Asserted, ModP, Exact };

  Kind kind = Kind::Unverified;
  std::vector<std::uint64_t> primes;  // populated for Kind::ModP

  static Evidence unverified() { return {}; }
  static Evidence asserted() { return {Kind::Asserted, {}}; }
  static Evidence modP(std::vector<std::uint64_t> primes) { return {Kind::ModP, std::move(primes)}; }
  static Evidence exact() { return {Kind::Exact, {}}; }

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

std::string describe(const Evidence& e);

// Endomorphism f = (F_0 : ... : F_n) of P^n, all F_i homogeneous of degree q.
// Finiteness is not checked; `morphism` records what is known about it.
class ProjectiveMap {
 public:
  int n() const { return static_cast<int>(components_.size()) - 1; }
  unsigned long q() const { return q_; }
  const std::vector<Polynomial>& components() const { return components_; }

  const Evidence& morphism() const { return morphism_; }
  void setMorphismEvidence(Evidence e) { morphism_ = std::move(e); }

  // Every nonzero component is a scalar times one monomial.
  bool isMonomial() const;

 private:
  friend ProjectiveMap makeMap(std::vector<Polynomial> components);

  std::vector<Polynomial> components_;
  unsigned long q_ = 0;
  Evidence morphism_;
};

// Validates the components: n+1 polynomials in n+1 variables, homogeneous of
// one common degree q >= 1 (identically zero components allowed), not all zero.
ProjectiveMap makeMap(std::vector<Polynomial> components);

unsigned long algebraicDegree(const ProjectiveMap& f);

// f o g, components F_i(G_0, ..., G_n); degree q_f * q_g.
ProjectiveMap composeMaps(const ProjectiveMap& f, const ProjectiveMap& g);

// Hypersurface {h = 0} in P^n. Irreducibility is the caller's claim.
class Divisor {
 public:
  int n() const { return static_cast<int>(h_.variableCount()) - 1; }
  const Polynomial& h() const { return h_; }
  unsigned long degree() const { return degree_; }
  bool irreducibleAsserted() const { return irreducible_; }

 private:
  friend Divisor makeDivisor(int n, Polynomial h, bool irreducibleAsserted);

  Polynomial h_{1};
  unsigned long degree_ = 0;
  bool irreducible_ = false;
};

Divisor makeDivisor(int n, Polynomial h, bool irreducibleAsserted = false);

struct InvarianceReport {
  enum class Verdict { Invariant, NotInvariant };

  Verdict verdict = Verdict::NotInvariant;
  std::optional<Rational> lambda;  // present iff Invariant
  unsigned long q = 0;

  bool invariant() const { return verdict == Verdict::Invariant; }
};

// Decides h(F_0, ..., F_n) = lambda * h^q exactly.
InvarianceReport checkTotalInvariance(const ProjectiveMap& f, const Divisor& D);

// (m - 1)(n + 1 - d); negative means D cannot be totally invariant.
long logRamificationDegree(long n, long d, long m);

}  // namespace tid
