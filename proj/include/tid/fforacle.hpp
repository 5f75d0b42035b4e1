#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tid/endo.hpp"
#include "tid/error.hpp"
#include "tid/polyring.hpp"

// Brute-force evidence over finite fields. Nothing here decides anything
// over Q; it only produces witnesses and counts that the exact checkers must
// be consistent with.
namespace tid {

inline constexpr std::uint64_t kDefaultPointCap = 1'000'000;

// Canonical representative: the first nonzero coordinate is 1.
struct ProjectivePointFp {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> coords;

  friend auto operator<=>(const ProjectivePointFp&, const ProjectivePointFp&) = default;
};

ProjectivePointFp normalize(std::uint64_t p, std::vector<std::uint64_t> coords);

std::uint64_t projectivePointCount(int n, std::uint64_t p);

// All points of P^n(F_p): grouped by the position of the leading 1, the
// remaining coordinates in lexicographic order.
std::vector<ProjectivePointFp> enumerateProjectivePoints(int n, std::uint64_t p,
                                                         std::uint64_t cap = kDefaultPointCap);

// Calls visit(point) for every canonical point without materializing them.
template <class Visit>
void forEachProjectivePoint(int n, std::uint64_t p, std::uint64_t cap, Visit&& visit);

struct MapFp {
  int n = 0;
  std::uint64_t p = 0;
  std::vector<PolynomialFp> components;

  // Raw image vector (not normalized; may be all zero at a base point).
  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& x) const;
};

// Throws on a bad prime (some coefficient denominator divisible by p).
MapFp reduceMap(const ProjectiveMap& f, std::uint64_t p);

struct SetInvarianceResult {
  enum class Kind { Invariant, Counterexample, BasePoint };

  Kind kind = Kind::Invariant;
  std::optional<ProjectivePointFp> witness;
  std::uint64_t pointsChecked = 0;
};

// True iff for every x in P^n(F_p): h(f(x)) = 0 <=> h(x) = 0.
SetInvarianceResult checkSetInvariance(const MapFp& f, const PolynomialFp& h,
                                       std::uint64_t cap = kDefaultPointCap);

// Points x with f(x) = target. Throws BasePointError if f has a base point.
std::vector<ProjectivePointFp> preimageOfPoint(const MapFp& f, const ProjectivePointFp& target,
                                               std::uint64_t cap = kDefaultPointCap);

class BasePointError : public Error {
 public:
  BasePointError(const ProjectivePointFp& point, const std::string& what)
      : Error(what), point_(point) {}
  const ProjectivePointFp& point() const { return point_; }

 private:
  ProjectivePointFp point_;
};

std::string format(const ProjectivePointFp& point);

// Looks for base points of f over each prime. ModP(primes) when none is
// found; Unverified as soon as one prime exhibits a base point.
Evidence probeMorphism(const ProjectiveMap& f, const std::vector<std::uint64_t>& primes,
                       std::uint64_t cap = kDefaultPointCap);

// --- implementation of the template ---------------------------------------

template <class Visit>
void forEachProjectivePoint(int n, std::uint64_t p, std::uint64_t cap, Visit&& visit) {
  if (n < 0) throw Error("projective dimension must be >= 0");
  if (p > kMaxModulus || !isPrime(p)) throw Error(std::to_string(p) + " is not a supported prime");
  if (projectivePointCount(n, p) > cap)
    throw Error("P^" + std::to_string(n) + "(F_" + std::to_string(p) + ") exceeds the point cap of " +
                std::to_string(cap));
  ProjectivePointFp point{p, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0)};
  auto& c = point.coords;
  for (int lead = 0; lead <= n; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[static_cast<std::size_t>(lead)] = 1;
    for (;;) {
      visit(static_cast<const ProjectivePointFp&>(point));
      // Odometer over the coordinates after the leading one, last fastest.
      int i = n;
      while (i > lead && c[static_cast<std::size_t>(i)] == p - 1) c[static_cast<std::size_t>(i--)] = 0;
      if (i == lead) break;
      ++c[static_cast<std::size_t>(i)];
    }
  }
}

}  // namespace tid
