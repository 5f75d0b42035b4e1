#include "tid/fforacle.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "tid/error.hpp"

namespace tid {

namespace {

std::uint64_t inverseMod(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^{p-2}.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

bool allZero(const std::vector<std::uint64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

}  // namespace

ProjectivePointFp normalize(std::uint64_t p, std::vector<std::uint64_t> coords) {
  auto lead = std::find_if(coords.begin(), coords.end(), [p](std::uint64_t x) { return x % p != 0; });
  if (lead == coords.end()) throw Error("the zero vector is not a projective point");
  const std::uint64_t inv = inverseMod(*lead % p, p);
  for (auto& x : coords) x = x % p * inv % p;
  return ProjectivePointFp{p, std::move(coords)};
}

std::uint64_t projectivePointCount(int n, std::uint64_t p) {
  // 1 + p + ... + p^n, saturating.
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (int i = 0; i <= n; ++i) {
    if (total > UINT64_MAX - term) return UINT64_MAX;
    total += term;
    if (i < n) {
      if (term > UINT64_MAX / p) return UINT64_MAX;
      term *= p;
    }
  }
  return total;
}

std::vector<ProjectivePointFp> enumerateProjectivePoints(int n, std::uint64_t p, std::uint64_t cap) {
  std::vector<ProjectivePointFp> out;
  forEachProjectivePoint(n, p, cap, [&](const ProjectivePointFp& x) { out.push_back(x); });
  return out;
}

std::vector<std::uint64_t> MapFp::apply(const std::vector<std::uint64_t>& x) const {
  std::vector<std::uint64_t> image;
  image.reserve(components.size());
  for (const auto& F : components) image.push_back(F.evaluate(x));
  return image;
}

MapFp reduceMap(const ProjectiveMap& f, std::uint64_t p) {
  MapFp out{f.n(), p, {}};
  for (const auto& F : f.components()) out.components.push_back(reduceModP(F, p));
  return out;
}

SetInvarianceResult checkSetInvariance(const MapFp& f, const PolynomialFp& h, std::uint64_t cap) {
  if (h.prime() != f.p || h.variableCount() != static_cast<std::size_t>(f.n) + 1)
    throw Error("map and divisor are reduced in different contexts");
  SetInvarianceResult result;
  bool done = false;
  forEachProjectivePoint(f.n, f.p, cap, [&](const ProjectivePointFp& x) {
    if (done) return;
    ++result.pointsChecked;
    const auto image = f.apply(x.coords);
    if (allZero(image)) {
      result.kind = SetInvarianceResult::Kind::BasePoint;
      result.witness = x;
      done = true;
      return;
    }
    const bool onD = h.evaluate(x.coords) == 0;
    const bool imageOnD = h.evaluate(image) == 0;
    if (onD != imageOnD) {
      result.kind = SetInvarianceResult::Kind::Counterexample;
      result.witness = x;
      done = true;
    }
  });
  return result;
}

std::vector<ProjectivePointFp> preimageOfPoint(const MapFp& f, const ProjectivePointFp& target,
                                               std::uint64_t cap) {
  if (target.p != f.p || target.coords.size() != static_cast<std::size_t>(f.n) + 1)
    throw Error("target point lives in a different projective space");
  const ProjectivePointFp canonicalTarget = normalize(target.p, target.coords);
  std::vector<ProjectivePointFp> out;
  forEachProjectivePoint(f.n, f.p, cap, [&](const ProjectivePointFp& x) {
    auto image = f.apply(x.coords);
    if (allZero(image)) throw BasePointError(x, "map has a base point at " + format(x));
    if (normalize(f.p, std::move(image)) == canonicalTarget) out.push_back(x);
  });
  return out;
}

std::string format(const ProjectivePointFp& point) {
  return fmt::format("({})", fmt::join(point.coords, ":"));
}

}  // namespace tid

namespace tid {

Evidence probeMorphism(const ProjectiveMap& f, const std::vector<std::uint64_t>& primes, std::uint64_t cap) {
  if (primes.empty()) return Evidence::unverified();
  for (auto p : primes) {
    const MapFp reduced = reduceMap(f, p);
    bool basePoint = false;
    forEachProjectivePoint(reduced.n, p, cap, [&](const ProjectivePointFp& x) {
      if (!basePoint && allZero(reduced.apply(x.coords))) basePoint = true;
    });
    if (basePoint) return Evidence::unverified();
  }
  return Evidence::modP(primes);
}

}  // namespace tid
