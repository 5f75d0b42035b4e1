#include "tid/cone.hpp"

#include <random>

#include <fmt/format.h>

#include "tid/error.hpp"

namespace tid {

Polynomial Hyperplane::linearForm() const {
  Polynomial L(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) L += Polynomial::variable(static_cast<std::size_t>(n), static_cast<std::size_t>(i)) * a[static_cast<std::size_t>(i)];
  return L;
}

Hyperplane makeHyperplane(std::vector<Rational> a) {
  if (a.empty()) throw Error("hyperplane needs n >= 1 coefficients");
  const int n = static_cast<int>(a.size());
  return Hyperplane{n, std::move(a)};
}

ConeDivisor makeCone(const Divisor& base, int n) {
  if (n < base.n())
    throw Error(fmt::format("cone dimension {} is smaller than the base dimension {}", n, base.n()));
  Divisor lifted = makeDivisor(n, base.h().withVariableCount(static_cast<std::size_t>(n) + 1),
                               base.irreducibleAsserted());
  return ConeDivisor{base, n, std::move(lifted)};
}

ProjectiveMap projectFromPoint(const Hyperplane& H) {
  const auto vars = static_cast<std::size_t>(H.n) + 1;
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < static_cast<std::size_t>(H.n); ++i) comps.push_back(Polynomial::variable(vars, i));
  comps.push_back(H.linearForm().withVariableCount(vars));
  return makeMap(std::move(comps));
}

Polynomial restrictToHyperplane(const Polynomial& F, const Hyperplane& H) {
  if (F.variableCount() != static_cast<std::size_t>(H.n) + 1)
    throw Error("polynomial and hyperplane live in different projective spaces");
  const auto vars = static_cast<std::size_t>(H.n);
  std::vector<Polynomial> args;
  for (std::size_t i = 0; i < vars; ++i) args.push_back(Polynomial::variable(vars, i));
  args.push_back(H.linearForm());
  return compose(F, args);
}

bool hyperplaneMeetsBadLocusExact(const ProjectiveMap& f, const Hyperplane& H) {
  if (!f.isMonomial()) throw Error("exact hyperplane check needs a monomial map");
  const int n = f.n();
  if (H.n != n) throw Error("map and hyperplane live in different projective spaces");
  if (n > 20) throw Error("exact hyperplane check limited to n <= 20");

  // Over an algebraically closed field a monomial vanishes iff one of its
  // variables does, so it suffices to run over zero patterns Z: the set of
  // coordinates that vanish at the point.
  std::vector<std::uint32_t> support;  // bitmask per component F_0..F_{n-1}; 0 for F_i == 0
  for (int i = 0; i < n; ++i) {
    const auto& F = f.components()[static_cast<std::size_t>(i)];
    std::uint32_t mask = 0;
    if (!F.isZero()) {
      const auto& e = F.leadingExponent();
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v] > 0) mask |= 1U << v;
    }
    support.push_back(mask);
  }
  // Coefficients of x_n - sum a_i x_i.
  std::vector<bool> linearNonzero(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) linearNonzero[static_cast<std::size_t>(i)] = H.a[static_cast<std::size_t>(i)] != 0;
  linearNonzero[static_cast<std::size_t>(n)] = true;

  const std::uint32_t full = (1U << (n + 1)) - 1;
  for (std::uint32_t zeros = 0; zeros < full; ++zeros) {
    bool allVanish = true;
    for (auto mask : support)
      if (mask != 0 && (mask & zeros) == 0) allVanish = false;
    if (!allVanish) continue;
    // A point with exactly these zeros lies on H iff the restricted linear
    // form does not have exactly one nonzero coefficient.
    int nonzero = 0;
    for (int v = 0; v <= n; ++v)
      if (!(zeros & (1U << v)) && linearNonzero[static_cast<std::size_t>(v)]) ++nonzero;
    if (nonzero != 1) return true;
  }
  return false;
}

std::optional<ProjectivePointFp> hyperplaneBadPointModP(const ProjectiveMap& f, const Hyperplane& H,
                                                        std::uint64_t p, std::uint64_t cap) {
  if (H.n != f.n()) throw Error("map and hyperplane live in different projective spaces");
  const MapFp reduced = reduceMap(f, p);
  std::vector<std::uint64_t> a;
  for (const auto& c : H.a) a.push_back(reduceRational(c, p));
  const auto n = static_cast<std::size_t>(f.n());

  std::optional<ProjectivePointFp> bad;
  std::vector<std::uint64_t> x(n + 1);
  forEachProjectivePoint(f.n() - 1, p, cap, [&](const ProjectivePointFp& y) {
    if (bad) return;
    std::uint64_t last = 0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = y.coords[i];
      last = (last + a[i] * y.coords[i]) % p;
    }
    x[n] = last;
    for (std::size_t i = 0; i < n; ++i)
      if (reduced.components[i].evaluate(x) != 0) return;
    bad = normalize(p, x);
  });
  return bad;
}

Evidence hyperplaneModPEvidence(const ProjectiveMap& f, const Hyperplane& H,
                                const std::vector<std::uint64_t>& primes, std::uint64_t cap) {
  if (primes.empty()) return Evidence::unverified();
  for (auto p : primes)
    if (hyperplaneBadPointModP(f, H, p, cap)) return Evidence::unverified();
  return Evidence::modP(primes);
}

HyperplaneSelection selectHyperplane(const ProjectiveMap& f, const std::vector<std::uint64_t>& primes,
                                     int attempts, std::uint64_t seed, std::uint64_t cap) {
  const int n = f.n();
  if (n < 2) throw Error("hyperplane selection needs n >= 2");
  if (attempts < 1) throw Error("attempts must be >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    std::vector<Rational> a(static_cast<std::size_t>(n), 0);
    if (attempt > 1)
      for (auto& c : a) c = static_cast<long>(rng() % 7) - 3;
    Hyperplane H = makeHyperplane(std::move(a));

    if (f.isMonomial()) {
      if (!hyperplaneMeetsBadLocusExact(f, H)) return {std::move(H), Evidence::exact(), attempt};
      continue;
    }
    if (primes.empty()) return {std::move(H), Evidence::unverified(), attempt};
    bool rejected = false;
    for (auto p : primes)
      if (hyperplaneBadPointModP(f, H, p, cap)) {
        rejected = true;
        break;
      }
    if (!rejected) return {std::move(H), Evidence::modP(primes), attempt};
  }
  throw Error(fmt::format("no admissible hyperplane found in {} attempts", attempts));
}

namespace {

// Variables dividing every term of every component.
std::vector<std::size_t> commonMonomialFactor(const std::vector<Polynomial>& comps) {
  std::optional<Exponent> common;
  for (const auto& c : comps)
    for (const auto& [e, coeff] : c.terms()) {
      if (!common) {
        common = e;
        continue;
      }
      for (std::size_t v = 0; v < e.size(); ++v) (*common)[v] = std::min((*common)[v], e[v]);
    }
  std::vector<std::size_t> vars;
  if (common)
    for (std::size_t v = 0; v < common->size(); ++v)
      if ((*common)[v] > 0) vars.push_back(v);
  return vars;
}

}  // namespace

ReductionResult coneReduce(const ProjectiveMap& f, const ConeDivisor& C, const HyperplaneSelection& sel) {
  const int n = f.n();
  if (C.n != n) throw Error(fmt::format("map on P^{} but cone in P^{}", n, C.n));
  if (sel.H.n != n) throw Error("hyperplane lives in a different projective space");
  if (C.base.n() >= n) throw Error("cone equals its base; nothing to reduce");

  InvarianceReport ambient = checkTotalInvariance(f, C.lifted);
  if (!ambient.invariant()) throw Error("precondition violated: the map does not leave the cone invariant");

  std::vector<Polynomial> comps;
  for (int i = 0; i < n; ++i) comps.push_back(restrictToHyperplane(f.components()[static_cast<std::size_t>(i)], sel.H));
  if (const auto vars = commonMonomialFactor(comps); !vars.empty())
    throw Error(fmt::format("reduced components share the factor x{}; choose another hyperplane", vars.front()));

  ProjectiveMap g = makeMap(std::move(comps));
  g.setMorphismEvidence(sel.evidence);
  ConeDivisor reduced = makeCone(C.base, n - 1);
  InvarianceReport report = checkTotalInvariance(g, reduced.lifted);
  return ReductionResult{std::move(g), sel.H, sel.evidence, std::move(ambient), std::move(reduced), std::move(report)};
}

ReductionResult coneReduce(const ProjectiveMap& f, const ConeDivisor& C, const Hyperplane& H) {
  return coneReduce(f, C, HyperplaneSelection{H, Evidence::unverified(), 0});
}

}  // namespace tid
