#include "tid/endo.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "tid/error.hpp"

namespace tid {

std::string describe(const Evidence& e) {
  switch (e.kind) {
    case Evidence::Kind::Unverified:
      return "Unverified";
    case Evidence::Kind::Asserted:
      return "AssertedMorphism";
    case Evidence::Kind::ModP:
      return fmt::format("ModPEvidence({})", fmt::join(e.primes, ","));
    case Evidence::Kind::Exact:
      return "ExactVerified";
  }
  return "Unverified";
}

bool ProjectiveMap::isMonomial() const {
  for (const auto& c : components_)
    if (c.termCount() > 1) return false;
  return true;
}

ProjectiveMap makeMap(std::vector<Polynomial> components) {
  if (components.size() < 2) throw Error("a map of P^n needs n+1 >= 2 components");
  std::optional<unsigned long> q;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (c.variableCount() != components.size())
      throw Error(fmt::format("component {} uses {} variables, expected {}", i, c.variableCount(),
                              components.size()));
    const auto hom = homogeneousDegree(c);
    if (hom.kind() == Homogeneity::Kind::Zero) continue;
    if (!hom.isDegree()) throw Error(fmt::format("component {} is not homogeneous", i));
    if (q && *q != hom.value())
      throw Error(fmt::format("component degrees differ ({} vs {})", *q, hom.value()));
    q = hom.value();
  }
  if (!q) throw Error("all components are zero");
  if (*q == 0) throw Error("components must have degree at least 1");
  ProjectiveMap f;
  f.components_ = std::move(components);
  f.q_ = *q;
  return f;
}

unsigned long algebraicDegree(const ProjectiveMap& f) { return f.q(); }

ProjectiveMap composeMaps(const ProjectiveMap& f, const ProjectiveMap& g) {
  if (f.n() != g.n()) throw Error("composeMaps: dimension mismatch");
  std::vector<Polynomial> out;
  out.reserve(f.components().size());
  for (const auto& F : f.components()) out.push_back(compose(F, g.components()));
  return makeMap(std::move(out));
}

Divisor makeDivisor(int n, Polynomial h, bool irreducibleAsserted) {
  if (n < 1) throw Error("divisor needs n >= 1");
  if (h.variableCount() != static_cast<std::size_t>(n) + 1)
    throw Error(fmt::format("divisor on P^{} needs {} variables, got {}", n, n + 1, h.variableCount()));
  const auto hom = homogeneousDegree(h);
  if (hom.kind() == Homogeneity::Kind::Zero) throw Error("divisor equation is zero");
  if (!hom.isDegree()) throw Error("divisor equation is not homogeneous");
  if (hom.value() == 0) throw Error("divisor equation is a nonzero constant");
  Divisor D;
  D.h_ = std::move(h);
  D.degree_ = hom.value();
  D.irreducible_ = irreducibleAsserted;
  return D;
}

InvarianceReport checkTotalInvariance(const ProjectiveMap& f, const Divisor& D) {
  if (f.n() != D.n())
    throw Error(fmt::format("dimension mismatch: map on P^{}, divisor in P^{}", f.n(), D.n()));
  InvarianceReport report;
  report.q = f.q();
  const Polynomial lhs = compose(D.h(), f.components());
  if (lhs.isZero()) return report;
  const Polynomial rhs = pow(D.h(), f.q());
  if (lhs.leadingExponent() != rhs.leadingExponent()) return report;
  const Rational lambda = lhs.leadingCoefficient() / rhs.leadingCoefficient();
  if (lhs != rhs * lambda) return report;
  report.verdict = InvarianceReport::Verdict::Invariant;
  report.lambda = lambda;
  return report;
}

long logRamificationDegree(long n, long d, long m) {
  if (n < 1 || d < 1 || m < 1) throw Error("logRamificationDegree needs n, d, m >= 1");
  return (m - 1) * (n + 1 - d);
}

}  // namespace tid
