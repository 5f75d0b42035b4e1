#include "tid/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "tid/error.hpp"

namespace tid {

json bigIntToJson(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

BigInt bigIntFromJson(const json& j) {
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw Error("malformed integer " + j.dump());
    return v;
  }
  throw Error("expected an integer, got " + j.dump());
}

json rationalToJson(const Rational& v) { return v.get_str(); }

Rational rationalFromJson(const json& j) {
  if (j.is_number_integer()) return Rational(bigIntFromJson(j));
  if (j.is_string()) return parseRational(j.get<std::string>());
  throw Error("expected a rational, got " + j.dump());
}

json evidenceToJson(const Evidence& e) {
  json j{{"kind", describe(e)}};
  if (e.kind == Evidence::Kind::ModP) {
    j["kind"] = "ModPEvidence";
    j["primes"] = e.primes;
  }
  return j;
}

Evidence evidenceFromJson(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "Unverified") return Evidence::unverified();
  if (kind == "AssertedMorphism") return Evidence::asserted();
  if (kind == "ExactVerified") return Evidence::exact();
  if (kind == "ModPEvidence") return Evidence::modP(j.at("primes").get<std::vector<std::uint64_t>>());
  throw Error("unknown evidence kind '" + kind + "'");
}

json mapToJson(const ProjectiveMap& f) {
  json comps = json::array();
  for (const auto& c : f.components()) comps.push_back(format(c));
  return json{{"n", f.n()}, {"components", comps}, {"morphism", evidenceToJson(f.morphism())}};
}

ProjectiveMap mapFromJson(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto& comps = j.at("components");
    if (!comps.is_array() || comps.size() != static_cast<std::size_t>(n) + 1)
      throw Error("map file: expected " + std::to_string(n + 1) + " components");
    std::vector<Polynomial> ps;
    for (const auto& c : comps) ps.push_back(parse(c.get<std::string>(), static_cast<std::size_t>(n) + 1));
    ProjectiveMap f = makeMap(std::move(ps));
    if (j.contains("morphism")) f.setMorphismEvidence(evidenceFromJson(j.at("morphism")));
    return f;
  } catch (const json::exception& e) {
    throw Error(std::string("map file: ") + e.what());
  }
}

json divisorToJson(const Divisor& D) {
  return json{{"n", D.n()}, {"h", format(D.h())}, {"irreducible", D.irreducibleAsserted()}};
}

Divisor divisorFromJson(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const bool irreducible = j.value("irreducible", false);
    return makeDivisor(n, parse(j.at("h").get<std::string>(), static_cast<std::size_t>(n) + 1), irreducible);
  } catch (const json::exception& e) {
    throw Error(std::string("divisor file: ") + e.what());
  }
}

namespace {

json bigIntArray(const std::vector<BigInt>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(bigIntToJson(x));
  return a;
}

std::vector<BigInt> bigIntArrayFromJson(const json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(bigIntFromJson(x));
  return out;
}

}  // namespace

void to_json(json& j, const InvarianceReport& r) {
  j = json{{"verdict", r.invariant() ? "Invariant" : "NotInvariant"}, {"q", r.q}};
  if (r.lambda) j["lambda"] = rationalToJson(*r.lambda);
}

void from_json(const json& j, InvarianceReport& r) {
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "Invariant" && verdict != "NotInvariant") throw Error("unknown verdict '" + verdict + "'");
  r.verdict = verdict == "Invariant" ? InvarianceReport::Verdict::Invariant : InvarianceReport::Verdict::NotInvariant;
  r.q = j.at("q").get<unsigned long>();
  r.lambda.reset();
  if (j.contains("lambda")) r.lambda = rationalFromJson(j.at("lambda"));
}

void to_json(json& j, const ChernVector& c) { j = json{{"n", c.n}, {"coeffs", bigIntArray(c.coeffs)}}; }

void from_json(const json& j, ChernVector& c) {
  c.n = j.at("n").get<int>();
  c.coeffs = bigIntArrayFromJson(j.at("coeffs"));
}

void to_json(json& j, const TwistPolynomial& t) {
  j = json{{"n", t.n}, {"d", t.d}, {"k", t.k}, {"coeffs", bigIntArray(t.coeffs)}};
}

void from_json(const json& j, TwistPolynomial& t) {
  t.n = j.at("n").get<int>();
  t.d = j.at("d").get<int>();
  t.k = j.at("k").get<int>();
  t.coeffs = bigIntArrayFromJson(j.at("coeffs"));
}

void to_json(json& j, const IdentityCheck& c) {
  j = json{{"lhs", bigIntToJson(c.lhs)}, {"rhs", bigIntToJson(c.rhs)}, {"holds", c.holds}};
}

void from_json(const json& j, IdentityCheck& c) {
  c.lhs = bigIntFromJson(j.at("lhs"));
  c.rhs = bigIntFromJson(j.at("rhs"));
  c.holds = j.at("holds").get<bool>();
}

void to_json(json& j, const GapPolynomial& g) {
  j = json{{"n", g.n}, {"d", g.d}, {"l", g.l}, {"k", g.k}, {"coeffs", bigIntArray(g.coeffs)}};
}

void from_json(const json& j, GapPolynomial& g) {
  g.n = j.at("n").get<int>();
  g.d = j.at("d").get<int>();
  g.l = j.at("l").get<int>();
  g.k = j.at("k").get<int>();
  g.coeffs = bigIntArrayFromJson(j.at("coeffs"));
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"n", r.n},
           {"l", r.l},
           {"k", r.k},
           {"binom", bigIntToJson(r.binomial)},
           {"maxDegree", r.maxDegree},
           {"exclusions", r.exclusions}};
}

void from_json(const json& j, BoundReport& r) {
  r.n = j.at("n").get<int>();
  r.l = j.at("l").get<int>();
  r.k = j.at("k").get<int>();
  r.binomial = bigIntFromJson(j.at("binom"));
  r.maxDegree = j.at("maxDegree").get<long>();
  r.exclusions = j.at("exclusions").get<std::vector<std::string>>();
}

void to_json(json& j, const ThresholdResult& t) {
  j = json{{"l", t.l}, {"threshold", t.threshold}, {"certifiedFrom", t.certifiedFrom}};
}

void from_json(const json& j, ThresholdResult& t) {
  t.l = j.at("l").get<int>();
  t.threshold = j.at("threshold").get<int>();
  t.certifiedFrom = j.value("certifiedFrom", 0);
}

void to_json(json& j, const NkValue& v) {
  j = json{{"k", v.k},
           {"rationalPart", rationalToJson(v.rationalPart)},
           {"radicand", rationalToJson(v.radicand)},
           {"exact", v.isExact},
           {"approximation", v.approximation},
           {"threshold", v.threshold}};
  if (v.isExact) j["value"] = rationalToJson(v.exactValue);
}

void from_json(const json& j, NkValue& v) {
  v.k = j.at("k").get<int>();
  v.rationalPart = rationalFromJson(j.at("rationalPart"));
  v.radicand = rationalFromJson(j.at("radicand"));
  v.isExact = j.at("exact").get<bool>();
  v.approximation = j.at("approximation").get<double>();
  v.threshold = j.at("threshold").get<long>();
  v.exactValue = v.isExact ? rationalFromJson(j.at("value")) : Rational(0);
}

void to_json(json& j, const CorollaryReport& r) {
  j = json{{"n", r.n},
           {"codegree", r.k},
           {"degree", r.degree},
           {"admissible", r.admissible},
           {"nonNormalForced", r.nonNormalForced}};
}

void from_json(const json& j, CorollaryReport& r) {
  r.n = j.at("n").get<int>();
  r.k = j.at("codegree").get<int>();
  r.degree = j.at("degree").get<int>();
  r.admissible = j.at("admissible").get<std::vector<int>>();
  r.nonNormalForced = j.at("nonNormalForced").get<bool>();
}

void to_json(json& j, const IsolatedVerdict& v) {
  j = json{{"n", v.n}, {"bound", v.bound}, {"verdict", v.hyperplane ? "hyperplane" : "undecided"}};
}

void from_json(const json& j, IsolatedVerdict& v) {
  v.n = j.at("n").get<int>();
  v.bound = j.at("bound").get<BoundReport>();
  v.hyperplane = j.at("verdict").get<std::string>() == "hyperplane";
}

void to_json(json& j, const Hyperplane& H) {
  json a = json::array();
  for (const auto& c : H.a) a.push_back(rationalToJson(c));
  j = json{{"n", H.n}, {"a", a}};
}

void from_json(const json& j, Hyperplane& H) {
  std::vector<Rational> a;
  for (const auto& c : j.at("a")) a.push_back(rationalFromJson(c));
  H = makeHyperplane(std::move(a));
  if (H.n != j.at("n").get<int>()) throw Error("hyperplane: n does not match the coefficient count");
}

void to_json(json& j, const ReductionResult& r) {
  j = json{{"g", mapToJson(r.g)},
           {"H", r.H},
           {"hyperplaneEvidence", evidenceToJson(r.hyperplaneEvidence)},
           {"ambient", r.ambient},
           {"base", divisorToJson(r.reducedCone.base)},
           {"reducedN", r.reducedCone.n},
           {"report", r.report}};
}

ReductionResult reductionFromJson(const json& j) {
  const Divisor base = divisorFromJson(j.at("base"));
  return ReductionResult{mapFromJson(j.at("g")),
                         j.at("H").get<Hyperplane>(),
                         evidenceFromJson(j.at("hyperplaneEvidence")),
                         j.at("ambient").get<InvarianceReport>(),
                         makeCone(base, j.at("reducedN").get<int>()),
                         j.at("report").get<InvarianceReport>()};
}

json loadJsonArgument(const std::string& pathOrInline) {
  std::string text;
  if (!pathOrInline.empty() && pathOrInline.front() == '{') {
    text = pathOrInline;
  } else {
    std::ifstream in(pathOrInline);
    if (!in) throw Error("cannot open '" + pathOrInline + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("malformed JSON in '" + pathOrInline + "': " + e.what());
  }
}

}  // namespace tid
