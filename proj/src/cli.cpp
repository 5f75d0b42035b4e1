#include "tid/cli.hpp"

#include <filesystem>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "tid/bounds.hpp"
#include "tid/chern.hpp"
#include "tid/cone.hpp"
#include "tid/endo.hpp"
#include "tid/error.hpp"
#include "tid/fforacle.hpp"
#include "tid/io.hpp"

namespace tid::cli {

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t cap = kDefaultPointCap;
};

// What a subcommand hands back before global rendering.
struct Outcome {
  int exitCode = 0;
  std::string text;
  tid::json payload;
};

std::string formatInM(const std::vector<BigInt>& coeffs) {
  Polynomial p(1);
  for (std::size_t j = 0; j < coeffs.size(); ++j) p.addTerm({static_cast<std::uint32_t>(j)}, Rational(coeffs[j]));
  std::string s = format(p);
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'x' && i + 1 < s.size() && s[i + 1] == '0') {
      out += 'm';
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string renderBound(const BoundReport& r) {
  std::string line = fmt::format("n={} l={} k={} binom={} maxDegree={}", r.n, r.l, r.k, toString(r.binomial), r.maxDegree);
  if (!r.exclusions.empty()) line += fmt::format(" exclusions={}", fmt::join(r.exclusions, ","));
  return line;
}

std::string renderNk(const NkValue& v) {
  if (v.isExact) return fmt::format("n_{} = {} (exact)", v.k, toString(v.exactValue));
  return fmt::format("n_{} ~ {:.2f} (= {} + sqrt({})), threshold n >= {}", v.k, v.approximation,
                     toString(v.rationalPart), toString(v.radicand), v.threshold);
}

std::string renderInvariance(const InvarianceReport& r) {
  if (r.invariant()) return "Invariant, lambda=" + toString(*r.lambda);
  return "NotInvariant";
}

ProjectiveMap loadMap(const std::string& arg) { return mapFromJson(loadJsonArgument(arg)); }

// A divisor is either a JSON file / inline object or a bare polynomial read
// in the map's P^n.
Divisor loadDivisor(const std::string& arg, int n, bool irreducible) {
  const bool looksLikeFile = (!arg.empty() && arg.front() == '{') ||
                             (arg.size() > 5 && arg.ends_with(".json") && std::filesystem::exists(arg));
  if (looksLikeFile) return divisorFromJson(loadJsonArgument(arg));
  return makeDivisor(n, parse(arg, static_cast<std::size_t>(n) + 1), irreducible);
}

Outcome cmdCheckInvariance(const std::string& mapArg, const std::string& divisorArg, bool irreducible) {
  const ProjectiveMap f = loadMap(mapArg);
  const Divisor D = loadDivisor(divisorArg, f.n(), irreducible);
  const InvarianceReport r = checkTotalInvariance(f, D);
  Outcome out;
  out.exitCode = r.invariant() ? 0 : 1;
  out.text = fmt::format("{}\nmap: P^{} q={} morphism={}\ndivisor: {} (degree {})\n", renderInvariance(r), f.n(), f.q(),
                         describe(f.morphism()), format(D.h()), D.degree());
  out.payload = json{{"report", r}, {"map", mapToJson(f)}, {"divisor", divisorToJson(D)}};
  return out;
}

Outcome cmdRamification(long n, long d, long m) {
  const long deg = logRamificationDegree(n, d, m);
  Outcome out;
  out.exitCode = deg >= 0 ? 0 : 1;
  out.text = fmt::format("deg R = (m-1)(n+1-d) = {}\n", deg);
  if (deg < 0) out.text += "negative: no totally invariant divisor of this degree (d > n+1)\n";
  out.payload = json{{"n", n}, {"d", d}, {"m", m}, {"degree", deg}, {"effective", deg >= 0}};
  return out;
}

Outcome cmdChern(int n, int d, int K, const std::string& method) {
  if (K < 0) K = n;
  Outcome out;
  const auto line = [](const char* label, const ChernVector& c) {
    std::vector<std::string> xs;
    for (const auto& x : c.coeffs) xs.push_back(toString(x));
    return fmt::format("{}: {}\n", label, fmt::join(xs, ", "));
  };
  if (method == "cotangent") {
    const auto c = chernCotangent(n, K);
    out.text = line("c(Omega)", c);
    out.payload = json{{"cotangent", c}};
    return out;
  }
  if (method == "closed" || method == "series") {
    const auto c = method == "closed" ? chernLogClosed(n, d, K) : chernLogSeries(n, d, K);
    out.text = line("c(Omega(log X))", c);
    out.payload = json{{method, c}};
    return out;
  }
  if (method != "both") throw Error("unknown method '" + method + "' (closed, series, both, cotangent)");
  const auto closed = chernLogClosed(n, d, K);
  const auto series = chernLogSeries(n, d, K);
  const bool agree = closed == series;
  out.exitCode = agree ? 0 : 1;
  out.text = line("c(Omega(log X))", closed) + (agree ? "closed form and series product agree\n"
                                                      : line("series disagrees", series));
  out.payload = json{{"closed", closed}, {"series", series}, {"agree", agree}};
  return out;
}

Outcome cmdTwist(int n, int d, int k, std::optional<long> m) {
  const auto t = twistPolynomialInM(n, d, k);
  Outcome out;
  out.text = fmt::format("c_{}(Omega(log X)(m)) = {}\n", k, formatInM(t.coeffs));
  out.text += fmt::format("leading: binom(n,k)={} next: binom(n-1,k-1)(d-n-1)={}\n", toString(binomial(n, k)),
                          toString(BigInt(binomial(n - 1, k - 1) * (d - n - 1))));
  out.payload = json{{"polynomial", t}};
  if (m) {
    const BigInt v = t.evaluate(*m);
    out.text += fmt::format("at m={}: {}\n", *m, toString(v));
    out.payload["m"] = *m;
    out.payload["value"] = bigIntToJson(v);
  }
  return out;
}

Outcome cmdIdentity(std::optional<int> n, std::optional<int> k, std::optional<int> i, std::optional<int> maxN) {
  Outcome out;
  if (maxN) {
    long cases = 0;
    std::vector<json> failures;
    for (int nn = 1; nn <= *maxN; ++nn)
      for (int kk = 1; kk <= nn; ++kk)
        for (int ii = 1; ii <= kk; ++ii) {
          ++cases;
          if (!verifyIdentityP(nn, kk, ii).holds) failures.push_back(json{{"n", nn}, {"k", kk}, {"i", ii}});
        }
    out.exitCode = failures.empty() ? 0 : 1;
    out.text = failures.empty() ? fmt::format("P(n,k,i) verified for all n<={}: {} cases\n", *maxN, cases)
                                : fmt::format("P(n,k,i) FAILED in {} of {} cases\n", failures.size(), cases);
    out.payload = json{{"maxN", *maxN}, {"cases", cases}, {"failures", failures}};
    return out;
  }
  if (!n || !k || !i) throw Error("identity needs --n, --k and --i, or --max-n");
  const auto r = verifyIdentityP(*n, *k, *i);
  out.exitCode = r.holds ? 0 : 1;
  out.text = fmt::format("P({},{},{}): lhs={} rhs={} {}\n", *n, *k, *i, toString(r.lhs), toString(r.rhs),
                         r.holds ? "holds" : "FAILS");
  out.payload = json{{"n", *n}, {"k", *k}, {"i", *i}, {"check", r}};
  return out;
}

Outcome cmdObstruction(int n, int d, int l, long mMax) {
  const auto gap = obstructionGap(n, d, l);
  const auto m = invarianceObstruction(n, d, l, mMax);
  Outcome out;
  out.text = fmt::format("gap(m) = {}\n", formatInM(gap.coeffs));
  out.text += m ? fmt::format("first negative gap at m={}\n", *m) : fmt::format("no negative gap for m in [2, {}]\n", mMax);
  out.payload = json{{"gap", gap}, {"mMax", mMax}, {"eventualSign", gap.eventualSign()}};
  out.payload["minimalM"] = m ? json(*m) : json(nullptr);
  return out;
}

Outcome cmdBound(int n, int l, bool quadric) {
  BoundReport r = maxInvariantDegree(n, l);
  if (quadric) r = applyQuadricExclusion(r);
  Outcome out;
  out.text = renderBound(r) + "\n";
  if (r.maxDegree == 1) out.text += "verdict: hyperplane\n";
  out.payload = json(r);
  if (r.maxDegree == 1) out.payload["verdict"] = "hyperplane";
  return out;
}

Outcome cmdTable(int minL, int maxL) {
  if (maxL < minL) throw Error("--max-l must be >= --min-l");
  Outcome out;
  out.text = fmt::format("{:>4}  {}\n", "l", "conjecture holds for");
  out.payload = json::array();
  for (int l = minL; l <= maxL; ++l) {
    const auto t = conjectureThreshold(l);
    out.text += fmt::format("{:>4}  n >= {}\n", l, t.threshold);
    out.payload.push_back(json{{"l", t.l}, {"threshold", t.threshold}});
  }
  return out;
}

Outcome cmdNk(int k) {
  const auto v = nK(k);
  Outcome out;
  out.text = renderNk(v) + "\n";
  out.payload = json(v);
  return out;
}

Outcome cmdCorollary(int n, int k) {
  const auto r = corollaryReport(n, k);
  Outcome out;
  out.text = fmt::format("n={} degree={} admissible l: {{{}}}\n", r.n, r.degree, fmt::join(r.admissible, ", "));
  out.text += r.nonNormalForced ? "non-normal forced (no admissible l <= n-3)\n" : "normal divisors not excluded\n";
  out.payload = json(r);
  return out;
}

Outcome cmdClassifyIsolated(int n, bool noQuadric) {
  const auto v = classifyIsolated(n, !noQuadric);
  Outcome out;
  out.text = renderBound(v.bound) + "\n" + (v.hyperplane ? "verdict: hyperplane\n" : "verdict: undecided\n");
  out.payload = json(v);
  return out;
}

Outcome cmdConeReduce(const std::string& mapArg, const std::string& baseText, int baseN, int attempts,
                      const Globals& g) {
  ProjectiveMap f = loadMap(mapArg);
  const Divisor base = makeDivisor(baseN, parse(baseText, static_cast<std::size_t>(baseN) + 1), false);
  ConeDivisor C = makeCone(base, f.n());
  Outcome out;
  out.payload = json{{"steps", json::array()}};

  const auto ambient = checkTotalInvariance(f, C.lifted);
  out.text = fmt::format("P^{}: cone over {} is {}\n", f.n(), format(base.h()), renderInvariance(ambient));
  if (!ambient.invariant()) {
    out.exitCode = 1;
    out.payload["ambient"] = ambient;
    return out;
  }
  bool ok = true;
  while (f.n() > baseN) {
    const auto sel = selectHyperplane(f, g.primes, attempts, g.seed, g.cap);
    const auto r = coneReduce(f, C, sel);
    std::vector<std::string> comps;
    for (const auto& c : r.g.components()) comps.push_back(format(c));
    std::vector<std::string> a;
    for (const auto& c : r.H.a) a.push_back(toString(c));
    const bool preserved = r.report.invariant() && *r.report.lambda == *r.ambient.lambda && r.g.q() == f.q();
    ok = ok && preserved;
    out.text += fmt::format("P^{} -> P^{} via a=({}) [{}]: g = ({}) ; {}{}\n", f.n(), r.g.n(), fmt::join(a, ","),
                            describe(sel.evidence), fmt::join(comps, " : "), renderInvariance(r.report),
                            preserved ? "" : " (lambda or degree NOT preserved)");
    out.payload["steps"].push_back(r);
    f = r.g;
    C = r.reducedCone;
  }
  out.exitCode = ok ? 0 : 1;
  return out;
}

Outcome cmdFfCheck(const std::string& mapArg, const std::string& divisorArg, const Globals& g) {
  const ProjectiveMap f = loadMap(mapArg);
  const Divisor D = loadDivisor(divisorArg, f.n(), false);
  const std::vector<std::uint64_t> primes = g.primes.empty() ? std::vector<std::uint64_t>{3, 5, 7, 11} : g.primes;
  const auto exact = checkTotalInvariance(f, D);
  Outcome out;
  out.text = fmt::format("exact: {}\n", renderInvariance(exact));
  out.payload = json{{"exact", exact}, {"primes", json::array()}};
  bool allInvariant = true;
  for (auto p : primes) {
    const auto r = checkSetInvariance(reduceMap(f, p), reduceModP(D.h(), p), g.cap);
    std::string verdict;
    switch (r.kind) {
      case SetInvarianceResult::Kind::Invariant:
        verdict = "set-invariant";
        break;
      case SetInvarianceResult::Kind::Counterexample:
        verdict = "counterexample at " + format(*r.witness);
        break;
      case SetInvarianceResult::Kind::BasePoint:
        verdict = "base point at " + format(*r.witness) + " (morphism evidence downgraded)";
        break;
    }
    allInvariant = allInvariant && r.kind == SetInvarianceResult::Kind::Invariant;
    out.text += fmt::format("p={}: {} ({} points)\n", p, verdict, r.pointsChecked);
    json entry{{"p", p}, {"verdict", r.kind == SetInvarianceResult::Kind::Invariant        ? "Invariant"
                                     : r.kind == SetInvarianceResult::Kind::Counterexample ? "Counterexample"
                                                                                           : "BasePoint"},
               {"points", r.pointsChecked}};
    if (r.witness) entry["witness"] = r.witness->coords;
    out.payload["primes"].push_back(entry);
  }
  out.exitCode = allInvariant ? 0 : 1;
  return out;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations for totally invariant divisors of P^n", "tid"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit a JSON payload instead of text");
  app.add_option("--seed", g.seed, "Seed for hyperplane candidates");
  app.add_option("--primes", g.primes, "Primes for finite-field evidence")->delimiter(',');
  app.add_option("--cap", g.cap, "Maximum number of F_p points to enumerate");

  std::function<Outcome()> action;

  // Option storage shared across subcommands.
  std::string mapArg, divisorArg, method = "both", baseText;
  bool irreducible = false, quadric = false, noQuadric = false;
  int n = 0, d = 0, k = 0, l = 0, K = -1, baseN = 0, attempts = 20, minL = -1, maxL = 6;
  long mMax = 1000, lm = 1, ln = 0, ld = 0;
  std::optional<long> m;
  std::optional<int> on, ok, oi, maxN;

  auto* check = app.add_subcommand("check-invariance", "Decide h(F) = lambda h^q exactly");
  check->add_option("--map", mapArg, "Map JSON file (or inline JSON)")->required();
  check->add_option("--divisor", divisorArg, "Polynomial h, or divisor JSON")->required();
  check->add_flag("--irreducible", irreducible, "Assert that h is irreducible");
  check->callback([&] { action = [&] { return cmdCheckInvariance(mapArg, divisorArg, irreducible); }; });

  auto* ram = app.add_subcommand("ramification", "Degree (m-1)(n+1-d) of the log ramification divisor");
  ram->add_option("--n", ln)->required();
  ram->add_option("--d", ld)->required();
  ram->add_option("--m", lm)->required();
  ram->callback([&] { action = [&] { return cmdRamification(ln, ld, lm); }; });

  auto* chern = app.add_subcommand("chern", "Chern classes of Omega(log X)");
  chern->add_option("--n", n)->required();
  chern->add_option("--d", d, "Degree of X")->default_val(1);
  chern->add_option("--K", K, "Highest index (default n)");
  chern->add_option("--method", method, "closed, series, both or cotangent");
  chern->callback([&] { action = [&] { return cmdChern(n, d, K, method); }; });

  auto* twist = app.add_subcommand("twist", "c_k(Omega(log X)(m)) as a polynomial in m");
  twist->add_option("--n", n)->required();
  twist->add_option("--d", d)->required();
  twist->add_option("--k", k)->required();
  twist->add_option("--m", m, "Also evaluate at this m");
  twist->callback([&] { action = [&] { return cmdTwist(n, d, k, m); }; });

  auto* identity = app.add_subcommand("identity", "Check the binomial identity P(n,k,i)");
  identity->add_option("--n", on);
  identity->add_option("--k", ok);
  identity->add_option("--i", oi);
  identity->add_option("--max-n", maxN, "Sweep all 1 <= i <= k <= n <= max-n");
  identity->callback([&] { action = [&] { return cmdIdentity(on, ok, oi, maxN); }; });

  auto* obstruction = app.add_subcommand("obstruction", "Search the smallest m with a negative Chern gap");
  obstruction->add_option("--n", n)->required();
  obstruction->add_option("--d", d)->required();
  obstruction->add_option("--sing-dim", l, "Dimension l of the singular locus (-1 if smooth)")->required();
  obstruction->add_option("--m-max", mMax);
  obstruction->callback([&] { action = [&] { return cmdObstruction(n, d, l, mMax); }; });

  auto* bound = app.add_subcommand("bound", "Largest degree allowed by (d-1)^k < binom(n,k)");
  bound->add_option("--n", n)->required();
  bound->add_option("--sing-dim", l)->required();
  bound->add_flag("--quadric-exclusion", quadric, "Rule out quadrics");
  bound->callback([&] { action = [&] { return cmdBound(n, l, quadric); }; });

  auto* table = app.add_subcommand("table", "Thresholds n beyond which the linearity conjecture holds");
  table->add_option("--min-l", minL);
  table->add_option("--max-l", maxL);
  table->callback([&] { action = [&] { return cmdTable(minL, maxL); }; });

  auto* nk = app.add_subcommand("nk", "n_k = 2k + 3/2 + sqrt(2k^2 + 2k + 1/4)");
  nk->add_option("--k", k)->required();
  nk->callback([&] { action = [&] { return cmdNk(k); }; });

  auto* corollary = app.add_subcommand("corollary", "Admissible singular dimensions for degree n-k");
  corollary->add_option("--n", n)->required();
  corollary->add_option("--codegree", k)->required();
  corollary->callback([&] { action = [&] { return cmdCorollary(n, k); }; });

  auto* isolated = app.add_subcommand("classify-isolated", "Divisors with isolated singularities");
  isolated->add_option("--n", n)->required();
  isolated->add_flag("--no-quadric-exclusion", noQuadric);
  isolated->callback([&] { action = [&] { return cmdClassifyIsolated(n, noQuadric); }; });

  auto* cone = app.add_subcommand("cone-reduce", "Project an invariant cone down to its base");
  cone->add_option("--map", mapArg)->required();
  cone->add_option("--base", baseText, "Equation of the base divisor")->required();
  cone->add_option("--base-n", baseN, "Dimension of the base projective space")->required();
  cone->add_option("--attempts", attempts);
  cone->callback([&] { action = [&] { return cmdConeReduce(mapArg, baseText, baseN, attempts, g); }; });

  auto* ff = app.add_subcommand("ff-check", "Set-theoretic invariance over F_p by enumeration");
  ff->add_option("--map", mapArg)->required();
  ff->add_option("--divisor", divisorArg)->required();
  ff->callback([&] { action = [&] { return cmdFfCheck(mapArg, divisorArg, g); }; });

  std::vector<std::string> argvStore{"tid"};
  argvStore.insert(argvStore.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argvStore) argv.push_back(s.c_str());

  CommandResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.text = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.text = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exitCode = 2;
    result.text = std::string("error: ") + e.what() + "\n";
    return result;
  }

  for (auto p : g.primes)
    if (p > kMaxModulus || !isPrime(p)) {
      result.exitCode = 2;
      result.text = fmt::format("error: --primes: {} is not a supported prime\n", p);
      return result;
    }

  try {
    Outcome o = action();
    result.exitCode = o.exitCode;
    result.text = std::move(o.text);
    if (g.json) result.json = std::move(o.payload);
  } catch (const ParseError& e) {
    result.exitCode = 2;
    result.text = std::string("error: parse: ") + e.what() + "\n";
  } catch (const Error& e) {
    result.exitCode = 2;
    result.text = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace tid::cli
