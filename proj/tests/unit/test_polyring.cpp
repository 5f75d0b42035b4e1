#include <random>
#include <vector>

#include <doctest.h>

#include "tid/error.hpp"
#include "tid/polyring.hpp"

using namespace tid;

namespace {

Polynomial P(const char* text, std::size_t vars) { return parse(text, vars); }

// Small random polynomials: up to 4 terms, exponents < 3, coefficients p/q
// with |p| <= 5, 1 <= q <= 3.
Polynomial randomPoly(std::mt19937_64& rng, std::size_t vars) {
  Polynomial out(vars);
  const int terms = static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    Exponent e(vars);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 3);
    Rational c(static_cast<long>(rng() % 11) - 5, static_cast<unsigned long>(rng() % 3 + 1));
    c.canonicalize();
    out.addTerm(e, c);
  }
  return out;
}

std::vector<Rational> randomPoint(std::mt19937_64& rng, std::size_t vars) {
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < vars; ++i) {
    Rational r(static_cast<long>(rng() % 19) - 9, static_cast<unsigned long>(rng() % 4 + 1));
    r.canonicalize();
    pt.push_back(r);
  }
  return pt;
}

}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("parse reads terms directly") {
    const auto p = P("x0^2*x1 - 3*x2^3", 3);
    CHECK(p.termCount() == 2);
    CHECK(p.coefficient({2, 1, 0}) == 1);
    CHECK(p.coefficient({0, 0, 3}) == -3);
    CHECK(P("0", 2).isZero());
    const auto doubled = P("x0 + x0", 1);
    CHECK(doubled.termCount() == 1);
    CHECK(doubled.coefficient({1}) == 2);
  }

  TEST_CASE("parse precedence and literals") {
    CHECK(P("2*x0^2", 1) == P("2*(x0^2)", 1));
    CHECK(P("-x0^2", 1).coefficient({2}) == -1);
    CHECK(P("x0 - x1 - x2", 3) == P("x0 - (x1 + x2)", 3));
    CHECK(P("1/2*x0", 1).coefficient({1}) == Rational(1, 2));
    CHECK(P("  ( x0 + 1 ) ^ 2 ", 1) == P("x0^2 + 2*x0 + 1", 1));
    CHECK(P("6/4", 1).coefficient({0}) == Rational(3, 2));
  }

  TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(P("x0x1", 2), ParseError);
    CHECK_THROWS_AS(P("2x0", 1), ParseError);
    CHECK_THROWS_AS(P("x0 +", 1), ParseError);
    CHECK_THROWS_AS(P("x0^2^3", 1), ParseError);
    CHECK_THROWS_AS(P("1/0", 1), ParseError);
    CHECK_THROWS_AS(P("", 1), ParseError);
    try {
      P("x0 + x3", 3);
      FAIL("expected an out-of-range variable");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
    try {
      P("x0*x1 $", 2);
      FAIL("expected a syntax error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 6);
    }
  }

  TEST_CASE("format is graded lex and round-trips") {
    CHECK(format(P("-3*x2^3 + x0^2*x1", 3)) == "x0^2*x1 - 3*x2^3");
    CHECK(format(P("0", 2)) == "0");
    CHECK(format(P("-x0 + 1/2", 1)) == "-x0 + 1/2");
    CHECK(format(P("x1 + x0", 2)) == "x0 + x1");
    CHECK(format(P("-2/3*x0*x1", 2)) == "-2/3*x0*x1");

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = randomPoly(rng, 3);
      CHECK(parse(format(a), 3) == a);
    }
  }

  TEST_CASE("mul examples") {
    CHECK(mul(P("x0+x1", 2), P("x0-x1", 2)) == P("x0^2 - x1^2", 2));
    CHECK(mul(P("x0^3 - 7", 2), P("0", 2)).isZero());
    CHECK(mul(P("x0*x2 - x1^2", 3), P("x0*x2 + x1^2", 3)) == P("x0^2*x2^2 - x1^4", 3));
    CHECK_THROWS_AS(mul(P("x0", 1), P("x0", 2)), Error);
  }

  TEST_CASE("pow examples") {
    CHECK(pow(P("x0+x1", 2), 2) == P("x0^2 + 2*x0*x1 + x1^2", 2));
    CHECK(pow(P("0", 2), 0) == P("1", 2));
    CHECK(pow(P("x0*x1", 2), 3) == P("x0^3*x1^3", 2));
  }

  TEST_CASE("compose examples") {
    const std::vector<Polynomial> squares2{P("x0^2", 2), P("x1^2", 2)};
    CHECK(compose(P("x0*x1", 2), squares2) == P("x0^2*x1^2", 2));
    CHECK(compose(P("x0+x1", 2), squares2) == P("x0^2+x1^2", 2));
    const std::vector<Polynomial> squares3{P("x0^2", 3), P("x1^2", 3), P("x2^2", 3)};
    CHECK(compose(P("x0*x2 - x1^2", 3), squares3) == P("x0^2*x2^2 - x1^4", 3));
    CHECK_THROWS_AS(compose(P("x0*x1", 2), std::vector<Polynomial>{P("x0", 1)}), Error);
    CHECK_THROWS_AS(compose(P("x0*x1", 2), std::vector<Polynomial>{P("x0", 1), P("x0", 2)}), Error);
  }

  TEST_CASE("evaluateAt examples") {
    const std::vector<Rational> a{2, 3};
    CHECK(evaluateAt(P("x0^2 + x1", 2), a) == 7);
    CHECK(evaluateAt(P("0", 2), a) == 0);
    const std::vector<Rational> b{1, 2, 3};
    CHECK(evaluateAt(P("x0*x1*x2", 3), b) == 6);
    CHECK_THROWS_AS(evaluateAt(P("x0", 3), a), Error);
  }

  TEST_CASE("homogeneousDegree examples") {
    CHECK(homogeneousDegree(P("x0^2 + x1*x2", 3)) == Homogeneity::degree(2));
    CHECK(homogeneousDegree(P("x0 + x1^2", 2)) == Homogeneity::notHomogeneous());
    CHECK(homogeneousDegree(P("0", 2)) == Homogeneity::zero());
    CHECK(homogeneousDegree(P("5", 2)) == Homogeneity::degree(0));
  }

  TEST_CASE("reduceModP examples") {
    CHECK(format(reduceModP(P("5*x0 + 3*x1", 2), 5)) == "3*x1");
    CHECK(format(reduceModP(P("1/2*x0", 1), 3)) == "2*x0");
    CHECK(reduceModP(P("0", 2), 7).isZero());
    CHECK(format(reduceModP(P("-x0", 1), 7)) == "6*x0");
    CHECK_THROWS_AS(reduceModP(P("1/3*x0", 1), 3), Error);
    CHECK_THROWS_AS(reduceModP(P("x0", 1), 6), Error);
  }

  TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 150; ++trial) {
      const auto a = randomPoly(rng, 3), b = randomPoly(rng, 3), c = randomPoly(rng, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK((a - a).isZero());
    }
  }

  TEST_CASE("evaluation is a ring homomorphism (independent check of mul and compose)") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = randomPoly(rng, 3), b = randomPoly(rng, 3);
      const auto pt = randomPoint(rng, 3);
      CHECK(evaluateAt(a * b, pt) == evaluateAt(a, pt) * evaluateAt(b, pt));
      CHECK(evaluateAt(pow(a, 3), pt) == evaluateAt(a, pt) * evaluateAt(a, pt) * evaluateAt(a, pt));

      const std::vector<Polynomial> args{randomPoly(rng, 2), randomPoly(rng, 2), randomPoly(rng, 2)};
      const auto inner = randomPoint(rng, 2);
      std::vector<Rational> outer;
      for (const auto& g : args) outer.push_back(evaluateAt(g, inner));
      CHECK(evaluateAt(compose(a, args), inner) == evaluateAt(a, outer));
    }
  }

  TEST_CASE("compose with the identity substitution is the identity") {
    std::mt19937_64 rng(3);
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < 3; ++i) vars.push_back(Polynomial::variable(3, i));
    for (int trial = 0; trial < 100; ++trial) {
      const auto h = randomPoly(rng, 3);
      CHECK(compose(h, vars) == h);
    }
  }

  TEST_CASE("degrees add under mul and multiply under compose") {
    std::mt19937_64 rng(11);
    auto homogeneous = [&](std::size_t vars, std::uint32_t deg) {
      Polynomial out(vars);
      for (int t = 0; t < 3; ++t) {
        Exponent e(vars, 0);
        for (std::uint32_t k = 0; k < deg; ++k) ++e[rng() % vars];
        out.addTerm(e, static_cast<long>(rng() % 7) - 3);
      }
      return out;
    };
    for (int trial = 0; trial < 80; ++trial) {
      const auto da = static_cast<std::uint32_t>(rng() % 3 + 1), db = static_cast<std::uint32_t>(rng() % 3 + 1);
      const auto a = homogeneous(3, da), b = homogeneous(3, db);
      if (!a.isZero() && !b.isZero()) CHECK(homogeneousDegree(a * b) == Homogeneity::degree(da + db));

      std::vector<Polynomial> args{homogeneous(2, db), homogeneous(2, db), homogeneous(2, db)};
      const auto composed = compose(a, args);
      const auto hom = homogeneousDegree(composed);
      if (a.isZero() || composed.isZero())
        CHECK(hom.kind() == Homogeneity::Kind::Zero);
      else
        CHECK(hom == Homogeneity::degree(da * db));
    }
  }

  TEST_CASE("reduceModP is a ring homomorphism") {
    std::mt19937_64 rng(5);
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
      for (int trial = 0; trial < 60; ++trial) {
        const auto a = randomPoly(rng, 3), b = randomPoly(rng, 3);
        CHECK(reduceModP(a * b, p) == reduceModP(a, p) * reduceModP(b, p));
      }
    }
  }
}
