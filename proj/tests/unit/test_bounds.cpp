#include <boost/multiprecision/cpp_dec_float.hpp>
#include <doctest.h>

#include "tid/bounds.hpp"
#include "tid/error.hpp"

using namespace tid;
using Real = boost::multiprecision::cpp_dec_float_100;

namespace {

Real toReal(const BigInt& v) { return Real(v.get_str()); }

// 1 + floor(binom^{1/k}), stepping down by one when the root is an exact
// integer (strict inequality).
long realBound(const BigInt& binom, int k) {
  const Real root = boost::multiprecision::pow(toReal(binom), Real(1) / k);
  const Real nearest = boost::multiprecision::round(root);
  if (boost::multiprecision::abs(root - nearest) < Real("1e-60")) return nearest.convert_to<long>();
  return 1 + boost::multiprecision::floor(root).convert_to<long>();
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("maxInvariantDegree examples") {
    auto r = maxInvariantDegree(4, 0);
    CHECK(r.k == 3);
    CHECK(r.binomial == 4);
    CHECK(r.maxDegree == 2);
    for (int n = 2; n <= 12; ++n) CHECK(maxInvariantDegree(n, -1).maxDegree == 1);
    r = maxInvariantDegree(5, 3);
    CHECK(r.k == 1);
    CHECK(r.binomial == 5);
    CHECK(r.maxDegree == 5);
    CHECK(r.exclusions.empty());
    CHECK_THROWS_AS(maxInvariantDegree(4, 3), Error);
    CHECK_THROWS_AS(maxInvariantDegree(4, -2), Error);
    CHECK_THROWS_AS(maxInvariantDegree(1, -1), Error);
  }

  TEST_CASE("exact bound matches the real k-th root") {
    for (int n = 2; n <= 40; ++n)
      for (int l = -1; l <= n - 2; ++l) {
        const auto r = maxInvariantDegree(n, l);
        CAPTURE(n);
        CAPTURE(l);
        CHECK(r.maxDegree == realBound(r.binomial, r.k));
        const auto k = static_cast<unsigned long>(r.k);
        CHECK(power(r.maxDegree - 1, k) < r.binomial);
        CHECK(power(r.maxDegree, k) >= r.binomial);
      }
  }

  TEST_CASE("k = 1 recovers d <= n and the bound is monotone in k") {
    for (int n = 2; n <= 40; ++n) {
      CHECK(maxInvariantDegree(n, n - 2).maxDegree == n);
      long previous = maxInvariantDegree(n, n - 2).maxDegree;
      for (int l = n - 3; l >= -1; --l) {
        const long current = maxInvariantDegree(n, l).maxDegree;
        CHECK(current <= previous);
        previous = current;
      }
    }
  }

  TEST_CASE("quadric exclusion") {
    const auto r = applyQuadricExclusion(maxInvariantDegree(4, 0));
    CHECK(r.maxDegree == 1);
    CHECK(r.exclusions == std::vector<std::string>{kQuadricExclusion});
    const auto untouched = applyQuadricExclusion(maxInvariantDegree(5, 3));
    CHECK(untouched.maxDegree == 5);
    CHECK(untouched.exclusions.empty());
  }

  TEST_CASE("phi") {
    CHECK(phi(1, 6) == 1);
    CHECK(phi(1, 5) == -2);
    for (int n = 1; n <= 30; ++n) CHECK(phi(-1, n) == power(2, static_cast<unsigned long>(n)) - 1);
    CHECK_THROWS_AS(phi(2, 3), Error);
  }

  TEST_CASE("conjectureThreshold reproduces the table") {
    const int expected[] = {4, 4, 6, 10, 14, 19, 23, 27};
    for (int l = -1; l <= 6; ++l) CHECK(conjectureThreshold(l).threshold == expected[l + 1]);
  }

  TEST_CASE("threshold certified by a long scan") {
    for (int l = -1; l <= 10; ++l) {
      const auto t = conjectureThreshold(l);
      CHECK(t.certifiedFrom >= 2 * l + 1);
      for (int n = t.threshold; n <= 200; ++n) CHECK(phi(l, n) >= 0);
      if (t.threshold > std::max(4, l + 2)) CHECK(phi(l, t.threshold - 1) < 0);
    }
  }

  TEST_CASE("nK") {
    const auto one = nK(1);
    CHECK_FALSE(one.isExact);
    CHECK(one.threshold == 6);
    CHECK(one.approximation == doctest::Approx(5.56).epsilon(0.001));
    const auto two = nK(2);
    CHECK(two.isExact);
    CHECK(two.exactValue == 9);
    CHECK(two.radicand == Rational(49, 4));
    CHECK(two.threshold == 9);
    for (int k = 1; k <= 30; ++k) {
      const auto v = nK(k);
      CHECK(nkInequalityHolds(k, v.threshold));
      CHECK_FALSE(nkInequalityHolds(k, v.threshold - 1));
      // Against the real root.
      const Real root = Real(4 * k + 3) / 2 + boost::multiprecision::sqrt(Real(2 * k * k + 2 * k) + Real(1) / 4);
      CHECK(v.threshold == boost::multiprecision::ceil(root - Real("1e-60")).convert_to<long>());
    }
    CHECK_THROWS_AS(nK(0), Error);
  }

  TEST_CASE("corollaryReport for degree n-1 and n-2") {
    auto r = corollaryReport(4, 1);
    CHECK(r.degree == 3);
    CHECK(r.admissible == std::vector<int>{1, 2});
    CHECK_FALSE(r.nonNormalForced);
    r = corollaryReport(5, 1);
    CHECK(r.admissible == std::vector<int>{2, 3});
    CHECK(corollaryReport(6, 1).nonNormalForced);
    for (int n = 6; n <= 8; ++n) {
      r = corollaryReport(n, 2);
      CHECK(r.admissible == std::vector<int>{n - 3, n - 2});
      CHECK_FALSE(r.nonNormalForced);
    }
    CHECK(corollaryReport(9, 2).nonNormalForced);
    CHECK_THROWS_AS(corollaryReport(4, 2), Error);
    CHECK_THROWS_AS(corollaryReport(4, 0), Error);
  }

  TEST_CASE("n_k threshold is where non-normality becomes forced") {
    for (int k = 1; k <= 10; ++k) {
      int first = 0;
      for (int n = k + 3; first == 0; ++n)
        if (corollaryReport(n, k).nonNormalForced) first = n;
      CHECK(first == nK(k).threshold);
    }
  }

  TEST_CASE("classifyIsolated") {
    auto v = classifyIsolated(4);
    CHECK(v.bound.maxDegree == 1);
    CHECK(v.hyperplane);
    CHECK(classifyIsolated(5).hyperplane);
    CHECK(classifyIsolated(10).hyperplane);
    v = classifyIsolated(4, false);
    CHECK(v.bound.maxDegree == 2);
    CHECK_FALSE(v.hyperplane);
    CHECK_THROWS_AS(classifyIsolated(2), Error);
  }
}
