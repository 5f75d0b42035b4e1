#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tid/numeric.hpp"

namespace tid {

// Per-variable exponents of a monomial; its length is the variable count of
// the owning polynomial.
using Exponent = std::vector<std::uint32_t>;

unsigned long totalDegree(const Exponent& e);

// Graded lexicographic order with x0 > x1 > ... ; "greater" so that ordered
// containers iterate from the leading term down.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored, so structural equality is polynomial
// equality.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexGreater>;

  explicit Polynomial(std::size_t variableCount);

  static Polynomial constant(std::size_t variableCount, const Rational& c);
  static Polynomial variable(std::size_t variableCount, std::size_t index);
  static Polynomial monomial(const Exponent& e, const Rational& c);

  std::size_t variableCount() const { return variableCount_; }
  const TermMap& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;
  // Leading term in graded lex order; the polynomial must be nonzero.
  const Exponent& leadingExponent() const;
  const Rational& leadingCoefficient() const;

  // Same terms read in a larger variable context (new variables absent).
  Polynomial withVariableCount(std::size_t variableCount) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.variableCount_ == b.variableCount_ && a.terms_ == b.terms_;
  }

  // Adds c * x^e, dropping the term if the sum cancels.
  void addTerm(const Exponent& e, const Rational& c);

 private:
  void requireSameContext(const Polynomial& other, const char* op) const;

  std::size_t variableCount_;
  TermMap terms_;
};

Polynomial parse(std::string_view text, std::size_t variableCount);
std::string format(const Polynomial& p);

Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& a, unsigned long e);

// Substitutes args[i] for x_i and expands.
Polynomial compose(const Polynomial& h, std::span<const Polynomial> args);

Rational evaluateAt(const Polynomial& a, std::span<const Rational> point);

class Homogeneity {
 public:
  enum class Kind { Degree, NotHomogeneous, Zero };

  static Homogeneity degree(unsigned long d) { return Homogeneity(Kind::Degree, d); }
  static Homogeneity notHomogeneous() { return Homogeneity(Kind::NotHomogeneous, 0); }
  static Homogeneity zero() { return Homogeneity(Kind::Zero, 0); }

  Kind kind() const { return kind_; }
  bool isDegree() const { return kind_ == Kind::Degree; }
  // Only meaningful when kind() == Kind::Degree.
  unsigned long value() const { return degree_; }

  friend bool operator==(const Homogeneity&, const Homogeneity&) = default;

 private:
  Homogeneity(Kind kind, unsigned long d) : kind_(kind), degree_(d) {}

  Kind kind_;
  unsigned long degree_;
};

Homogeneity homogeneousDegree(const Polynomial& a);

// Polynomial over the prime field F_p. Coefficients are kept in [1, p).
class PolynomialFp {
 public:
  using TermMap = std::map<Exponent, std::uint64_t, GradedLexGreater>;

  PolynomialFp(std::size_t variableCount, std::uint64_t p);

  std::size_t variableCount() const { return variableCount_; }
  std::uint64_t prime() const { return p_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void addTerm(const Exponent& e, std::uint64_t c);

  std::uint64_t evaluate(std::span<const std::uint64_t> point) const;

  friend PolynomialFp operator*(const PolynomialFp& a, const PolynomialFp& b);
  friend bool operator==(const PolynomialFp&, const PolynomialFp&) = default;

 private:
  std::size_t variableCount_;
  std::uint64_t p_;
  TermMap terms_;
};

std::string format(const PolynomialFp& p);

// Largest prime accepted by the modular routines; products of two residues
// must fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = 4294967291ULL;

// Residue of a rational modulo p. Throws if p divides the denominator.
std::uint64_t reduceRational(const Rational& r, std::uint64_t p);

PolynomialFp reduceModP(const Polynomial& a, std::uint64_t p);

}  // namespace tid
