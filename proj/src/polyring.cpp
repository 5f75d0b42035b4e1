#include "tid/polyring.hpp"

#include <cctype>
#include <numeric>
#include <utility>

#include "tid/error.hpp"

namespace tid {

unsigned long totalDegree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0UL);
}

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = totalDegree(a);
  const auto db = totalDegree(b);
  if (da != db) return da > db;
  return b < a;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::size_t variableCount) : variableCount_(variableCount) {
  if (variableCount == 0) throw Error("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(std::size_t variableCount, const Rational& c) {
  Polynomial p(variableCount);
  p.addTerm(Exponent(variableCount, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variableCount, std::size_t index) {
  if (index >= variableCount)
    throw Error("variable x" + std::to_string(index) + " outside a context of " +
                std::to_string(variableCount) + " variables");
  Exponent e(variableCount, 0);
  e[index] = 1;
  Polynomial p(variableCount);
  p.addTerm(e, 1);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  p.addTerm(e, c);
  return p;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponent& Polynomial::leadingExponent() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Polynomial::leadingCoefficient() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Polynomial Polynomial::withVariableCount(std::size_t variableCount) const {
  if (variableCount < variableCount_)
    throw Error("cannot shrink the variable context of a polynomial");
  Polynomial out(variableCount);
  for (const auto& [e, c] : terms_) {
    Exponent wide(e);
    wide.resize(variableCount, 0);
    out.terms_.emplace(std::move(wide), c);
  }
  return out;
}

void Polynomial::addTerm(const Exponent& e, const Rational& c) {
  if (e.size() != variableCount_) throw Error("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::requireSameContext(const Polynomial& other, const char* op) const {
  if (other.variableCount_ != variableCount_)
    throw Error(std::string(op) + ": variable count mismatch (" + std::to_string(variableCount_) +
                " vs " + std::to_string(other.variableCount_) + ")");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  requireSameContext(other, "add");
  for (const auto& [e, c] : other.terms_) addTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  requireSameContext(other, "sub");
  for (const auto& [e, c] : other.terms_) addTerm(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.requireSameContext(b, "mul");
  Polynomial out(a.variableCount_);
  Exponent e(a.variableCount_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.addTerm(e, ca * cb);
    }
  }
  return out;
}

Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial pow(const Polynomial& a, unsigned long e) {
  Polynomial result = Polynomial::constant(a.variableCount(), 1);
  Polynomial base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial compose(const Polynomial& h, std::span<const Polynomial> args) {
  if (args.size() != h.variableCount())
    throw Error("compose: expected " + std::to_string(h.variableCount()) + " arguments, got " +
                std::to_string(args.size()));
  const std::size_t target = args.front().variableCount();
  for (const auto& a : args)
    if (a.variableCount() != target) throw Error("compose: arguments use different variable counts");

  // powers[i][j] = args[i]^j, filled lazily.
  std::vector<std::vector<Polynomial>> powers(args.size());
  auto powerOf = [&](std::size_t i, std::uint32_t j) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= j) cache.push_back(cache.back() * args[i]);
    return cache[j];
  };

  Polynomial out(target);
  for (const auto& [e, c] : h.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term = term * powerOf(i, e[i]);
    out += term;
  }
  return out;
}

Rational evaluateAt(const Polynomial& a, std::span<const Rational> point) {
  if (point.size() != a.variableCount())
    throw Error("evaluateAt: expected a point with " + std::to_string(a.variableCount()) +
                " coordinates, got " + std::to_string(point.size()));
  Rational sum = 0;
  for (const auto& [e, c] : a.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(f.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      term *= f;
    }
    sum += term;
  }
  return sum;
}

Homogeneity homogeneousDegree(const Polynomial& a) {
  if (a.isZero()) return Homogeneity::zero();
  const auto d = totalDegree(a.leadingExponent());
  for (const auto& [e, c] : a.terms())
    if (totalDegree(e) != d) return Homogeneity::notHomogeneous();
  return Homogeneity::degree(d);
}

// ---------------------------------------------------------------------------
// Text grammar
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer ('/' integer)? | 'x' integer | '(' expr ')'

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t variableCount)
      : text_(text), variableCount_(variableCount) {}

  Polynomial run() {
    skipSpace();
    if (pos_ == text_.size()) fail("empty input");
    Polynomial p = expr();
    skipSpace();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool atDigit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    skipSpace();
    if (!atDigit()) fail("expected an integer");
    const auto start = pos_;
    while (atDigit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      const auto at = pos_;
      const std::string e = digits();
      if (e.size() > 9) {
        pos_ = at;
        fail("exponent too large");
      }
      base = pow(base, std::stoul(e));
      skipSpace();
      if (pos_ < text_.size() && text_[pos_] == '^') fail("chained '^' is ambiguous; use parentheses");
    }
    return base;
  }

  Polynomial atom() {
    skipSpace();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      const auto at = pos_;
      ++pos_;
      if (!atDigit()) fail("expected a variable index after 'x'");
      const auto start = pos_;
      while (atDigit()) ++pos_;
      const auto indexText = text_.substr(start, pos_ - start);
      if (indexText.size() > 9) {
        pos_ = at;
        fail("variable index too large");
      }
      const auto index = std::stoul(std::string(indexText));
      if (index >= variableCount_) {
        pos_ = at;
        fail("variable x" + std::to_string(index) + " out of range for " +
             std::to_string(variableCount_) + " variables");
      }
      return Polynomial::variable(variableCount_, index);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value{BigInt{digits()}};
      if (accept('/')) {
        const auto at = pos_;
        BigInt den{digits()};
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        value /= den;
      }
      return Polynomial::constant(variableCount_, value);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t variableCount_;
  std::size_t pos_ = 0;
};

std::string monomialText(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

// Shared by the rational and modular formatters: sign handling and the
// omission of unit coefficients.
template <class Terms, class Magnitude, class IsNegative>
std::string formatTerms(const Terms& terms, Magnitude magnitude, IsNegative isNegative) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = isNegative(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string mag = magnitude(c);
    const std::string mono = monomialText(e);
    if (mono.empty())
      out += mag;
    else if (mag == "1")
      out += mono;
    else
      out += mag + "*" + mono;
  }
  return out;
}

}  // namespace

Polynomial parse(std::string_view text, std::size_t variableCount) {
  if (variableCount == 0) throw Error("polynomial needs at least one variable");
  return Parser(text, variableCount).run();
}

std::string format(const Polynomial& p) {
  return formatTerms(
      p.terms(), [](const Rational& c) { return Rational(abs(c)).get_str(); },
      [](const Rational& c) { return sgn(c) < 0; });
}

// ---------------------------------------------------------------------------
// F_p

PolynomialFp::PolynomialFp(std::size_t variableCount, std::uint64_t p)
    : variableCount_(variableCount), p_(p) {
  if (p > kMaxModulus || !isPrime(p)) throw Error(std::to_string(p) + " is not a supported prime");
}

void PolynomialFp::addTerm(const Exponent& e, std::uint64_t c) {
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = (it->second + c) % p_;
  if (it->second == 0) terms_.erase(it);
}

std::uint64_t PolynomialFp::evaluate(std::span<const std::uint64_t> point) const {
  if (point.size() != variableCount_) throw Error("evaluate: point has the wrong number of coordinates");
  std::uint64_t sum = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t term = c;
    for (std::size_t i = 0; i < e.size() && term != 0; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term = term * point[i] % p_;
    sum = (sum + term) % p_;
  }
  return sum;
}

PolynomialFp operator*(const PolynomialFp& a, const PolynomialFp& b) {
  if (a.p_ != b.p_ || a.variableCount_ != b.variableCount_)
    throw Error("mul: operands live in different rings");
  PolynomialFp out(a.variableCount_, a.p_);
  Exponent e(a.variableCount_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.addTerm(e, ca * cb % a.p_);
    }
  return out;
}

std::string format(const PolynomialFp& p) {
  return formatTerms(
      p.terms(), [](std::uint64_t c) { return std::to_string(c); }, [](std::uint64_t) { return false; });
}

std::uint64_t reduceRational(const Rational& r, std::uint64_t p) {
  if (p > kMaxModulus || !isPrime(p)) throw Error(std::to_string(p) + " is not a supported prime");
  const BigInt modulus(static_cast<unsigned long>(p));
  BigInt den = r.get_den() % modulus;
  if (den == 0)
    throw Error("bad prime " + std::to_string(p) + ": divides the denominator of " + r.get_str());
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  BigInt value = r.get_num() * inv % modulus;
  if (value < 0) value += modulus;
  return value.get_ui();
}

PolynomialFp reduceModP(const Polynomial& a, std::uint64_t p) {
  PolynomialFp out(a.variableCount(), p);
  for (const auto& [e, c] : a.terms()) out.addTerm(e, reduceRational(c, p));
  return out;
}

}  // namespace tid
