#pragma once

// Exact arithmetic over Q and over the rational-function field Q(l1, ..., lm)
// generated by edge-length symbols.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tropjac {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical Rational. Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
bool is_integer(const Rational& q);
/// p/q in lowest terms.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// An interned indeterminate name. Copies are cheap; ordering is alphabetical
/// by name so printed output does not depend on interning order.
class Symbol {
 public:
  explicit Symbol(std::string_view name);

  const std::string& name() const { return *name_; }

  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return a.name_->compare(*b.name_) <=> 0;
  }

 private:
  const std::string* name_;
};

bool is_valid_symbol_name(std::string_view name);

/// Product of symbol powers, stored sorted by symbol with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;
  explicit Monomial(Symbol s, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned exponent(Symbol s) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  /// Componentwise minimum of exponents.
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded-lexicographic comparison; symbols earlier in the alphabet dominate.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) == std::strong_ordering::greater;
  }
};

/// Sparse multivariate polynomial with Rational coefficients. Terms are kept
/// in descending graded-lex order and zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(Symbol s);
  Poly(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::optional<Rational> constant_value() const;
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  /// Highest total degree among terms; 0 for the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const;
  std::vector<Symbol> symbols() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly scaled(const Rational& c) const;
  Poly scaled(const Monomial& m, const Rational& c) const;

  /// Quotient when `divisor` divides *this exactly, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  /// Substitutes the bound symbols; unbound symbols stay symbolic.
  Poly substitute(const std::map<Symbol, Rational>& assignment) const;

  /// gcd of all coefficients made integral: returns c > 0 with *this / c
  /// having coprime integer coefficients. Zero polynomial gives 1.
  Rational content() const;
  Monomial monomial_content() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

std::string to_string(const Poly& p);

/// Element of Q(l1, ..., lm): a pair of polynomials, not reduced to lowest
/// terms. Equality is by cross-multiplication. After every operation the
/// integer content and common monomial factor of (num, den) are stripped,
/// the denominator has a positive leading coefficient, and a value that is a
/// constant multiple of its denominator collapses to that constant.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long c) : Scalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c);               // NOLINT(google-explicit-constructor)
  Scalar(const Poly& p);                   // NOLINT(google-explicit-constructor)
  explicit Scalar(Symbol s) : Scalar(Poly(s)) {}
  /// Throws DivisionByZero when den is the zero polynomial.
  Scalar(Poly num, Poly den);

  static Scalar symbol(std::string_view name) { return Scalar(Symbol(name)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// The constant value iff num = lambda * den as polynomials.
  std::optional<Rational> constant_value() const;
  bool is_constant() const { return constant_value().has_value(); }
  /// deg(num) - deg(den) when both are homogeneous. Zero counts as degree 0.
  std::optional<int> homogeneous_degree() const;
  std::vector<Symbol> symbols() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws DivisionByZero.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Rewrites the value over `den` when value * den is a polynomial.
  std::optional<Scalar> over(const Poly& den) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Raw {};
  Scalar(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

/// Full evaluation. Throws UnboundSymbol if a symbol is missing and
/// PoleAtPoint if the denominator vanishes.
Rational evaluate(const Scalar& s, const std::map<Symbol, Rational>& assignment);
/// Partial evaluation; symbols absent from the assignment stay free.
/// Throws PoleAtPoint if the denominator becomes identically zero.
Scalar substitute(const Scalar& s, const std::map<Symbol, Rational>& assignment);

/// Canonical text: monomials "c*a^2*b" in graded-lex order, numerator and
/// denominator separated by '/', parenthesized when needed.
std::string to_string(const Scalar& s);
/// Accepts the canonical grammar plus general + - * / ^ and parentheses.
Scalar parse_scalar(std::string_view text);

}  // namespace tropjac
