#include "tropjac/arith.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_set>

#include "tropjac/error.hpp"

namespace tropjac {

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::ParseError,
                 "not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  auto slash = text.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw fail();
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  BigInt n(num_s, 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }
bool is_integer(const Rational& q) { return q.get_den() == 1; }

namespace {

Rational rational_pow(const Rational& base, unsigned exponent) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Symbol

Symbol::Symbol(std::string_view name) {
  static std::mutex mutex;
  static std::unordered_set<std::string> table;
  std::lock_guard lock(mutex);
  name_ = &*table.emplace(name).first;
}

bool is_valid_symbol_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Symbol s, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(s, exponent);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [s, e] : factors_) d += e;
  return d;
}

unsigned Monomial::exponent(Symbol s) const {
  for (const auto& [t, e] : factors_)
    if (t == s) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [s, e] : factors_)
    if (other.exponent(s) < e) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  for (const auto& [s, e] : other.factors_) {
    unsigned mine = exponent(s);
    if (e > mine) out.factors_.emplace_back(s, e - mine);
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (const auto& [s, e] : a.factors_) {
    unsigned m = std::min(e, b.exponent(s));
    if (m > 0) out.factors_.emplace_back(s, m);
  }
  return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t k = 0; k < fa.size() && k < fb.size(); ++k) {
    if (fa[k].first != fb[k].first) {
      // the alphabetically earlier symbol is present in one and absent in the
      // other at this position
      return fa[k].first < fb[k].first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    }
    if (fa[k].second != fb[k].second) return fa[k].second <=> fb[k].second;
  }
  return fa.size() <=> fb.size();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Poly::Poly(Symbol s) { terms_.emplace(Monomial(s), Rational(1)); }

Poly::Poly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::Internal, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::Internal, "leading term of zero polynomial");
  return terms_.begin()->second;
}

unsigned Poly::degree() const {
  // graded order puts a maximal-degree term first
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::vector<Symbol> Poly::symbols() const {
  std::vector<Symbol> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, e] : m.factors())
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& other) const {
  Poly out = *this;
  out += other;
  return out;
}

Poly Poly::operator-(const Poly& other) const {
  Poly out = *this;
  out -= other;
  return out;
}

Poly Poly::operator*(const Poly& other) const {
  Poly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  Poly out = *this;
  for (auto& [m, k] : out.terms_) k *= c;
  return out;
}

Poly Poly::scaled(const Monomial& mono, const Rational& c) const {
  Poly out;
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * mono, k * c);
  return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (auto c = divisor.constant_value()) return scaled(1 / *c);
  Poly rem = *this;
  Poly quot;
  const Monomial& lm = divisor.leading_monomial();
  const Rational& lc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    // exact division: every leading term must be divisible
    if (!lm.divides(rm)) return std::nullopt;
    Monomial qm = lm.quotient_of(rm);
    Rational qc = rem.leading_coefficient() / lc;
    rem -= divisor.scaled(qm, qc);
    quot.add_term(qm, qc);
  }
  return quot;
}

Poly Poly::substitute(const std::map<Symbol, Rational>& assignment) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [s, e] : m.factors()) {
      auto it = assignment.find(s);
      if (it == assignment.end())
        rest = rest * Monomial(s, e);
      else
        coeff *= rational_pow(it->second, e);
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(1);
  BigInt g = 0;
  BigInt l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(BigInt(abs(g)), l);
  out.canonicalize();
  return out;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    g = Monomial::gcd(g, m);
    if (g.is_one()) break;
  }
  return g;
}

namespace {

std::string term_body(const Monomial& m, const Rational& c) {
  std::string out;
  if (m.is_one()) return to_string(c);
  if (c == -1) {
    out = "-";
  } else if (c != 1) {
    out = to_string(c) + "*";
  }
  bool first = true;
  for (const auto& [s, e] : m.factors()) {
    if (!first) out += '*';
    first = false;
    out += s.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      out += term_body(m, c);
      first = false;
    } else if (c < 0) {
      out += "-" + term_body(m, -c);
    } else {
      out += "+" + term_body(m, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Rational& c) : num_(c), den_(1) {}

Scalar::Scalar(const Poly& p) : num_(p), den_(1) { normalize(); }

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (auto c = den_.constant_value()) {
    if (*c != 1) {
      num_ = num_.scaled(1 / *c);
      den_ = Poly(1);
    }
    return;
  }
  // constant multiple of the denominator
  if (num_.size() == den_.size() && num_.leading_monomial() == den_.leading_monomial()) {
    Rational lambda = num_.leading_coefficient() / den_.leading_coefficient();
    if (num_ == den_.scaled(lambda)) {
      num_ = Poly(lambda);
      den_ = Poly(1);
      return;
    }
  }
  Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
  if (!g.is_one()) {
    Poly n, d;
    for (const auto& [m, c] : num_.terms()) n += Poly(g.quotient_of(m), c);
    for (const auto& [m, c] : den_.terms()) d += Poly(g.quotient_of(m), c);
    num_ = std::move(n);
    den_ = std::move(d);
  }
  // strip the joint rational content and fix the sign of the denominator
  Rational cn = num_.content();
  Rational cd = den_.content();
  BigInt g_num, l_den;
  mpz_gcd(g_num.get_mpz_t(), cn.get_num_mpz_t(), cd.get_num_mpz_t());
  mpz_lcm(l_den.get_mpz_t(), cn.get_den_mpz_t(), cd.get_den_mpz_t());
  Rational joint(g_num, l_den);
  joint.canonicalize();
  if (den_.leading_coefficient() < 0) joint = -joint;
  if (joint != 1) {
    Rational inv = 1 / joint;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::optional<Rational> Scalar::constant_value() const {
  if (num_.is_zero()) return Rational(0);
  if (num_.size() != den_.size() || !(num_.leading_monomial() == den_.leading_monomial()))
    return std::nullopt;
  Rational lambda = num_.leading_coefficient() / den_.leading_coefficient();
  if (num_ == den_.scaled(lambda)) return lambda;
  return std::nullopt;
}

std::optional<int> Scalar::homogeneous_degree() const {
  if (num_.is_zero()) return 0;
  if (!num_.is_homogeneous() || !den_.is_homogeneous()) return std::nullopt;
  return static_cast<int>(num_.degree()) - static_cast<int>(den_.degree());
}

std::vector<Symbol> Scalar::symbols() const {
  auto a = num_.symbols();
  for (Symbol s : den_.symbols())
    if (std::find(a.begin(), a.end(), s) == a.end()) a.push_back(s);
  std::sort(a.begin(), a.end());
  return a;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Raw{}); }

Scalar Scalar::operator+(const Scalar& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  if (num_ == o.den_) return Scalar(o.num_, den_);
  if (o.num_ == den_) return Scalar(num_, o.den_);
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  return *this * Scalar(o.den_, o.num_);
}

std::optional<Scalar> Scalar::over(const Poly& den) const {
  auto p = (num_ * den).divide_exact(den_);
  if (!p) return std::nullopt;
  return Scalar(std::move(*p), den);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Scalar substitute(const Scalar& s, const std::map<Symbol, Rational>& assignment) {
  Poly den = s.den().substitute(assignment);
  if (den.is_zero()) throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at the assignment");
  return Scalar(s.num().substitute(assignment), den);
}

Rational evaluate(const Scalar& s, const std::map<Symbol, Rational>& assignment) {
  for (Symbol sym : s.symbols())
    if (!assignment.contains(sym))
      throw Error(ErrorCode::UnboundSymbol, "no value for symbol '" + sym.name() + "'");
  Scalar v = substitute(s, assignment);
  return *v.constant_value();
}

std::string to_string(const Scalar& s) {
  if (auto c = s.den().constant_value(); c && *c == 1) return to_string(s.num());
  std::string num = to_string(s.num());
  if (s.num().size() > 1) num = "(" + num + ")";
  std::string den = to_string(s.den());
  bool bare = false;
  if (s.den().size() == 1) {
    const auto& [m, c] = *s.den().terms().begin();
    bare = (m.is_one() && is_integer(c)) || (c == 1 && m.factors().size() == 1);
  }
  if (!bare) den = "(" + den + ")";
  return num + "/" + den;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "cannot parse expression '" + std::string(text_) +
                                           "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (accept('*'))
        v *= unary();
      else if (accept('/'))
        v /= unary();
      else
        return v;
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      Scalar out(1);
      for (unsigned long k = 0; k < e; ++k) out *= base;
      return out;
    }
    return base;
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(BigInt(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Scalar(Symbol(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace tropjac
