#include <random>

#include "doctest.h"
#include "tropjac/arith.hpp"
#include "tropjac/error.hpp"

using namespace tropjac;

namespace {
Scalar S(const char* text) { return parse_scalar(text); }
Symbol sym(const char* n) { return Symbol(n); }
}  // namespace

TEST_CASE("rationals parse canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS_AS(parse_rational("1/"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("field operations") {
  Scalar a = Scalar::symbol("a"), b = Scalar::symbol("b"), c = Scalar::symbol("c");
  CHECK((a / b) * (b / a) == Scalar(1));
  Scalar k = a * b + a * c + b * c;
  CHECK(b * c / k + (a * b + a * c) / k == Scalar(1));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a / Scalar(0), Error);
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK((a * a - b * b) / (a - b) == a + b);
}

TEST_CASE("evaluation") {
  std::map<Symbol, Rational> ones{{sym("a"), 1}, {sym("b"), 1}, {sym("c"), 1}};
  CHECK(evaluate(S("b*c/(a*b+a*c+b*c)"), ones) == Rational(1, 3));
  CHECK(evaluate(S("a*b*c/(a*b+a*c+b*c)"), ones) == Rational(1, 3));
  CHECK(evaluate(S("5/7"), {}) == Rational(5, 7));
  CHECK_THROWS_AS(evaluate(S("a+b"), {{sym("a"), 1}}), Error);
  try {
    evaluate(S("1/(a-b)"), {{sym("a"), 2}, {sym("b"), 2}});
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtPoint);
  }
  Scalar partial = substitute(S("a*b/(a+c)"), {{sym("a"), 2}});
  CHECK(partial == S("2*b/(2+c)"));
}

TEST_CASE("constancy and homogeneity") {
  CHECK(S("2*a*b/(a*b)").constant_value() == Rational(2));
  CHECK_FALSE(S("b*c/(a*b+a*c+b*c)").constant_value().has_value());
  CHECK(Scalar(Poly(), Poly(Symbol("a")) + Poly(Symbol("b"))).constant_value() == Rational(0));
  CHECK(S("b*c/(a*b+a*c+b*c)").homogeneous_degree() == 0);
  CHECK(S("a*b*c/(a*b+a*c+b*c)").homogeneous_degree() == 1);
  CHECK_FALSE(S("(a+1)/a").homogeneous_degree().has_value());
}

TEST_CASE("canonical text round-trips") {
  for (const char* t : {"b*c/(a*b+a*c+b*c)", "1/3*a", "c/(a*b)", "-1/2", "a^2*b-3*c", "a*b*c/(a*b+a*c+b*c)",
                        "0", "(a+b)/c"}) {
    CAPTURE(t);
    CHECK(to_string(S(t)) == t);
    CHECK(parse_scalar(to_string(S(t))) == S(t));
  }
  CHECK(to_string(S("a/2")) == "1/2*a");
  CHECK(to_string(S("(2*a)/(4*b)")) == "a/(2*b)");
  CHECK_THROWS_AS(parse_scalar("a+"), Error);
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
}

TEST_CASE("arithmetic commutes with evaluation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), val(1, 9);
  auto random_poly = [&] {
    Poly p;
    for (const char* n : {"a", "b", "c"}) p += Poly(Symbol(n)).scaled(Rational(coef(rng)));
    return p + Poly(Rational(coef(rng)));
  };
  for (int trial = 0; trial < 100; ++trial) {
    Poly n1 = random_poly(), d1 = random_poly(), n2 = random_poly(), d2 = random_poly();
    if (d1.is_zero() || d2.is_zero()) continue;
    Scalar x(n1, d1), y(n2, d2);
    std::map<Symbol, Rational> at{{sym("a"), frac(val(rng), 2)}, {sym("b"), val(rng)}, {sym("c"), frac(val(rng), 3)}};
    Rational xd, yd;
    try {
      xd = evaluate(x, at);
      yd = evaluate(y, at);
    } catch (const Error&) {
      continue;
    }
    CHECK(evaluate(x + y, at) == xd + yd);
    CHECK(evaluate(x - y, at) == xd - yd);
    CHECK(evaluate(x * y, at) == xd * yd);
    if (yd != 0 && !y.is_zero()) CHECK(evaluate(x / y, at) == xd / yd);
  }
}
