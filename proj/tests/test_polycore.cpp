#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filicenter/json_io.hpp"
#include "filicenter/polynomial.hpp"
#include "support.hpp"

using namespace filicenter;
using testing::P;

TEST_CASE("add") {
  CHECK((P("y0") + P("-y0")).is_zero());
  CHECK(P("2*y0*y2") + P("-y1^2") == P("2*y0*y2 - y1^2"));
  CHECK(P("y1") + P("y1") == P("2*y1"));
  CHECK(format(P("y1") + P("y1")) == "2*y1");
}

TEST_CASE("mul") {
  CHECK(P("y0") * P("y0") == P("y0^2"));
  CHECK(P("y0 - y1") * P("y0 + y1") == P("y0^2 - y1^2"));
  CHECK(P("2*y0*y2 - y1^2") * P("y0^-1") == P("2*y2 - y1^2*y0^-1"));
}

TEST_CASE("field mismatch") {
  FpPoly a = parse_polynomial_mod_p("y0", 5);
  FpPoly b = parse_polynomial_mod_p("y0", 7);
  CHECK_THROWS(a + b);
  CHECK_THROWS(a * b);
}

TEST_CASE("partial derivative") {
  CHECK(P("2*y0*y2 - y1^2").partial_derivative(1) == P("-2*y1"));
  CHECK(P("y2^3").partial_derivative(2) == P("3*y2^2"));
  CHECK(P("y0*y3").partial_derivative(2).is_zero());
  CHECK(P("y0^-2*y1").partial_derivative(0) == P("-2*y0^-3*y1"));
  CHECK_THROWS_AS(P("y0").partial_derivative(kMaxVariables), std::out_of_range);
}

TEST_CASE("leading term") {
  QPoly z2 = P("2*y0*y2 - y1^2");
  CHECK(z2.leading_monomial() == P("y0*y2").leading_monomial());
  CHECK(z2.leading_coefficient() == 2);
  QPoly z3 = P("3*y0^2*y3 - 3*y0*y1*y2 + y1^3");
  CHECK(z3.leading_monomial() == P("y0^2*y3").leading_monomial());
  CHECK(z3.leading_coefficient() == 3);
  CHECK_THROWS(QPoly().leading_term());
}

TEST_CASE("parse and format") {
  CHECK(format(P("2*y0*y2 - y1^2")) == "2*y0*y2 - y1^2");
  QPoly l = P("y0^-2");
  CHECK(l.leading_monomial()[0] == -2);
  CHECK(l.has_laurent_terms());
  CHECK(P("1/3*y1^3").leading_coefficient() == Rational(1) / 3);
  CHECK(P("2/4*y1").leading_coefficient() == Rational(1) / 2);
  CHECK(P("0").is_zero());
  CHECK(P("y1 - y1").is_zero());
  CHECK(P("  y0 *  y1  ") == P("y0*y1"));

  SUBCASE("errors carry positions") {
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("1/0*y1"), ParseError);
    CHECK_THROWS_AS(P("y1^40000"), ParseError);
    CHECK_THROWS_AS(P("y1^-1"), ParseError);
    CHECK_THROWS_AS(P("y99"), ParseError);
    try {
      P("y0 + * y1");
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
  }
}

TEST_CASE("parse/format round trip on a generated corpus") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    QPoly f = testing::random_poly(rng, 8, 1 + i % 7, 3);
    if (i % 3 == 0) f *= Rational(i + 1) / 7;
    if (i % 5 == 0) f *= P("y0^-3");
    CHECK(P(format(f)) == f);
  }
}

TEST_CASE("ring laws") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    QPoly a = testing::random_poly(rng, 5, 4, 2), b = testing::random_poly(rng, 5, 4, 2),
          c = testing::random_poly(rng, 5, 3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) {
      CHECK((a * b).leading_monomial() == a.leading_monomial() * b.leading_monomial());
      CHECK((a * b).leading_coefficient() == a.leading_coefficient() * b.leading_coefficient());
    }
  }
}

TEST_CASE("reduce mod p is a ring homomorphism") {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {3u, 5u, 7u, 101u}) {
    for (int i = 0; i < 20; ++i) {
      QPoly a = testing::random_poly(rng, 4, 4, 3), b = testing::random_poly(rng, 4, 4, 3);
      CHECK(reduce_mod_p(a * b, p) == reduce_mod_p(a, p) * reduce_mod_p(b, p));
      CHECK(reduce_mod_p(a + b, p) == reduce_mod_p(a, p) + reduce_mod_p(b, p));
    }
  }
  CHECK(format(reduce_mod_p(P("3*y0^2*y3 - 3*y0*y1*y2 + y1^3"), 3)) == "y1^3");
  CHECK(format(reduce_mod_p(P("2*y0*y2 - y1^2"), 5)) == "2*y0*y2 + 4*y1^2");
  CHECK_THROWS(reduce_mod_p(P("y0*y2 - 1/2*y1^2"), 2));
  CHECK_THROWS(reduce_mod_p(P("1/3*y1"), 3));
}

TEST_CASE("prime field scalars") {
  ModP a(3, 7), b(5, 7);
  CHECK((a * b).value() == 1);
  CHECK((a + b).value() == 1);
  CHECK((a / b).value() == (a * ModP(3, 7)).value());
  CHECK(ModP::from_rational(Rational(1) / 2, 7).value() == 4);
  CHECK_THROWS(ModP(1, 4));
  CHECK_THROWS(ModP::from_rational(Rational(1) / 7, 7));
  const std::uint64_t big = 2305843009213693951ULL;  // 2^61 - 1
  ModP x(-1, big);
  CHECK((x * x).value() == 1);
}

TEST_CASE("json round trip") {
  QPoly f = P("2*y0*y4 - 2*y1*y3 + y2^2 + 1/3*y0^-2*y1");
  nlohmann::json j = to_json(f);
  CHECK(j["field"] == "Q");
  CHECK(std::get<QPoly>(polynomial_from_json(j)) == f);
  FpPoly g = parse_polynomial_mod_p("2*y0*y2 + 4*y1^2", 5);
  nlohmann::json jg = to_json(g);
  CHECK(jg["p"] == 5);
  CHECK(std::get<FpPoly>(polynomial_from_json(jg)) == g);
  nlohmann::json bad = jg;
  bad["p"] = 4;
  CHECK_THROWS(polynomial_from_json(bad));
}
