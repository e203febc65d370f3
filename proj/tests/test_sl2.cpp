#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filicenter/sl2.hpp"
#include "filicenter/transvect.hpp"
#include "support.hpp"

using namespace filicenter;
using testing::P;

TEST_CASE("down") {
  CHECK(down(P("y1")) == P("y0"));
  CHECK(down(P("2*y0*y2 - y1^2")).is_zero());
  CHECK(down(P("y2^2")) == P("2*y1*y2"));
  CHECK(down(P("y0^-3*y1")) == P("y0^-2"));
}

TEST_CASE("raise") {
  CHECK(raise(P("y0"), 3) == P("3*y1"));
  CHECK(raise(P("y3"), 3).is_zero());
  CHECK(raise(P("2*y0*y2 - y1^2"), 3) == P("6*y0*y3 - 2*y1*y2"));
  CHECK_THROWS(raise(P("y4"), 3));
}

TEST_CASE("weight") {
  CHECK(weight(P("y0"), 5) == 5);
  CHECK(weight(P("2*y0*y2 - y1^2"), 4) == 4);
  CHECK_THROWS_AS(weight(P("y0 + y1"), 3), std::domain_error);
  CHECK_THROWS_AS(weight(P("y0 + y1^2"), 3), std::domain_error);
}

TEST_CASE("is_invariant") {
  CHECK(is_invariant(P("2*y0*y4 - 2*y1*y3 + y2^2")));
  CHECK_FALSE(is_invariant(P("y1")));
  CHECK(is_invariant(w_gen(5)));
}

TEST_CASE("derivation laws") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    QPoly f = testing::random_poly(rng, 5, 4, 2), g = testing::random_poly(rng, 5, 4, 2);
    CHECK(down(f * g) == down(f) * g + f * down(g));
    CHECK(raise(f * g, 4) == raise(f, 4) * g + f * raise(g, 4));
  }
}

TEST_CASE("commutator on monomials") {
  for (int n = 1; n <= 6; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        for (int c = b; c <= n; ++c) {
          Monomial m = Monomial::variable(a) * Monomial::variable(b) * Monomial::variable(c);
          QPoly x = QPoly::monomial(m, 1);
          CHECK(down(raise(x, n)) - raise(down(x), n) == x * Rational(m.weight(n)));
          CHECK((down(x).is_zero() || down(x).degree() == 3));
          CHECK((raise(x, n).is_zero() || raise(x, n).degree() == 3));
        }
}

TEST_CASE("ladder identity") {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) {
      HomogeneousInvariant z = z_gen(i, n);
      CHECK(down(raise(z.poly, n)) == z.poly * Rational(z.weight));
    }
}

TEST_CASE("certification") {
  CHECK_NOTHROW(HomogeneousInvariant::certify(P("2*y0*y2 - y1^2"), 3));
  CHECK_THROWS(HomogeneousInvariant::certify(P("y1"), 3));
  CHECK_THROWS(HomogeneousInvariant::certify(P("y0*y4"), 3));
  WeightedHomogeneous w = WeightedHomogeneous::certify(P("y0*y1"), 3);
  CHECK(w.weight == 4);
  CHECK(w.degree == 2);
}
