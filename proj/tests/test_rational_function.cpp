#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "filicenter/rational_function.hpp"

using namespace filicenter;

namespace {

const UPoly t = UPoly::monomial(1);

UPoly random_upoly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<Rational> v;
  for (int i = 0; i <= deg; ++i) v.emplace_back(c(rng));
  return UPoly(v);
}

RationalFunction denominator(std::initializer_list<int> ks) {
  UPoly d(1);
  for (int k : ks) d = d * UPoly::one_minus_power(k);
  return RationalFunction(UPoly(1), d);
}

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> r;
  for (long x : v) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("upoly gcd") {
  UPoly a = (t - 1) * (t + 2) * (t + 2);
  UPoly b = (t + 2) * (t - 3);
  CHECK(gcd(a, b) == t + 2);
  CHECK(gcd(a, UPoly(0)) == a.monic());
  CHECK(gcd(t - 1, t + 1) == UPoly(1));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    UPoly x = random_upoly(rng, 3), y = random_upoly(rng, 2), g = random_upoly(rng, 2);
    if (x.is_zero() || y.is_zero() || g.is_zero()) continue;
    UPoly d = gcd(x * g, y * g);
    UPoly q, r;
    UPoly::divmod(x * g, d, q, r);
    CHECK(r.is_zero());
    UPoly::divmod(g, d, q, r);
    CHECK((r.is_zero() || gcd(x, y).degree() > 0));
  }
}

TEST_CASE("rational function normal form") {
  RationalFunction r(t * t - 1, Rational(2) * (t - 1));
  CHECK(r.denominator() == UPoly(1));
  CHECK(r.numerator() == (Rational(1) / 2) * (t + 1));
  CHECK(RationalFunction(UPoly(1) - t, UPoly(1) - t * t) == RationalFunction(UPoly(1), 1 + t));
  CHECK_THROWS(RationalFunction(UPoly(1), UPoly(0)));
}

TEST_CASE("series expansion") {
  CHECK(series_expand(denominator({1}), 4) == ints({1, 1, 1, 1}));
  CHECK(series_expand(denominator({1, 2}), 6) == ints({1, 1, 2, 2, 3, 3}));
  RationalFunction h4 = RationalFunction(1 + t * t * t) * denominator({1, 2, 2, 3});
  CHECK(series_expand(h4, 8) == ints({1, 1, 3, 5, 8, 12, 18, 24}));
  CHECK_THROWS(series_expand(RationalFunction(UPoly(1), t), 3));
}

TEST_CASE("series times denominator gives the numerator") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    UPoly num = random_upoly(rng, 4);
    UPoly den = UPoly(1) + t * random_upoly(rng, 3);
    RationalFunction r(num, den);
    const int K = 12;
    std::vector<Rational> s = series_expand(r, K);
    UPoly prod = UPoly(s) * r.denominator();
    for (int k = 0; k < K; ++k) CHECK(prod[k] == r.numerator()[k]);
  }
}

TEST_CASE("factored formatting") {
  CHECK(format_factored(denominator({1})) == "1 / (1 - t)");
  CHECK(format_factored(denominator({1, 2})) == "1 / ((1 - t)*(1 - t^2))");
  RationalFunction h4 = RationalFunction(1 + t * t * t) * denominator({1, 2, 2, 3});
  CHECK(format_factored(h4) == "(1 - t + t^2) / ((1 - t)^2*(1 - t^2)*(1 - t^3))");
}

TEST_CASE("xgcd over Q(t)[z]") {
  RationalFunction T(t);
  ZPolyOverRat a({-T, 1}), b({T, 1});
  XgcdResult r = xgcd_z(a, b);
  CHECK(r.g == ZPolyOverRat::constant(1));
  CHECK(r.s == ZPolyOverRat::constant(RationalFunction(UPoly(-1), Rational(2) * t)));
  CHECK(r.t == ZPolyOverRat::constant(RationalFunction(UPoly(1), Rational(2) * t)));

  XgcdResult one = xgcd_z(ZPolyOverRat({T, 3, 1}), ZPolyOverRat::constant(1));
  CHECK(one.g == ZPolyOverRat::constant(1));
  CHECK(one.s.is_zero());
  CHECK(one.t == ZPolyOverRat::constant(1));

  ZPolyOverRat c({-T, 0, 0, 1});
  XgcdResult cop = xgcd_z(c, ZPolyOverRat({-T, 1}));
  CHECK(cop.g == ZPolyOverRat::constant(1));

  ZPolyOverRat common({T + 1, 1});
  XgcdResult shared = xgcd_z(common * a, common * b);
  CHECK(shared.g == common.monic());
}

TEST_CASE("xgcd postcondition on random inputs") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> deg(1, 3);
  for (int i = 0; i < 25; ++i) {
    std::vector<RationalFunction> ca, cb;
    for (int k = 0, d = deg(rng); k <= d; ++k) ca.emplace_back(random_upoly(rng, 1));
    for (int k = 0, d = deg(rng); k <= d; ++k) cb.emplace_back(random_upoly(rng, 1));
    ZPolyOverRat a(ca), b(cb);
    if (a.is_zero() || b.is_zero()) continue;
    XgcdResult r = xgcd_z(a, b);
    CHECK(r.s * a + r.t * b == r.g);
    CHECK(a.mod(r.g).is_zero());
    CHECK(b.mod(r.g).is_zero());
  }
}
