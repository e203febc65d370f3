#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>

#include "filicenter/hilbert.hpp"
#include "filicenter/invariants.hpp"

using namespace filicenter;

namespace {

const UPoly t = UPoly::monomial(1);

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> r;
  for (long x : v) r.emplace_back(x);
  return r;
}

std::vector<Integer> head(const std::vector<Integer>& v, std::size_t k) { return {v.begin(), v.begin() + k}; }

UPoly prod_one_minus(std::initializer_list<int> ks) {
  UPoly d(1);
  for (int k : ks) d = d * UPoly::one_minus_power(k);
  return d;
}

// Partitions of `target` into at most `parts` parts of size at most `max_part`, by enumeration.
long brute_partitions(int target, int parts, int max_part) {
  std::function<long(int, int, int)> rec = [&](int left, int slots, int cap) -> long {
    if (left == 0) return 1;
    if (slots == 0) return 0;
    long c = 0;
    for (int part = std::min(cap, left); part >= 1; --part) c += rec(left - part, slots - 1, part);
    return c;
  };
  return rec(target, parts, max_part);
}

// Degree-d monomials in y_0..y_n of the given weight, by enumeration.
long brute_weight_count(int n, int d, int w) {
  std::function<long(int, int, int)> rec = [&](int var, int left, int weight) -> long {
    if (var == n) return weight + left * (n - 2 * n) == w ? 1 : 0;
    long c = 0;
    for (int a = 0; a <= left; ++a) c += rec(var + 1, left - a, weight + a * (n - 2 * var));
    return c;
  };
  return rec(0, d, 0);
}

}  // namespace

TEST_CASE("delta counters against enumeration") {
  CHECK(delta_partition(2, 5) == 3);
  CHECK(delta_partition(7, 0) == 1);
  CHECK(delta_partition(5, 8) == 73);
  CHECK(delta_weight(3, 4) == 5);
  CHECK(delta_weight(4, 2) == 3);
  for (int d = 0; d <= 10; ++d) CHECK(delta_weight(1, d) == 1);
  for (int n = 1; n <= 7; ++n)
    for (int d = 0; d <= 7; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      long brute_p = brute_partitions(d * n / 2, d, n);
      long brute_w = brute_weight_count(n, d, (n % 2 == 1 && d % 2 == 1) ? 1 : 0);
      CHECK(delta_partition(n, d) == brute_p);
      CHECK(delta_weight(n, d) == brute_w);
      CHECK(partition_count(d * n / 2, d, n) == brute_p);
    }
}

TEST_CASE("counter equivalence and symmetry") {
  for (int n = 0; n <= 12; ++n)
    for (int d = 0; d <= 12; ++d) {
      if (n >= 1) CHECK(delta_partition(n, d) == delta_weight(n, d));
      CHECK(delta_partition(n, d) == delta_partition(d, n));
    }
}

TEST_CASE("printed delta sequences") {
  CHECK(hilbert_series_terms(2, 5).delta == ints({1, 1, 2, 2, 3, 3}));
  CHECK(hilbert_series_terms(2, 9).delta == ints({1, 1, 2, 2, 3, 3, 4, 4, 5, 5}));
  CHECK(hilbert_series_terms(3, 15).delta == ints({1, 1, 2, 3, 5, 6, 8, 10, 13, 15, 18, 21, 25, 28, 32, 36}));
  CHECK(hilbert_series_terms(4, 15).delta == ints({1, 1, 3, 5, 8, 12, 18, 24, 33, 43, 55, 69, 86, 104, 126, 150}));
  CHECK(hilbert_series_terms(5, 20).delta == ints({1, 1, 3, 6, 12, 20, 32, 49, 73, 102, 141, 190, 252, 325, 414, 521,
                                                   649, 795, 967, 1165, 1394}));
}

TEST_CASE("component bookkeeping") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= 6; ++d) {
      Integer count = 0, dim = 0;
      for (const auto& [w, c] : symmetric_power_components(n, d)) {
        count += c;
        dim += c * (w + 1);
      }
      CHECK(count == delta_weight(n, d));
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + d), static_cast<unsigned long>(d));
      CHECK(dim == binom);
      Integer total = 0;
      for (const auto& [w, m] : weight_multiplicities(n, d)) total += m;
      CHECK(total == binom);
    }
}

TEST_CASE("kernel consistency") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 6; ++k) CHECK(delta_weight(n, k) == basis_kernel(n, k).dimension());
}

TEST_CASE("mu factorization") {
  MuFactorization m3 = mu_factorization(3);
  CHECK(m3.index_set == std::vector<int>{-3, -1, 1, 3});
  CHECK(m3.shift == 4);
  CHECK_FALSE(m3.has_zero_weight);
  MuFactorization m4 = mu_factorization(4);
  CHECK(m4.has_zero_weight);
  CHECK(m4.shift == 6);
  CHECK(m4.factors.size() == 4);
  for (int n = 1; n <= 8; ++n) {
    MuFactorization m = mu_factorization(n);
    for (std::size_t i = 0; i < m.factors.size(); ++i)
      for (std::size_t j = i + 1; j < m.factors.size(); ++j)
        CHECK(xgcd_z(m.factors[i], m.factors[j]).g == ZPolyOverRat::constant(1));
  }
}

TEST_CASE("rational Hilbert series against printed forms") {
  auto same = [](const RationalFunction& h, const UPoly& num, const UPoly& den) {
    return h.numerator() * den == num * h.denominator();
  };
  CHECK(same(hilbert_rational(1).series, UPoly(1), prod_one_minus({1})));
  CHECK(same(hilbert_rational(2).series, UPoly(1), prod_one_minus({1, 2})));
  CHECK(same(hilbert_rational(3).series, UPoly::one_minus_power(6), prod_one_minus({1, 2, 3, 4})));
  CHECK(same(hilbert_rational(4).series, 1 + t * t * t, prod_one_minus({1, 2, 2, 3})));

  std::vector<Rational> c5{1, -1, 2, 1, 2, 3, 1, 5, 1, 3, 2, 1, 2, -1, 1};
  std::reverse(c5.begin(), c5.end());
  UPoly num5 = -UPoly(c5);
  UPoly t2 = t * t;
  UPoly den5 = (t2 * t2 + 1) * (t2 + t + 1) * (t2 - t + 1) * (t2 + 1) * (t2 + 1) * (t + 1) * (t + 1) * (t + 1);
  for (int i = 0; i < 5; ++i) den5 = den5 * (t - 1);
  CHECK(same(hilbert_rational(5).series, num5, den5));
}

TEST_CASE("series self check and placement agreement") {
  for (int n = 1; n <= 10; ++n) {
    HilbertRational h = hilbert_rational(n);
    std::vector<Rational> s = series_expand(h.series, 30);
    std::vector<Integer> d = hilbert_series_terms(n, 29).delta;
    for (int k = 0; k < 30; ++k) CHECK(s[static_cast<std::size_t>(k)] == Rational(d[static_cast<std::size_t>(k)]));
    if (n % 2 == 0) CHECK(h.q1.is_zero());
    if (n <= 8) CHECK(hilbert_rational(n, 18, ShiftPlacement::kOutside).series == h.series);
  }
  CHECK_THROWS_AS(hilbert_rational(19), std::out_of_range);
  CHECK_THROWS(hilbert_rational(0));
}

TEST_CASE("denominator annihilates the delta sequence") {
  for (int n = 1; n <= 8; ++n) {
    RationalFunction h = hilbert_rational(n).series;
    const UPoly& den = h.denominator();
    const int K = 60;
    std::vector<Integer> d = hilbert_series_terms(n, K).delta;
    for (int k = h.numerator().degree() + 1; k <= K; ++k) {
      Rational acc = 0;
      for (int j = 0; j <= std::min(k, den.degree()); ++j) acc += den[j] * Rational(d[static_cast<std::size_t>(k - j)]);
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("recurrences") {
  CHECK(recurrence_verify(2, {1, 1, -1}, 40));
  CHECK(recurrence_verify(3, {2, -1, 0, 1, -2, 1}, 40));
  CHECK(recurrence_verify(4, {2, 0, -1, -1, 0, 2, -1}, 40));
  CHECK(recurrence_verify(5, {2, -1, 0, 1, -2, 2, -2, 2, -2, 0, 2, -2, 2, -2, 2, -1, 0, 1, -2, 1}, 60));
  CHECK_FALSE(recurrence_verify(2, {1}, 5));
  CHECK_FALSE(recurrence_verify(3, {1, 1, -1}, 40));
}

TEST_CASE("integral formula") {
  struct Case {
    int n;
    Rational t;
    double tol;
  };
  for (const Case& c : {Case{1, Rational(1) / 2, 1e-8}, Case{2, Rational(1) / 10, 1e-8}, Case{3, Rational(1) / 10, 1e-6},
                        Case{4, Rational(1) / 10, 1e-6}, Case{6, Rational(1) / 3, 1e-6}}) {
    IntegralCheck r = integral_check(c.n, c.t);
    CHECK(r.exact == doctest::Approx(hilbert_rational(c.n).series.eval(c.t).get_d()).epsilon(1e-15));
    CHECK(r.difference < c.tol);
    CHECK(r.panels <= (1L << 14));
  }
  CHECK(integral_check(1, Rational(1) / 2).exact == 2.0);
  CHECK(integral_check(2, Rational(1) / 10).exact == doctest::Approx(100.0 / 89.1));
}
