#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filicenter/charp.hpp"
#include "filicenter/sl2.hpp"
#include "filicenter/transvect.hpp"

using namespace filicenter;

namespace {

FpPoly F(const std::string& s, std::uint64_t p) { return parse_polynomial_mod_p(s, p); }
UPolynomial U(const std::string& s, std::uint64_t p) { return parse_polynomial_mod_p(s, p, u_names()); }

const std::uint64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23};

}  // namespace

TEST_CASE("centrality reports") {
  CentralReport r45 = central_check_modp(4, 5);
  CHECK(r45.all_central());
  CHECK(r45.all_leading_ok());
  CentralReport r43 = central_check_modp(4, 3);
  CHECK(r43.all_central());
  CHECK(r43.leading_ok == std::vector<bool>{true, true, false, true});
  CentralReport r67 = central_check_modp(6, 7);
  CHECK(r67.all_central());
  CHECK(r67.all_leading_ok());
  CHECK_THROWS(central_check_modp(3, 2));
  CHECK_THROWS(central_check_modp(3, 9));
}

TEST_CASE("p-center membership") {
  FpPoly a2 = frobenius_power(z_mod_p(2, 3, 5));
  CHECK(p_power_in_pcenter(a2, 5, 3).has_value());
  CHECK(p_power_in_pcenter(F("y0^3", 5), 5, 3).has_value());
  CHECK_FALSE(p_power_in_pcenter(F("y1", 5), 5, 3).has_value());
  CHECK_FALSE(p_power_in_pcenter(F("y4^5", 5), 5, 3).has_value());
}

TEST_CASE("u variables") {
  PCenterElement g{5, 3, F("y0^10*y3^5", 5)};
  CHECK(to_u_variables(g) == U("u2^10*u5", 5));
  CHECK(to_u_variables(PCenterElement{5, 3, F("y0", 5)}) == U("u2", 5));
  CHECK(to_u_variables(*p_power_in_pcenter(frobenius_power(z_mod_p(2, 2, 5)), 5, 2)) == U("2*u2^5*u4 + 4*u3^2", 5));
  CHECK(to_u_variables(*p_power_in_pcenter(frobenius_power(z_mod_p(2, 2, 3)), 3, 2)) == U("2*u2^3*u4 + 2*u3^2", 3));
  CHECK_THROWS(to_u_variables(PCenterElement{5, 3, F("y1^3", 5)}));
  CHECK_THROWS(to_u_variables(PCenterElement{5, 3, F("y0^-1", 5)}));

  for (std::uint64_t p : {3u, 5u, 7u})
    for (int n = 2; n <= 5; ++n)
      for (int i = 1; i <= n; ++i) {
        FpPoly a = frobenius_power(z_mod_p(i, n, p));
        UPolynomial u = to_u_variables(*p_power_in_pcenter(a, p, n));
        CHECK(from_u_variables(u, p, n).poly == a);
      }
  CHECK_THROWS(from_u_variables(U("u1", 5), 5, 3));
}

TEST_CASE("frobenius agrees with exponentiation") {
  for (std::uint64_t p : {3u, 5u, 7u})
    for (int n = 2; n <= 4; ++n)
      for (int i = 1; i <= n; ++i) {
        FpPoly z = z_mod_p(i, n, p);
        CHECK(frobenius_power(z) == z.pow(static_cast<unsigned>(p)));
      }
  CHECK_THROWS(frobenius_power(FpPoly()));
}

TEST_CASE("jacobian examples") {
  JacobianReport j35 = jacobian_modp(3, 5);
  CHECK(j35.matrix[0][0] == U("3*u2^5", 5));
  CHECK(j35.matrix[1][1] == U("2*u2^10", 5));
  CHECK(j35.matrix[1][0].is_zero());
  CHECK(j35.det_coefficient == 1);
  CHECK(j35.det_exponent == 15);
  CHECK(j35.det_string() == "1*u2^15");

  JacobianReport j23 = jacobian_modp(2, 3);
  REQUIRE(j23.matrix.size() == 1);
  CHECK(j23.matrix[0][0] == U("u2^3", 3));
  CHECK(j23.det_string() == "1*u2^3");

  CHECK_THROWS_AS(jacobian_modp(4, 3), std::domain_error);
  CHECK_THROWS_AS(jacobian_modp(3, 2), std::domain_error);
  CHECK_THROWS_AS(jacobian_modp(1, 5), std::domain_error);
}

TEST_CASE("determinant by cofactors") {
  const std::uint64_t p = 7;
  std::vector<std::vector<UPolynomial>> m{{U("u2", p), U("u3", p)}, {U("u4", p), U("u5", p)}};
  CHECK(determinant(m, p) == U("u2*u5 - u3*u4", p));
  CHECK(determinant({}, p) == U("1", p));
}

TEST_CASE("grid") {
  for (int n = 2; n <= 8; ++n)
    for (std::uint64_t p : kPrimes) {
      if (p < static_cast<std::uint64_t>(n) + 1) continue;
      CAPTURE(n);
      CAPTURE(p);
      CentralReport c = central_check_modp(n, p);
      CHECK(c.all_central());
      CHECK(c.all_leading_ok());
      for (int i = 2; i <= n; ++i) CHECK(p_power_in_pcenter(frobenius_power(z_mod_p(i, n, p)), p, n).has_value());
      JacobianReport j = jacobian_modp(n, p);
      CHECK(j.triangular);
      CHECK(j.diagonal_matches_leading_terms);
      CHECK(j.det_coefficient % p != 0);
      long expected_exponent = 0;
      for (int i = 2; i <= n; ++i) {
        const long k = i % 2 == 0 ? 1 : 2;
        CHECK(j.diagonal_exponents[static_cast<std::size_t>(i - 2)] == k * static_cast<long>(p));
        expected_exponent += k * static_cast<long>(p);
      }
      CHECK(j.det_exponent == expected_exponent);
    }
}
