#ifndef FILICENTER_CHARP_HPP
#define FILICENTER_CHARP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "filicenter/polynomial.hpp"

namespace filicenter {

/// Polynomial over F_p in y_0..y_n whose y_1..y_n exponents are all
/// divisible by p.
struct PCenterElement {
  std::uint64_t p = 0;
  int n = 0;
  FpPoly poly;
};

/// Returns the p-center view of f when every y_1..y_n exponent is divisible by p.
std::optional<PCenterElement> p_power_in_pcenter(const FpPoly& f, std::uint64_t p, int n);

/// Polynomial in u_2..u_{n+2}; variable index j stands for u_j, with u_2 = y0
/// and u_{l+2} = y_l^p.
using UPolynomial = FpPoly;

inline VariableNames u_names() { return {"u", 0}; }

/// y0^a -> u2^a and y_l^{pa} -> u_{l+2}^a; throws std::domain_error on a
/// divisibility violation.
UPolynomial to_u_variables(const PCenterElement& g);
PCenterElement from_u_variables(const UPolynomial& u, std::uint64_t p, int n);

/// f^p over F_p computed termwise: (sum c m)^p = sum c m^p.
FpPoly frobenius_power(const FpPoly& f);

/// z_i with coefficients reduced mod p (from the characteristic-0 result).
FpPoly z_mod_p(int i, int n, std::uint64_t p);

struct CentralReport {
  int n = 0;
  std::uint64_t p = 0;
  std::vector<bool> central;     // index i-1 for z_i, i = 1..n
  std::vector<bool> leading_ok;  // leading coefficient of z_i nonzero mod p
  bool all_central() const;
  bool all_leading_ok() const;
};

/// Requires an odd prime p.
CentralReport central_check_modp(int n, std::uint64_t p);

struct JacobianReport {
  int n = 0;
  std::uint64_t p = 0;
  /// matrix[i-2][j-2] = D_i f_j = -d alpha_j / d u_{i+2}, i, j = 2..n.
  std::vector<std::vector<UPolynomial>> matrix;
  bool triangular = false;
  /// Diagonal equals -(lc z_i) u2^{p k_i} read from characteristic-0 leading terms.
  bool diagonal_matches_leading_terms = false;
  std::vector<std::uint64_t> diagonal_coefficients;  // c_i
  std::vector<long> diagonal_exponents;               // exponent of u2 on the diagonal
  UPolynomial determinant;
  std::uint64_t det_coefficient = 0;
  long det_exponent = 0;

  /// "c*u2^k".
  std::string det_string() const;
};

/// Needs n >= 2 and an odd prime p >= n + 1. A nonzero entry below the
/// diagonal or a determinant not of the form c*u2^k throws std::logic_error.
JacobianReport jacobian_modp(int n, std::uint64_t p);

/// Determinant by cofactor expansion skipping zero entries.
UPolynomial determinant(const std::vector<std::vector<UPolynomial>>& m, std::uint64_t p);

}  // namespace filicenter

#endif  // FILICENTER_CHARP_HPP
