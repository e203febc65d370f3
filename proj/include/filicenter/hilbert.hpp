#ifndef FILICENTER_HILBERT_HPP
#define FILICENTER_HILBERT_HPP

#include <map>
#include <vector>

#include "filicenter/rational_function.hpp"
#include "filicenter/scalar.hpp"

namespace filicenter {

/// Number of partitions of `target` into at most `parts` parts of size at most `max_part`.
Integer partition_count(int target, int parts, int max_part);

/// delta_{n,d} = p(floor(dn/2), d, n).
Integer delta_partition(int n, int d);

/// delta_{n,d} as the number of degree-d monomials in y_0..y_n of weight 0
/// (n or d even) or weight 1 (both odd), by a weight-multiplicity DP.
Integer delta_weight(int n, int d);

/// Weight multiplicities of degree-d monomials in y_0..y_n, keyed by weight.
std::map<long, Integer> weight_multiplicities(int n, int d);

/// Highest weight -> number of irreducible sl2 components of S^d(U_n),
/// read off as mult(w) - mult(w + 2) for w >= 0.
std::map<long, Integer> symmetric_power_components(int n, int d);

struct DeltaTable {
  int n = 0;
  std::vector<Integer> delta;  // delta[d] for d = 0..dmax
};

/// Table from delta_partition, cross-checked term by term against
/// delta_weight; a disagreement throws std::logic_error.
DeltaTable hilbert_series_terms(int n, int dmax);

/// mu_n(t, z) = prod_{k in I_n} 1 / (1 - t z^k) rewritten as
/// scalar * z^shift / prod(factors) with polynomial factors in z.
struct MuFactorization {
  int n = 0;
  std::vector<int> index_set;         // -n, -n+2, ..., n
  int shift = 0;                      // sum of |k| over negative k
  std::vector<int> factor_exponents;  // signed k of each factor (k != 0)
  std::vector<ZPolyOverRat> factors;  // z^|k| - t for k < 0, 1 - t z^k for k > 0
  bool has_zero_weight = false;       // contributes the scalar 1 / (1 - t)
};

MuFactorization mu_factorization(int n);

/// Where the z^shift of mu_n is placed during partial fractions.
enum class ShiftPlacement {
  kInNumerator,  // decompose z^shift / prod(factors)
  kOutside,      // decompose 1 / prod(factors), multiply by z^shift afterwards
};

struct HilbertRational {
  int n = 0;
  RationalFunction series;
  RationalFunction q0, q1;  // z^0 and z^1 coefficients before the scalar factor
};

/// Exact H_n(t) via partial fractions of mu_n over Q(t)[z]. Throws
/// std::out_of_range beyond `max_n` and std::logic_error when the result
/// disagrees with delta_partition on 30 terms.
HilbertRational hilbert_rational(int n, int max_n = 18, ShiftPlacement placement = ShiftPlacement::kInNumerator);

/// True iff delta_{n,d} = sum_j coeffs[j-1] * delta_{n,d-j} for all
/// order <= d <= dmax.
bool recurrence_verify(int n, const std::vector<long>& coeffs, int dmax);

struct IntegralCheck {
  double numeric = 0;
  double exact = 0;
  double difference = 0;
  long panels = 0;
};

/// Composite Simpson quadrature of the real part of
/// (1 + e^{i phi}) / prod_k (1 - t e^{i (n - 2k) phi}) / (2 pi) on [-pi, pi].
/// Doubles panels from 16 until successive estimates agree to 1e-10 or
/// `max_panels` (a power of two) is reached.
IntegralCheck integral_check(int n, const Rational& t, long max_panels = 1L << 14);

}  // namespace filicenter

#endif  // FILICENTER_HILBERT_HPP
