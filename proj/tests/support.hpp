#ifndef FILICENTER_TESTS_SUPPORT_HPP
#define FILICENTER_TESTS_SUPPORT_HPP

#include <random>
#include <string>

#include "filicenter/polynomial.hpp"

namespace testing {

inline filicenter::QPoly P(const std::string& s) { return filicenter::parse_polynomial(s); }

/// Random polynomial in y0..y_vars-1 with small integer coefficients.
inline filicenter::QPoly random_poly(std::mt19937_64& rng, int vars, int terms, int maxexp) {
  using namespace filicenter;
  std::uniform_int_distribution<int> e(0, maxexp), c(-5, 5), v(0, vars - 1);
  QPoly r;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int j = 0; j < 3; ++j) {
      int i = v(rng);
      m.set(i, m[i] + e(rng));
    }
    r += QPoly::monomial(m, Rational(c(rng)));
  }
  return r;
}

}  // namespace testing

#endif
