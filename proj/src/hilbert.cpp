#include "filicenter/hilbert.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace filicenter {

Integer partition_count(int target, int parts, int max_part) {
  if (target < 0 || parts < 0 || max_part < 0) return 0;
  // table[d][m][k] = p(k, d, m), filled with p(k,d,m) = p(k,d,m-1) + p(k-m,d-1,m)
  const int K = target;
  std::vector<std::vector<std::vector<Integer>>> table(
      static_cast<std::size_t>(parts) + 1,
      std::vector<std::vector<Integer>>(static_cast<std::size_t>(max_part) + 1,
                                        std::vector<Integer>(static_cast<std::size_t>(K) + 1, 0)));
  for (int d = 0; d <= parts; ++d) {
    for (int m = 0; m <= max_part; ++m) {
      auto& row = table[static_cast<std::size_t>(d)][static_cast<std::size_t>(m)];
      row[0] = 1;
      for (int k = 1; k <= K; ++k) {
        if (d == 0 || m == 0) continue;
        Integer v = table[static_cast<std::size_t>(d)][static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k)];
        if (k >= m) v += table[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(m)][static_cast<std::size_t>(k - m)];
        row[static_cast<std::size_t>(k)] = v;
      }
    }
  }
  return table[static_cast<std::size_t>(parts)][static_cast<std::size_t>(max_part)][static_cast<std::size_t>(K)];
}

Integer delta_partition(int n, int d) {
  if (n < 0 || d < 0) throw std::domain_error("delta_partition: negative argument");
  return partition_count(d * n / 2, d, n);
}

std::map<long, Integer> weight_multiplicities(int n, int d) {
  if (n < 0 || d < 0) throw std::domain_error("weight_multiplicities: negative argument");
  // counts[j][s]: monomials of degree j in the variables seen so far with index-sum s
  const int smax = n * d;
  std::vector<std::vector<Integer>> counts(static_cast<std::size_t>(d) + 1,
                                           std::vector<Integer>(static_cast<std::size_t>(smax) + 1, 0));
  counts[0][0] = 1;
  for (int i = 0; i <= n; ++i) {
    // unbounded multiplicity of y_i: forward accumulation
    for (int j = 1; j <= d; ++j)
      for (int s = i; s <= smax; ++s) counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] +=
          counts[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s - i)];
  }
  std::map<long, Integer> out;
  for (int s = 0; s <= smax; ++s) {
    const Integer& c = counts[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)];
    if (c != 0) out[long(n) * d - 2L * s] = c;
  }
  return out;
}

Integer delta_weight(int n, int d) {
  if (n < 1 || d < 0) throw std::domain_error("delta_weight: needs n >= 1, d >= 0");
  auto mult = weight_multiplicities(n, d);
  long target = (n % 2 == 0 || d % 2 == 0) ? 0 : 1;
  auto it = mult.find(target);
  return it == mult.end() ? Integer(0) : it->second;
}

std::map<long, Integer> symmetric_power_components(int n, int d) {
  auto mult = weight_multiplicities(n, d);
  std::map<long, Integer> out;
  for (const auto& [w, m] : mult) {
    if (w < 0) continue;
    auto it = mult.find(w + 2);
    Integer c = m - (it == mult.end() ? Integer(0) : it->second);
    if (c != 0) out[w] = c;
  }
  return out;
}

DeltaTable hilbert_series_terms(int n, int dmax) {
  if (n < 1) throw std::domain_error("hilbert_series_terms: n must be at least 1");
  DeltaTable t;
  t.n = n;
  for (int d = 0; d <= dmax; ++d) {
    Integer a = delta_partition(n, d), b = delta_weight(n, d);
    if (a != b)
      throw std::logic_error("delta counters disagree at n=" + std::to_string(n) + ", d=" + std::to_string(d));
    t.delta.push_back(a);
  }
  return t;
}

MuFactorization mu_factorization(int n) {
  if (n < 1) throw std::domain_error("mu_factorization: n must be at least 1");
  MuFactorization mu;
  mu.n = n;
  RationalFunction t(UPoly::monomial(1));
  for (int k = -n; k <= n; k += 2) {
    mu.index_set.push_back(k);
    if (k == 0) {
      mu.has_zero_weight = true;
      continue;
    }
    mu.factor_exponents.push_back(k);
    int m = std::abs(k);
    std::vector<RationalFunction> c(static_cast<std::size_t>(m) + 1);
    if (k < 0) {
      mu.shift += m;
      c[0] = -t;
      c[static_cast<std::size_t>(m)] = 1;
    } else {
      c[0] = 1;
      c[static_cast<std::size_t>(m)] = -t;
    }
    mu.factors.emplace_back(std::move(c));
  }
  return mu;
}

namespace {

/// z^e mod f for e >= 0.
ZPolyOverRat power_mod(int e, const ZPolyOverRat& f) {
  return ZPolyOverRat::monomial(e).mod(f);
}

RationalFunction t_power(int s) { return RationalFunction(UPoly::monomial(s)); }

/// Coefficient of z^r in z^offset * Q / f expanded as a power series in t,
/// where f = 1 - t z^k (k > 0) or z^m - t (k = -m < 0).
RationalFunction extract(const ZPolyOverRat& Q, int k, int offset, int r) {
  RationalFunction acc;
  if (k > 0) {
    // z^offset * sum_a c_a z^a * sum_s t^s z^{ks}
    for (int s = 0;; ++s) {
      int a = r - offset - k * s;
      if (a < 0) break;
      if (a <= Q.degree()) acc += Q[a] * t_power(s);
    }
  } else {
    int m = -k;
    // z^offset * sum_a c_a z^a * z^{-m} * sum_s t^s z^{-ms}
    for (int s = 0;; ++s) {
      int a = r - offset + m * (s + 1);
      if (a > Q.degree()) break;
      if (a >= 0) acc += Q[a] * t_power(s);
    }
  }
  return acc;
}

}  // namespace

HilbertRational hilbert_rational(int n, int max_n, ShiftPlacement placement) {
  if (n < 1) throw std::domain_error("hilbert_rational: n must be at least 1");
  if (n > max_n) throw std::out_of_range("hilbert_rational: n = " + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
  MuFactorization mu = mu_factorization(n);
  const int offset = placement == ShiftPlacement::kOutside ? mu.shift : 0;
  HilbertRational out;
  out.n = n;
  for (std::size_t j = 0; j < mu.factors.size(); ++j) {
    const int k = mu.factor_exponents[j];
    // numerator z^shift (or 1) contributes to z^0, z^1 only through some factors:
    // with the shift inside, negative factors only produce negative z-powers.
    if (placement == ShiftPlacement::kInNumerator && k < 0) continue;
    const ZPolyOverRat& fj = mu.factors[j];
    ZPolyOverRat rest = ZPolyOverRat::constant(1);
    for (std::size_t i = 0; i < mu.factors.size(); ++i)
      if (i != j) rest = (rest * mu.factors[i]).mod(fj);
    XgcdResult x = xgcd_z(rest, fj);
    if (x.g.degree() != 0) throw std::logic_error("hilbert_rational: factors are not coprime");
    ZPolyOverRat numer = placement == ShiftPlacement::kInNumerator ? power_mod(mu.shift, fj) : ZPolyOverRat::constant(1);
    ZPolyOverRat Q = (numer * x.s).mod(fj);
    out.q0 += extract(Q, k, offset, 0);
    out.q1 += extract(Q, k, offset, 1);
  }
  if (n % 2 == 0 && !out.q1.is_zero()) throw std::logic_error("hilbert_rational: q1 must vanish for even n");
  out.series = out.q0 + out.q1;
  if (mu.has_zero_weight) out.series = out.series * RationalFunction(UPoly(1), UPoly::one_minus_power(1));
  auto coeffs = series_expand(out.series, 30);
  for (int d = 0; d < 30; ++d)
    if (coeffs[static_cast<std::size_t>(d)] != Rational(delta_partition(n, d)))
      throw std::logic_error("hilbert_rational: expansion disagrees with delta_partition at d = " + std::to_string(d));
  return out;
}

bool recurrence_verify(int n, const std::vector<long>& coeffs, int dmax) {
  const int order = static_cast<int>(coeffs.size());
  if (order > dmax) throw std::invalid_argument("recurrence_verify: order exceeds dmax");
  DeltaTable t = hilbert_series_terms(n, dmax);
  for (int d = order; d <= dmax; ++d) {
    Integer acc(0);
    for (int j = 1; j <= order; ++j) acc += coeffs[static_cast<std::size_t>(j - 1)] * t.delta[static_cast<std::size_t>(d - j)];
    if (acc != t.delta[static_cast<std::size_t>(d)]) return false;
  }
  return true;
}

namespace {

double simpson(int n, double t, long panels) {
  const double pi = std::numbers::pi;
  const double h = 2 * pi / static_cast<double>(panels);
  auto f = [n, t](double phi) {
    std::complex<double> den(1.0, 0.0);
    for (int k = 0; k <= n; ++k) den *= 1.0 - t * std::polar(1.0, (n - 2 * k) * phi);
    return ((1.0 + std::polar(1.0, phi)) / den).real();
  };
  double sum = f(-pi) + f(pi);
  for (long i = 1; i < panels; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(-pi + static_cast<double>(i) * h);
  return sum * h / 3.0 / (2 * pi);
}

}  // namespace

IntegralCheck integral_check(int n, const Rational& t, long max_panels) {
  if (!(t > 0 && t < 1)) throw std::domain_error("integral_check: t must lie in (0, 1)");
  if (max_panels < 16 || (max_panels & (max_panels - 1)) != 0)
    throw std::invalid_argument("integral_check: panel cap must be a power of two >= 16");
  IntegralCheck r;
  r.exact = hilbert_rational(n, std::max(n, 18)).series.eval(t).get_d();
  const double td = t.get_d();
  long panels = 16;
  double prev = simpson(n, td, panels);
  while (panels < max_panels) {
    panels *= 2;
    double cur = simpson(n, td, panels);
    bool converged = std::abs(cur - prev) < 1e-10;
    prev = cur;
    if (converged) break;
  }
  r.numeric = prev;
  r.panels = panels;
  r.difference = std::abs(r.numeric - r.exact);
  return r;
}

}  // namespace filicenter
