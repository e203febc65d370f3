#include "filicenter/charp.hpp"

#include <algorithm>

#include "filicenter/sl2.hpp"
#include "filicenter/transvect.hpp"

namespace filicenter {

namespace {

void require_odd_prime(std::uint64_t p, const char* who) {
  if (p == 2 || !is_probable_prime(p)) throw std::domain_error(std::string(who) + ": p must be an odd prime");
}

}  // namespace

std::optional<PCenterElement> p_power_in_pcenter(const FpPoly& f, std::uint64_t p, int n) {
  for (const auto& t : f.terms()) {
    if (t.mono.size() > n + 1) return std::nullopt;
    for (int l = 1; l <= n; ++l)
      if (t.mono[l] % static_cast<long>(p) != 0) return std::nullopt;
  }
  return PCenterElement{p, n, f};
}

UPolynomial to_u_variables(const PCenterElement& g) {
  if (g.n + 2 >= kMaxVariables) throw std::invalid_argument("to_u_variables: n too large");
  const long p = static_cast<long>(g.p);
  return g.poly.map_monomials([&](const Monomial& m) {
    if (m.is_laurent()) throw std::domain_error("to_u_variables: negative power of y0");
    Monomial u;
    u.set(2, m[0]);
    for (int l = 1; l <= g.n; ++l) {
      if (m[l] % p != 0)
        throw std::domain_error("to_u_variables: exponent of y" + std::to_string(l) + " not divisible by p");
      u.set(l + 2, m[l] / p);
    }
    if (m.size() > g.n + 1) throw std::domain_error("to_u_variables: variable beyond y" + std::to_string(g.n));
    return u;
  });
}

PCenterElement from_u_variables(const UPolynomial& u, std::uint64_t p, int n) {
  FpPoly y = u.map_monomials([&](const Monomial& m) {
    if (m[0] != 0 || m[1] != 0 || m.size() > n + 3)
      throw std::domain_error("from_u_variables: only u2..u" + std::to_string(n + 2) + " may occur");
    Monomial r;
    r.set(0, m[2]);
    for (int l = 1; l <= n; ++l) r.set(l, long(m[l + 2]) * static_cast<long>(p));
    return r;
  });
  return PCenterElement{p, n, std::move(y)};
}

FpPoly frobenius_power(const FpPoly& f) {
  const long p = static_cast<long>(f.field().p);
  if (p == 0) throw std::invalid_argument("frobenius_power: needs a polynomial over F_p");
  return f.map_monomials([p](const Monomial& m) { return m.pow(p); });
}

FpPoly z_mod_p(int i, int n, std::uint64_t p) { return reduce_mod_p(z_gen(i, n).poly, p); }

bool CentralReport::all_central() const { return std::all_of(central.begin(), central.end(), [](bool b) { return b; }); }
bool CentralReport::all_leading_ok() const {
  return std::all_of(leading_ok.begin(), leading_ok.end(), [](bool b) { return b; });
}

CentralReport central_check_modp(int n, std::uint64_t p) {
  require_odd_prime(p, "central_check_modp");
  if (n < 1) throw std::domain_error("central_check_modp: n must be at least 1");
  CentralReport r;
  r.n = n;
  r.p = p;
  for (int i = 1; i <= n; ++i) {
    QPoly z = z_gen(i, n).poly;
    FpPoly zp = reduce_mod_p(z, p);
    r.central.push_back(down(zp).is_zero());
    r.leading_ok.push_back(ModP::from_rational(z.leading_coefficient(), p).value() != 0);
  }
  return r;
}

UPolynomial determinant(const std::vector<std::vector<UPolynomial>>& m, std::uint64_t p) {
  const std::size_t size = m.size();
  Field field{p};
  if (size == 0) return UPolynomial::from_int(1, field);
  std::vector<std::size_t> cols(size);
  for (std::size_t j = 0; j < size; ++j) cols[j] = j;
  // expansion along successive rows over the remaining columns
  auto rec = [&](auto&& self, std::size_t row, std::vector<std::size_t>& free) -> UPolynomial {
    if (row == size) return UPolynomial::from_int(1, field);
    UPolynomial acc(field);
    for (std::size_t idx = 0; idx < free.size(); ++idx) {
      const UPolynomial& e = m[row][free[idx]];
      if (e.is_zero()) continue;
      std::size_t c = free[idx];
      free.erase(free.begin() + static_cast<long>(idx));
      UPolynomial minor = self(self, row + 1, free);
      free.insert(free.begin() + static_cast<long>(idx), c);
      if (minor.is_zero()) continue;
      UPolynomial term = e * minor;
      acc = idx % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
  };
  return rec(rec, 0, cols);
}

std::string JacobianReport::det_string() const {
  return std::to_string(det_coefficient) + "*u2^" + std::to_string(det_exponent);
}

JacobianReport jacobian_modp(int n, std::uint64_t p) {
  if (n < 2) throw std::domain_error("jacobian_modp: n must be at least 2");
  require_odd_prime(p, "jacobian_modp");
  if (p < static_cast<std::uint64_t>(n) + 1)
    throw std::domain_error("jacobian_modp: needs p >= n + 1 (p = " + std::to_string(p) + ", n = " + std::to_string(n) + ")");
  JacobianReport r;
  r.n = n;
  r.p = p;
  const Field field{p};
  const int size = n - 1;
  std::vector<UPolynomial> alpha;
  std::vector<QPoly> z;
  for (int j = 2; j <= n; ++j) {
    z.push_back(z_gen(j, n).poly);
    auto pc = p_power_in_pcenter(frobenius_power(reduce_mod_p(z.back(), p)), p, n);
    if (!pc) throw std::logic_error("jacobian_modp: z" + std::to_string(j) + "^p is not in the p-center");
    alpha.push_back(to_u_variables(*pc));
  }
  const ModP minus_one(-1, p);
  r.matrix.assign(static_cast<std::size_t>(size), std::vector<UPolynomial>(static_cast<std::size_t>(size), UPolynomial(field)));
  r.triangular = true;
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= n; ++j) {
      UPolynomial e = alpha[static_cast<std::size_t>(j - 2)].partial_derivative(i + 2) * minus_one;
      if (j < i && !e.is_zero()) r.triangular = false;
      r.matrix[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 2)] = std::move(e);
    }
  if (!r.triangular) throw std::logic_error("jacobian_modp: nonzero entry below the diagonal");

  r.diagonal_matches_leading_terms = true;
  for (int i = 2; i <= n; ++i) {
    const UPolynomial& d = r.matrix[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(i - 2)];
    const QPoly& zi = z[static_cast<std::size_t>(i - 2)];
    ModP c = ModP::from_rational(-zi.leading_coefficient(), p);
    long k = zi.leading_monomial()[0];
    UPolynomial expected = UPolynomial::monomial(Monomial::variable(2, static_cast<int>(k * static_cast<long>(p))), c);
    if (d != expected) r.diagonal_matches_leading_terms = false;
    if (d.size() == 1 && d.leading_monomial() == Monomial::variable(2, d.leading_monomial()[2])) {
      r.diagonal_coefficients.push_back(d.leading_coefficient().value());
      r.diagonal_exponents.push_back(d.leading_monomial()[2]);
    } else {
      r.diagonal_coefficients.push_back(0);
      r.diagonal_exponents.push_back(-1);
    }
  }

  r.determinant = determinant(r.matrix, p);
  const UPolynomial& det = r.determinant;
  if (det.size() != 1 || det.leading_monomial() != Monomial::variable(2, det.leading_monomial()[2]))
    throw std::logic_error("jacobian_modp: determinant is not of the form c*u2^k: " + format(det, u_names()));
  r.det_coefficient = det.leading_coefficient().value();
  r.det_exponent = det.leading_monomial()[2];
  return r;
}

}  // namespace filicenter
