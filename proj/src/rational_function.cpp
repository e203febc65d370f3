#include "filicenter/rational_function.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace filicenter {

// ---- UPoly ----

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::one_minus_power(int k) { return UPoly(1) - monomial(k); }

Rational UPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UPoly::eval(double t) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  UPoly r = a;
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  int dq = a.degree() - db;
  std::vector<Rational> quo(dq >= 0 ? static_cast<std::size_t>(dq) + 1 : 0, Rational(0));
  Rational inv = 1 / b.leading();
  for (int k = dq; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + db)] * inv;
    if (sgn(c) == 0) continue;
    quo[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.c_[static_cast<std::size_t>(j)];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  UPoly::divmod(a, b, q, r);
  if (!r.is_zero()) throw std::domain_error("UPoly: inexact division");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return Rational(1) / leading() * *this;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

// ---- gcd over Q[t] via heuristic integer gcd ----

namespace {

using ZVec = std::vector<Integer>;

/// Scales to a primitive integer polynomial with positive leading coefficient.
ZVec primitive_integer(const UPoly& p) {
  Integer l(1);
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZVec v;
  v.reserve(p.coeffs().size());
  Integer g(0);
  for (const auto& c : p.coeffs()) {
    Integer x = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    v.push_back(std::move(x));
  }
  if (g != 0)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  if (!v.empty() && v.back() < 0)
    for (auto& x : v) x = -x;
  return v;
}

Integer max_norm(const ZVec& v) {
  Integer m(0);
  for (const auto& x : v) {
    Integer a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

Integer eval_at(const ZVec& v, const Integer& xi) {
  Integer acc(0);
  for (auto it = v.rbegin(); it != v.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

UPoly to_upoly(const ZVec& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (const auto& x : v) c.emplace_back(x);
  return UPoly(std::move(c));
}

bool divides(const UPoly& d, const UPoly& a) {
  UPoly q, r;
  UPoly::divmod(a, d, q, r);
  return r.is_zero();
}

UPoly euclid_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    UPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return UPoly(1);
  ZVec A = primitive_integer(a), B = primitive_integer(b);
  Integer xi = 2 * std::min(max_norm(A), max_norm(B)) + 29;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Integer g = gcd(eval_at(A, xi), eval_at(B, xi));
    ZVec cand;
    Integer half = xi / 2;
    while (g != 0) {
      Integer c = g % xi;
      if (c < 0) c += xi;
      if (c > half) c -= xi;
      cand.push_back(c);
      g = (g - c) / xi;
    }
    UPoly G = to_upoly(cand).monic();
    if (!G.is_zero() && divides(G, a) && divides(G, b)) return G;
    xi = xi * 73794 / 27011 + 1;
  }
  return euclid_gcd(a, b);
}

// ---- RationalFunction ----

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) {
    num_ = UPoly();
    den_ = UPoly(1);
    return;
  }
  UPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  Rational l = 1 / den.leading();
  num_ = l * num;
  den_ = l * den;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  UPoly g = gcd(a.den_, b.den_);
  UPoly ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
  return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // cross-cancel first to keep the final gcd small
  UPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  UPoly n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  UPoly d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  Rational l = 1 / d.leading();
  RationalFunction r;
  r.num_ = l * n;
  r.den_ = l * d;
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

Rational RationalFunction::eval(const Rational& t) const {
  Rational d = den_.eval(t);
  if (sgn(d) == 0) throw std::domain_error("RationalFunction: pole at evaluation point");
  return num_.eval(t) / d;
}

std::string RationalFunction::str() const {
  if (den_ == UPoly(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::vector<Rational> series_expand(const RationalFunction& r, int count) {
  const UPoly& num = r.numerator();
  const UPoly& den = r.denominator();
  if (sgn(den[0]) == 0) throw std::domain_error("series_expand: pole at t = 0");
  Rational inv = 1 / den[0];
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    Rational acc = num[i];
    for (int j = 1; j <= std::min(i, den.degree()); ++j) acc -= den[j] * out[static_cast<std::size_t>(i - j)];
    out.push_back(acc * inv);
  }
  return out;
}

namespace {

/// Cyclotomic polynomials Phi_1..Phi_max.
std::vector<UPoly> cyclotomics(int max) {
  std::vector<UPoly> phi(static_cast<std::size_t>(max) + 1);
  for (int d = 1; d <= max; ++d) {
    UPoly p = UPoly::monomial(d) - UPoly(1);
    for (int e = 1; e < d; ++e)
      if (d % e == 0) p = exact_div(p, phi[static_cast<std::size_t>(e)]);
    phi[static_cast<std::size_t>(d)] = p;
  }
  return phi;
}

}  // namespace

std::string format_factored(const RationalFunction& r) {
  const UPoly& den = r.denominator();
  int D = den.degree();
  if (D <= 0) return r.str();
  auto phi = cyclotomics(D);
  std::map<int, int> mult;  // d -> multiplicity of Phi_d in den
  UPoly rest = den;
  for (int d = D; d >= 1; --d) {
    while (rest.degree() >= phi[static_cast<std::size_t>(d)].degree()) {
      UPoly q, rem;
      UPoly::divmod(rest, phi[static_cast<std::size_t>(d)], q, rem);
      if (!rem.is_zero()) break;
      rest = q;
      ++mult[d];
    }
  }
  if (rest.degree() != 0) return r.str();
  // cover the cyclotomic multiset with (1 - t^k) factors, compensating in the numerator
  UPoly num = r.numerator();
  std::map<int, int> factors;  // k -> exponent of (1 - t^k)
  while (!mult.empty()) {
    int k = mult.rbegin()->first;
    ++factors[k];
    for (int e = 1; e <= k; ++e) {
      if (k % e != 0) continue;
      auto it = mult.find(e);
      if (it != mult.end()) {
        if (--it->second == 0) mult.erase(it);
      } else {
        num = num * phi[static_cast<std::size_t>(e)];
      }
    }
  }
  // each (1 - t^k) = -prod_{e|k} Phi_e, so den * extra = (-1)^{sum a} * prod (1 - t^k)^a
  int total = 0;
  for (auto [k, a] : factors) total += a;
  UPoly num_prime = total % 2 == 0 ? num : -num;
  std::ostringstream den_os;
  bool first = true;
  for (auto [k, a] : factors) {
    if (!first) den_os << "*";
    first = false;
    den_os << "(1 - t" << (k > 1 ? "^" + std::to_string(k) : "") << ")";
    if (a > 1) den_os << "^" << a;
  }
  const bool single = factors.size() == 1 && factors.begin()->second == 1;
  const std::size_t num_terms = static_cast<std::size_t>(
      std::count_if(num_prime.coeffs().begin(), num_prime.coeffs().end(), [](const Rational& c) { return sgn(c) != 0; }));
  std::string num_text = num_terms > 1 ? "(" + num_prime.str() + ")" : num_prime.str();
  return num_text + " / " + (single ? den_os.str() : "(" + den_os.str() + ")");
}

// ---- ZPolyOverRat ----

void ZPolyOverRat::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZPolyOverRat ZPolyOverRat::monomial(int degree, const RationalFunction& c) {
  std::vector<RationalFunction> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return ZPolyOverRat(std::move(v));
}

ZPolyOverRat operator+(const ZPolyOverRat& a, const ZPolyOverRat& b) {
  std::vector<RationalFunction> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return ZPolyOverRat(std::move(v));
}

ZPolyOverRat operator-(const ZPolyOverRat& a, const ZPolyOverRat& b) {
  std::vector<RationalFunction> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
  return ZPolyOverRat(std::move(v));
}

ZPolyOverRat operator*(const ZPolyOverRat& a, const ZPolyOverRat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RationalFunction> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
  }
  return ZPolyOverRat(std::move(v));
}

ZPolyOverRat operator*(const RationalFunction& s, const ZPolyOverRat& a) {
  std::vector<RationalFunction> v = a.c_;
  for (auto& x : v) x = s * x;
  return ZPolyOverRat(std::move(v));
}

bool operator==(const ZPolyOverRat& a, const ZPolyOverRat& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

void ZPolyOverRat::divmod(const ZPolyOverRat& a, const ZPolyOverRat& b, ZPolyOverRat& q, ZPolyOverRat& r) {
  if (b.is_zero()) throw std::domain_error("ZPolyOverRat: division by zero");
  std::vector<RationalFunction> rem = a.c_;
  int db = b.degree();
  int dq = a.degree() - db;
  std::vector<RationalFunction> quo(dq >= 0 ? static_cast<std::size_t>(dq) + 1 : 0);
  RationalFunction inv = b.leading().inverse();
  for (int k = dq; k >= 0; --k) {
    const RationalFunction& top = rem[static_cast<std::size_t>(k + db)];
    if (top.is_zero()) continue;
    RationalFunction c = top * inv;
    quo[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= db; ++j)
      if (!b.c_[static_cast<std::size_t>(j)].is_zero())
        rem[static_cast<std::size_t>(k + j)] = rem[static_cast<std::size_t>(k + j)] - c * b.c_[static_cast<std::size_t>(j)];
  }
  q = ZPolyOverRat(std::move(quo));
  r = ZPolyOverRat(std::move(rem));
}

ZPolyOverRat ZPolyOverRat::mod(const ZPolyOverRat& m) const {
  ZPolyOverRat q, r;
  divmod(*this, m, q, r);
  return r;
}

ZPolyOverRat ZPolyOverRat::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

std::string ZPolyOverRat::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (i > 0) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

XgcdResult xgcd_z(const ZPolyOverRat& a, const ZPolyOverRat& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("xgcd_z: both inputs are zero");
  ZPolyOverRat r0 = a, r1 = b;
  ZPolyOverRat s0 = ZPolyOverRat::constant(1), s1;
  ZPolyOverRat t0, t1 = ZPolyOverRat::constant(1);
  while (!r1.is_zero()) {
    ZPolyOverRat q, r;
    ZPolyOverRat::divmod(r0, r1, q, r);
    ZPolyOverRat s = s0 - q * s1, t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  RationalFunction inv = r0.leading().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

}  // namespace filicenter
