#ifndef FILICENTER_POLYNOMIAL_HPP
#define FILICENTER_POLYNOMIAL_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "filicenter/monomial.hpp"
#include "filicenter/scalar.hpp"

namespace filicenter {

/// Sparse multivariate polynomial in y_0..y_15 (Laurent in y_0) with
/// coefficients in Q (`Rational`) or F_p (`ModP`). Terms are kept sorted
/// from the lex-greatest monomial down, with no zero coefficients, so two
/// polynomials are equal exactly when their term vectors are.
template <class S>
class Polynomial {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;
  struct Term {
    Monomial mono;
    S coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(Field field = {}) : field_(field) {}

  static Polynomial constant(const S& c) {
    return monomial(Monomial{}, c);
  }
  static Polynomial monomial(const Monomial& m, const S& c) {
    Polynomial p(Traits::field_of(c));
    if (!Traits::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(int i, Field field = {}, int power = 1) {
    return monomial(Monomial::variable(i, power), Traits::from_int(1, field));
  }
  static Polynomial from_int(long c, Field field = {}) {
    return monomial(Monomial{}, Traits::from_int(c, field));
  }

  /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
  static Polynomial from_terms(Field field, std::vector<Term> terms) {
    Polynomial p(field);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  Field field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const S& leading_coefficient() const { return leading_term().coeff; }

  S coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return lex_compare(t.mono, key) > 0; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Traits::zero(field_);
  }

  /// One past the largest variable index that occurs.
  int num_variables() const {
    int n = 0;
    for (const auto& t : terms_) n = std::max(n, t.mono.size());
    return n;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = terms_.front().mono.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
  }

  /// Degree of a homogeneous polynomial; throws otherwise.
  long degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    if (!is_homogeneous()) throw std::domain_error("polynomial is not homogeneous");
    return terms_.front().mono.degree();
  }

  bool has_laurent_terms() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.is_laurent(); });
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  Polynomial& operator+=(const Polynomial& b) { return *this = merge(*this, b, false); }
  Polynomial& operator-=(const Polynomial& b) { return *this = merge(*this, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_fields(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coeff);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coeff);
    std::unordered_map<Monomial, S, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) {
        auto [it, inserted] = acc.try_emplace(x.mono * y.mono, x.coeff);
        if (inserted)
          it->second *= y.coeff;
        else
          it->second += x.coeff * y.coeff;
      }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!Traits::is_zero(c)) out.push_back({m, std::move(c)});
    std::sort(out.begin(), out.end(), [](const Term& l, const Term& r) { return lex_compare(l.mono, r.mono) > 0; });
    Polynomial r(a.field_);
    r.terms_ = std::move(out);
    return r;
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend Polynomial operator*(const S& c, const Polynomial& p) { return p.times_term(Monomial{}, c); }
  friend Polynomial operator*(const Polynomial& p, const S& c) { return p.times_term(Monomial{}, c); }
  Polynomial& operator*=(const S& c) { return *this = times_term(Monomial{}, c); }

  Polynomial times_term(const Monomial& m, const S& c) const {
    Polynomial r(field_);
    if (Traits::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    // multiplying by a monomial preserves lex order
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    if (field_.p != 0) r.drop_zeros();
    return r;
  }

  /// this + c * m * other, the workhorse of echelon reduction.
  Polynomial add_scaled(const Polynomial& other, const S& c, const Monomial& m = Monomial{}) const {
    return *this + other.times_term(m, c);
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = from_int(1, field_);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Formal partial derivative in y_i (integer-exponent rule for y_0).
  Polynomial partial_derivative(int i) const {
    if (i < 0 || i >= kMaxVariables) throw std::out_of_range("partial_derivative: variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
      int e = t.mono[i];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(i, e - 1);
      out.push_back({m, t.coeff * Traits::from_int(e, field_)});
    }
    return from_terms(field_, std::move(out));
  }

  template <class F>
  Polynomial map_monomials(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({f(t.mono), t.coeff});
    return from_terms(field_, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  static void check_fields(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_))
      throw std::invalid_argument("field mismatch: " + to_string(a.field_) + " vs " + to_string(b.field_));
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_fields(a, b);
    Polynomial r(a.field_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), ie = a.terms_.end();
    auto j = b.terms_.begin(), je = b.terms_.end();
    while (i != ie || j != je) {
      int c = (i == ie) ? -1 : (j == je) ? 1 : lex_compare(i->mono, j->mono);
      if (c > 0) {
        r.terms_.push_back(*i++);
      } else if (c < 0) {
        r.terms_.push_back({j->mono, subtract ? S(-j->coeff) : j->coeff});
        ++j;
      } else {
        S s = subtract ? S(i->coeff - j->coeff) : S(i->coeff + j->coeff);
        if (!Traits::is_zero(s)) r.terms_.push_back({i->mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return Traits::is_zero(t.coeff); });
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& l, const Term& r) { return lex_compare(l.mono, r.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff += t.coeff;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return Traits::is_zero(t.coeff); });
    terms_ = std::move(out);
  }

  Field field_;
  std::vector<Term> terms_;
};

using QPoly = Polynomial<Rational>;
using FpPoly = Polynomial<ModP>;

/// Coefficient-wise image of a rational polynomial in F_p.
FpPoly reduce_mod_p(const QPoly& f, std::uint64_t p);

/// Variable naming used by the text format: `prefix` followed by
/// (index + offset), e.g. {"y", 0} gives y0.., {"z", 1} gives z1...
struct VariableNames {
  std::string prefix = "y";
  int offset = 0;
};

/// Text syntax error carrying the byte offset of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

std::string format(const QPoly& p, const VariableNames& names = {});
std::string format(const FpPoly& p, const VariableNames& names = {});
std::string format(const Monomial& m, const VariableNames& names = {});

QPoly parse_polynomial(std::string_view text, const VariableNames& names = {});
FpPoly parse_polynomial_mod_p(std::string_view text, std::uint64_t p, const VariableNames& names = {});

}  // namespace filicenter

#endif  // FILICENTER_POLYNOMIAL_HPP
