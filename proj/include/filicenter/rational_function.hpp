#ifndef FILICENTER_RATIONAL_FUNCTION_HPP
#define FILICENTER_RATIONAL_FUNCTION_HPP

#include <string>
#include <vector>

#include "filicenter/scalar.hpp"

namespace filicenter {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(long constant) : c_{Rational(constant)} { trim(); }  // NOLINT: implicit on purpose for literals

  static UPoly monomial(int degree, const Rational& c = 1);
  /// 1 - t^k
  static UPoly one_minus_power(int k);

  /// Degree, -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& t) const;
  double eval(double t) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder over Q.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Exact quotient; throws std::domain_error when b does not divide a.
  friend UPoly exact_div(const UPoly& a, const UPoly& b);

  UPoly monic() const;
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd over Q (zero only when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Element of Q(t): numerator/denominator coprime, denominator monic.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(UPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalFunction(UPoly num, UPoly den);

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == UPoly(1) && den_ == UPoly(1); }

  RationalFunction inverse() const;
  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  /// Cross-multiplication equality; valid for non-reduced operands too.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  Rational eval(const Rational& t) const;
  std::string str() const;

 private:
  UPoly num_, den_;
};

/// First `count` Taylor coefficients at t = 0; throws on a pole at 0.
std::vector<Rational> series_expand(const RationalFunction& r, int count);

/// `num / den` with the denominator written as a signed product of
/// (1 - t^k) factors when it is a product of cyclotomic polynomials.
std::string format_factored(const RationalFunction& r);

/// Dense polynomial in z with coefficients in Q(t).
class ZPolyOverRat {
 public:
  ZPolyOverRat() = default;
  explicit ZPolyOverRat(std::vector<RationalFunction> coeffs) : c_(std::move(coeffs)) { trim(); }
  static ZPolyOverRat constant(const RationalFunction& c) { return ZPolyOverRat({c}); }
  static ZPolyOverRat monomial(int degree, const RationalFunction& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RationalFunction>& coeffs() const { return c_; }
  RationalFunction operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : RationalFunction(0);
  }
  const RationalFunction& leading() const { return c_.back(); }

  friend ZPolyOverRat operator+(const ZPolyOverRat& a, const ZPolyOverRat& b);
  friend ZPolyOverRat operator-(const ZPolyOverRat& a, const ZPolyOverRat& b);
  friend ZPolyOverRat operator*(const ZPolyOverRat& a, const ZPolyOverRat& b);
  friend ZPolyOverRat operator*(const RationalFunction& s, const ZPolyOverRat& a);
  friend bool operator==(const ZPolyOverRat& a, const ZPolyOverRat& b);

  static void divmod(const ZPolyOverRat& a, const ZPolyOverRat& b, ZPolyOverRat& q, ZPolyOverRat& r);
  ZPolyOverRat mod(const ZPolyOverRat& m) const;
  ZPolyOverRat monic() const;
  std::string str() const;

 private:
  void trim();
  std::vector<RationalFunction> c_;
};

struct XgcdResult {
  ZPolyOverRat g, s, t;  // s*a + t*b = g, g monic
};

/// Extended Euclid in Q(t)[z]; throws std::invalid_argument when both are zero.
XgcdResult xgcd_z(const ZPolyOverRat& a, const ZPolyOverRat& b);

}  // namespace filicenter

#endif  // FILICENTER_RATIONAL_FUNCTION_HPP
