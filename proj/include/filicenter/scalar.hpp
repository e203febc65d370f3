#ifndef FILICENTER_SCALAR_HPP
#define FILICENTER_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace filicenter {

using Integer = mpz_class;
using Rational = mpq_class;

/// Residue modulo an odd prime p < 2^62, kept in [0, p).
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("ModP: modulus must be an odd prime");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }

  static ModP from_residue(std::uint64_t v, std::uint64_t p) {
    ModP m;
    m.p_ = p;
    m.v_ = v % p;
    return m;
  }

  /// Reduces a / b; throws std::domain_error when p divides b.
  static ModP from_rational(const Rational& q, std::uint64_t p) {
    Integer pp(std::to_string(p));
    Integer num = q.get_num() % pp;
    if (num < 0) num += pp;
    Integer den = q.get_den() % pp;
    if (den == 0) throw std::domain_error("denominator divisible by p");
    ModP a = from_residue(num.get_ui(), p);
    ModP b = from_residue(den.get_ui(), p);
    return a / b;
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
    // extended Euclid on signed 128-bit values
    __int128 a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      __int128 q = a / b;
      __int128 t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    __int128 r = x0 % static_cast<__int128>(p_);
    if (r < 0) r += p_;
    return from_residue(static_cast<std::uint64_t>(r), p_);
  }

  ModP& operator+=(const ModP& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  ModP operator-() const { return from_residue(v_ == 0 ? 0 : p_ - v_, p_); }

  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

 private:
  void check(const ModP& o) const {
    if (o.p_ != p_) throw std::invalid_argument("ModP: modulus mismatch");
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 3;
};

/// Field descriptor carried by every polynomial; p == 0 means Q.
struct Field {
  std::uint64_t p = 0;
  bool is_rational() const { return p == 0; }
  friend bool operator==(const Field&, const Field&) = default;
};

inline std::string to_string(const Field& f) {
  return f.is_rational() ? std::string("Q") : "F_" + std::to_string(f.p);
}

/// Per-scalar glue used by the generic polynomial code.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational zero(Field) { return Rational(0); }
  static Rational from_int(long v, Field) { return Rational(v); }
  static Rational from_rational(const Rational& q, Field) { return q; }
  static bool is_zero(const Rational& s) { return sgn(s) == 0; }
  static bool is_one(const Rational& s) { return s == 1; }
  static bool is_negative(const Rational& s) { return sgn(s) < 0; }
  static std::string to_string(const Rational& s) { return s.get_str(); }
  static Field field_of(const Rational&) { return Field{}; }
};

template <>
struct ScalarTraits<ModP> {
  static ModP zero(Field f) { return ModP::from_residue(0, f.p); }
  static ModP from_int(long v, Field f) { return ModP(v, f.p); }
  static ModP from_rational(const Rational& q, Field f) { return ModP::from_rational(q, f.p); }
  static bool is_zero(const ModP& s) { return s.value() == 0; }
  static bool is_one(const ModP& s) { return s.value() == 1; }
  static bool is_negative(const ModP&) { return false; }
  static std::string to_string(const ModP& s) { return std::to_string(s.value()); }
  static Field field_of(const ModP& s) { return Field{s.modulus()}; }
};

inline bool is_probable_prime(std::uint64_t p) {
  Integer z(std::to_string(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace filicenter

#endif  // FILICENTER_SCALAR_HPP
