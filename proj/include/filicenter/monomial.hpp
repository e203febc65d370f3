#ifndef FILICENTER_MONOMIAL_HPP
#define FILICENTER_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace filicenter {

/// Number of variables a monomial can carry (y_0 .. y_15).
inline constexpr int kMaxVariables = 16;

/// Exponent vector over y_0..y_{kMaxVariables-1}. Only the exponent of
/// variable 0 may be negative. Unused trailing slots are zero, so the
/// canonical length is `size()`.
class Monomial {
 public:
  using Exponent = std::int16_t;

  Monomial() { exps_.fill(0); }

  static Monomial variable(int i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  static Monomial from_exponents(std::span<const int> e) {
    if (e.size() > static_cast<std::size_t>(kMaxVariables))
      throw std::out_of_range("Monomial: too many variables");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m.set(static_cast<int>(i), e[i]);
    return m;
  }

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }

  void set(int i, long value) {
    if (i < 0 || i >= kMaxVariables) throw std::out_of_range("Monomial: variable index out of range");
    if (value < 0 && i != 0) throw std::domain_error("Monomial: negative exponent on y" + std::to_string(i));
    if (value > std::numeric_limits<Exponent>::max() || value < std::numeric_limits<Exponent>::min())
      throw std::overflow_error("Monomial: exponent overflow");
    exps_[static_cast<std::size_t>(i)] = static_cast<Exponent>(value);
  }

  /// One past the highest variable with a nonzero exponent.
  int size() const {
    for (int i = kMaxVariables - 1; i >= 0; --i)
      if (exps_[static_cast<std::size_t>(i)] != 0) return i + 1;
    return 0;
  }

  long degree() const {
    long d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  /// sl2 weight sum_i a_i (n - 2i).
  long weight(int n) const {
    long w = 0;
    for (int i = 0; i < kMaxVariables; ++i) w += static_cast<long>(exps_[static_cast<std::size_t>(i)]) * (n - 2 * i);
    return w;
  }

  bool is_laurent() const { return exps_[0] < 0; }

  /// True when `other` divides this monomial in the Laurent-in-y0 sense
  /// (y0 always divides).
  bool divisible_by(const Monomial& other) const {
    for (int i = 1; i < kMaxVariables; ++i)
      if (other.exps_[static_cast<std::size_t>(i)] > exps_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.set(i, long(a[i]) + b[i]);
    return r;
  }

  /// Quotient a / b; caller guarantees divisibility outside y0.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.set(i, long(a[i]) - b[i]);
    return r;
  }

  Monomial pow(long e) const {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.set(i, long(exps_[static_cast<std::size_t>(i)]) * e);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lexicographic comparison with y_{max} most significant and y_0 least.
  friend int lex_compare(const Monomial& a, const Monomial& b) {
    for (int i = kMaxVariables - 1; i >= 0; --i) {
      auto x = a.exps_[static_cast<std::size_t>(i)], y = b.exps_[static_cast<std::size_t>(i)];
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
      h ^= static_cast<std::uint16_t>(e);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::array<Exponent, kMaxVariables> exps_;
};

/// Orders monomials from lex-greatest to lex-smallest.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace filicenter

#endif  // FILICENTER_MONOMIAL_HPP
