#ifndef FILICENTER_SL2_HPP
#define FILICENTER_SL2_HPP

#include <optional>
#include <stdexcept>

#include "filicenter/polynomial.hpp"

namespace filicenter {

/// The down operator x(f) = sum_{i>=0} y_i df/dy_{i+1}. Needs no ambient n;
/// Laurent powers of y_0 are constants for it.
template <class S>
Polynomial<S> down(const Polynomial<S>& f) {
  using Term = typename Polynomial<S>::Term;
  std::vector<Term> out;
  out.reserve(f.size() * 2);
  for (const auto& t : f.terms()) {
    for (int i = 1; i < kMaxVariables; ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(i, e - 1);
      m.set(i - 1, m[i - 1] + 1);
      out.push_back({m, t.coeff * ScalarTraits<S>::from_int(e, f.field())});
    }
  }
  return Polynomial<S>::from_terms(f.field(), std::move(out));
}

/// The raising operator f_n extended as a derivation:
/// y_i -> (i+1)(n-i) y_{i+1}.
template <class S>
Polynomial<S> raise(const Polynomial<S>& f, int n) {
  using Term = typename Polynomial<S>::Term;
  if (n < 0 || n >= kMaxVariables) throw std::out_of_range("raise: ambient index out of range");
  std::vector<Term> out;
  out.reserve(f.size() * 2);
  for (const auto& t : f.terms()) {
    if (t.mono.size() > n + 1) throw std::invalid_argument("raise: polynomial involves a variable beyond y" + std::to_string(n));
    for (int i = 0; i < n; ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(i, e - 1);
      m.set(i + 1, m[i + 1] + 1);
      long factor = long(e) * (i + 1) * (n - i);
      out.push_back({m, t.coeff * ScalarTraits<S>::from_int(factor, f.field())});
    }
  }
  return Polynomial<S>::from_terms(f.field(), std::move(out));
}

/// Common weight of all monomials, or nullopt when they differ.
template <class S>
std::optional<long> common_weight(const Polynomial<S>& f, int n) {
  if (f.is_zero()) return std::nullopt;
  long w = f.terms().front().mono.weight(n);
  for (const auto& t : f.terms())
    if (t.mono.weight(n) != w) return std::nullopt;
  return w;
}

/// Weight of an h-eigenvector; throws std::domain_error otherwise.
template <class S>
long weight(const Polynomial<S>& f, int n) {
  if (f.is_zero()) throw std::domain_error("weight: zero polynomial");
  if (!f.is_homogeneous()) throw std::domain_error("weight: polynomial is not homogeneous");
  auto w = common_weight(f, n);
  if (!w) throw std::domain_error("weight: not an eigenvector (monomial weights differ)");
  return *w;
}

template <class S>
bool is_invariant(const Polynomial<S>& f) {
  return down(f).is_zero();
}

/// Homogeneous polynomial of degree k in y_0..y_n, h-eigenvector of weight w.
struct WeightedHomogeneous {
  QPoly poly;
  int n = 0;
  long degree = 0;
  long weight = 0;

  /// Validates homogeneity and the eigenvector property.
  static WeightedHomogeneous certify(QPoly p, int n) {
    if (p.num_variables() > n + 1) throw std::invalid_argument("polynomial involves a variable beyond y" + std::to_string(n));
    WeightedHomogeneous r;
    r.degree = p.degree();
    r.weight = filicenter::weight(p, n);
    r.n = n;
    r.poly = std::move(p);
    return r;
  }
};

/// A WeightedHomogeneous element checked to lie in the kernel of down.
struct HomogeneousInvariant : WeightedHomogeneous {
  static HomogeneousInvariant certify(QPoly p, int n) {
    if (!is_invariant(p)) throw std::domain_error("polynomial is not invariant under the down operator");
    HomogeneousInvariant r;
    static_cast<WeightedHomogeneous&>(r) = WeightedHomogeneous::certify(std::move(p), n);
    return r;
  }
};

}  // namespace filicenter

#endif  // FILICENTER_SL2_HPP
