#ifndef FILICENTER_LINALG_HPP
#define FILICENTER_LINALG_HPP

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "filicenter/polynomial.hpp"

namespace filicenter {

/// Subspace of a polynomial space kept in echelon form: every stored
/// element is monic with a distinct leading monomial.
template <class S>
class EchelonSpace {
 public:
  using Poly = Polynomial<S>;

  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Poly>& rows() const { return rows_; }

  /// Reduces p until its leading monomial is not a pivot. The result is
  /// zero exactly when p lies in the span.
  Poly reduce(Poly p) const {
    while (!p.is_zero()) {
      auto it = pivot_.find(p.leading_monomial());
      if (it == pivot_.end()) break;
      p = p.add_scaled(rows_[it->second], -p.leading_coefficient());
    }
    return p;
  }

  /// Inserts p if it is independent; returns whether the dimension grew.
  bool insert(const Poly& p) {
    Poly r = reduce(p);
    if (r.is_zero()) return false;
    S inv = ScalarTraits<S>::from_int(1, r.field()) / r.leading_coefficient();
    r *= inv;
    pivot_.emplace(r.leading_monomial(), rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(const Poly& p) const { return reduce(p).is_zero(); }

  /// Reduced row echelon form sorted by decreasing leading monomial.
  std::vector<Poly> reduced_basis() const {
    std::vector<Poly> basis = rows_;
    std::sort(basis.begin(), basis.end(),
              [](const Poly& a, const Poly& b) { return lex_compare(a.leading_monomial(), b.leading_monomial()) > 0; });
    // eliminate each pivot from every other row, smallest pivots first
    for (std::size_t i = basis.size(); i-- > 0;) {
      const Monomial& piv = basis[i].leading_monomial();
      for (std::size_t j = 0; j < i; ++j) {
        S c = basis[j].coefficient(piv);
        if (!ScalarTraits<S>::is_zero(c)) basis[j] = basis[j].add_scaled(basis[i], -c);
      }
    }
    return basis;
  }

 private:
  std::vector<Poly> rows_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivot_;
};

/// Incremental row echelon form of dense rational vectors.
class DenseEchelon {
 public:
  explicit DenseEchelon(std::size_t width) : width_(width) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }

  /// Inserts v if independent of the rows so far.
  bool insert(std::vector<Rational> v);

 private:
  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a dense rational matrix given as rows.
std::size_t rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace filicenter

#endif  // FILICENTER_LINALG_HPP
