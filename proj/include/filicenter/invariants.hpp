#ifndef FILICENTER_INVARIANTS_HPP
#define FILICENTER_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "filicenter/polynomial.hpp"
#include "filicenter/sl2.hpp"
#include "filicenter/transvect.hpp"

namespace filicenter {

/// Raised when a computation would exceed its configured size bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultMonomialBound = 200000;

/// C(n + k, n), the dimension of the degree-k part of F[y_0..y_n].
std::uint64_t homogeneous_dimension(int n, int k);

/// Degree-k monomials in y_0..y_n of weight w, in increasing lex order.
std::vector<Monomial> weight_space_monomials(int n, int k, long w);

/// A transvectant-chain element of Z_{n,k} together with how it was built.
struct SpanElement {
  QPoly poly;
  long weight = 0;
  RecipePtr recipe;
};

struct GradedBasis {
  int n = 0;
  int k = 0;
  /// Reduced echelon basis sorted by decreasing leading monomial.
  std::vector<HomogeneousInvariant> elements;
  /// basis_span only: the selected chain elements, one per basis vector.
  std::vector<SpanElement> chain;

  std::size_t dimension() const { return elements.size(); }
};

/// Kernel of down on the degree-k homogeneous polynomials, one weight
/// space at a time. Cross-checked against delta_partition.
GradedBasis basis_kernel(int n, int k, std::uint64_t monomial_bound = kDefaultMonomialBound);

/// Characteristic-p variant (experimental): requires an odd prime p > k.
std::vector<FpPoly> basis_kernel_mod_p(int n, int k, std::uint64_t p,
                                       std::uint64_t monomial_bound = kDefaultMonomialBound);

struct SpanOptions {
  bool reverse_order = false;  // iterate previous-level elements and d backwards
  std::uint64_t monomial_bound = kDefaultMonomialBound;
};

/// Builds Z_{n,1}, Z_{n,2}, ... from the candidates z o_d y0, stopping each
/// weight space once it reaches its sl2 multiplicity.
class SpanBuilder {
 public:
  SpanBuilder(int n, SpanOptions options = {});

  int n() const { return n_; }
  int degree() const { return static_cast<int>(levels_.size()); }
  /// Chain elements of Z_{n,k}, grouped by weight.
  const std::map<long, std::vector<SpanElement>>& level(int k) const;
  /// Leading monomials of an echelon basis of Z_{n,k} at weight w.
  const std::vector<Monomial>& pivots(int k, long w) const;

  /// Computes the next degree; throws std::logic_error when a weight space
  /// cannot be filled.
  void advance();
  void advance_to(int k);

  /// Drops stored chain elements below degree k to save memory.
  void release_below(int k);

 private:
  struct Level {
    std::map<long, std::vector<SpanElement>> by_weight;
    std::map<long, std::vector<Monomial>> pivots;
  };
  int n_;
  SpanOptions options_;
  std::vector<Level> levels_;
};

GradedBasis basis_span(int n, int k, SpanOptions options = {});

struct GeneratorRecord {
  std::string name;
  int degree = 0;
  long weight = 0;
  RecipePtr recipe;
  QPoly poly;
};

struct MinimalGeneratorsOptions {
  bool reverse_order = false;
  std::uint64_t monomial_bound = kDefaultMonomialBound;
};

struct MinimalGenerators {
  int n = 0;
  int maxdeg = 0;
  std::vector<GeneratorRecord> generators;
  std::map<int, int> profile;          // degree -> number of new generators
  std::map<int, std::size_t> dimensions;  // degree -> dim Z_{n,k}
  std::string warning;
};

/// New generators in degree k are chain elements independent of the
/// degree-k products g * b (g an earlier generator, b in Z_{n,k - deg g}).
MinimalGenerators minimal_generators(int n, int maxdeg, MinimalGeneratorsOptions options = {});

/// Polynomial in Z_1..Z_n stored as a QPoly whose variable i-1 stands for
/// Z_i; only Z_1 may carry a negative exponent.
using ZExpression = QPoly;

inline VariableNames z_names() { return {"z", 1}; }

/// Expresses an invariant in F[y_0^{-1}, z_1..z_n] by cancelling leading
/// monomials against products of z_2..z_n.
ZExpression rewrite_in_z(const QPoly& f, int n);

/// Substitutes Z_i -> z_i (Z_1 -> y0), giving a Laurent polynomial in y0.
QPoly substitute_z(const ZExpression& e, int n);

/// Text form with the common negative Z_1 power factored out, e.g.
/// "(z2^3 + z3^2)*z1^-2".
std::string format_z_expression(const ZExpression& e);

struct IndependenceVerdict {
  bool independent = false;
  std::string method;  // "jacobian-rank", "relation-search" or "jacobian-rank-deficient"
  std::size_t rank = 0;
  std::size_t count = 0;
  int attempts = 0;
  std::uint64_t seed = 0;
  std::optional<QPoly> relation;  // in p1..pm when found
};

inline VariableNames relation_names() { return {"p", 1}; }

struct IndependenceOptions {
  std::uint64_t seed = 0x5eed;
  int attempts = 3;
  int relation_degree = 4;
};

/// Jacobian rank at random integer points; a rank deficit triggers a
/// degree-bounded search for a polynomial relation among the inputs.
IndependenceVerdict independence_check(const std::vector<QPoly>& polys, int n, IndependenceOptions options = {});

}  // namespace filicenter

#endif  // FILICENTER_INVARIANTS_HPP
