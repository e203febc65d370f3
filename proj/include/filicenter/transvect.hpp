#ifndef FILICENTER_TRANSVECT_HPP
#define FILICENTER_TRANSVECT_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "filicenter/polynomial.hpp"
#include "filicenter/sl2.hpp"

namespace filicenter {

/// Normalized lowering ladder z_0 = z, z_k = raise(z_{k-1}) / (k (w - k + 1)),
/// so that down(z_k) = z_{k-1}. Returns z_0..z_depth. Characteristic 0.
std::vector<QPoly> lowering_ladder(const QPoly& z, long weight, int n, int depth);

/// k-th ladder element of an invariant; throws when k > weight(z).
QPoly lower(const HomogeneousInvariant& z, int k);

/// Transvectant sum_{i=0}^{d} (-1)^i z1_i z2_{d-i} built from precomputed
/// ladders (each of length at least d+1). No validation.
QPoly transvectant_from_ladders(const std::vector<QPoly>& left, const std::vector<QPoly>& right, int d);

/// z o_d y0, using that the ladder of y0 is y0, y1, y2, ...
QPoly transvectant_with_y0(const std::vector<QPoly>& left_ladder, int d, Field field = {});

/// Checked transvectant of two invariant weight vectors.
HomogeneousInvariant circ(const HomogeneousInvariant& a, const HomogeneousInvariant& b, int d);

/// First generator sequence: z_1 = y0, even i: y0 o_i y0, odd i: y0 o_1 (y0 o_{i-1} y0).
HomogeneousInvariant z_gen(int i, int n);

/// Second generator sequence w_i = (-1)^i/i! y1^i + sum_{j<i} (-1)^j/j! y0^{i-1-j} y1^j y_{i-j}.
QPoly w_gen(int i);

/// Highest weights of the components of U_m (x) U_n.
std::vector<int> clebsch_gordan(int m, int n);

// ---- recipes ----

class RecipeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Generator expression: y0, named earlier generators, products, powers and
/// left-normed `o_d y0` chains.
struct Recipe {
  enum class Kind { kY0, kName, kProduct, kPower, kCirc };
  Kind kind = Kind::kY0;
  std::string name;                               // kName
  std::vector<std::shared_ptr<const Recipe>> children;  // kProduct factors, kPower/kCirc operand
  int exponent = 1;                               // kPower
  int d = 0;                                      // kCirc: children[0] o_d y0

  static std::shared_ptr<const Recipe> y0();
  static std::shared_ptr<const Recipe> named(std::string name);
  static std::shared_ptr<const Recipe> product(std::vector<std::shared_ptr<const Recipe>> factors);
  static std::shared_ptr<const Recipe> power(std::shared_ptr<const Recipe> base, int e);
  static std::shared_ptr<const Recipe> circ_y0(std::shared_ptr<const Recipe> left, int d);

  std::string str() const;
};

using RecipePtr = std::shared_ptr<const Recipe>;
using GeneratorEnvironment = std::map<std::string, QPoly>;

/// Parses `y0 o_2 y0 o_1 y0`, `z3^2 o_3 y0`, `z3 z12 o_4 y0`; also accepts
/// the unicode `∘` and LaTeX forms such as `z_{3}^{2}\circ_{3}y_0`.
RecipePtr parse_recipe(std::string_view text);

/// Evaluates a recipe at ambient index n. Every o_d node is checked against
/// 0 <= d <= min(weight(left), n); failures name the offending node.
HomogeneousInvariant eval_recipe(const Recipe& r, int n, const GeneratorEnvironment& env = {});

/// Formal degree (y0 counts 1, names use the environment).
long recipe_degree(const Recipe& r, const GeneratorEnvironment& env = {});

}  // namespace filicenter

#endif  // FILICENTER_TRANSVECT_HPP
