#include "filicenter/transvect.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace filicenter {

std::vector<QPoly> lowering_ladder(const QPoly& z, long weight, int n, int depth) {
  if (depth > weight) throw std::domain_error("lowering ladder deeper than the weight");
  std::vector<QPoly> ladder;
  ladder.reserve(static_cast<std::size_t>(depth) + 1);
  ladder.push_back(z);
  for (int k = 1; k <= depth; ++k) {
    Rational scale(1, k * (weight - k + 1));
    ladder.push_back(raise(ladder.back(), n) * scale);
  }
  return ladder;
}

QPoly lower(const HomogeneousInvariant& z, int k) {
  if (k < 0) throw std::domain_error("lower: negative step");
  if (k > z.weight)
    throw std::domain_error("lower: step " + std::to_string(k) + " exceeds weight " + std::to_string(z.weight));
  return lowering_ladder(z.poly, z.weight, z.n, k).back();
}

QPoly transvectant_from_ladders(const std::vector<QPoly>& left, const std::vector<QPoly>& right, int d) {
  QPoly acc(left.front().field());
  for (int i = 0; i <= d; ++i) {
    QPoly term = left[static_cast<std::size_t>(i)] * right[static_cast<std::size_t>(d - i)];
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

QPoly transvectant_with_y0(const std::vector<QPoly>& left_ladder, int d, Field field) {
  QPoly acc(field);
  Rational one(1);
  for (int i = 0; i <= d; ++i) {
    Rational c = i % 2 == 0 ? one : Rational(-1);
    acc += left_ladder[static_cast<std::size_t>(i)].times_term(Monomial::variable(d - i), c);
  }
  return acc;
}

HomogeneousInvariant circ(const HomogeneousInvariant& a, const HomogeneousInvariant& b, int d) {
  if (a.n != b.n) throw std::invalid_argument("circ: operands live in different ambient rings");
  if (!is_invariant(a.poly) || !is_invariant(b.poly)) throw std::domain_error("circ: operand is not invariant");
  if (d < 0 || d > std::min(a.weight, b.weight))
    throw std::domain_error("circ: d = " + std::to_string(d) + " outside [0, min(" + std::to_string(a.weight) + ", " +
                            std::to_string(b.weight) + ")]");
  auto la = lowering_ladder(a.poly, a.weight, a.n, d);
  auto lb = lowering_ladder(b.poly, b.weight, b.n, d);
  HomogeneousInvariant r;
  r.poly = transvectant_from_ladders(la, lb, d);
  r.n = a.n;
  r.degree = a.degree + b.degree;
  r.weight = a.weight + b.weight - 2L * d;
  if (!is_invariant(r.poly)) throw std::logic_error("circ: result is not invariant");
  if (!r.poly.is_zero() && weight(r.poly, r.n) != r.weight) throw std::logic_error("circ: result has the wrong weight");
  return r;
}

namespace {

HomogeneousInvariant y0_invariant(int n) {
  return HomogeneousInvariant::certify(QPoly::variable(0), n);
}

}  // namespace

HomogeneousInvariant z_gen(int i, int n) {
  if (i < 1) throw std::domain_error("z_gen: index must be at least 1");
  if (i > n) throw std::domain_error("z_gen: index " + std::to_string(i) + " exceeds n = " + std::to_string(n));
  auto y0 = y0_invariant(n);
  if (i == 1) return y0;
  if (i % 2 == 0) return circ(y0, y0, i);
  return circ(y0, circ(y0, y0, i - 1), 1);
}

QPoly w_gen(int i) {
  if (i < 1) throw std::domain_error("w_gen: index must be at least 1");
  if (i == 1) return QPoly::variable(0);
  Rational factorial(1);
  std::vector<QPoly::Term> terms;
  for (int j = 0; j < i; ++j) {
    if (j > 0) factorial *= j;
    Monomial m;
    m.set(0, i - 1 - j);
    m.set(1, j);
    m.set(i - j, m[i - j] + 1);
    Rational c = (j % 2 == 0 ? Rational(1) : Rational(-1)) / factorial;
    terms.push_back({m, c});
  }
  factorial *= i;
  terms.push_back({Monomial::variable(1, i), (i % 2 == 0 ? Rational(1) : Rational(-1)) / factorial});
  return QPoly::from_terms(Field{}, std::move(terms));
}

std::vector<int> clebsch_gordan(int m, int n) {
  if (m < 0 || n < 0) throw std::domain_error("clebsch_gordan: negative highest weight");
  std::vector<int> out;
  for (int i = 0; i <= std::min(m, n); ++i) out.push_back(m + n - 2 * i);
  return out;
}

// ---- recipes ----

RecipePtr Recipe::y0() { return std::make_shared<const Recipe>(); }

RecipePtr Recipe::named(std::string name) {
  auto r = std::make_shared<Recipe>();
  r->kind = Kind::kName;
  r->name = std::move(name);
  return r;
}

RecipePtr Recipe::product(std::vector<RecipePtr> factors) {
  if (factors.size() == 1) return factors.front();
  auto r = std::make_shared<Recipe>();
  r->kind = Kind::kProduct;
  r->children = std::move(factors);
  return r;
}

RecipePtr Recipe::power(RecipePtr base, int e) {
  if (e < 1) throw RecipeError("recipe power must be positive");
  if (e == 1) return base;
  auto r = std::make_shared<Recipe>();
  r->kind = Kind::kPower;
  r->children = {std::move(base)};
  r->exponent = e;
  return r;
}

RecipePtr Recipe::circ_y0(RecipePtr left, int d) {
  auto r = std::make_shared<Recipe>();
  r->kind = Kind::kCirc;
  r->children = {std::move(left)};
  r->d = d;
  return r;
}

std::string Recipe::str() const {
  switch (kind) {
    case Kind::kY0:
      return "y0";
    case Kind::kName:
      return name;
    case Kind::kPower: {
      const Recipe& b = *children[0];
      bool simple = b.kind == Kind::kY0 || b.kind == Kind::kName;
      return (simple ? b.str() : "(" + b.str() + ")") + "^" + std::to_string(exponent);
    }
    case Kind::kProduct: {
      std::string s;
      for (const auto& c : children) {
        if (!s.empty()) s += " ";
        s += c->kind == Kind::kCirc ? "(" + c->str() + ")" : c->str();
      }
      return s;
    }
    case Kind::kCirc:
      return children[0]->str() + " o_" + std::to_string(d) + " y0";
  }
  return {};
}

namespace {

/// Maps LaTeX and unicode spellings onto the plain ASCII grammar.
std::string normalize_recipe_text(std::string_view in) {
  std::string s(in);
  auto replace_all = [&s](const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
  };
  replace_all("\\circ", " o");
  replace_all("\xE2\x88\x98", " o");  // U+2218 ring operator
  std::string out;
  for (char c : s)
    if (c != '{' && c != '}') out += c;
  return out;
}

class RecipeParser {
 public:
  explicit RecipeParser(std::string text) : s_(std::move(text)) {}

  RecipePtr parse() {
    RecipePtr r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("recipe: " + what, pos_);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_circ() {
    skip();
    return pos_ + 1 < s_.size() && s_[pos_] == 'o' && s_[pos_ + 1] == '_';
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  RecipePtr expr() {
    RecipePtr left = atom();
    while (at_circ()) {
      pos_ += 2;
      int d = integer();
      skip();
      RecipePtr right = primary();
      if (right->kind != Recipe::Kind::kY0) fail("right operand of o_d must be y0");
      left = Recipe::circ_y0(left, d);
    }
    return left;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    if (c == '(') return true;
    if (at_circ()) return false;
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
  }

  RecipePtr atom() {
    std::vector<RecipePtr> factors;
    if (!starts_primary()) fail("expected y0, a generator name or '('");
    factors.push_back(powered());
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        factors.push_back(powered());
        continue;
      }
      if (!starts_primary()) break;
      factors.push_back(powered());
    }
    return Recipe::product(std::move(factors));
  }

  RecipePtr powered() {
    RecipePtr base = primary();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      base = Recipe::power(base, integer());
    }
    return base;
  }

  RecipePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of recipe");
    if (s_[pos_] == '(') {
      ++pos_;
      RecipePtr inner = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    std::string name;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c))) {
        name += c;
        ++pos_;
      } else if (c == '_' && !name.empty() && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;  // z_3 -> z3, y_0 -> y0
      } else {
        break;
      }
    }
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
      pos_ = start;
      fail("expected identifier");
    }
    if (name == "y0") return Recipe::y0();
    return Recipe::named(name);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

QPoly eval_poly(const Recipe& r, int n, const GeneratorEnvironment& env) {
  switch (r.kind) {
    case Recipe::Kind::kY0:
      return QPoly::variable(0);
    case Recipe::Kind::kName: {
      auto it = env.find(r.name);
      if (it == env.end()) throw RecipeError("recipe: unknown generator '" + r.name + "'");
      return it->second;
    }
    case Recipe::Kind::kPower:
      return eval_poly(*r.children[0], n, env).pow(static_cast<unsigned>(r.exponent));
    case Recipe::Kind::kProduct: {
      QPoly acc = QPoly::from_int(1);
      for (const auto& c : r.children) acc *= eval_poly(*c, n, env);
      return acc;
    }
    case Recipe::Kind::kCirc: {
      QPoly left = eval_poly(*r.children[0], n, env);
      if (left.is_zero()) throw RecipeError("recipe: left operand of '" + r.str() + "' evaluates to zero");
      if (!is_invariant(left)) throw RecipeError("recipe: left operand of '" + r.str() + "' is not invariant");
      long w;
      try {
        w = weight(left, n);
      } catch (const std::domain_error& e) {
        throw RecipeError("recipe: left operand of '" + r.str() + "': " + e.what());
      }
      if (r.d < 0 || r.d > std::min<long>(w, n))
        throw RecipeError("recipe: node '" + r.str() + "' has d = " + std::to_string(r.d) + " but min(weight, n) = " +
                          std::to_string(std::min<long>(w, n)));
      return transvectant_with_y0(lowering_ladder(left, w, n, r.d), r.d);
    }
  }
  throw std::logic_error("recipe: unknown node kind");
}

}  // namespace

RecipePtr parse_recipe(std::string_view text) { return RecipeParser(normalize_recipe_text(text)).parse(); }

long recipe_degree(const Recipe& r, const GeneratorEnvironment& env) {
  switch (r.kind) {
    case Recipe::Kind::kY0:
      return 1;
    case Recipe::Kind::kName: {
      auto it = env.find(r.name);
      if (it == env.end()) throw RecipeError("recipe: unknown generator '" + r.name + "'");
      return it->second.degree();
    }
    case Recipe::Kind::kPower:
      return r.exponent * recipe_degree(*r.children[0], env);
    case Recipe::Kind::kProduct: {
      long d = 0;
      for (const auto& c : r.children) d += recipe_degree(*c, env);
      return d;
    }
    case Recipe::Kind::kCirc:
      return recipe_degree(*r.children[0], env) + 1;
  }
  return 0;
}

HomogeneousInvariant eval_recipe(const Recipe& r, int n, const GeneratorEnvironment& env) {
  QPoly p = eval_poly(r, n, env);
  if (p.is_zero()) throw RecipeError("recipe: '" + r.str() + "' evaluates to zero");
  auto inv = HomogeneousInvariant::certify(std::move(p), n);
  if (inv.degree != recipe_degree(r, env)) throw std::logic_error("recipe: degree mismatch");
  return inv;
}

}  // namespace filicenter
