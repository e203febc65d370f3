#include "filicenter/invariants.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_map>

#include "filicenter/hilbert.hpp"
#include "filicenter/linalg.hpp"

namespace filicenter {

std::uint64_t homogeneous_dimension(int n, int k) {
  // C(n + k, n) with saturation
  unsigned __int128 r = 1;
  for (int i = 1; i <= n; ++i) {
    r = r * static_cast<unsigned>(k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<Monomial> weight_space_monomials(int n, int k, long w) {
  std::vector<Monomial> out;
  const long twice = long(n) * k - w;
  if (n < 0 || k < 0 || twice < 0 || twice % 2 != 0) return out;
  const long target = twice / 2;  // sum of i * a_i
  std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
  // assign exponents from y_n down to y_1; y_0 takes the remaining degree
  std::function<void(int, int, long)> rec = [&](int i, int deg_left, long sum_left) {
    if (i == 0) {
      if (sum_left == 0) {
        e[0] = deg_left;
        out.push_back(Monomial::from_exponents(e));
      }
      return;
    }
    for (int a = 0; a <= deg_left && long(a) * i <= sum_left; ++a) {
      // remaining variables have index <= i - 1
      if (sum_left - long(a) * i > long(deg_left - a) * (i - 1)) continue;
      e[static_cast<std::size_t>(i)] = a;
      rec(i - 1, deg_left - a, sum_left - long(a) * i);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(n, k, target);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) < 0; });
  return out;
}

namespace {

void check_bound(int n, int k, std::uint64_t bound) {
  std::uint64_t dim = homogeneous_dimension(n, k);
  if (dim > bound)
    throw ResourceLimitError("degree-" + std::to_string(k) + " space of F[y0..y" + std::to_string(n) + "] has " +
                             std::to_string(dim) + " monomials, above the bound " + std::to_string(bound));
}

/// Kernel of down on one weight space, processed in increasing lex order so
/// that each kernel element has the newly added monomial as leading term.
template <class S>
std::vector<Polynomial<S>> kernel_weight_space(int n, int k, long w, Field field) {
  using Poly = Polynomial<S>;
  struct Row {
    Poly image, source;
  };
  std::vector<Row> rows;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivot;
  std::vector<Poly> kernel;
  const S one = ScalarTraits<S>::from_int(1, field);
  for (const Monomial& m : weight_space_monomials(n, k, w)) {
    Poly src = Poly::monomial(m, one);
    Poly img = down(src);
    while (!img.is_zero()) {
      auto it = pivot.find(img.leading_monomial());
      if (it == pivot.end()) break;
      S c = -img.leading_coefficient();
      img = img.add_scaled(rows[it->second].image, c);
      src = src.add_scaled(rows[it->second].source, c);
    }
    if (img.is_zero()) {
      kernel.push_back(std::move(src));
      continue;
    }
    S inv = one / img.leading_coefficient();
    img *= inv;
    src *= inv;
    pivot.emplace(img.leading_monomial(), rows.size());
    rows.push_back({std::move(img), std::move(src)});
  }
  return kernel;
}

template <class S>
std::vector<Polynomial<S>> reduced(const std::vector<Polynomial<S>>& polys) {
  EchelonSpace<S> space;
  for (const auto& p : polys) space.insert(p);
  return space.reduced_basis();
}

void sort_by_leading(std::vector<HomogeneousInvariant>& v) {
  std::sort(v.begin(), v.end(), [](const HomogeneousInvariant& a, const HomogeneousInvariant& b) {
    return lex_compare(a.poly.leading_monomial(), b.poly.leading_monomial()) > 0;
  });
}

}  // namespace

GradedBasis basis_kernel(int n, int k, std::uint64_t monomial_bound) {
  if (n < 1 || k < 0) throw std::domain_error("basis_kernel: needs n >= 1 and k >= 0");
  check_bound(n, k, monomial_bound);
  GradedBasis out;
  out.n = n;
  out.k = k;
  // highest weight vectors have weight >= 0
  for (long w = long(n) * k; w >= 0; w -= 2)
    for (auto& p : reduced(kernel_weight_space<Rational>(n, k, w, Field{})))
      out.elements.push_back(HomogeneousInvariant::certify(std::move(p), n));
  sort_by_leading(out.elements);
  if (Integer(static_cast<unsigned long>(out.elements.size())) != delta_partition(n, k))
    throw std::logic_error("basis_kernel: dimension disagrees with delta_partition");
  return out;
}

std::vector<FpPoly> basis_kernel_mod_p(int n, int k, std::uint64_t p, std::uint64_t monomial_bound) {
  if (n < 1 || k < 0) throw std::domain_error("basis_kernel_mod_p: needs n >= 1 and k >= 0");
  if (!is_probable_prime(p) || p == 2 || p <= static_cast<std::uint64_t>(k))
    throw std::domain_error("basis_kernel_mod_p: needs an odd prime p > k");
  check_bound(n, k, monomial_bound);
  std::vector<FpPoly> out;
  for (long w = long(n) * k; w >= -long(n) * k; w -= 2)
    for (auto& q : reduced(kernel_weight_space<ModP>(n, k, w, Field{p}))) out.push_back(std::move(q));
  std::sort(out.begin(), out.end(),
            [](const FpPoly& a, const FpPoly& b) { return lex_compare(a.leading_monomial(), b.leading_monomial()) > 0; });
  return out;
}

SpanBuilder::SpanBuilder(int n, SpanOptions options) : n_(n), options_(options) {
  if (n < 1) throw std::domain_error("SpanBuilder: n must be at least 1");
}

const std::map<long, std::vector<SpanElement>>& SpanBuilder::level(int k) const {
  if (k < 1 || k > degree()) throw std::out_of_range("SpanBuilder: degree " + std::to_string(k) + " not built");
  return levels_[static_cast<std::size_t>(k - 1)].by_weight;
}

const std::vector<Monomial>& SpanBuilder::pivots(int k, long w) const {
  static const std::vector<Monomial> empty;
  if (k < 1 || k > degree()) throw std::out_of_range("SpanBuilder: degree " + std::to_string(k) + " not built");
  const auto& piv = levels_[static_cast<std::size_t>(k - 1)].pivots;
  auto it = piv.find(w);
  return it == piv.end() ? empty : it->second;
}

void SpanBuilder::advance() {
  const int k = degree() + 1;
  check_bound(n_, k, options_.monomial_bound);
  Level lvl;
  if (k == 1) {
    lvl.by_weight[n_].push_back({QPoly::variable(0), n_, Recipe::y0()});
    lvl.pivots[n_] = {Monomial::variable(0)};
    levels_.push_back(std::move(lvl));
    return;
  }
  auto mult = weight_multiplicities(n_, k);
  std::map<long, std::size_t> target;
  std::size_t total = 0;
  for (const auto& [w, m] : mult) {
    if (w < 0) continue;
    auto above = mult.find(w + 2);
    Integer t = m - (above == mult.end() ? Integer(0) : above->second);
    if (t > 0) {
      target[w] = t.get_ui();
      total += t.get_ui();
    }
  }
  std::vector<const SpanElement*> order;
  for (const auto& [w, elems] : levels_.back().by_weight)
    for (const auto& e : elems) order.push_back(&e);
  if (options_.reverse_order) std::reverse(order.begin(), order.end());

  std::map<long, EchelonSpace<Rational>> spaces;
  std::size_t filled = 0;
  for (const SpanElement* z : order) {
    if (filled == total) break;
    const int dmax = static_cast<int>(std::min<long>(z->weight, n_));
    bool wanted = false;
    for (int d = 0; d <= dmax && !wanted; ++d) {
      auto t = target.find(z->weight + n_ - 2 * d);
      wanted = t != target.end() && spaces[t->first].dimension() < t->second;
    }
    if (!wanted) continue;
    std::vector<QPoly> ladder = lowering_ladder(z->poly, z->weight, n_, dmax);
    for (int i = 0; i <= dmax; ++i) {
      const int d = options_.reverse_order ? dmax - i : i;
      const long wt = z->weight + n_ - 2 * d;
      auto t = target.find(wt);
      if (t == target.end() || spaces[wt].dimension() >= t->second) continue;
      QPoly c = transvectant_with_y0(ladder, d);
      if (!spaces[wt].insert(c)) continue;
      lvl.by_weight[wt].push_back({std::move(c), wt, Recipe::circ_y0(z->recipe, d)});
      ++filled;
    }
  }
  if (filled != total)
    throw std::logic_error("SpanBuilder: transvectant candidates span " + std::to_string(filled) + " of " +
                           std::to_string(total) + " dimensions in degree " + std::to_string(k));
  for (const auto& [w, space] : spaces) {
    auto& piv = lvl.pivots[w];
    for (const auto& row : space.rows()) piv.push_back(row.leading_monomial());
  }
  levels_.push_back(std::move(lvl));
}

void SpanBuilder::advance_to(int k) {
  while (degree() < k) advance();
}

void SpanBuilder::release_below(int k) {
  for (int j = 1; j < k && j <= degree(); ++j) levels_[static_cast<std::size_t>(j - 1)].by_weight.clear();
}

GradedBasis basis_span(int n, int k, SpanOptions options) {
  if (k < 1) throw std::domain_error("basis_span: k must be at least 1");
  SpanBuilder builder(n, options);
  for (int j = 1; j <= k; ++j) {
    builder.advance();
    builder.release_below(j);
  }
  GradedBasis out;
  out.n = n;
  out.k = k;
  for (const auto& [w, elems] : builder.level(k)) {
    std::vector<QPoly> polys;
    for (const auto& e : elems) {
      polys.push_back(e.poly);
      out.chain.push_back(e);
    }
    for (auto& p : reduced(polys)) out.elements.push_back(HomogeneousInvariant::certify(std::move(p), n));
  }
  sort_by_leading(out.elements);
  return out;
}

namespace {

/// Coefficients of g * b at the monomials P, without forming the product.
std::vector<Rational> product_coordinates(const QPoly& g, const QPoly& b, const std::vector<Monomial>& P) {
  std::vector<Rational> v(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (const auto& t : g.terms()) {
      if (!P[i].divisible_by(t.mono) || P[i][0] < t.mono[0]) continue;
      Rational c = b.coefficient(P[i] / t.mono);
      if (sgn(c) != 0) v[i] += t.coeff * c;
    }
  }
  return v;
}

std::vector<Rational> coordinates(const QPoly& f, const std::vector<Monomial>& P) {
  std::vector<Rational> v;
  v.reserve(P.size());
  for (const auto& m : P) v.push_back(f.coefficient(m));
  return v;
}

}  // namespace

MinimalGenerators minimal_generators(int n, int maxdeg, MinimalGeneratorsOptions options) {
  if (maxdeg < 1) throw std::domain_error("minimal_generators: maxdeg must be at least 1");
  SpanBuilder builder(n, {options.reverse_order, options.monomial_bound});
  MinimalGenerators out;
  out.n = n;
  out.maxdeg = maxdeg;
  for (int k = 1; k <= maxdeg; ++k) {
    builder.advance();
    std::size_t dim = 0;
    int fresh = 0;
    for (const auto& [w, elems] : builder.level(k)) {
      dim += elems.size();
      const auto& P = builder.pivots(k, w);
      DenseEchelon span(P.size());
      for (const auto& g : out.generators) {
        if (span.rank() == P.size()) break;
        const long wb = w - g.weight;
        if (g.degree >= k || wb < 0) continue;
        const auto& lower = builder.level(k - g.degree);
        auto it = lower.find(wb);
        if (it == lower.end()) continue;
        for (const auto& b : it->second) {
          if (span.rank() == P.size()) break;
          span.insert(product_coordinates(g.poly, b.poly, P));
        }
      }
      std::vector<const SpanElement*> order;
      for (const auto& e : elems) order.push_back(&e);
      if (options.reverse_order) std::reverse(order.begin(), order.end());
      for (const SpanElement* c : order) {
        if (span.rank() == P.size()) break;
        if (!span.insert(coordinates(c->poly, P))) continue;
        GeneratorRecord r;
        r.name = "z" + std::to_string(out.generators.size() + 1);
        r.degree = k;
        r.weight = w;
        r.recipe = c->recipe;
        r.poly = c->poly;
        out.generators.push_back(std::move(r));
        ++fresh;
      }
    }
    out.dimensions[k] = dim;
    if (fresh > 0) out.profile[k] = fresh;
  }
  out.warning = "generators are complete only through degree " + std::to_string(maxdeg) +
                "; higher degrees are not certified";
  return out;
}

namespace {

/// Cache of powers z_i^e.
class PowerCache {
 public:
  explicit PowerCache(std::vector<QPoly> base) : base_(std::move(base)), powers_(base_.size()) {}

  const QPoly& get(std::size_t i, int e) {
    auto& v = powers_[i];
    if (v.empty()) v.push_back(QPoly::from_int(1));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * base_[i]);
    return v[static_cast<std::size_t>(e)];
  }

 private:
  std::vector<QPoly> base_;
  std::vector<std::vector<QPoly>> powers_;
};

std::vector<QPoly> z_sequence(int n) {
  std::vector<QPoly> z(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) z[static_cast<std::size_t>(i)] = z_gen(i, n).poly;
  return z;
}

}  // namespace

ZExpression rewrite_in_z(const QPoly& f, int n) {
  if (n < 1) throw std::domain_error("rewrite_in_z: n must be at least 1");
  if (!f.field().is_rational()) throw std::invalid_argument("rewrite_in_z: characteristic 0 only");
  if (f.num_variables() > n + 1) throw std::invalid_argument("rewrite_in_z: polynomial involves a variable beyond y" + std::to_string(n));
  if (!is_invariant(f)) throw std::domain_error("rewrite_in_z: polynomial is not invariant under the down operator");
  std::vector<QPoly> z = z_sequence(n);
  std::vector<int> kexp(z.size(), 0);
  std::vector<Rational> lc(z.size(), Rational(1));
  for (int i = 2; i <= n; ++i) {
    const Monomial& lm = z[static_cast<std::size_t>(i)].leading_monomial();
    for (int j = 1; j <= n; ++j)
      if (lm[j] != (j == i ? 1 : 0)) throw std::logic_error("rewrite_in_z: unexpected leading monomial of z" + std::to_string(i));
    kexp[static_cast<std::size_t>(i)] = lm[0];
    lc[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)].leading_coefficient();
  }
  PowerCache cache(z);
  ZExpression out;
  QPoly cur = f;
  while (!cur.is_zero()) {
    const Monomial lm = cur.leading_monomial();
    if (lm[1] != 0)
      throw std::domain_error("rewrite_in_z: leading monomial " + format(lm) + " is divisible by y1");
    Rational coeff = cur.leading_coefficient();
    QPoly prod = QPoly::from_int(1);
    Monomial zm;
    long y0exp = lm[0];
    for (int i = 2; i <= n; ++i) {
      const int a = lm[i];
      if (a == 0) continue;
      prod *= cache.get(static_cast<std::size_t>(i), a);
      for (int r = 0; r < a; ++r) coeff /= lc[static_cast<std::size_t>(i)];
      y0exp -= long(a) * kexp[static_cast<std::size_t>(i)];
      zm.set(i - 1, a);
    }
    zm.set(0, y0exp);
    cur -= prod.times_term(Monomial::variable(0, static_cast<int>(y0exp)), coeff);
    out += ZExpression::monomial(zm, coeff);
  }
  return out;
}

QPoly substitute_z(const ZExpression& e, int n) {
  if (e.num_variables() > n) throw std::invalid_argument("substitute_z: expression uses a symbol beyond z" + std::to_string(n));
  PowerCache cache(z_sequence(n));
  QPoly out;
  for (const auto& t : e.terms()) {
    QPoly prod = QPoly::from_int(1);
    for (int i = 2; i <= n; ++i)
      if (t.mono[i - 1] > 0) prod *= cache.get(static_cast<std::size_t>(i), t.mono[i - 1]);
    out += prod.times_term(Monomial::variable(0, t.mono[0]), t.coeff);
  }
  return out;
}

std::string format_z_expression(const ZExpression& e) {
  if (e.is_zero()) return "0";
  int low = 0;
  for (const auto& t : e.terms()) low = std::min(low, t.mono[0]);
  if (low == 0) return format(e, z_names());
  ZExpression cleared = e.times_term(Monomial::variable(0, -low), Rational(1));
  std::string inner = format(cleared, z_names());
  if (cleared.size() > 1) inner = "(" + inner + ")";
  return inner + "*z1^" + std::to_string(low);
}

namespace {

Rational eval_at(const QPoly& f, const std::vector<Rational>& point) {
  Rational acc(0);
  for (const auto& t : f.terms()) {
    Rational v = t.coeff;
    for (int i = 0; i < t.mono.size(); ++i) {
      int e = t.mono[i];
      Rational base = e < 0 ? 1 / point[static_cast<std::size_t>(i)] : point[static_cast<std::size_t>(i)];
      for (int r = 0; r < std::abs(e); ++r) v *= base;
    }
    acc += v;
  }
  return acc;
}

/// Exponent vectors of total degree 1..D in m variables, by increasing degree.
std::vector<std::vector<int>> exponent_vectors(int m, int D) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(i)] = a;
      rec(i + 1, left - a);
    }
  };
  for (int d = 1; d <= D; ++d) rec(0, d);
  return out;
}

std::optional<QPoly> search_relation(const std::vector<QPoly>& polys, int max_degree) {
  const int m = static_cast<int>(polys.size());
  if (m > kMaxVariables) return std::nullopt;
  bool homogeneous = std::all_of(polys.begin(), polys.end(), [](const QPoly& p) { return !p.is_zero() && p.is_homogeneous(); });
  struct Entry {
    QPoly value;
    QPoly combo;  // in p-variables
  };
  // buckets keyed by y-degree when all inputs are homogeneous
  std::map<long, std::vector<std::pair<Monomial, QPoly>>> buckets;
  buckets[0].push_back({Monomial{}, QPoly::from_int(1)});
  std::unordered_map<Monomial, QPoly, MonomialHash> products;
  products.emplace(Monomial{}, QPoly::from_int(1));
  for (const auto& e : exponent_vectors(m, max_degree)) {
    Monomial pm = Monomial::from_exponents(e);
    int j = 0;
    while (e[static_cast<std::size_t>(j)] == 0) ++j;
    QPoly value = products.at(pm / Monomial::variable(j)) * polys[static_cast<std::size_t>(j)];
    long key = 0;
    if (homogeneous)
      for (int i = 0; i < m; ++i) key += long(e[static_cast<std::size_t>(i)]) * polys[static_cast<std::size_t>(i)].degree();
    products.emplace(pm, value);
    buckets[key].push_back({pm, std::move(value)});
  }
  for (auto& [key, items] : buckets) {
    std::vector<Entry> rows;
    std::unordered_map<Monomial, std::size_t, MonomialHash> pivot;
    for (auto& [pm, value] : items) {
      Entry cur{value, QPoly::monomial(pm, Rational(1))};
      while (!cur.value.is_zero()) {
        auto it = pivot.find(cur.value.leading_monomial());
        if (it == pivot.end()) break;
        Rational c = -cur.value.leading_coefficient();
        cur.value = cur.value.add_scaled(rows[it->second].value, c);
        cur.combo = cur.combo.add_scaled(rows[it->second].combo, c);
      }
      if (cur.value.is_zero()) {
        // primitive integer form with positive leading coefficient
        Integer l = 1, g = 0;
        for (const auto& t : cur.combo.terms()) l = lcm(l, Integer(t.coeff.get_den()));
        QPoly rel = cur.combo * Rational(l);
        for (const auto& t : rel.terms()) g = gcd(g, Integer(t.coeff.get_num()));
        Rational scale(1, 1);
        scale = Rational(sgn(rel.leading_coefficient()) > 0 ? 1 : -1) / Rational(g);
        return rel * scale;
      }
      Rational inv = 1 / cur.value.leading_coefficient();
      cur.value *= inv;
      cur.combo *= inv;
      pivot.emplace(cur.value.leading_monomial(), rows.size());
      rows.push_back(std::move(cur));
    }
  }
  return std::nullopt;
}

}  // namespace

IndependenceVerdict independence_check(const std::vector<QPoly>& polys, int n, IndependenceOptions options) {
  if (polys.empty()) throw std::invalid_argument("independence_check: empty list");
  if (n < 0 || n + 1 > kMaxVariables) throw std::invalid_argument("independence_check: bad n");
  for (const auto& p : polys) {
    if (!p.field().is_rational()) throw std::invalid_argument("independence_check: characteristic 0 only");
    if (p.num_variables() > n + 1) throw std::invalid_argument("independence_check: polynomial involves a variable beyond y" + std::to_string(n));
  }
  IndependenceVerdict v;
  v.count = polys.size();
  v.seed = options.seed;
  std::vector<std::vector<QPoly>> jac(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (int j = 0; j <= n; ++j) jac[i].push_back(polys[i].partial_derivative(j));
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> dist(1, 1000);
  for (int a = 1; a <= std::max(1, options.attempts); ++a) {
    v.attempts = a;
    std::vector<Rational> point;
    for (int j = 0; j <= n; ++j) point.emplace_back(dist(rng));
    DenseEchelon ech(static_cast<std::size_t>(n) + 1);
    for (const auto& row : jac) {
      std::vector<Rational> r;
      for (const auto& d : row) r.push_back(eval_at(d, point));
      ech.insert(std::move(r));
    }
    v.rank = std::max(v.rank, ech.rank());
    if (v.rank == polys.size()) {
      v.independent = true;
      v.method = "jacobian-rank";
      return v;
    }
  }
  v.relation = search_relation(polys, options.relation_degree);
  v.method = v.relation ? "relation-search" : "jacobian-rank-deficient";
  return v;
}

}  // namespace filicenter
