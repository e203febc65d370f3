#include "filicenter/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <regex>
#include <sstream>
#include <thread>

#include "filicenter/charp.hpp"
#include "filicenter/hilbert.hpp"
#include "filicenter/invariants.hpp"
#include "filicenter/json_io.hpp"
#include "filicenter/transvect.hpp"

namespace filicenter::cli {

namespace {

using nlohmann::json;

enum class Format { kText, kJson, kLatex };

/// Polynomial-grammar text to LaTeX.
std::string latexify(std::string s) {
  s = std::regex_replace(s, std::regex(R"((\d+)/(\d+))"), R"(\frac{$1}{$2})");
  s = std::regex_replace(s, std::regex(R"(([a-z])(\d+))"), "$1_{$2}");
  s = std::regex_replace(s, std::regex(R"(\^(-?\d+))"), "^{$1}");
  s = std::regex_replace(s, std::regex(R"(\*)"), " ");
  return s;
}

struct Output {
  json data;
  std::string text;
  std::string latex;  // defaults to latexify(text)
  int code = kOk;
};

struct Global {
  std::string format = "text";
  std::uint64_t seed = 0x5eed;
  unsigned threads = 1;
};

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json poly_json(const QPoly& p, const VariableNames& names = {}) {
  return {{"text", format(p, names)}, {"poly", to_json(p)}};
}

json fp_poly_json(const FpPoly& p, const VariableNames& names = {}) {
  return {{"text", format(p, names)}, {"poly", to_json(p)}};
}

Rational parse_rational(const std::string& s) {
  static const std::regex decimal(R"(\s*(-?)(\d*)\.(\d+)\s*)");
  static const std::regex fraction(R"(\s*-?\d+(\s*/\s*\d+)?\s*)");
  std::smatch m;
  if (std::regex_match(s, m, decimal)) {
    Integer whole(m[2].str().empty() ? "0" : m[2].str());
    std::string frac = m[3].str();
    Integer scale(1);
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r(whole * scale + Integer(frac), scale);
    r.canonicalize();
    return m[1].str().empty() ? r : Rational(-r);
  }
  if (!std::regex_match(s, fraction)) throw std::invalid_argument("not a rational number: " + s);
  std::string compact;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  Rational r(compact);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in " + s);
  r.canonicalize();
  return r;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = std::stol(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw std::invalid_argument("bad integer in list: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

/// Polynomial from --poly or --recipe.
QPoly poly_input(const std::string& poly, const std::string& recipe, int n) {
  if (poly.empty() == recipe.empty()) throw CLI::ValidationError("exactly one of --poly and --recipe is required");
  if (!recipe.empty()) return eval_recipe(*parse_recipe(recipe), n).poly;
  return parse_polynomial(poly);
}

// ---- subcommands ----

struct DeltaArgs {
  int n = 0, d = 0;
  std::string method = "partition";
};

Output cmd_delta(const DeltaArgs& a) {
  Integer v = a.method == "weight" ? delta_weight(a.n, a.d) : delta_partition(a.n, a.d);
  Output o;
  o.data = {{"n", a.n}, {"d", a.d}, {"method", a.method}, {"delta", integer_json(v)}};
  o.text = v.get_str();
  return o;
}

struct DeltaTableArgs {
  int n = 0, dmax = 0;
  std::string recurrence;
};

Output cmd_delta_table(const DeltaTableArgs& a) {
  DeltaTable t = hilbert_series_terms(a.n, a.dmax);
  Output o;
  std::vector<std::string> vals;
  std::ostringstream text;
  text << "d\tdelta\n";
  for (std::size_t d = 0; d < t.delta.size(); ++d) {
    vals.push_back(t.delta[d].get_str());
    text << d << '\t' << vals.back() << '\n';
  }
  o.data = {{"n", a.n}, {"delta", json::array()}};
  for (const auto& v : t.delta) o.data["delta"].push_back(integer_json(v));
  o.latex = join(vals, ", ");
  if (!a.recurrence.empty()) {
    bool ok = recurrence_verify(a.n, parse_long_list(a.recurrence), a.dmax);
    o.data["recurrence"] = {{"coefficients", parse_long_list(a.recurrence)}, {"holds", ok}};
    text << "recurrence " << (ok ? "holds" : "fails") << " through d = " << a.dmax << '\n';
    o.latex += ok ? "\n% recurrence holds" : "\n% recurrence fails";
    if (!ok) o.code = kVerificationFailed;
  }
  o.text = text.str();
  if (!o.text.empty() && o.text.back() == '\n') o.text.pop_back();
  return o;
}

struct HilbertArgs {
  int n = 0;
  int terms = 0;
  bool rational = false;
  std::string integral_t;
  long panels = 1L << 14;
  double tolerance = 1e-6;
  int max_n = 18;
};

Output cmd_hilbert(const HilbertArgs& a) {
  Output o;
  o.data["n"] = a.n;
  if (!a.integral_t.empty()) {
    Rational t = parse_rational(a.integral_t);
    IntegralCheck c = integral_check(a.n, t, a.panels);
    bool ok = c.difference < a.tolerance;
    o.data["t"] = t.get_str();
    o.data["numeric"] = c.numeric;
    o.data["exact"] = c.exact;
    o.data["difference"] = c.difference;
    o.data["panels"] = c.panels;
    o.data["tolerance"] = a.tolerance;
    o.data["within_tolerance"] = ok;
    std::ostringstream s;
    s.precision(15);
    s << "numeric " << c.numeric << "\nexact " << c.exact << "\ndifference " << c.difference << "\npanels "
      << c.panels << "\nwithin tolerance " << (ok ? "yes" : "no");
    o.text = s.str();
    o.latex = o.text;
    if (!ok) o.code = kVerificationFailed;
    return o;
  }
  HilbertRational h = hilbert_rational(a.n, a.max_n);
  if (a.terms > 0) {
    std::vector<std::string> vals;
    o.data["terms"] = json::array();
    for (const auto& c : series_expand(h.series, a.terms)) {
      vals.push_back(c.get_str());
      o.data["terms"].push_back(c.get_den() == 1 ? integer_json(c.get_num()) : json(vals.back()));
    }
    o.text = join(vals, ", ");
    o.latex = o.text;
    return o;
  }
  std::string factored = format_factored(h.series);
  o.data["rational"] = factored;
  o.data["numerator"] = h.series.numerator().str();
  o.data["denominator"] = h.series.denominator().str();
  o.text = factored;
  auto cut = factored.find(" / ");
  if (cut == std::string::npos) {
    o.latex = latexify(factored);
  } else {
    auto strip = [](std::string s) {
      if (s.size() > 1 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool outer = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
          depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
          if (depth == 0) outer = false;
        }
        if (outer) s = s.substr(1, s.size() - 2);
      }
      return s;
    };
    o.latex = "\\frac{" + latexify(strip(factored.substr(0, cut))) + "}{" + latexify(strip(factored.substr(cut + 3))) + "}";
  }
  return o;
}

struct GenArgs {
  int i = 0, n = 0;
};

Output cmd_zgen(const GenArgs& a) {
  HomogeneousInvariant z = z_gen(a.i, a.n);
  Output o;
  o.data = {{"i", a.i}, {"n", a.n}, {"degree", z.degree}, {"weight", z.weight}, {"result", poly_json(z.poly)}};
  o.text = format(z.poly);
  return o;
}

Output cmd_wgen(const GenArgs& a) {
  QPoly w = w_gen(a.i);
  Output o;
  o.data = {{"i", a.i}, {"result", poly_json(w)}};
  o.text = format(w);
  return o;
}

struct CircArgs {
  int n = 0, d = -1;
  std::string a, b, recipe;
};

Output cmd_circ(const CircArgs& a) {
  HomogeneousInvariant r;
  if (!a.recipe.empty()) {
    r = eval_recipe(*parse_recipe(a.recipe), a.n);
  } else {
    if (a.a.empty() || a.b.empty() || a.d < 0) throw CLI::ValidationError("circ needs --recipe or all of --a, --b, --d");
    r = circ(HomogeneousInvariant::certify(parse_polynomial(a.a), a.n),
             HomogeneousInvariant::certify(parse_polynomial(a.b), a.n), a.d);
  }
  Output o;
  o.data = {{"n", a.n}, {"degree", r.degree}, {"weight", r.weight}, {"result", poly_json(r.poly)}};
  o.text = format(r.poly);
  return o;
}

struct BasisArgs {
  int n = 0, k = 0;
  std::string method = "kernel";
  bool reverse = false;
  std::uint64_t bound = kDefaultMonomialBound;
};

Output cmd_basis(const BasisArgs& a) {
  GradedBasis b = a.method == "span" ? basis_span(a.n, a.k, {a.reverse, a.bound}) : basis_kernel(a.n, a.k, a.bound);
  Output o;
  o.data = {{"n", a.n}, {"k", a.k}, {"method", a.method}, {"dimension", b.dimension()}, {"basis", json::array()}};
  std::vector<std::string> lines;
  for (const auto& e : b.elements) {
    o.data["basis"].push_back({{"weight", e.weight}, {"result", poly_json(e.poly)}});
    lines.push_back(format(e.poly));
  }
  if (a.method == "span") {
    o.data["chain"] = json::array();
    lines.push_back("# chain elements");
    for (const auto& c : b.chain) {
      o.data["chain"].push_back({{"recipe", c.recipe->str()}, {"weight", c.weight}, {"result", poly_json(c.poly)}});
      lines.push_back(c.recipe->str() + " = " + format(c.poly));
    }
  }
  o.text = "dimension " + std::to_string(b.dimension()) + (lines.empty() ? "" : "\n" + join(lines, "\n"));
  return o;
}

struct MingensArgs {
  int n = 0, maxdeg = 0;
  bool reverse = false;
  bool show_polys = false;
  std::uint64_t bound = kDefaultMonomialBound;
};

Output cmd_mingens(const MingensArgs& a, std::ostream& err) {
  MinimalGenerators g = minimal_generators(a.n, a.maxdeg, {a.reverse, a.bound});
  Output o;
  o.data = {{"n", a.n}, {"maxdeg", a.maxdeg}, {"count", g.generators.size()}, {"warning", g.warning}};
  json profile = json::object(), dims = json::object();
  for (auto [d, c] : g.profile) profile[std::to_string(d)] = c;
  for (auto [d, c] : g.dimensions) dims[std::to_string(d)] = c;
  o.data["profile"] = profile;
  o.data["dimensions"] = dims;
  o.data["generators"] = json::array();
  std::ostringstream text;
  text << g.generators.size() << " generators, degree profile";
  for (auto [d, c] : g.profile) text << ' ' << d << ':' << c;
  for (const auto& r : g.generators) {
    o.data["generators"].push_back({{"name", r.name},
                                    {"degree", r.degree},
                                    {"weight", r.weight},
                                    {"recipe", r.recipe->str()},
                                    {"terms", r.poly.size()},
                                    {"result", poly_json(r.poly)}});
    text << '\n' << r.name << "  degree " << r.degree << "  weight " << r.weight << "  " << r.recipe->str() << "  ("
         << r.poly.size() << (r.poly.size() == 1 ? " term)" : " terms)");
    if (a.show_polys) text << "\n  " << format(r.poly);
  }
  o.text = text.str();
  err << "warning: " << g.warning << '\n';
  return o;
}

struct PolyArgs {
  int n = 0;
  std::string poly, recipe;
};

Output cmd_rewrite(const PolyArgs& a) {
  QPoly f = poly_input(a.poly, a.recipe, a.n);
  ZExpression e = rewrite_in_z(f, a.n);
  bool round_trip = substitute_z(e, a.n) == f;
  Output o;
  o.data = {{"n", a.n}, {"expression", format_z_expression(e)}, {"terms", to_json(e)}, {"round_trip", round_trip}};
  o.text = format_z_expression(e);
  if (!round_trip) o.code = kVerificationFailed;
  return o;
}

struct IndepArgs {
  int n = 0;
  std::vector<std::string> polys, recipes;
  std::vector<int> zgens;
  int attempts = 3;
  int relation_degree = 4;
};

Output cmd_indep(const IndepArgs& a, std::uint64_t seed) {
  std::vector<QPoly> polys;
  for (int i : a.zgens) polys.push_back(z_gen(i, a.n).poly);
  for (const auto& r : a.recipes) polys.push_back(eval_recipe(*parse_recipe(r), a.n).poly);
  for (const auto& p : a.polys) polys.push_back(parse_polynomial(p));
  if (polys.empty()) throw CLI::ValidationError("indep needs at least one of --poly, --zgen, --recipe");
  IndependenceVerdict v = independence_check(polys, a.n, {seed, a.attempts, a.relation_degree});
  Output o;
  o.data = {{"n", a.n},         {"independent", v.independent}, {"method", v.method},
            {"rank", v.rank},   {"count", v.count},             {"attempts", v.attempts},
            {"seed", v.seed}};
  std::ostringstream text;
  text << (v.independent ? "independent" : "dependent") << " (" << v.method << ", rank " << v.rank << " of " << v.count
       << ", attempts " << v.attempts << ", seed " << v.seed << ")";
  if (v.relation) {
    o.data["relation"] = poly_json(*v.relation, relation_names());
    text << "\nrelation " << format(*v.relation, relation_names()) << " = 0";
  }
  o.text = text.str();
  return o;
}

Output cmd_verify(const PolyArgs& a) {
  QPoly f = poly_input(a.poly, a.recipe, a.n);
  if (f.num_variables() > a.n + 1) throw std::invalid_argument("polynomial involves a variable beyond y" + std::to_string(a.n));
  bool inv = is_invariant(f);
  auto w = common_weight(f, a.n);
  Output o;
  o.data = {{"n", a.n}, {"invariant", inv}, {"homogeneous", f.is_zero() || f.is_homogeneous()}};
  o.data["weight"] = w ? json(*w) : json(nullptr);
  std::ostringstream text;
  text << (inv ? "invariant" : "not invariant");
  if (w) text << ", weight " << *w;
  if (!f.is_zero() && f.is_homogeneous()) text << ", degree " << f.degree();
  if (!inv) {
    o.data["down"] = poly_json(down(f));
    text << "\ndown = " << format(down(f));
    o.code = kVerificationFailed;
  }
  o.text = text.str();
  return o;
}

struct CharpArgs {
  int n = 0;
  std::uint64_t p = 0;
  bool central = false, jacobian = false, pcenter = false, frobenius = false, reduce = false, grid = false;
  std::string poly;
  int nmin = 2, nmax = 8;
  std::uint64_t pmax = 23;
};

json charp_pair(int n, std::uint64_t p, bool want_central, bool want_jacobian, bool strict_jacobian, bool& ok) {
  json j = {{"n", n}, {"p", p}};
  if (want_central) {
    CentralReport c = central_check_modp(n, p);
    j["central"] = c.central;
    j["leading_ok"] = c.leading_ok;
    ok = ok && c.all_central();
  }
  if (want_jacobian) {
    if (p < static_cast<std::uint64_t>(n) + 1 || n < 2) {
      if (strict_jacobian) jacobian_modp(n, p);  // throws the precondition error
      j["jacobian_triangular"] = nullptr;
      j["det"] = nullptr;
    } else {
      JacobianReport r = jacobian_modp(n, p);
      j["jacobian_triangular"] = r.triangular;
      j["det"] = r.det_string();
      j["diagonal"] = json::array();
      for (std::size_t i = 0; i < r.diagonal_coefficients.size(); ++i)
        j["diagonal"].push_back(std::to_string(r.diagonal_coefficients[i]) + "*u2^" + std::to_string(r.diagonal_exponents[i]));
      j["diagonal_matches_leading_terms"] = r.diagonal_matches_leading_terms;
      ok = ok && r.triangular && r.det_coefficient != 0 && r.diagonal_matches_leading_terms;
    }
  }
  return j;
}

std::string charp_text(const json& j) {
  std::ostringstream s;
  s << "n=" << j["n"].get<int>() << " p=" << j["p"].get<std::uint64_t>();
  if (j.contains("central")) {
    s << " central";
    for (bool b : j["central"]) s << (b ? " 1" : " 0");
    s << " leading_ok";
    for (bool b : j["leading_ok"]) s << (b ? " 1" : " 0");
  }
  if (j.contains("det")) {
    if (j["det"].is_null())
      s << " jacobian n/a (p < n+1)";
    else
      s << " triangular " << (j["jacobian_triangular"].get<bool>() ? "yes" : "no") << " det " << j["det"].get<std::string>();
  }
  return s.str();
}

Output cmd_charp(const CharpArgs& a, unsigned threads) {
  Output o;
  if (a.reduce) {
    FpPoly r = reduce_mod_p(parse_polynomial(a.poly), a.p);
    o.data = {{"p", a.p}, {"result", fp_poly_json(r)}};
    o.text = format(r);
    return o;
  }
  if (a.pcenter) {
    FpPoly f = parse_polynomial_mod_p(a.poly, a.p);
    if (a.frobenius) f = frobenius_power(f);
    auto pc = p_power_in_pcenter(f, a.p, a.n);
    o.data = {{"p", a.p}, {"n", a.n}, {"in_pcenter", pc.has_value()}, {"y", fp_poly_json(f)}};
    if (pc) {
      UPolynomial u = to_u_variables(*pc);
      o.data["u"] = fp_poly_json(u, u_names());
      o.text = "in p-center: " + format(u, u_names());
    } else {
      o.text = "not in p-center";
      o.code = kVerificationFailed;
    }
    return o;
  }
  if (a.grid) {
    std::vector<std::pair<int, std::uint64_t>> pairs;
    for (int n = a.nmin; n <= a.nmax; ++n)
      for (std::uint64_t p = std::max<std::uint64_t>(3, n + 1); p <= a.pmax; ++p)
        if (is_probable_prime(p)) pairs.emplace_back(n, p);
    std::vector<json> results(pairs.size());
    std::vector<char> oks(pairs.size(), 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < pairs.size();) {
        bool ok = true;
        results[i] = charp_pair(pairs[i].first, pairs[i].second, true, true, false, ok);
        oks[i] = ok;
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    bool all = std::all_of(oks.begin(), oks.end(), [](char c) { return c != 0; });
    o.data = {{"pairs", results}, {"all_passed", all}};
    std::vector<std::string> lines;
    for (const auto& r : results) lines.push_back(charp_text(r));
    lines.push_back(all ? "all pairs passed" : "some pairs FAILED");
    o.text = join(lines, "\n");
    if (!all) o.code = kVerificationFailed;
    return o;
  }
  const bool both = !a.central && !a.jacobian;
  bool ok = true;
  o.data = charp_pair(a.n, a.p, both || a.central, both || a.jacobian, a.jacobian, ok);
  o.text = charp_text(o.data);
  if (!ok) o.code = kVerificationFailed;
  return o;
}

void require_prime_option(CLI::Option* opt) {
  opt->check(CLI::Validator(
      [](std::string& s) -> std::string {
        std::uint64_t v = std::stoull(s);
        return v > 2 && is_probable_prime(v) ? std::string() : "must be an odd prime";
      },
      "ODD_PRIME"));
}

}  // namespace

const std::vector<OperationRoute>& operation_routes() {
  static const std::vector<OperationRoute> routes = {
      {"delta_partition", "delta"},
      {"delta_weight", "delta"},
      {"hilbert_series_terms", "delta-table"},
      {"recurrence_verify", "delta-table"},
      {"hilbert_rational", "hilbert"},
      {"series_expand", "hilbert"},
      {"integral_check", "hilbert"},
      {"z_gen", "zgen"},
      {"w_gen", "wgen"},
      {"circ", "circ"},
      {"eval_recipe", "circ"},
      {"basis_kernel", "basis"},
      {"basis_span", "basis"},
      {"minimal_generators", "mingens"},
      {"rewrite_in_z", "rewrite"},
      {"substitute_z", "rewrite"},
      {"independence_check", "indep"},
      {"is_invariant", "verify"},
      {"common_weight", "verify"},
      {"reduce_mod_p", "charp"},
      {"central_check_modp", "charp"},
      {"p_power_in_pcenter", "charp"},
      {"frobenius_power", "charp"},
      {"to_u_variables", "charp"},
      {"jacobian_modp", "charp"},
  };
  return routes;
}

std::vector<std::string> subcommand_names() {
  return {"delta", "delta-table", "hilbert", "zgen", "wgen", "circ", "basis", "mingens", "rewrite", "indep", "verify", "charp"};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of the Weitzenbock derivation: bases, generators, Hilbert series"};
  app.name("filicenter");
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--threads", g.threads, "Worker threads for grid verification")->check(CLI::Range(1u, 256u));

  DeltaArgs delta;
  auto* s_delta = app.add_subcommand("delta", "Dimension delta_{n,d} of Z_{n,d}");
  s_delta->add_option("--n", delta.n)->required()->check(CLI::NonNegativeNumber);
  s_delta->add_option("--d", delta.d)->required()->check(CLI::NonNegativeNumber);
  s_delta->add_option("--method", delta.method)->check(CLI::IsMember({"partition", "weight"}));

  DeltaTableArgs table;
  auto* s_table = app.add_subcommand("delta-table", "delta_{n,0..dmax}, optionally checking a linear recurrence");
  s_table->add_option("--n", table.n)->required()->check(CLI::PositiveNumber);
  s_table->add_option("--dmax", table.dmax)->required()->check(CLI::NonNegativeNumber);
  s_table->add_option("--recurrence", table.recurrence, "c1,c2,...: a(d) = c1 a(d-1) + c2 a(d-2) + ...");

  HilbertArgs hil;
  auto* s_hil = app.add_subcommand("hilbert", "Hilbert series H_n(t)");
  s_hil->add_option("--n", hil.n)->required()->check(CLI::PositiveNumber);
  auto* o_terms = s_hil->add_option("--terms", hil.terms, "Print the first K coefficients")->check(CLI::PositiveNumber);
  auto* o_rat = s_hil->add_flag("--rational", hil.rational, "Print the rational function (default)");
  auto* o_int = s_hil->add_option("--check-integral", hil.integral_t, "Compare the integral formula at t");
  o_terms->excludes(o_rat)->excludes(o_int);
  o_rat->excludes(o_int);
  s_hil->add_option("--panels", hil.panels, "Panel cap for the quadrature (power of two)");
  s_hil->add_option("--tolerance", hil.tolerance);
  s_hil->add_option("--max-n", hil.max_n);

  GenArgs zg;
  auto* s_zgen = app.add_subcommand("zgen", "Generator z_i of the first sequence");
  s_zgen->add_option("--i", zg.i)->required()->check(CLI::PositiveNumber);
  s_zgen->add_option("--n", zg.n)->required()->check(CLI::PositiveNumber);

  GenArgs wg;
  auto* s_wgen = app.add_subcommand("wgen", "Generator w_i of the second sequence");
  s_wgen->add_option("--i", wg.i)->required()->check(CLI::PositiveNumber);

  CircArgs ci;
  auto* s_circ = app.add_subcommand("circ", "Transvectant a o_d b, or a recipe such as 'y0 o_2 y0 o_1 y0'");
  s_circ->add_option("--n", ci.n)->required()->check(CLI::PositiveNumber);
  s_circ->add_option("--a", ci.a);
  s_circ->add_option("--b", ci.b);
  s_circ->add_option("--d", ci.d)->check(CLI::NonNegativeNumber);
  s_circ->add_option("--recipe", ci.recipe);

  BasisArgs ba;
  auto* s_basis = app.add_subcommand("basis", "Basis of Z_{n,k}");
  s_basis->add_option("--n", ba.n)->required()->check(CLI::PositiveNumber);
  s_basis->add_option("--k", ba.k)->required()->check(CLI::NonNegativeNumber);
  s_basis->add_option("--method", ba.method)->check(CLI::IsMember({"kernel", "span"}));
  s_basis->add_flag("--reverse", ba.reverse, "Reverse the candidate order (span)");
  s_basis->add_option("--bound", ba.bound, "Monomial-count resource bound");

  MingensArgs mg;
  auto* s_mg = app.add_subcommand("mingens", "Minimal generators of Z_n through degree maxdeg");
  s_mg->add_option("--n", mg.n)->required()->check(CLI::PositiveNumber);
  s_mg->add_option("--maxdeg", mg.maxdeg)->required()->check(CLI::PositiveNumber);
  s_mg->add_flag("--reverse", mg.reverse, "Reverse the candidate order");
  s_mg->add_flag("--show-polys", mg.show_polys, "Print generator polynomials in text output");
  s_mg->add_option("--bound", mg.bound, "Monomial-count resource bound");

  PolyArgs rw;
  auto* s_rw = app.add_subcommand("rewrite", "Express an invariant in z1^-1, z1..zn");
  s_rw->add_option("--n", rw.n)->required()->check(CLI::PositiveNumber);
  auto* o_rwp = s_rw->add_option("--poly", rw.poly);
  auto* o_rwr = s_rw->add_option("--recipe", rw.recipe);
  o_rwp->excludes(o_rwr);

  IndepArgs ind;
  auto* s_ind = app.add_subcommand("indep", "Algebraic independence check");
  s_ind->add_option("--n", ind.n)->required()->check(CLI::NonNegativeNumber);
  s_ind->add_option("--poly", ind.polys);
  s_ind->add_option("--zgen", ind.zgens)->check(CLI::PositiveNumber);
  s_ind->add_option("--recipe", ind.recipes);
  s_ind->add_option("--attempts", ind.attempts)->check(CLI::PositiveNumber);
  s_ind->add_option("--relation-degree", ind.relation_degree)->check(CLI::PositiveNumber);

  PolyArgs ve;
  auto* s_ve = app.add_subcommand("verify", "Check invariance and weight of a polynomial");
  s_ve->add_option("--n", ve.n)->required()->check(CLI::PositiveNumber);
  auto* o_vep = s_ve->add_option("--poly", ve.poly);
  auto* o_ver = s_ve->add_option("--recipe", ve.recipe);
  o_vep->excludes(o_ver);

  CharpArgs cp;
  auto* s_cp = app.add_subcommand("charp", "Characteristic-p checks");
  auto* o_cpn = s_cp->add_option("--n", cp.n)->check(CLI::PositiveNumber);
  auto* o_cpp = s_cp->add_option("--p", cp.p);
  require_prime_option(o_cpp);
  s_cp->add_flag("--central", cp.central, "Centrality of z_1..z_n mod p");
  s_cp->add_flag("--jacobian", cp.jacobian, "Jacobian of the p-th powers in u-variables");
  auto* o_pc = s_cp->add_flag("--pcenter", cp.pcenter, "Test --poly (over F_p) for p-center membership");
  s_cp->add_flag("--frobenius", cp.frobenius, "Raise --poly to the p-th power first (with --pcenter)");
  auto* o_red = s_cp->add_flag("--reduce", cp.reduce, "Reduce the rational --poly mod p");
  auto* o_grid = s_cp->add_flag("--grid", cp.grid, "All n in [nmin, nmax] and primes n+1 <= p <= pmax");
  s_cp->add_option("--poly", cp.poly);
  s_cp->add_option("--nmin", cp.nmin)->check(CLI::PositiveNumber);
  s_cp->add_option("--nmax", cp.nmax)->check(CLI::PositiveNumber);
  s_cp->add_option("--pmax", cp.pmax);
  o_pc->excludes(o_red)->excludes(o_grid);
  o_red->excludes(o_grid);

  if (!args.empty() && !args.front().starts_with("-")) {
    auto names = subcommand_names();
    if (std::find(names.begin(), names.end(), args.front()) == names.end()) {
      err << "error: unknown subcommand '" << args.front() << "'; expected one of " << join(names, ", ") << '\n';
      return kUsageError;
    }
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (!reversed.empty()) throw CLI::ExtrasError(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  Format fmt = g.format == "json" ? Format::kJson : g.format == "latex" ? Format::kLatex : Format::kText;
  Output o;
  std::string name;
  try {
    if (s_delta->parsed()) {
      name = "delta";
      o = cmd_delta(delta);
    } else if (s_table->parsed()) {
      name = "delta-table";
      o = cmd_delta_table(table);
    } else if (s_hil->parsed()) {
      name = "hilbert";
      o = cmd_hilbert(hil);
    } else if (s_zgen->parsed()) {
      name = "zgen";
      o = cmd_zgen(zg);
    } else if (s_wgen->parsed()) {
      name = "wgen";
      o = cmd_wgen(wg);
    } else if (s_circ->parsed()) {
      name = "circ";
      o = cmd_circ(ci);
    } else if (s_basis->parsed()) {
      name = "basis";
      o = cmd_basis(ba);
    } else if (s_mg->parsed()) {
      name = "mingens";
      o = cmd_mingens(mg, err);
    } else if (s_rw->parsed()) {
      name = "rewrite";
      o = cmd_rewrite(rw);
    } else if (s_ind->parsed()) {
      name = "indep";
      o = cmd_indep(ind, g.seed);
    } else if (s_ve->parsed()) {
      name = "verify";
      o = cmd_verify(ve);
    } else if (s_cp->parsed()) {
      name = "charp";
      if (!cp.grid && o_cpp->count() == 0) throw CLI::ValidationError("charp needs --p");
      if (!cp.grid && !cp.reduce && o_cpn->count() == 0) throw CLI::ValidationError("charp needs --n");
      if ((cp.reduce || cp.pcenter) && cp.poly.empty()) throw CLI::ValidationError("--reduce and --pcenter need --poly");
      o = cmd_charp(cp, g.threads);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const RecipeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kVerificationFailed;
  }

  switch (fmt) {
    case Format::kJson: {
      json j = o.data;
      j["schema"] = kSchema;
      j["command"] = name;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kLatex:
      out << (o.latex.empty() ? latexify(o.text) : o.latex) << '\n';
      break;
    case Format::kText:
      out << o.text << '\n';
      break;
  }
  return o.code;
}

}  // namespace filicenter::cli
