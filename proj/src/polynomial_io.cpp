#include <cctype>
#include <sstream>

#include "filicenter/json_io.hpp"
#include "filicenter/polynomial.hpp"

namespace filicenter {

FpPoly reduce_mod_p(const QPoly& f, std::uint64_t p) {
  Field field{p};
  std::vector<FpPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.mono, ModP::from_rational(t.coeff, p)});
  return FpPoly::from_terms(field, std::move(terms));
}

std::string format(const Monomial& m, const VariableNames& names) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kMaxVariables; ++i) {
    int e = m[i];
    if (e == 0) continue;
    if (!first) os << '*';
    first = false;
    os << names.prefix << (i + names.offset);
    if (e != 1) os << '^' << e;
  }
  if (first) os << '1';
  return os.str();
}

namespace {

template <class S>
std::string format_impl(const Polynomial<S>& p, const VariableNames& names) {
  using Traits = ScalarTraits<S>;
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    S c = t.coeff;
    bool negative = Traits::is_negative(c);
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool constant = t.mono == Monomial{};
    if (constant) {
      os << Traits::to_string(c);
    } else if (Traits::is_one(c)) {
      os << format(t.mono, names);
    } else {
      os << Traits::to_string(c) << '*' << format(t.mono, names);
    }
  }
  return os.str();
}

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& names) : s_(text), names_(names) {}

  QPoly parse() {
    std::vector<QPoly::Term> terms;
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    skip();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      ++pos_;
      terms.push_back(term(c == '-'));
      skip();
    }
    return QPoly::from_terms(Field{}, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  long small_integer(bool allow_sign) {
    skip();
    std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && !at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    Integer v = integer();
    if (v > 32767) throw ParseError("exponent overflow", start);
    long r = v.get_si();
    return negative ? -r : r;
  }

  bool starts_variable() {
    skip();
    return s_.substr(pos_, names_.prefix.size()) == names_.prefix;
  }

  QPoly::Term term(bool negative) {
    skip();
    Rational coeff(1);
    Monomial mono;
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      Integer num = integer();
      Integer den(1);
      skip();
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", start);
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      factor(mono);
      skip();
      while (!at_end() && peek() == '*') {
        ++pos_;
        factor(mono);
        skip();
      }
    }
    if (negative) coeff = -coeff;
    return {mono, coeff};
  }

  void factor(Monomial& mono) {
    skip();
    std::size_t start = pos_;
    if (!starts_variable()) throw ParseError("expected variable '" + names_.prefix + "<index>'", start);
    pos_ += names_.prefix.size();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected variable index", pos_);
    long index = small_integer(false) - names_.offset;
    if (index < 0 || index >= kMaxVariables) throw ParseError("variable index out of range", start);
    long e = 1;
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      std::size_t epos = pos_;
      e = small_integer(true);
      if (e < 0 && index != 0)
        throw ParseError("negative exponent only allowed on " + names_.prefix + std::to_string(names_.offset), epos);
    }
    long total = long(mono[static_cast<int>(index)]) + e;
    if (total > 32767 || total < -32768) throw ParseError("exponent overflow", start);
    mono.set(static_cast<int>(index), total);
  }

  std::string_view s_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const QPoly& p, const VariableNames& names) { return format_impl(p, names); }
std::string format(const FpPoly& p, const VariableNames& names) { return format_impl(p, names); }

QPoly parse_polynomial(std::string_view text, const VariableNames& names) { return Parser(text, names).parse(); }

FpPoly parse_polynomial_mod_p(std::string_view text, std::uint64_t p, const VariableNames& names) {
  return reduce_mod_p(parse_polynomial(text, names), p);
}

// ---- JSON ----

namespace {

template <class S>
nlohmann::json to_json_impl(const Polynomial<S>& poly) {
  nlohmann::json j;
  j["field"] = poly.field().is_rational() ? "Q" : "Fp";
  if (!poly.field().is_rational()) j["p"] = poly.field().p;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : poly.terms()) {
    nlohmann::json exp = nlohmann::json::array();
    for (int i = 0; i < std::max(1, t.mono.size()); ++i) exp.push_back(t.mono[i]);
    std::string c = ScalarTraits<S>::to_string(t.coeff);
    if (c.find('/') == std::string::npos) c += "/1";
    terms.push_back({{"exp", exp}, {"coeff", c}});
  }
  j["terms"] = terms;
  return j;
}

}  // namespace

nlohmann::json to_json(const QPoly& p) { return to_json_impl(p); }
nlohmann::json to_json(const FpPoly& p) { return to_json_impl(p); }

std::variant<QPoly, FpPoly> polynomial_from_json(const nlohmann::json& j) {
  std::string field = j.at("field").get<std::string>();
  std::vector<QPoly::Term> terms;
  for (const auto& t : j.at("terms")) {
    std::vector<int> exps = t.at("exp").get<std::vector<int>>();
    Rational c(t.at("coeff").get<std::string>());
    if (c.get_den() == 0) throw std::invalid_argument("JSON polynomial: zero denominator");
    c.canonicalize();
    terms.push_back({Monomial::from_exponents(exps), c});
  }
  QPoly q = QPoly::from_terms(Field{}, std::move(terms));
  if (field == "Q") return q;
  if (field == "Fp") {
    auto p = j.at("p").get<std::uint64_t>();
    if (p < 3 || !is_probable_prime(p)) throw std::invalid_argument("JSON polynomial: p must be an odd prime");
    return reduce_mod_p(q, p);
  }
  throw std::invalid_argument("JSON polynomial: unknown field '" + field + "'");
}

}  // namespace filicenter
