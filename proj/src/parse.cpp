#include "nlc/parse.hpp"

#include <cctype>
#include <functional>
#include <map>

#include "nlc/errors.hpp"

namespace nlc {

namespace {

using Mono = std::map<int, int>;  // variable index -> exponent
using MPoly = std::map<Mono, Rational>;

constexpr int kMaxExponent = 1000;

MPoly mp_const(const Rational& c) {
  MPoly p;
  if (!c.is_zero()) p[{}] = c;
  return p;
}

void mp_add(MPoly& a, const MPoly& b, const Rational& s) {
  for (const auto& [m, c] : b) {
    Rational& slot = a[m];
    slot += s * c;
    if (slot.is_zero()) a.erase(m);
  }
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Mono m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      Rational& slot = out[m];
      slot += ca * cb;
      if (slot.is_zero()) out.erase(m);
    }
  }
  return out;
}

using Resolver = std::function<std::optional<int>(const std::string&)>;

class Parser {
 public:
  Parser(std::string_view text, Resolver vars) : text_(text), vars_(std::move(vars)) {}

  MPoly parse_all() {
    MPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  MPoly expr() {
    skip();
    Rational sign = 1;
    if (peek('+') || peek('-')) {
      if (text_[pos_] == '-') sign = -1;
      ++pos_;
    }
    MPoly acc;
    mp_add(acc, term(), sign);
    while (true) {
      skip();
      if (peek('+')) {
        ++pos_;
        mp_add(acc, term(), 1);
      } else if (peek('-')) {
        ++pos_;
        mp_add(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  // Rational literal "p" or "p/q"; leaves pos_ after it.
  Rational rational() {
    skip();
    const std::size_t start = pos_;
    if (peek('+') || peek('-')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected a number");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den) fail("expected a denominator");
    }
    check_not_decimal(start);
    return literal(start);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool at_end() {
    skip();
    return pos_ == text_.size();
  }
  void expect(char c) {
    skip();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

 private:
  void check_not_decimal(std::size_t start) const {
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      throw NonRationalLiteral("decimal literals are not accepted; write a fraction such as 1/2", start);
    }
  }

  Rational literal(std::size_t start) const {
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      throw ParseError(msg.substr(0, msg.rfind(" at offset ")), start + e.offset());
    }
  }

  MPoly term() {
    MPoly acc = factor();
    while (true) {
      skip();
      if (!peek('*')) return acc;
      ++pos_;
      acc = mp_mul(acc, factor());
    }
  }

  MPoly factor() {
    MPoly base = primary();
    while (true) {
      skip();
      if (!peek('^')) return base;
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected a positive integer exponent");
      check_not_decimal(start);
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4 || std::stoi(digits) > kMaxExponent) throw ParseError("exponent too large", start);
      const int e = std::stoi(digits);
      if (e == 0) throw ParseError("expected a positive integer exponent", start);
      MPoly r = mp_const(1);
      for (int i = 0; i < e; ++i) r = mp_mul(r, base);
      base = std::move(r);
    }
  }

  MPoly primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == den) fail("expected a denominator");
      }
      check_not_decimal(start);
      return mp_const(literal(start));
    }
    if (c == '.') throw NonRationalLiteral("decimal literals are not accepted; write a fraction such as 1/2", pos_);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto idx = vars_(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      MPoly p;
      p[Mono{{*idx, 1}}] = 1;
      return p;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Resolver vars_;
  std::size_t pos_ = 0;
};

std::optional<int> plane_var(const std::string& name) {
  if (name == "x") return 0;
  if (name == "y") return 1;
  return std::nullopt;
}

Poly2 to_poly2(const MPoly& p) {
  Poly2::Terms terms;
  for (const auto& [m, c] : p) {
    Poly2::Exponent e{0, 0};
    for (const auto& [v, k] : m) e[v] = k;
    terms[e] = c;
  }
  return Poly2::from_terms(std::move(terms));
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

Poly2 parse_polynomial(std::string_view text) { return to_poly2(Parser(text, plane_var).parse_all()); }

CurveDivisor parse_divisor(std::string_view text) {
  Parser p(text, plane_var);
  std::vector<WeightedCurve> comps;
  if (p.at_end()) p.fail("empty divisor");
  while (true) {
    const std::size_t coeff_at = p.pos();
    const Rational c = p.rational();
    p.expect('*');
    p.expect('(');
    const std::size_t poly_at = p.pos();
    const Poly2 poly = to_poly2(p.expr());
    p.expect(')');
    if (c.sign() <= 0) throw ParseError("divisor coefficients must be positive", coeff_at);
    if (poly.is_zero() || poly.is_constant()) throw ParseError("component must be a nonconstant polynomial", poly_at);
    comps.push_back({PlaneCurve(poly), c});
    if (p.at_end()) break;
    p.expect('+');
  }
  return CurveDivisor(std::move(comps));
}

MonomialIdealGens parse_monomial_ideal(std::string_view text, std::optional<std::size_t> dim) {
  bool aliases = false, indexed = false;
  auto resolve_var = [&](const std::string& name) -> std::optional<int> {
    if (name == "x" || name == "y" || name == "z") {
      aliases = true;
      return name[0] == 'z' ? 2 : name[0] - 'x';
    }
    if (name.size() >= 2 && name[0] == 'x' && name.find_first_not_of("0123456789", 1) == std::string::npos &&
        name[1] != '0' && name.size() <= 4) {
      indexed = true;
      return std::stoi(name.substr(1)) - 1;
    }
    return std::nullopt;
  };
  std::vector<std::map<int, int>> monos;
  std::size_t start = 0;
  int max_index = -1;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                     : comma - start);
    MPoly p;
    try {
      p = Parser(item, resolve_var).parse_all();
    } catch (const NonRationalLiteral& e) {
      throw NonRationalLiteral("decimal literals are not accepted; write a fraction such as 1/2", start + e.offset());
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at offset "));
      throw ParseError(msg, start + e.offset());
    }
    if (p.size() != 1) throw ParseError("each generator must be a single monomial", start);
    for (const auto& [v, e] : p.begin()->first) max_index = std::max(max_index, v);
    monos.push_back(p.begin()->first);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (aliases && indexed) throw ParseError("mixing x, y, z with x1..xn", 0);
  const std::size_t n = dim ? *dim : static_cast<std::size_t>(std::max(max_index + 1, 1));
  if (static_cast<std::size_t>(max_index + 1) > n) {
    throw DimensionMismatch("generator uses variable " + std::to_string(max_index + 1) + " of " + std::to_string(n));
  }
  std::vector<Exponent> gens;
  for (const auto& m : monos) {
    Exponent e(n, 0);
    for (const auto& [v, k] : m) e[v] = k;
    gens.push_back(std::move(e));
  }
  return MonomialIdealGens(n, std::move(gens));
}

Exponent parse_exponent(std::string_view text) {
  Exponent out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9) {
      throw ParseError("expected a nonnegative integer", start);
    }
    out.push_back(std::stol(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

PlaneCurve parse_line(std::string_view text) {
  const Poly2 p = parse_polynomial(text);
  if (p.total_degree() != 1) throw InvalidArgument("expected a line (degree-1 polynomial)");
  return PlaneCurve(p);
}

std::string divisor_str(const CurveDivisor& d) {
  std::string out;
  for (const auto& w : d.components()) {
    if (!out.empty()) out += " + ";
    out += w.coeff.str() + "*(" + w.curve.poly().str() + ")";
  }
  return out;
}

std::string monomial_ideal_str(const MonomialIdealGens& a) {
  std::string out;
  const bool alias = a.dim() <= 3;
  for (const auto& g : a.gens()) {
    if (!out.empty()) out += ", ";
    std::string term;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      if (!term.empty()) term += "*";
      term += alias ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1);
      if (g[i] > 1) term += "^" + std::to_string(g[i]);
    }
    out += term.empty() ? "1" : term;
  }
  return out;
}

std::string monomial_str(const Poly2::Exponent& e) {
  std::string out;
  if (e[0] > 0) out += "x" + (e[0] > 1 ? "^" + std::to_string(e[0]) : std::string());
  if (e[1] > 0) out += (out.empty() ? "" : "*") + ("y" + (e[1] > 1 ? "^" + std::to_string(e[1]) : std::string()));
  return out.empty() ? "1" : out;
}

}  // namespace nlc
