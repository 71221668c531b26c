#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nlc/curve.hpp"
#include "nlc/errors.hpp"
#include "nlc/harness.hpp"
#include "nlc/json_io.hpp"
#include "nlc/monomial.hpp"
#include "nlc/parse.hpp"

using namespace nlc;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Options {
  bool json = false;
  std::string gens, c, v, op, divisor, line, property = "all", c_max;
  std::optional<int> degree;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool no_timing = false;
};

std::optional<int> env_degree() {
  const char* s = std::getenv("NLC_DEGREE_BOUND");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  const long d = std::strtol(s, &end, 10);
  if (*end != '\0' || d < 1 || d > 200) throw InvalidArgument("NLC_DEGREE_BOUND must be an integer in [1, 200]");
  return static_cast<int>(d);
}

int truncation_degree(const Options& o, const ValuationIdeal& ideal) {
  if (o.degree) return *o.degree;
  if (auto e = env_degree()) return *e;
  return default_degree(ideal);
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string ideal_text(const MonomialIdealGens& a) {
  return a.is_unit() ? "(1)" : "(" + monomial_ideal_str(a) + ")";
}

std::string rationals_text(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "]";
}

Json rationals_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational_json(r));
  return out;
}

Rational require_c(const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidArgument(std::string(flag) + " is required");
  const Rational c = Rational::parse(text);
  if (c.sign() <= 0) throw InvalidArgument(std::string(flag) + " must be positive");
  return c;
}

int run_monomial(const Options& o) {
  if (o.gens.empty()) throw InvalidArgument("--gens is required");
  const MonomialIdealGens a = parse_monomial_ideal(o.gens);
  const std::string op = o.op.empty() ? "nlc" : o.op;
  if (op == "jumps") {
    const Rational c_max = require_c(o.c_max.empty() ? o.c : o.c_max, "--c");
    const auto jumps = jumping_numbers_monomial(a, c_max);
    emit(o, {{"gens", monomial_ideal_str(a)}, {"c_max", rational_json(c_max)}, {"jumps", rationals_list(jumps)}},
         "jumping numbers up to " + c_max.str() + ": " + rationals_text(jumps) + "\n");
    return kOk;
  }
  const Rational c = require_c(o.c, "--c");
  const MonomialPair p{a, c};
  if (op == "nlc" || op == "mult") {
    const GeneratorResult r = op == "nlc" ? nlc_generators(p, o.degree) : mult_generators(p, o.degree);
    Json j = {{"gens", monomial_ideal_str(a)}, {"c", rational_json(c)}, {"op", op}};
    const Json gens = generators_json(r);
    for (auto& [k, val] : gens.items()) j[k] = val;
    j["degree_bound"] = r.degree_bound;
    j["certified_degree"] = r.certified_degree;
    std::ostringstream s;
    s << (op == "nlc" ? "J_NLC" : "J") << " = " << ideal_text(r.ideal) << (r.ideal.is_unit() ? "  (trivial)" : "")
      << "\n"
      << "degree bound " << r.degree_bound << ", certified degree " << r.certified_degree << ", "
      << (r.complete ? "complete" : "incomplete") << "\n";
    emit(o, j, s.str());
    return kOk;
  }
  if (op == "member") {
    if (o.v.empty()) throw InvalidArgument("--v is required for --op member");
    const Exponent v = parse_exponent(o.v);
    if (v.size() != a.dim()) throw DimensionMismatch("--v has the wrong number of entries");
    const bool in_nlc = nlc_member(v, p), in_mult = mult_member(v, p);
    emit(o,
         {{"gens", monomial_ideal_str(a)}, {"c", rational_json(c)}, {"v", exponent_json(v)}, {"nlc", in_nlc},
          {"mult", in_mult}},
         "x^" + exponent_str(v) + ": " + (in_nlc ? "in" : "not in") + " J_NLC, " + (in_mult ? "in" : "not in") +
             " J\n");
    return kOk;
  }
  throw InvalidArgument("unknown --op '" + op + "' for monomial (nlc, mult, member, jumps)");
}

std::string poly_list_text(const std::vector<Poly2>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].str();
  return s.empty() ? "(none)" : s;
}

std::string points_text(const std::vector<PlanePoint>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + ("(" + pts[i][0].str() + ", " + pts[i][1].str() + ")");
  return s.empty() ? "(none)" : s;
}

int run_curve(const Options& o) {
  if (o.divisor.empty()) throw InvalidArgument("--divisor is required");
  const CurveDivisor delta = parse_divisor(o.divisor);
  const std::string op = o.op.empty() ? "nlc" : o.op;
  auto r = std::make_shared<const ResolutionData>(resolve(delta));
  const CoeffDivisor coeffs = pair_coefficients(*r, delta);
  const Json head = {{"divisor", divisor_str(delta)}, {"op", op}};
  if (op == "nlc" || op == "mult") {
    const ValuationIdeal ideal =
        ideal_from_coefficients(r, coeffs, op == "nlc" ? CurveIdealKind::nlc : CurveIdealKind::mult);
    const int d = truncation_degree(o, ideal);
    const TruncatedBasis basis = truncated_basis(ideal, d);
    Json j = head;
    const Json body = ideal_json(ideal, basis);
    for (auto& [k, val] : body.items()) j[k] = val;
    std::ostringstream s;
    s << (op == "nlc" ? "J_NLC" : "J") << " conditions:";
    if (ideal.conditions.empty()) s << " none (trivial)";
    for (const auto& c : ideal.conditions) s << " ord_" << c.divisor << " >= " << c.order << ";";
    s << "\nbasis in degree <= " << d << " (dim " << basis.dim() << "): " << poly_list_text(basis.polys()) << "\n";
    emit(o, j, s.str());
    return kOk;
  }
  if (op == "resolve") {
    Json j = head;
    j["resolution"] = resolution_json(*r);
    j["pair_coefficients"] = coeff_divisor_json(coeffs);
    std::ostringstream s;
    s << r->nodes.size() << " blow-ups\n";
    for (const auto& n : r->nodes) {
      s << n.label() << ": parent " << (n.parent ? "E" + std::to_string(n.parent) : std::string("plane"))
        << ", center (" << n.center[0].str() << ", " << n.center[1].str() << "), k = " << n.k << ", coefficient "
        << coeffs.coefficient(n.label()).str() << "\n";
    }
    emit(o, j, s.str());
    return kOk;
  }
  if (op == "lc") {
    const bool lc = is_lc(delta), klt = is_klt(delta);
    emit(o, {{"divisor", divisor_str(delta)}, {"lc", lc}, {"klt", klt}},
         std::string("lc: ") + (lc ? "yes" : "no") + ", klt: " + (klt ? "yes" : "no") + "\n");
    return kOk;
  }
  if (op == "locus" || op == "centers") {
    std::vector<std::size_t> comps;
    std::vector<PlanePoint> pts;
    if (op == "locus") {
      const NlcLocus l = nlc_locus(delta, *r);
      comps = l.components;
      pts = l.points;
    } else {
      const LcCenters l = lc_centers(delta, *r);
      comps = l.components;
      pts = l.points;
    }
    Json cj = Json::array();
    std::vector<Poly2> cp;
    for (std::size_t j : comps) {
      cp.push_back(delta.components()[j].curve.poly());
      cj.push_back({{"label", CurveDivisor::label(j)}, {"polynomial", cp.back().str()}});
    }
    Json pj = Json::array();
    for (const auto& p : pts) pj.push_back(point_json(p));
    Json j = head;
    j["components"] = cj;
    j["points"] = pj;
    emit(o, j, "components: " + poly_list_text(cp) + "\npoints: " + points_text(pts) + "\n");
    return kOk;
  }
  throw InvalidArgument("unknown --op '" + op + "' for curve (nlc, mult, resolve, lc, locus, centers)");
}

int run_restrict(const Options& o) {
  if (o.divisor.empty() || o.line.empty()) throw InvalidArgument("--divisor and --line are required");
  const CurveDivisor b = parse_divisor(o.divisor);
  const PlaneCurve s = parse_line(o.line);
  const LinePointDivisor bs = restrict_divisor(b, s);
  const LineIdeal on_line = nlc_on_line(bs);
  const CurveDivisor sb = b.plus(s, Rational(1));
  auto r = std::make_shared<const ResolutionData>(resolve(sb));
  const ValuationIdeal ideal = ideal_from_coefficients(r, pair_coefficients(*r, sb), CurveIdealKind::nlc);
  const int d = truncation_degree(o, ideal);
  const LineIdeal restricted = restrict_ideal(ideal, s, d);
  const bool equal = line_slice_equal(on_line, restricted, d) && on_line.generator == restricted.generator;
  Json j = {{"line", s.poly().str()},
            {"divisor", divisor_str(b)},
            {"degree", d},
            {"b_s", line_divisor_json(bs)},
            {"nlc_on_line", line_ideal_json(on_line, d)},
            {"restricted", line_ideal_json(restricted, d)},
            {"equal", equal}};
  std::ostringstream t;
  t << "B_S:";
  if (bs.points.empty()) t << " 0";
  for (const auto& p : bs.points) t << " " << p.coeff.str() << "*(t = " << p.param.str() << ")";
  t << "\nJ_NLC(S, B_S) = (" << on_line.generator.str() << ")\n"
    << "J_NLC(X, S+B)|_S = (" << restricted.generator.str() << ")\n"
    << (equal ? "equal" : "NOT equal") << " at degree " << d << "\n";
  emit(o, j, t.str());
  return equal ? kOk : kCheckFailed;
}

int run_lc(const Options& o) {
  if (!o.gens.empty()) {
    const MonomialIdealGens a = parse_monomial_ideal(o.gens);
    const auto jumps = jumping_numbers_monomial(a, Rational(static_cast<long>(a.dim())));
    if (jumps.empty()) throw InvalidArgument("the unit ideal has no log canonical threshold");
    Json j = {{"gens", monomial_ideal_str(a)}, {"lct", rational_json(jumps.front())}};
    std::string text = "lct = " + jumps.front().str() + "\n";
    if (!o.c.empty()) {
      const Rational c = require_c(o.c, "--c");
      const bool lc = c <= jumps.front();
      j["c"] = rational_json(c);
      j["lc"] = lc;
      j["klt"] = c < jumps.front();
      text += std::string("lc at c = ") + c.str() + ": " + (lc ? "yes" : "no") + "\n";
    }
    emit(o, j, text);
    return kOk;
  }
  if (o.divisor.empty()) throw InvalidArgument("--divisor or --gens is required");
  CurveDivisor delta = parse_divisor(o.divisor);
  if (!o.c.empty()) delta = delta.scaled(require_c(o.c, "--c"));
  const bool lc = is_lc(delta), klt = is_klt(delta);
  emit(o, {{"divisor", divisor_str(delta)}, {"lc", lc}, {"klt", klt}},
       std::string("lc: ") + (lc ? "yes" : "no") + ", klt: " + (klt ? "yes" : "no") + "\n");
  return kOk;
}

int run_jumps(const Options& o) {
  const Rational c_max = require_c(o.c_max.empty() ? o.c : o.c_max, "--c-max");
  std::vector<Rational> jumps;
  Json j;
  if (!o.gens.empty()) {
    const MonomialIdealGens a = parse_monomial_ideal(o.gens);
    jumps = jumping_numbers_monomial(a, c_max);
    j["gens"] = monomial_ideal_str(a);
  } else {
    if (o.divisor.empty()) throw InvalidArgument("--divisor or --gens is required");
    const CurveDivisor delta = parse_divisor(o.divisor);
    auto r = std::make_shared<const ResolutionData>(resolve(delta));
    int d = 10;
    if (o.degree) {
      d = *o.degree;
    } else if (auto e = env_degree()) {
      d = *e;
    }
    jumps = jumping_numbers_curve(delta, r, c_max, d);
    j["divisor"] = divisor_str(delta);
    j["degree"] = d;
  }
  j["c_max"] = rational_json(c_max);
  j["jumps"] = rationals_list(jumps);
  emit(o, j, "jumping numbers up to " + c_max.str() + ": " + rationals_text(jumps) + "\n");
  return kOk;
}

int run_check(const Options& o) {
  std::vector<std::string> props;
  if (o.property == "all") {
    props = property_names();
  } else {
    props.push_back(o.property);
  }
  const int degree = o.degree ? *o.degree : env_degree().value_or(8);
  Json reports = Json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& p : props) {
    const CheckReport rep = run_property(p, o.trials, o.seed, degree);
    ok = ok && rep.passed();
    reports.push_back(rep.to_json(!o.no_timing));
    text << p << ": " << rep.trials << " trials, " << rep.failures.size() << " failures";
    if (!o.no_timing) text << ", " << static_cast<long>(rep.elapsed_ms) << " ms";
    text << "\n";
    for (const auto& f : rep.failures) text << "  seed " << f.seed << ": " << f.reason << "  " << f.instance.dump() << "\n";
  }
  emit(o, reports.size() == 1 ? reports.front() : reports, text.str());
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nlc: non-lc and multiplier ideals of monomial ideals and plane curve divisors"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Machine-readable JSON output");
  };

  auto* mono = app.add_subcommand("monomial", "Monomial ideal pairs a^c");
  mono->add_option("--gens", o.gens, "Generators, e.g. \"x^2,y^3\" or \"x1*x2,x3\"");
  mono->add_option("--c", o.c, "Exponent c (rational, e.g. 5/2)");
  mono->add_option("--op", o.op, "nlc | mult | member | jumps");
  mono->add_option("--v", o.v, "Exponent vector for --op member, e.g. \"1,0\"");
  mono->add_option("--degree", o.degree, "Generator degree bound");
  mono->add_option("--c-max", o.c_max, "Upper end for --op jumps (defaults to --c)");
  add_common(mono);

  auto* curve = app.add_subcommand("curve", "Q-divisors on the affine plane");
  curve->add_option("--divisor", o.divisor, "Divisor, e.g. \"1*(x) + 1*(y^2 - x^3)\"");
  curve->add_option("--op", o.op, "nlc | mult | resolve | lc | locus | centers");
  curve->add_option("--degree", o.degree, "Truncation degree");
  add_common(curve);

  auto* restrict = app.add_subcommand("restrict", "Restriction to a line S");
  restrict->add_option("--divisor", o.divisor, "Divisor B");
  restrict->add_option("--line", o.line, "Line S, e.g. \"x\" or \"x - 2*y + 1\"");
  restrict->add_option("--degree", o.degree, "Truncation degree");
  add_common(restrict);

  auto* lc = app.add_subcommand("lc", "Log canonical test or threshold");
  lc->add_option("--divisor", o.divisor, "Divisor");
  lc->add_option("--gens", o.gens, "Monomial ideal (prints its threshold)");
  lc->add_option("--c", o.c, "Scale factor");
  add_common(lc);

  auto* jumps = app.add_subcommand("jumps", "Jumping numbers up to a bound");
  jumps->add_option("--divisor", o.divisor, "Divisor");
  jumps->add_option("--gens", o.gens, "Monomial ideal");
  jumps->add_option("--c-max", o.c_max, "Upper bound");
  jumps->add_option("--c", o.c, "Alias of --c-max");
  jumps->add_option("--degree", o.degree, "Truncation degree for curves");
  add_common(jumps);

  auto* check = app.add_subcommand("check", "Run a seeded property suite");
  check->add_option("--property", o.property, "Property name or \"all\"");
  check->add_option("--trials", o.trials, "Number of trials");
  check->add_option("--seed", o.seed, "First seed");
  check->add_option("--degree", o.degree, "Truncation degree (default 8)");
  check->add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0 for byte-stable output");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*mono) return run_monomial(o);
    if (*curve) return run_curve(o);
    if (*restrict) return run_restrict(o);
    if (*lc) return run_lc(o);
    if (*jumps) return run_jumps(o);
    return run_check(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
