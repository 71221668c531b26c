#include "nlc/harness.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "nlc/errors.hpp"
#include "nlc/parse.hpp"

namespace nlc {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))]; }

 private:
  std::mt19937_64 gen_;
};

const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();

Poly2 line_poly(long a, long b, long c) {
  return Rational(a) * X + Rational(b) * Y + Poly2::constant(Rational(c));
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

TrialReport make_report(const std::string& property, Json instance) {
  TrialReport t;
  t.property = property;
  t.instance = std::move(instance);
  return t;
}

void fail(TrialReport& t, const std::string& reason, Json witness = Json::object()) {
  t.verdict = Verdict::fail;
  t.reason = reason;
  t.witness = std::move(witness);
  t.witness["reason"] = reason;
}

Json slice_json(const TruncatedBasis& b) {
  Json out = Json::array();
  for (const auto& p : b.polys()) out.push_back(p.str());
  return out;
}

std::vector<Rational> samples_between(const Rational& a, const Rational& b, int samples) {
  std::vector<Rational> out;
  for (int i = 1; i <= samples; ++i) out.push_back(a + (b - a) * Rational(i, samples + 1));
  return out;
}

// Distinct lines through the origin with small primitive directions.
std::vector<Poly2> concurrent_lines(Rng& rng, int count) {
  std::vector<Poly2> out;
  std::set<std::pair<long, long>> used;
  while (static_cast<int>(out.size()) < count) {
    long a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
    if (a == 0 && b == 0) continue;
    const long g = std::gcd(a, b);
    a /= g;
    b /= g;
    if (a < 0 || (a == 0 && b < 0)) {
      a = -a;
      b = -b;
    }
    if (!used.insert({a, b}).second) continue;
    out.push_back(line_poly(a, b, 0));
  }
  return out;
}

std::vector<Poly2> generic_lines(Rng& rng, int count, const std::vector<Poly2>& avoid = {}) {
  std::vector<Poly2> out;
  while (static_cast<int>(out.size()) < count) {
    const long a = rng.uniform(-3, 3), b = rng.uniform(-3, 3), c = rng.uniform(-3, 3);
    if (a == 0 && b == 0) continue;
    const Poly2 l = line_poly(a, b, c).normalized();
    bool fresh = true;
    for (const auto& o : out) fresh = fresh && !(o == l);
    for (const auto& o : avoid) fresh = fresh && gcd(o, l).is_constant();
    if (fresh) out.push_back(l);
  }
  return out;
}

CurveDivisor weighted(Rng& rng, const std::vector<Poly2>& polys, const std::vector<Rational>& pool) {
  std::vector<WeightedCurve> comps;
  for (const auto& p : polys) comps.push_back({PlaneCurve(p), rng.pick(pool)});
  return CurveDivisor(std::move(comps));
}

MonomialIdealGens random_monomial_ideal(Rng& rng, std::size_t n, int max_gens, int max_degree, long max_entry) {
  const int count = static_cast<int>(rng.uniform(1, max_gens));
  std::vector<Exponent> gens;
  while (static_cast<int>(gens.size()) < count) {
    Exponent e(n);
    long deg = 0;
    for (auto& x : e) {
      x = rng.uniform(0, max_entry);
      deg += x;
    }
    if (deg == 0 || deg > max_degree) continue;
    gens.push_back(std::move(e));
  }
  return MonomialIdealGens(n, std::move(gens));
}

Json pair_json(const MonomialPair& p) {
  return {{"ideal", monomial_ideal_str(p.ideal)}, {"c", p.c.str()}};
}

template <class F>
TrialReport guarded(const std::string& property, const Json& instance, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    TrialReport t = make_report(property, instance);
    fail(t, std::string("exception: ") + e.what());
    return t;
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::concurrent_lines: return "concurrent-lines";
    case Family::generic_lines: return "generic-lines";
    case Family::cusp_family: return "cusp-family";
    case Family::monomial_2var: return "monomial-2var";
    case Family::monomial_3var: return "monomial-3var";
  }
  return "unknown";
}

Json CheckReport::to_json(bool include_timing) const {
  Json fs = Json::array();
  for (const auto& f : failures) fs.push_back({{"seed", f.seed}, {"instance", f.instance}, {"witness", f.witness}});
  Json out;
  out["property"] = property;
  out["trials"] = trials;
  out["skipped"] = skipped;
  out["failures"] = fs;
  out["elapsed_ms"] = include_timing ? elapsed_ms : 0.0;
  return out;
}

Instance generate(const InstanceGenConfig& config) {
  Rng rng(config.seed);
  Instance out;
  out.descriptor = {{"family", family_name(config.family)}, {"seed", config.seed}};
  switch (config.family) {
    case Family::concurrent_lines:
      out.curve = weighted(rng, concurrent_lines(rng, config.size), config.pool);
      break;
    case Family::generic_lines:
      out.curve = weighted(rng, generic_lines(rng, config.size), config.pool);
      break;
    case Family::cusp_family: {
      const int k = config.k > 0 ? config.k : static_cast<int>(rng.uniform(3, 7));
      std::vector<WeightedCurve> comps{{PlaneCurve(Y.pow(2) - X.pow(k)), rng.pick(config.pool)}};
      if (rng.coin()) {
        const std::vector<Poly2> lines{X, Y, Y - X, Y - Rational(2) * X, Y + X};
        comps.push_back({PlaneCurve(rng.pick(lines)), rng.pick(config.pool)});
      }
      out.curve = CurveDivisor(std::move(comps));
      out.descriptor["k"] = k;
      break;
    }
    case Family::monomial_2var:
      out.monomial = random_monomial_ideal(rng, 2, config.size, config.max_degree, config.max_degree);
      break;
    case Family::monomial_3var:
      out.monomial = random_monomial_ideal(rng, 3, config.size, config.max_degree, config.max_degree);
      break;
  }
  if (out.curve) out.descriptor["divisor"] = divisor_str(*out.curve);
  if (out.monomial) out.descriptor["ideal"] = monomial_ideal_str(*out.monomial);
  return out;
}

// ---------------------------------------------------------------- oracle

bool oracle_monomial_member(const Exponent& v, const MonomialPair& p, long H, IdealKind kind) {
  const std::size_t n = p.ideal.dim();
  if (v.size() != n) throw DimensionMismatch("exponent has the wrong length");
  const long num = to_long(p.c.numerator()), den = to_long(p.c.denominator());
  std::vector<long> w(n, 0);
  bool ok = true;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (!ok) return;
    if (i == n) {
      long g = 0, size = 0;
      for (long x : w) {
        g = std::gcd(g, x);
        size += x;
      }
      if (g != 1) return;
      long ord = -1;
      for (const auto& u : p.ideal.gens()) {
        long s = 0;
        for (std::size_t j = 0; j < n; ++j) s += w[j] * u[j];
        if (ord < 0 || s < ord) ord = s;
      }
      long shifted = 0;
      for (std::size_t j = 0; j < n; ++j) shifted += w[j] * (v[j] + 1);
      // delta > 1  <=>  c * ord > |w|
      const bool relevant = kind == IdealKind::mult || num * ord > den * size;
      if (relevant && !(den * shifted > num * ord)) ok = false;
      return;
    }
    for (long x = 0; x <= H; ++x) {
      w[i] = x;
      walk(i + 1);
    }
  };
  walk(0);
  return ok;
}

Rational oracle_lct(const MonomialIdealGens& a, long H) {
  const std::size_t n = a.dim();
  std::optional<Rational> best;
  std::vector<long> w(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      long g = 0, size = 0;
      for (long x : w) {
        g = std::gcd(g, x);
        size += x;
      }
      if (g != 1) return;
      long ord = -1;
      for (const auto& u : a.gens()) {
        long s = 0;
        for (std::size_t j = 0; j < n; ++j) s += w[j] * u[j];
        if (ord < 0 || s < ord) ord = s;
      }
      if (ord <= 0) return;
      const Rational r{Integer(size), Integer(ord)};
      if (!best || r < *best) best = r;
      return;
    }
    for (long x = 0; x <= H; ++x) {
      w[i] = x;
      walk(i + 1);
    }
  };
  walk(0);
  if (!best) throw InvalidArgument("unit ideal has no log canonical threshold");
  return *best;
}

// ---------------------------------------------------------------- checks

TrialReport check_resolution_independence(const CurveDivisor& delta, int n_variants, int degree,
                                          std::uint64_t seed) {
  const Json inst = {{"divisor", divisor_str(delta)}, {"variants", n_variants}, {"degree", degree}};
  return guarded("resolution-independence", inst, [&] {
    TrialReport t = make_report("resolution-independence", inst);
    auto base_res = std::make_shared<const ResolutionData>(resolve(delta));
    // Recurrences and double-entry bookkeeping on the canonical tree.
    for (const auto& n : base_res->nodes) {
      long k = 1;
      for (int p : n.proximity) k += base_res->node(p).k;
      if (k != n.k) {
        fail(t, "discrepancy recurrence violated at " + n.label());
        return t;
      }
      for (std::size_t j = 0; j < base_res->components.size(); ++j) {
        if (ord_of(base_res->components[j], n.label(), *base_res) != n.ord[j]) {
          fail(t, "ord table disagrees with chart replay at " + n.label());
          return t;
        }
      }
    }
    const ValuationIdeal base =
        ideal_from_coefficients(base_res, pair_coefficients(*base_res, delta), CurveIdealKind::nlc);
    const TruncatedBasis base_basis = truncated_basis(base, degree);
    for (int i = 1; i < n_variants; ++i) {
      ResolveOptions opt;
      if (i % 2 == 1) opt.shuffle_seed = seed * 1000 + static_cast<std::uint64_t>(i);
      if (i % 2 == 0 || i > 2) {
        opt.padding = 2;
        opt.padding_seed = seed * 7919 + static_cast<std::uint64_t>(i);
      }
      auto r = std::make_shared<const ResolutionData>(resolve(delta, opt));
      const ValuationIdeal other = ideal_from_coefficients(r, pair_coefficients(*r, delta), CurveIdealKind::nlc);
      const TruncatedBasis b = truncated_basis(other, degree);
      if (b.rows != base_basis.rows) {
        fail(t, "non-lc ideal depends on the resolution",
             {{"variant", i}, {"canonical", slice_json(base_basis)}, {"variant_basis", slice_json(b)},
              {"variant_tree", resolution_json(*r)}});
        return t;
      }
    }
    return t;
  });
}

TrialReport check_restriction(const PlaneCurve& line, const CurveDivisor& b, int degree) {
  const Json inst = {{"line", line.poly().str()}, {"divisor", divisor_str(b)}, {"degree", degree}};
  return guarded("restriction", inst, [&] {
    TrialReport t = make_report("restriction", inst);
    const LinePointDivisor bs = restrict_divisor(b, line);
    const LineIdeal lhs = nlc_on_line(bs);
    const CurveDivisor sb = b.plus(line, Rational(1));
    auto r = std::make_shared<const ResolutionData>(resolve(sb));
    const ValuationIdeal ideal = ideal_from_coefficients(r, pair_coefficients(*r, sb), CurveIdealKind::nlc);
    const LineIdeal rhs = restrict_ideal(ideal, line, degree);
    if (!line_slice_equal(lhs, rhs, degree) || !(lhs.generator == rhs.generator)) {
      fail(t, "restricted ideal differs from the ideal of the restricted divisor",
           {{"on_line", line_ideal_json(lhs, degree)}, {"restricted", line_ideal_json(rhs, degree)},
            {"b_s", line_divisor_json(bs)}});
      return t;
    }
    // Triviality near S must agree as well.
    const NlcLocus locus = nlc_locus(sb, *r);
    bool near = false;
    const LineParam lp = line_parametrization(line);
    for (std::size_t j : locus.components) near = near || sb.components()[j].curve.poly().along(lp.x, lp.y).degree() != 0;
    for (const auto& p : locus.points) near = near || line.poly().eval(p[0], p[1]).is_zero();
    const bool lhs_trivial = lhs.generator.degree() == 0;
    if (lhs_trivial == near) {
      fail(t, "triviality near the line disagrees", {{"on_line", line_ideal_json(lhs, degree)}, {"locus_meets_line", near}});
    }
    return t;
  });
}

TrialReport check_subadditivity_monomial(const MonomialIdealGens& a, const MonomialIdealGens& b, const Rational& c,
                                         const Rational& d) {
  const Json inst = {{"a", monomial_ideal_str(a)}, {"b", monomial_ideal_str(b)}, {"c", c.str()}, {"d", d.str()}};
  return guarded("subadditivity", inst, [&] {
    TrialReport t = make_report("subadditivity", inst);
    const GeneratorResult joint = generators(MixedPair{{{a, c}, {b, d}}}, IdealKind::nlc);
    const GeneratorResult left = nlc_generators({a, c});
    const GeneratorResult right = nlc_generators({b, d});
    if (!joint.complete || !left.complete || !right.complete) {
      fail(t, "generator search incomplete");
      return t;
    }
    const MonomialIdealGens prod = product(left.ideal, right.ideal);
    if (!contained(joint.ideal, prod)) {
      fail(t, "joint ideal not contained in the product",
           {{"joint", monomial_ideal_json(joint.ideal)}, {"product", monomial_ideal_json(prod)}});
    }
    return t;
  });
}

TrialReport check_jumping_monomial(const MonomialIdealGens& a, const Rational& c_max, int samples) {
  const Json inst = {{"ideal", monomial_ideal_str(a)}, {"c_max", c_max.str()}, {"samples", samples}};
  return guarded("jumping", inst, [&] {
    TrialReport t = make_report("jumping", inst);
    const std::vector<Rational> jumps = jumping_numbers_monomial(a, c_max);
    t.instance["jumps"] = rationals_json(jumps);
    std::vector<Rational> ends{Rational(0)};
    ends.insert(ends.end(), jumps.begin(), jumps.end());
    if (ends.back() < c_max) ends.push_back(c_max);
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
      std::optional<MonomialIdealGens> first;
      for (const Rational& c : samples_between(ends[i], ends[i + 1], samples)) {
        const MonomialIdealGens nlc = nlc_generators({a, c}).ideal;
        const MonomialIdealGens mult = mult_generators({a, c}).ideal;
        if (!(nlc == mult)) {
          fail(t, "non-lc and multiplier ideals differ inside an interval",
               {{"c", c.str()}, {"nlc", monomial_ideal_json(nlc)}, {"mult", monomial_ideal_json(mult)}});
          return t;
        }
        if (first && !(*first == nlc)) {
          fail(t, "non-lc ideal not constant on an interval", {{"c", c.str()}});
          return t;
        }
        first = nlc;
      }
    }
    for (std::size_t i = 0; i + 1 < jumps.size(); ++i) {
      const MonomialIdealGens lo = nlc_generators({a, jumps[i]}).ideal;
      const MonomialIdealGens hi = nlc_generators({a, jumps[i + 1]}).ideal;
      if (!contained(hi, lo) || hi == lo) {
        fail(t, "non-lc ideal does not strictly decrease across jumps",
             {{"from", jumps[i].str()}, {"to", jumps[i + 1].str()}});
        return t;
      }
    }
    return t;
  });
}

TrialReport check_jumping_curve(const CurveDivisor& delta, const Rational& c_max, int samples, int degree) {
  const Json inst = {{"divisor", divisor_str(delta)}, {"c_max", c_max.str()}, {"samples", samples}, {"degree", degree}};
  return guarded("jumping", inst, [&] {
    TrialReport t = make_report("jumping", inst);
    auto r = std::make_shared<const ResolutionData>(resolve(delta));
    auto basis_at = [&](const Rational& c, CurveIdealKind kind) {
      const CurveDivisor scaled = delta.scaled(c);
      return truncated_basis(ideal_from_coefficients(r, pair_coefficients(*r, scaled), kind), degree);
    };
    const std::vector<Rational> jumps = jumping_numbers_curve(delta, r, c_max, degree);
    t.instance["jumps"] = rationals_json(jumps);
    std::vector<Rational> ends{Rational(0)};
    ends.insert(ends.end(), jumps.begin(), jumps.end());
    if (ends.back() < c_max) ends.push_back(c_max);
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
      std::optional<TruncatedBasis> first;
      for (const Rational& c : samples_between(ends[i], ends[i + 1], samples)) {
        const TruncatedBasis nlc = basis_at(c, CurveIdealKind::nlc);
        const TruncatedBasis mult = basis_at(c, CurveIdealKind::mult);
        if (nlc.rows != mult.rows) {
          fail(t, "non-lc and multiplier ideals differ inside an interval", {{"c", c.str()}});
          return t;
        }
        if (first && first->rows != nlc.rows) {
          fail(t, "non-lc ideal not constant on an interval", {{"c", c.str()}});
          return t;
        }
        first = nlc;
      }
    }
    for (std::size_t i = 0; i + 1 < jumps.size(); ++i) {
      const TruncatedBasis lo = basis_at(jumps[i], CurveIdealKind::nlc);
      const TruncatedBasis hi = basis_at(jumps[i + 1], CurveIdealKind::nlc);
      if (!slice_contained(hi, lo) || hi.rows == lo.rows) {
        fail(t, "non-lc ideal does not strictly decrease across jumps",
             {{"from", jumps[i].str()}, {"to", jumps[i + 1].str()}});
        return t;
      }
    }
    return t;
  });
}

TrialReport check_inclusion_chain(const CurveDivisor& delta, const std::vector<Rational>& eps, int degree) {
  const Json inst = {{"divisor", divisor_str(delta)}, {"eps", rationals_json(eps)}, {"degree", degree}};
  return guarded("inclusion-chain", inst, [&] {
    TrialReport t = make_report("inclusion-chain", inst);
    auto r = std::make_shared<const ResolutionData>(resolve(delta));
    const CoeffDivisor coeffs = pair_coefficients(*r, delta);
    const TruncatedBasis mult = truncated_basis(ideal_from_coefficients(r, coeffs, CurveIdealKind::mult), degree);
    const TruncatedBasis nlc = truncated_basis(ideal_from_coefficients(r, coeffs, CurveIdealKind::nlc), degree);
    if (!slice_contained(mult, nlc)) {
      fail(t, "multiplier ideal not contained in the non-lc ideal");
      return t;
    }
    for (const auto& e : eps) {
      const CurveDivisor smaller = delta.scaled(Rational(1) - e);
      const TruncatedBasis lower =
          truncated_basis(ideal_from_coefficients(r, pair_coefficients(*r, smaller), CurveIdealKind::mult), degree);
      if (!slice_contained(nlc, lower)) {
        fail(t, "non-lc ideal not contained in the multiplier ideal of (1 - eps) times the divisor", {{"eps", e.str()}});
        return t;
      }
    }
    return t;
  });
}

TrialReport check_inclusion_chain_monomial(const MonomialPair& p, const std::vector<Rational>& eps) {
  const Json inst = {{"pair", pair_json(p)}, {"eps", rationals_json(eps)}};
  return guarded("inclusion-chain", inst, [&] {
    TrialReport t = make_report("inclusion-chain", inst);
    const MonomialIdealGens mult = mult_generators(p).ideal;
    const MonomialIdealGens nlc = nlc_generators(p).ideal;
    if (!contained(mult, nlc)) {
      fail(t, "multiplier ideal not contained in the non-lc ideal");
      return t;
    }
    for (const auto& e : eps) {
      if (e >= p.c) continue;
      const MonomialIdealGens lower = mult_generators({p.ideal, p.c - e}).ideal;
      if (!contained(nlc, lower)) {
        fail(t, "non-lc ideal not contained in the multiplier ideal at c - eps", {{"eps", e.str()}});
        return t;
      }
    }
    return t;
  });
}

TrialReport check_inversion_adjunction(const PlaneCurve& line, const CurveDivisor& b) {
  const Json inst = {{"line", line.poly().str()}, {"divisor", divisor_str(b)}};
  return guarded("inversion-adjunction", inst, [&] {
    TrialReport t = make_report("inversion-adjunction", inst);
    const LinePointDivisor bs = restrict_divisor(b, line);
    bool line_lc = true;
    for (const auto& p : bs.points) line_lc = line_lc && p.coeff <= Rational(1);
    const CurveDivisor sb = b.plus(line, Rational(1));
    const ResolutionData r = resolve(sb);
    const CoeffDivisor coeffs = pair_coefficients(r, sb);
    const LineParam lp = line_parametrization(line);
    bool bad_over_line = false;
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (sb.components()[j].coeff > Rational(1) &&
          sb.components()[j].curve.poly().along(lp.x, lp.y).degree() != 0) {
        bad_over_line = true;
      }
    }
    for (const auto& n : r.nodes) {
      if (coeffs.coefficient(n.label()) > Rational(1) && line.poly().eval(n.base[0], n.base[1]).is_zero()) {
        bad_over_line = true;
      }
    }
    if (line_lc == bad_over_line) {
      fail(t, "lc on the line disagrees with lc near the line",
           {{"b_s", line_divisor_json(bs)}, {"pair_coefficients", coeff_divisor_json(coeffs)}});
    }
    return t;
  });
}

namespace {

// An element of the non-lc ideal outside the multiplier ideal, built from one
// lc center: the component conditions times powers of lines through the base
// points of the exceptional conditions, chosen to miss the center.
std::optional<Poly2> center_witness(const ValuationIdeal& nlc, const std::optional<std::size_t>& component,
                                    const std::optional<PlanePoint>& point) {
  const ResolutionData& r = *nlc.resolution;
  Poly2 h = Poly2::constant(Rational(1));
  std::map<PlanePoint, long> needed;
  for (const auto& c : nlc.conditions) {
    if (c.divisor[0] == 'C') {
      h = h * r.components[std::stoul(c.divisor.substr(1)) - 1].pow(static_cast<int>(c.order));
    } else {
      const PlanePoint q = r.node(std::stoi(c.divisor.substr(1))).base;
      needed[q] = std::max(needed[q], c.order);
    }
  }
  for (const auto& [q, n] : needed) {
    const Poly2 lx = X - Poly2::constant(q[0]), ly = Y - Poly2::constant(q[1]);
    Poly2 l = lx;
    if (component && PlaneCurve(lx).poly() == r.components[*component]) l = ly;
    if (point) {
      if (q == *point) return std::nullopt;
      if (q[0] == (*point)[0]) l = ly;
    }
    h = h * l.pow(static_cast<int>(n));
  }
  return h;
}

}  // namespace

TrialReport check_lc_center_criterion(const CurveDivisor& delta, int degree) {
  const Json inst = {{"divisor", divisor_str(delta)}, {"degree", degree}};
  return guarded("lc-centers", inst, [&] {
    TrialReport t = make_report("lc-centers", inst);
    auto r = std::make_shared<const ResolutionData>(resolve(delta));
    const CoeffDivisor coeffs = pair_coefficients(*r, delta);
    const ValuationIdeal mult = ideal_from_coefficients(r, coeffs, CurveIdealKind::mult);
    const ValuationIdeal nlc = ideal_from_coefficients(r, coeffs, CurveIdealKind::nlc);
    bool equal = ideal_equal(mult, nlc, degree);
    const LcCenters centers = lc_centers(delta, *r);
    // Slices can agree below the degree of every separating element.
    Json witnesses = Json::array();
    if (equal && !centers.empty()) {
      std::vector<std::optional<Poly2>> candidates;
      for (std::size_t j : centers.components) candidates.push_back(center_witness(nlc, j, std::nullopt));
      for (const auto& p : centers.points) candidates.push_back(center_witness(nlc, std::nullopt, p));
      for (const auto& h : candidates) {
        if (!h) continue;
        if (member(*h, nlc).member && !member(*h, mult).member) {
          equal = false;
          witnesses.push_back(h->str());
          break;
        }
      }
      t.instance["separating_element"] = witnesses;
    }
    if (equal != centers.empty()) {
      Json pts = Json::array();
      for (const auto& p : centers.points) pts.push_back(point_json(p));
      fail(t, "ideal equality disagrees with the absence of lc centers",
           {{"ideals_equal", equal}, {"center_components", centers.components.size()}, {"center_points", pts},
            {"pair_coefficients", coeff_divisor_json(coeffs)}});
    }
    return t;
  });
}

TrialReport check_small_multiplicity(const CurveDivisor& delta) {
  const Json inst = {{"divisor", divisor_str(delta)}};
  return guarded("small-multiplicity", inst, [&] {
    TrialReport t = make_report("small-multiplicity", inst);
    const ResolutionData r = resolve(delta);
    const CoeffDivisor coeffs = pair_coefficients(r, delta);
    std::set<PlanePoint> points{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    for (const auto& n : r.nodes) points.insert(n.base);
    for (const auto& p : points) {
      Rational mult;
      for (const auto& w : delta.components()) {
        const Poly2& g = w.curve.poly();
        if (g.eval(p[0], p[1]).is_zero()) mult += w.coeff * Rational(g.translate(p[0], p[1]).order_at_origin());
      }
      if (mult > Rational(1)) continue;
      for (const auto& n : r.nodes) {
        if (n.base == p && coeffs.coefficient(n.label()) > Rational(1)) {
          fail(t, "non-lc condition over a point of multiplicity at most 1",
               {{"point", point_json(p)}, {"divisor", n.label()}});
          return t;
        }
      }
      for (const auto& w : delta.components()) {
        if (w.coeff > Rational(1) && w.curve.poly().eval(p[0], p[1]).is_zero()) {
          fail(t, "non-lc component through a point of multiplicity at most 1", {{"point", point_json(p)}});
          return t;
        }
      }
    }
    return t;
  });
}

TrialReport check_oracle_agreement(const MonomialPair& p, const Exponent& v, long H_low, long H_high) {
  const Json inst = {{"pair", pair_json(p)}, {"v", exponent_json(v)}, {"H", Json::array({H_low, H_high})}};
  return guarded("oracle", inst, [&] {
    TrialReport t = make_report("oracle", inst);
    for (IdealKind kind : {IdealKind::nlc, IdealKind::mult}) {
      const bool exact = member(v, as_mixed(p), kind);
      const bool low = oracle_monomial_member(v, p, H_low, kind);
      const bool high = oracle_monomial_member(v, p, H_high, kind);
      if (exact != high || low != high) {
        fail(t, "exact membership disagrees with the ray oracle",
             {{"kind", kind == IdealKind::nlc ? "nlc" : "mult"}, {"exact", exact}, {"oracle_low", low},
              {"oracle_high", high}});
        return t;
      }
    }
    return t;
  });
}

// ---------------------------------------------------------------- corpora

CurveDivisor corpus_curve(std::uint64_t seed) {
  InstanceGenConfig cfg;
  cfg.seed = seed;
  static const Family families[] = {Family::concurrent_lines, Family::generic_lines, Family::cusp_family};
  cfg.family = families[seed % 3];
  cfg.size = 2 + static_cast<int>((seed / 3) % 3);
  return *generate(cfg).curve;
}

RestrictionInstance corpus_restriction(std::uint64_t seed) {
  Rng rng(seed * 2654435761ULL + 17);
  const std::vector<Rational> pool{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  const int kind = static_cast<int>(seed % 3);
  std::vector<Poly2> polys;
  Poly2 s;
  Json desc = {{"seed", seed}};
  if (kind == 0 || kind == 1) {
    polys = kind == 0 ? concurrent_lines(rng, static_cast<int>(rng.uniform(2, 3)))
                      : generic_lines(rng, static_cast<int>(rng.uniform(2, 3)));
    s = generic_lines(rng, 1, polys).front();
    desc["family"] = kind == 0 ? "concurrent-lines" : "generic-lines";
  } else {
    const int k = static_cast<int>(rng.uniform(3, 7));
    polys.push_back(Y.pow(2) - X.pow(k));
    const long sq = rng.uniform(1, 2);
    const std::vector<Poly2> targets{X, Y, X - Poly2::constant(Rational(sq * sq))};
    s = rng.pick(targets);
    if (rng.coin()) {
      const std::vector<Poly2> extra{Y - X, Y - Rational(2) * X, Y + X};
      polys.push_back(rng.pick(extra));
    }
    desc["family"] = "cusp-family";
    desc["k"] = k;
  }
  CurveDivisor b = weighted(rng, polys, pool);
  desc["divisor"] = divisor_str(b);
  desc["line"] = PlaneCurve(s).poly().str();
  return {PlaneCurve(s), std::move(b), desc};
}

OracleQuery corpus_oracle_query(std::uint64_t seed) {
  Rng rng(seed * 11400714819323198485ULL + 3);
  if (seed % 2 == 0) {
    const std::vector<Rational> cs{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)};
    MonomialIdealGens a = random_monomial_ideal(rng, 2, 3, 6, 3);
    Exponent v{rng.uniform(0, 3), rng.uniform(0, 3)};
    return {{std::move(a), rng.pick(cs)}, std::move(v)};
  }
  const std::vector<Rational> cs{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)};
  MonomialIdealGens a = random_monomial_ideal(rng, 3, 3, 3, 1);
  Exponent v{rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 2)};
  return {{std::move(a), rng.pick(cs)}, std::move(v)};
}

std::vector<std::string> property_names() {
  return {"restriction",  "subadditivity",        "resolution-independence", "oracle",           "jumping",
          "inclusion-chain", "inversion-adjunction", "lc-centers",              "small-multiplicity"};
}

CheckReport run_property(const std::string& property, std::size_t trials, std::uint64_t first_seed, int degree) {
  const auto names = property_names();
  if (std::find(names.begin(), names.end(), property) == names.end()) {
    throw InvalidArgument("unknown property '" + property + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.property = property;
  report.trials = trials;
  const std::vector<Rational> exps{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)};
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t seed = first_seed + i;
    TrialReport t;
    if (property == "restriction") {
      const RestrictionInstance inst = corpus_restriction(seed);
      t = check_restriction(inst.line, inst.b, degree);
    } else if (property == "inversion-adjunction") {
      const RestrictionInstance inst = corpus_restriction(seed);
      t = check_inversion_adjunction(inst.line, inst.b);
    } else if (property == "subadditivity") {
      Rng rng(seed * 6364136223846793005ULL + 1);
      const MonomialIdealGens a = random_monomial_ideal(rng, 2, 3, 4, 4);
      const MonomialIdealGens b = random_monomial_ideal(rng, 2, 3, 4, 4);
      const Rational c = rng.pick(exps), d = rng.pick(exps);
      t = check_subadditivity_monomial(a, b, c, d);
    } else if (property == "resolution-independence") {
      t = check_resolution_independence(corpus_curve(seed), 3, degree, seed);
    } else if (property == "oracle") {
      const OracleQuery q = corpus_oracle_query(seed);
      t = check_oracle_agreement(q.pair, q.v, 15, 25);
    } else if (property == "jumping") {
      if (seed % 2 == 0) {
        Rng rng(seed * 1442695040888963407ULL + 5);
        t = check_jumping_monomial(random_monomial_ideal(rng, 2, 3, 4, 4), Rational(2), 2);
      } else {
        t = check_jumping_curve(corpus_curve(seed), Rational(1), 2, degree);
      }
    } else if (property == "inclusion-chain") {
      const std::vector<Rational> eps{Rational(1, 10), Rational(1, 3)};
      if (seed % 2 == 0) {
        Rng rng(seed * 3935559000370003845ULL + 7);
        t = check_inclusion_chain_monomial({random_monomial_ideal(rng, 2, 3, 4, 4), rng.pick(exps)}, eps);
      } else {
        t = check_inclusion_chain(corpus_curve(seed), eps, degree);
      }
    } else if (property == "lc-centers") {
      t = check_lc_center_criterion(corpus_curve(seed), degree);
    } else {
      t = check_small_multiplicity(corpus_curve(seed));
    }
    t.seed = seed;
    if (t.verdict == Verdict::fail) report.failures.push_back(std::move(t));
    if (t.verdict == Verdict::skip) ++report.skipped;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace nlc
