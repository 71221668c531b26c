#include "nlc/resolution.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "nlc/errors.hpp"

namespace nlc {

PlaneCurve::PlaneCurve(const Poly2& poly) {
  if (poly.is_zero()) throw ZeroPolynomial();
  if (poly.is_constant()) throw InvalidArgument("curve equation must be nonconstant");
  if (!is_squarefree(poly)) throw NotSquarefree("curve equation " + poly.str() + " is not squarefree");
  poly_ = poly.normalized();
}

CurveDivisor::CurveDivisor(std::vector<WeightedCurve> components) : components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].coeff.sign() <= 0) {
      throw InvalidArgument("divisor coefficients must be positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!gcd(components_[i].curve.poly(), components_[j].curve.poly()).is_constant()) {
        throw CommonFactor("components " + components_[j].curve.poly().str() + " and " +
                           components_[i].curve.poly().str() + " share a factor");
      }
    }
  }
}

CurveDivisor CurveDivisor::scaled(const Rational& s) const {
  std::vector<WeightedCurve> out = components_;
  for (auto& w : out) w.coeff *= s;
  return CurveDivisor(std::move(out));
}

CurveDivisor CurveDivisor::plus(const PlaneCurve& curve, const Rational& coeff) const {
  std::vector<WeightedCurve> out = components_;
  out.push_back({curve, coeff});
  return CurveDivisor(std::move(out));
}

namespace {

struct LocalCurve {
  int comp = -1;  // component index, or -1 for an exceptional
  int exc = 0;    // exceptional id when comp < 0
  Poly2 f;        // local equation, the site point at the origin
  std::string label() const { return comp >= 0 ? CurveDivisor::label(comp) : "E" + std::to_string(exc); }
};

struct Site {
  int parent = 0;
  int chart = 0;
  PlanePoint center;
  PlanePoint base;
  Poly2 X, Y;  // local coordinates to plane coordinates
  std::vector<LocalCurve> curves;
  bool padding = false;
};

const Poly2 kU = Poly2::x();
const Poly2 kV = Poly2::y();
const Poly2 kUV = Poly2::x() * Poly2::y();

// SNC at the origin for the curves through it.
bool snc_at_origin(const std::vector<LocalCurve>& curves) {
  if (curves.size() > 2) return false;
  for (const auto& c : curves) {
    if (c.f.order_at_origin() != 1) return false;
  }
  if (curves.size() == 2) {
    const Poly2& f = curves[0].f;
    const Poly2& g = curves[1].f;
    return !(f.coeff(1, 0) * g.coeff(0, 1) - f.coeff(0, 1) * g.coeff(1, 0)).is_zero();
  }
  return true;
}

class Resolver {
 public:
  Resolver(const CurveDivisor& delta, const ResolveOptions& options)
      : delta_(delta), options_(options), rng_(options.shuffle_seed.value_or(0)),
        pad_rng_(options.padding_seed) {
    for (const auto& w : delta.components()) out_.components.push_back(w.curve.poly());
  }

  ResolutionData run() {
    plane_stage();
    drain();
    for (int i = 0; i < options_.padding && !pool_.empty(); ++i) {
      const std::size_t pick = pad_rng_() % pool_.size();
      Site s = std::move(pool_[pick]);
      pool_.erase(pool_.begin() + static_cast<std::ptrdiff_t>(pick));
      s.padding = true;
      blow_up(std::move(s));
      drain();
    }
    return std::move(out_);
  }

 private:
  void drain() {
    while (!pending_.empty()) {
      std::size_t pick = 0;
      if (options_.shuffle_seed) pick = rng_() % pending_.size();
      Site s = std::move(pending_[pick]);
      pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(pick));
      blow_up(std::move(s));
    }
  }

  Site plane_site(const PlanePoint& p) const {
    Site s;
    s.center = p;
    s.base = p;
    s.X = kU + Poly2::constant(p[0]);
    s.Y = kV + Poly2::constant(p[1]);
    for (std::size_t j = 0; j < out_.components.size(); ++j) {
      if (!out_.components[j].eval(p[0], p[1]).is_zero()) continue;
      s.curves.push_back({static_cast<int>(j), 0, out_.components[j].translate(p[0], p[1])});
    }
    return s;
  }

  void collect(const std::vector<Poly2>& system, std::set<PlanePoint>& bad) const {
    const PlaneSolution sol = solve_system(system);
    if (sol.has_irrational) {
      throw NonRationalCenter(sol.certified
                                  ? "a point that must be blown up has irrational coordinates"
                                  : "could not certify that all blow-up centers are rational");
    }
    bad.insert(sol.rational.begin(), sol.rational.end());
  }

  void plane_stage() {
    const auto& g = out_.components;
    std::set<PlanePoint> bad;
    for (const auto& f : g) collect({f, f.dx(), f.dy()}, bad);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        const Poly2 jac = g[i].dx() * g[j].dy() - g[i].dy() * g[j].dx();
        collect({g[i], g[j], jac}, bad);
        for (std::size_t k = j + 1; k < g.size(); ++k) collect({g[i], g[j], g[k]}, bad);
      }
    }
    out_.certificate.plane_bad_points = bad.size();
    for (const auto& p : bad) pending_.push_back(plane_site(p));

    // Padding candidates: a point off the support and a few rational points
    // on each component.
    std::set<PlanePoint> seen = bad;
    for (long a = 0; a <= 3; ++a) {
      for (const auto& f : g) {
        for (const auto& [b, m] : rational_roots(f.at_x(Rational(a)))) {
          const PlanePoint p{Rational(a), b};
          if (seen.insert(p).second) pool_.push_back(plane_site(p));
        }
      }
    }
    for (long a = 7;; a += 3) {
      const PlanePoint p{Rational(a), Rational(a + 4)};
      bool free = true;
      for (const auto& f : g) free = free && !f.eval(p[0], p[1]).is_zero();
      if (free) {
        pool_.push_back(plane_site(p));
        break;
      }
    }
  }

  void blow_up(Site site) {
    if (out_.nodes.size() >= options_.max_nodes) {
      throw DegreeOverflow("resolution exceeded " + std::to_string(options_.max_nodes) + " blow-ups");
    }
    ResolutionNode node;
    node.id = static_cast<int>(out_.nodes.size()) + 1;
    node.parent = site.parent;
    node.chart = site.chart;
    node.center = site.center;
    node.base = site.base;
    node.padding = site.padding;
    node.k = 1;
    for (const auto& c : site.curves) {
      if (c.comp < 0) {
        node.proximity.push_back(c.exc);
        node.k += out_.node(c.exc).k;
      }
    }
    std::sort(node.proximity.begin(), node.proximity.end());
    node.ord.assign(out_.components.size(), 0);
    for (const auto& c : site.curves) {
      if (c.comp >= 0) node.ord[c.comp] += c.f.order_at_origin();
    }
    for (int p : node.proximity) {
      for (std::size_t j = 0; j < node.ord.size(); ++j) node.ord[j] += out_.node(p).ord[j];
    }
    node.map_x = site.X.substitute(kU, kUV);
    node.map_y = site.Y.substitute(kU, kUV);
    const int id = node.id;
    const std::string elabel = node.label();
    out_.nodes.push_back(node);

    // Chart 1: (x, y) = (u, uv), E = {u = 0}.
    std::vector<LocalCurve> chart1;
    std::vector<Poly1> traces;
    for (const auto& c : site.curves) {
      const int m = c.f.order_at_origin();
      Poly2 f1 = c.f.substitute(kU, kUV).divide_by_monomial(m, 0);
      Poly1 h = f1.at_x_zero();
      if (h.degree() <= 0) continue;
      chart1.push_back({c.comp, c.exc, std::move(f1)});
      traces.push_back(std::move(h));
    }
    std::set<Rational> bad;
    std::map<Rational, std::vector<std::size_t>> on_point;
    std::vector<Poly1> irr;
    for (std::size_t i = 0; i < traces.size(); ++i) {
      for (const auto& [v0, m] : rational_roots(traces[i])) {
        on_point[v0].push_back(i);
        if (m > 1) bad.insert(v0);
      }
      irr.push_back(irrational_part(traces[i]));
      if (!gcd(irr[i], irr[i].derivative()).is_constant()) {
        throw NonRationalCenter(chart1[i].label() + " is tangent to " + elabel + " at an irrational point");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (!gcd(irr[i], irr[j]).is_constant()) {
          throw NonRationalCenter(chart1[i].label() + " and " + chart1[j].label() + " meet on " + elabel +
                                  " at an irrational point");
        }
      }
    }
    for (const auto& [v0, idx] : on_point) {
      if (idx.size() > 1) bad.insert(v0);
    }
    out_.certificate.exceptional_points_checked += on_point.size() + 1;

    auto chart1_site = [&](const Rational& v0) {
      Site s;
      s.parent = id;
      s.chart = 1;
      s.center = {Rational(0), v0};
      s.base = site.base;
      s.X = node.map_x.substitute(kU, kV + Poly2::constant(v0));
      s.Y = node.map_y.substitute(kU, kV + Poly2::constant(v0));
      s.curves.push_back({-1, id, kU});
      for (const auto& c : chart1) {
        if (c.f.eval(0, v0).is_zero()) s.curves.push_back({c.comp, c.exc, c.f.translate(0, v0)});
      }
      return s;
    };
    for (const auto& v0 : bad) pending_.push_back(chart1_site(v0));
    for (const auto& [v0, idx] : on_point) {
      if (bad.count(v0)) continue;
      out_.certificate.crossings.emplace_back(elabel, chart1[idx.front()].label());
      pool_.push_back(chart1_site(v0));
    }
    for (long v0 = 1;; ++v0) {
      if (on_point.count(Rational(v0))) continue;
      pool_.push_back(chart1_site(Rational(v0)));
      break;
    }

    // Chart 2: (x, y) = (uv, v), E = {v = 0}; only its origin is new.
    Site s2;
    s2.parent = id;
    s2.chart = 2;
    s2.base = site.base;
    s2.X = site.X.substitute(kUV, kV);
    s2.Y = site.Y.substitute(kUV, kV);
    s2.curves.push_back({-1, id, kV});
    for (const auto& c : site.curves) {
      const int m = c.f.order_at_origin();
      Poly2 f2 = c.f.substitute(kUV, kV).divide_by_monomial(0, m);
      if (f2.eval(0, 0).is_zero()) s2.curves.push_back({c.comp, c.exc, std::move(f2)});
    }
    if (!snc_at_origin(s2.curves)) {
      pending_.push_back(std::move(s2));
    } else {
      if (s2.curves.size() == 2) out_.certificate.crossings.emplace_back(elabel, s2.curves[1].label());
      pool_.push_back(std::move(s2));
    }
  }

  const CurveDivisor& delta_;
  ResolveOptions options_;
  std::mt19937_64 rng_;
  std::mt19937_64 pad_rng_;
  ResolutionData out_;
  std::deque<Site> pending_;
  std::vector<Site> pool_;
};

}  // namespace

ResolutionData resolve(const CurveDivisor& delta, const ResolveOptions& options) {
  return Resolver(delta, options).run();
}

CoeffDivisor pair_coefficients(const ResolutionData& r, const CurveDivisor& delta) {
  if (r.components.size() != delta.size()) throw InvalidArgument("resolution does not match divisor");
  CoeffDivisor out;
  for (std::size_t j = 0; j < delta.size(); ++j) out.set(CurveDivisor::label(j), delta.components()[j].coeff);
  for (const auto& n : r.nodes) {
    Rational a;
    for (std::size_t j = 0; j < delta.size(); ++j) a += delta.components()[j].coeff * Rational(n.ord[j]);
    out.set(n.label(), a - Rational(n.k));
  }
  return out;
}

}  // namespace nlc
