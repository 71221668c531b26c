#include "nlc/monomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "nlc/errors.hpp"
#include "nlc/feasibility.hpp"
#include "nlc/linear_algebra.hpp"

namespace nlc {

namespace {

long degree(const Exponent& v) { return std::accumulate(v.begin(), v.end(), 0L); }

bool dominates(const Exponent& v, const Exponent& g) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < g[i]) return false;
  }
  return true;
}

bool graded_less(const Exponent& a, const Exponent& b) {
  const long da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a > b;
}

void check_dim(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw DimensionMismatch("expected " + std::to_string(expected) + " variables, got " +
                            std::to_string(got));
  }
}

Rational dot(const Exponent& w, const std::vector<Rational>& u) {
  Rational s;
  for (std::size_t i = 0; i < w.size(); ++i) s += Rational(w[i]) * u[i];
  return s;
}

// One linearity region: a generator chosen from every factor.
struct Region {
  std::vector<std::vector<Integer>> cone_rows;  // rows A with A w >= 0 (includes w >= 0)
  std::vector<Rational> weighted;               // sum_f c_f u_f
};

std::vector<Region> regions(const MixedPair& p) {
  const std::size_t n = p.dim();
  std::vector<Region> out;
  std::vector<std::size_t> pick(p.factors.size(), 0);
  while (true) {
    Region r;
    r.weighted.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> row(n, 0);
      row[i] = 1;
      r.cone_rows.push_back(std::move(row));
    }
    for (std::size_t f = 0; f < p.factors.size(); ++f) {
      const auto& gens = p.factors[f].ideal.gens();
      const Exponent& u = gens[pick[f]];
      for (std::size_t i = 0; i < n; ++i) r.weighted[i] += p.factors[f].c * Rational(u[i]);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (g == pick[f]) continue;
        std::vector<Integer> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = gens[g][i] - u[i];
        r.cone_rows.push_back(std::move(row));
      }
    }
    out.push_back(std::move(r));
    std::size_t f = 0;
    while (f < pick.size()) {
      if (++pick[f] < p.factors[f].ideal.gens().size()) break;
      pick[f] = 0;
      ++f;
    }
    if (f == pick.size()) break;
  }
  return out;
}

std::vector<Integer> scaled_row(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& x : row) l = lcm(l, x.denominator());
  std::vector<Integer> out;
  for (const auto& x : row) out.push_back(x.numerator() * (l / x.denominator()));
  return out;
}

// Extreme rays of the pointed cone {w : A w >= 0} as primitive vectors.
std::vector<Exponent> extreme_rays(const std::vector<std::vector<Integer>>& rows, std::size_t n) {
  std::set<Exponent> found;
  auto admissible = [&](const std::vector<Integer>& z) {
    for (const auto& row : rows) {
      Integer s = 0;
      for (std::size_t i = 0; i < n; ++i) s += row[i] * z[i];
      if (s < 0) return false;
    }
    return true;
  };
  auto record = [&](std::vector<Integer> z) {
    Integer g = 0;
    for (const auto& x : z) g = gcd(g, x);
    if (g == 0) return;
    for (auto& x : z) x /= g;
    for (int s = 0; s < 2; ++s) {
      if (admissible(z)) {
        Exponent e;
        for (const auto& x : z) e.push_back(to_long(x));
        found.insert(std::move(e));
        return;
      }
      for (auto& x : z) x = -x;
    }
  };
  if (n == 1) {
    record({Integer(1)});
    return {found.begin(), found.end()};
  }
  const std::size_t k = n - 1;
  if (rows.size() < k) return {};
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    RationalMatrix m;
    for (std::size_t i : idx) {
      RationalVector row;
      for (const auto& x : rows[i]) row.emplace_back(x);
      m.push_back(std::move(row));
    }
    RationalMatrix ker = nullspace(m, n);
    if (ker.size() == 1) record(scaled_row(ker.front()));
    // next combination
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == rows.size() - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace

// ---------------------------------------------------------------- ideals

MonomialIdealGens::MonomialIdealGens(std::size_t dim, std::vector<Exponent> gens) : dim_(dim) {
  if (dim == 0) throw InvalidArgument("monomial ideal needs at least one variable");
  if (gens.empty()) throw InvalidArgument("monomial ideal needs at least one generator");
  for (const auto& g : gens) {
    check_dim(dim, g.size());
    for (long e : g) {
      if (e < 0) throw InvalidArgument("negative exponent in monomial generator");
    }
  }
  std::sort(gens.begin(), gens.end(), graded_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens_) {
      if (dominates(g, h)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdealGens MonomialIdealGens::unit(std::size_t dim) {
  return MonomialIdealGens(dim, {Exponent(dim, 0)});
}

bool MonomialIdealGens::contains(const Exponent& v) const {
  check_dim(dim_, v.size());
  for (const auto& g : gens_) {
    if (dominates(v, g)) return true;
  }
  return false;
}

bool MonomialIdealGens::is_unit() const { return gens_.size() == 1 && degree(gens_.front()) == 0; }

long MonomialIdealGens::max_degree() const {
  long d = 0;
  for (const auto& g : gens_) d = std::max(d, degree(g));
  return d;
}

MonomialIdealGens product(const MonomialIdealGens& a, const MonomialIdealGens& b) {
  check_dim(a.dim(), b.dim());
  std::vector<Exponent> out;
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) {
      Exponent s(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) s[i] = u[i] + v[i];
      out.push_back(std::move(s));
    }
  }
  return MonomialIdealGens(a.dim(), std::move(out));
}

MonomialIdealGens power(const MonomialIdealGens& a, long p) {
  MonomialIdealGens r = MonomialIdealGens::unit(a.dim());
  for (long i = 0; i < p; ++i) r = product(r, a);
  return r;
}

bool contained(const MonomialIdealGens& a, const MonomialIdealGens& b) {
  check_dim(a.dim(), b.dim());
  for (const auto& g : a.gens()) {
    if (!b.contains(g)) return false;
  }
  return true;
}

RayValuation::RayValuation(Exponent w_) : w(std::move(w_)) {
  long g = 0;
  for (long x : w) {
    if (x < 0) throw InvalidArgument("ray entries must be nonnegative");
    g = std::gcd(g, x);
  }
  if (g != 1) throw InvalidArgument("ray must be a nonzero primitive vector");
}

std::size_t MixedPair::dim() const {
  if (factors.empty()) throw InvalidArgument("empty monomial pair");
  const std::size_t n = factors.front().ideal.dim();
  for (const auto& f : factors) {
    check_dim(n, f.ideal.dim());
    if (f.c.sign() <= 0) throw InvalidArgument("exponent c must be positive");
  }
  return n;
}

MixedPair as_mixed(const MonomialPair& p) { return MixedPair{{p}}; }

// ---------------------------------------------------------------- valuations

long ord_ray(const RayValuation& w, const MonomialIdealGens& a) {
  check_dim(a.dim(), w.w.size());
  long best = -1;
  for (const auto& u : a.gens()) {
    long s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += w.w[i] * u[i];
    if (best < 0 || s < best) best = s;
  }
  return best;
}

Rational delta_coefficient(const RayValuation& w, const MixedPair& p) {
  Rational s;
  for (const auto& f : p.factors) s += f.c * Rational(ord_ray(w, f.ideal));
  return s - Rational(degree(w.w)) + Rational(1);
}

Rational delta_coefficient(const RayValuation& w, const MonomialPair& p) {
  return delta_coefficient(w, as_mixed(p));
}

bool member(const Exponent& v, const MixedPair& p, IdealKind kind) {
  const std::size_t n = p.dim();
  check_dim(n, v.size());
  for (long e : v) {
    if (e < 0) throw InvalidArgument("exponent vector must be nonnegative");
  }
  for (const Region& r : regions(p)) {
    std::vector<LinearConstraint> sys;
    for (const auto& row : r.cone_rows) sys.push_back({row, 0, false});
    std::vector<Rational> pos(n), viol(n);
    for (std::size_t i = 0; i < n; ++i) {
      pos[i] = kind == IdealKind::nlc ? r.weighted[i] - Rational(1) : Rational(1);
      viol[i] = r.weighted[i] - Rational(v[i] + 1);
    }
    sys.push_back(make_constraint(pos, 0, true));
    sys.push_back(make_constraint(viol, 0, false));
    if (is_feasible(std::move(sys))) return false;
  }
  return true;
}

bool nlc_member(const Exponent& v, const MonomialPair& p) { return member(v, as_mixed(p), IdealKind::nlc); }
bool mult_member(const Exponent& v, const MonomialPair& p) { return member(v, as_mixed(p), IdealKind::mult); }

// ---------------------------------------------------------------- descriptions

long InequalityDescription::certified_degree() const { return degree(box); }

bool InequalityDescription::contains(const Exponent& v) const {
  for (const auto& q : inequalities) {
    Integer s = 0;
    for (std::size_t i = 0; i < dim; ++i) s += Integer(q.ray[i]) * v[i];
    if (s < q.bound) return false;
  }
  return true;
}

InequalityDescription describe(const MixedPair& p, IdealKind kind) {
  InequalityDescription d;
  d.dim = p.dim();
  const std::size_t n = d.dim;
  std::map<Exponent, Integer> strongest;
  for (Region& r : regions(p)) {
    if (kind == IdealKind::nlc) {
      std::vector<Rational> row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = r.weighted[i] - Rational(1);
      r.cone_rows.push_back(scaled_row(row));
    }
    for (const Exponent& ray : extreme_rays(r.cone_rows, n)) {
      const Rational t = dot(ray, r.weighted) - Rational(degree(ray));
      if (kind == IdealKind::nlc && t.sign() <= 0) continue;
      const Integer bound = t.floor() + 1;
      if (bound <= 0) continue;
      auto [it, inserted] = strongest.try_emplace(ray, bound);
      if (!inserted && it->second < bound) it->second = bound;
    }
  }
  d.box.assign(n, 0);
  for (const auto& [ray, bound] : strongest) {
    d.inequalities.push_back({ray, bound});
    for (std::size_t i = 0; i < n; ++i) {
      if (ray[i] == 0) continue;
      const long b = to_long(floor_div(bound - 1, Integer(ray[i]))) + 1;
      d.box[i] = std::max(d.box[i], b);
    }
  }
  return d;
}

long default_degree_bound(const MixedPair& p) {
  Rational s;
  for (const auto& f : p.factors) s += f.c * Rational(f.ideal.max_degree());
  return static_cast<long>(p.dim()) * to_long(s.ceil());
}

GeneratorResult generators(const MixedPair& p, IdealKind kind, std::optional<long> degree_bound) {
  const InequalityDescription d = describe(p, kind);
  GeneratorResult out;
  out.certified_degree = d.certified_degree();
  out.degree_bound = degree_bound ? *degree_bound : std::max(default_degree_bound(p), out.certified_degree);
  if (out.degree_bound < 0) throw InvalidArgument("degree bound must be nonnegative");
  out.complete = out.degree_bound >= out.certified_degree;
  const long top = std::min(out.degree_bound, out.certified_degree);

  const std::size_t n = d.dim;
  std::vector<Exponent> found;
  Exponent v(n, 0);
  // Exponents of total degree exactly `deg` inside the box, in descending
  // lexicographic order.
  std::function<void(std::size_t, long)> walk = [&](std::size_t i, long left) {
    if (i + 1 == n) {
      if (left > d.box[i]) return;
      v[i] = left;
      for (const auto& g : found) {
        if (dominates(v, g)) return;
      }
      if (d.contains(v)) found.push_back(v);
      return;
    }
    for (long e = std::min(left, d.box[i]); e >= 0; --e) {
      v[i] = e;
      walk(i + 1, left - e);
    }
  };
  for (long deg = 0; deg <= top; ++deg) walk(0, deg);
  if (found.empty()) {
    // Nothing below the bound; only possible for an incomplete search.
    out.ideal = MonomialIdealGens();
    return out;
  }
  out.ideal = MonomialIdealGens(n, std::move(found));
  return out;
}

GeneratorResult nlc_generators(const MonomialPair& p, std::optional<long> degree_bound) {
  return generators(as_mixed(p), IdealKind::nlc, degree_bound);
}

GeneratorResult mult_generators(const MonomialPair& p, std::optional<long> degree_bound) {
  return generators(as_mixed(p), IdealKind::mult, degree_bound);
}

std::vector<Exponent> normal_fan_rays(const MonomialIdealGens& a) {
  const MixedPair p{{MonomialPair{a, Rational(1)}}};
  std::set<Exponent> rays;
  for (const Region& r : regions(p)) {
    for (auto& ray : extreme_rays(r.cone_rows, a.dim())) rays.insert(std::move(ray));
  }
  return {rays.begin(), rays.end()};
}

std::vector<Rational> jumping_numbers_monomial(const MonomialIdealGens& a, const Rational& c_max) {
  if (c_max.sign() <= 0) throw InvalidArgument("c_max must be positive");
  std::set<Rational> candidates;
  for (const auto& r : normal_fan_rays(a)) {
    const long ord = ord_ray(RayValuation(r), a);
    if (ord == 0) continue;
    const long top = to_long((c_max * Rational(ord)).floor());
    for (long k = degree(r); k <= top; ++k) candidates.insert(Rational(Integer(k), Integer(ord)));
  }
  std::vector<Rational> jumps;
  MonomialIdealGens previous = MonomialIdealGens::unit(a.dim());
  for (const Rational& xi : candidates) {
    const MixedPair p{{MonomialPair{a, xi}}};
    const InequalityDescription d = describe(p, IdealKind::mult);
    bool shrinks = false;
    for (const auto& g : previous.gens()) {
      if (!d.contains(g)) {
        shrinks = true;
        break;
      }
    }
    if (shrinks) {
      jumps.push_back(xi);
      previous = generators(p, IdealKind::mult).ideal;
    }
  }
  return jumps;
}

// ---------------------------------------------------------------- graded systems

MonomialIdealGens GradedSystemSpec::member_at(long p) const {
  if (p < 0) throw InvalidArgument("graded system index must be nonnegative");
  if (kind == Kind::powers) return power(base, p);
  RayValuation ray(w0);
  const std::size_t n = w0.size();
  if (p == 0) return MonomialIdealGens::unit(n);
  Exponent box(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (w0[i] > 0) box[i] = (p + w0[i] - 1) / w0[i];
  }
  std::vector<Exponent> gens;
  Exponent v(n, 0);
  auto value = [&](const Exponent& x) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += w0[i] * x[i];
    return s;
  };
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      if (value(v) < p) return;
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] > 0 && value(v) - w0[j] >= p) return;
      }
      gens.push_back(v);
      return;
    }
    for (long e = 0; e <= box[i]; ++e) {
      v[i] = e;
      walk(i + 1);
    }
    v[i] = 0;
  };
  walk(0);
  return MonomialIdealGens(n, std::move(gens));
}

AsymptoticResult asymptotic_nlc(const GradedSystemSpec& g, const Rational& c, const std::vector<long>& schedule) {
  if (schedule.empty()) throw InvalidArgument("schedule must be nonempty");
  if (c.sign() <= 0) throw InvalidArgument("c must be positive");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] <= 0 || (i > 0 && schedule[i] <= schedule[i - 1])) {
      throw InvalidArgument("schedule must be positive and strictly increasing");
    }
  }
  AsymptoticResult out;
  for (long p : schedule) {
    const MonomialPair pair{g.member_at(p), c / Rational(p)};
    out.terms.emplace_back(p, nlc_generators(pair).ideal);
  }
  for (std::size_t i = 1; i < out.terms.size() && !out.stabilized_at; ++i) {
    if (out.terms[i].second == out.terms[i - 1].second) out.stabilized_at = out.terms[i - 1].first;
  }
  for (const auto& [p, ideal] : out.terms) {
    bool top = true;
    for (const auto& [q, other] : out.terms) {
      if (!contained(other, ideal)) {
        top = false;
        break;
      }
    }
    if (top) {
      out.maximal = ideal;
      break;
    }
  }
  return out;
}

std::string exponent_str(const Exponent& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace nlc
