#include "nlc/curve.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nlc/errors.hpp"

namespace nlc {

namespace {

Poly2 mul_trunc(const Poly2& a, const Poly2& b, int bound) {
  Poly2::Terms terms;
  for (const auto& [ea, ca] : a.terms()) {
    if (ea[0] >= bound) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (ea[0] + eb[0] >= bound) continue;
      terms[{ea[0] + eb[0], ea[1] + eb[1]}] += ca * cb;
    }
  }
  return Poly2::from_terms(std::move(terms));
}

std::vector<Poly2> trunc_powers(const Poly2& p, int top, int bound) {
  std::vector<Poly2> out{Poly2::constant(1).truncate_x(bound)};
  for (int i = 1; i <= top; ++i) out.push_back(mul_trunc(out.back(), p, bound));
  return out;
}

// h(X, Y) with every term of u-degree >= bound dropped.
Poly2 pullback_trunc(const Poly2& h, const Poly2& X, const Poly2& Y, int bound) {
  const auto xp = trunc_powers(X, std::max(h.degree_x(), 0), bound);
  const auto yp = trunc_powers(Y, std::max(h.degree_y(), 0), bound);
  Poly2 out;
  for (const auto& [e, c] : h.terms()) out += c * mul_trunc(xp[e[0]], yp[e[1]], bound);
  return out;
}

std::size_t component_index(const std::string& label, const ResolutionData& r) {
  const std::size_t j = std::stoul(label.substr(1)) - 1;
  if (j >= r.components.size()) throw InvalidArgument("unknown divisor " + label);
  return j;
}

int exceptional_id(const std::string& label, const ResolutionData& r) {
  const int id = std::stoi(label.substr(1));
  if (id < 1 || static_cast<std::size_t>(id) > r.nodes.size()) throw InvalidArgument("unknown divisor " + label);
  return id;
}

bool is_component(const std::string& label) { return !label.empty() && label[0] == 'C'; }

long exceptional_order(const Poly2& h, const ResolutionNode& n) {
  for (int bound = 8;; bound *= 2) {
    const Poly2 p = pullback_trunc(h, n.map_x, n.map_y, bound);
    if (!p.is_zero()) return p.x_adic_order();
  }
}

RationalVector to_columns(const Poly2& p, const std::map<Poly2::Exponent, std::size_t>& index, std::size_t n) {
  RationalVector v(n);
  for (const auto& [e, c] : p.terms()) v[index.at(e)] = c;
  return v;
}

TruncatedBasis echelon_slice(const std::vector<Poly2>& polys, int degree) {
  TruncatedBasis out;
  out.degree = degree;
  out.columns = graded_columns(degree);
  std::map<Poly2::Exponent, std::size_t> index;
  for (std::size_t i = 0; i < out.columns.size(); ++i) index[out.columns[i]] = i;
  RationalMatrix m;
  for (const auto& p : polys) m.push_back(to_columns(p, index, out.columns.size()));
  out.rows = reduced_row_echelon(std::move(m), out.columns.size()).rows;
  return out;
}

}  // namespace

long ValuationIdeal::total_order() const {
  long s = 0;
  for (const auto& c : conditions) s += c.order;
  return s;
}

ValuationIdeal ideal_from_coefficients(std::shared_ptr<const ResolutionData> r, const CoeffDivisor& coeffs,
                                       CurveIdealKind kind) {
  ValuationIdeal out;
  auto add = [&](const std::string& label) {
    const Rational c = coeffs.coefficient(label);
    const long m = kind == CurveIdealKind::nlc ? nlc_exponent(c) : mult_exponent(c);
    if (m >= 1) out.conditions.push_back({label, m});
  };
  for (const auto& n : r->nodes) add(n.label());
  for (std::size_t j = 0; j < r->components.size(); ++j) add(CurveDivisor::label(j));
  out.resolution = std::move(r);
  return out;
}

ValuationIdeal nlc_ideal(const CurveDivisor& delta, const ResolveOptions& options) {
  auto r = std::make_shared<const ResolutionData>(resolve(delta, options));
  return ideal_from_coefficients(r, pair_coefficients(*r, delta), CurveIdealKind::nlc);
}

ValuationIdeal mult_ideal(const CurveDivisor& delta, const ResolveOptions& options) {
  auto r = std::make_shared<const ResolutionData>(resolve(delta, options));
  return ideal_from_coefficients(r, pair_coefficients(*r, delta), CurveIdealKind::mult);
}

long ord_of(const Poly2& h, const std::string& divisor, const ResolutionData& r) {
  if (h.is_zero()) throw ZeroPolynomial();
  if (is_component(divisor)) {
    const Poly2& g = r.components[component_index(divisor, r)];
    long m = 0;
    Poly2 rest = h;
    while (true) {
      auto [q, rem] = divmod(rest, g);
      if (!rem.is_zero()) return m;
      rest = std::move(q);
      ++m;
    }
  }
  return exceptional_order(h, r.node(exceptional_id(divisor, r)));
}

Membership member(const Poly2& h, const ValuationIdeal& ideal) {
  if (h.is_zero()) throw ZeroPolynomial();
  Membership out;
  for (const auto& c : ideal.conditions) {
    const long achieved = ord_of(h, c.divisor, *ideal.resolution);
    out.certificate.push_back({c.divisor, c.order, achieved});
    if (achieved < c.order) out.member = false;
  }
  return out;
}

std::vector<Poly2::Exponent> graded_columns(int degree) {
  std::vector<Poly2::Exponent> out;
  for (int d = degree; d >= 0; --d) {
    for (int i = d; i >= 0; --i) out.push_back({i, d - i});
  }
  return out;
}

std::vector<Poly2> TruncatedBasis::polys() const {
  std::vector<Poly2> out;
  for (const auto& row : rows) {
    Poly2::Terms terms;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!row[i].is_zero()) terms[columns[i]] = row[i];
    }
    out.push_back(Poly2::from_terms(std::move(terms)));
  }
  return out;
}

TruncatedBasis truncated_basis(const ValuationIdeal& ideal, int degree) {
  if (degree < 0) throw InvalidArgument("degree bound must be nonnegative");
  const ResolutionData& r = *ideal.resolution;
  Poly2 G = Poly2::constant(1);
  std::vector<OrderCondition> exceptional;
  for (const auto& c : ideal.conditions) {
    if (is_component(c.divisor)) {
      G = G * r.components[component_index(c.divisor, r)].pow(static_cast<int>(c.order));
    } else {
      exceptional.push_back(c);
    }
  }
  const int free_degree = degree - G.total_degree();
  if (free_degree < 0) return echelon_slice({}, degree);

  const std::vector<Poly2::Exponent> qcols = graded_columns(free_degree);
  RationalMatrix m;
  for (const auto& c : exceptional) {
    const ResolutionNode& n = r.node(exceptional_id(c.divisor, r));
    const long need = c.order - exceptional_order(G, n);
    if (need <= 0) continue;
    const int bound = static_cast<int>(need);
    const auto xp = trunc_powers(n.map_x, free_degree, bound);
    const auto yp = trunc_powers(n.map_y, free_degree, bound);
    std::map<Poly2::Exponent, RationalVector> local;
    for (std::size_t b = 0; b < qcols.size(); ++b) {
      const Poly2 image = mul_trunc(xp[qcols[b][0]], yp[qcols[b][1]], bound);
      for (const auto& [e, coeff] : image.terms()) {
        auto& row = local[e];
        if (row.empty()) row.assign(qcols.size(), Rational(0));
        row[b] = coeff;
      }
    }
    for (auto& [e, row] : local) m.push_back(std::move(row));
  }
  const RationalMatrix kernel = nullspace(m, qcols.size());
  std::vector<Poly2> polys;
  for (const auto& z : kernel) {
    Poly2::Terms terms;
    for (std::size_t b = 0; b < z.size(); ++b) {
      if (!z[b].is_zero()) terms[qcols[b]] = z[b];
    }
    polys.push_back(G * Poly2::from_terms(std::move(terms)));
  }
  return echelon_slice(polys, degree);
}

TruncatedBasis slice_of_polys(const std::vector<Poly2>& gens, int degree) {
  std::vector<Poly2> polys;
  for (const auto& g : gens) {
    const int room = degree - g.total_degree();
    if (g.is_zero() || room < 0) continue;
    for (const auto& e : graded_columns(room)) polys.push_back(Poly2::monomial(1, e[0], e[1]) * g);
  }
  return echelon_slice(polys, degree);
}

bool slice_contained(const TruncatedBasis& a, const TruncatedBasis& b) {
  if (a.columns != b.columns) throw InvalidArgument("slices have different degrees");
  RowSpace space(b.columns.size());
  for (const auto& row : b.rows) space.insert(row);
  for (const auto& row : a.rows) {
    if (!space.contains(row)) return false;
  }
  return true;
}

bool ideal_equal(const ValuationIdeal& a, const ValuationIdeal& b, int degree) {
  return truncated_basis(a, degree).rows == truncated_basis(b, degree).rows;
}

bool ideal_contained(const ValuationIdeal& a, const ValuationIdeal& b, int degree) {
  return slice_contained(truncated_basis(a, degree), truncated_basis(b, degree));
}

int default_degree(const ValuationIdeal& ideal) {
  return static_cast<int>(std::max<long>(10, 2 * ideal.total_order()));
}

bool is_lc(const CurveDivisor& delta) {
  const CoeffDivisor coeffs = pair_coefficients(resolve(delta), delta);
  for (const auto& [label, c] : coeffs.entries()) {
    if (c > Rational(1)) return false;
  }
  return true;
}

bool is_klt(const CurveDivisor& delta) {
  const CoeffDivisor coeffs = pair_coefficients(resolve(delta), delta);
  for (const auto& [label, c] : coeffs.entries()) {
    if (c >= Rational(1)) return false;
  }
  return true;
}

NlcLocus nlc_locus(const CurveDivisor& delta, const ResolutionData& r) {
  NlcLocus out;
  const CoeffDivisor coeffs = pair_coefficients(r, delta);
  for (std::size_t j = 0; j < delta.size(); ++j) {
    if (delta.components()[j].coeff > Rational(1)) out.components.push_back(j);
  }
  std::set<PlanePoint> pts;
  for (const auto& n : r.nodes) {
    if (coeffs.coefficient(n.label()) <= Rational(1)) continue;
    bool on_component = false;
    for (std::size_t j : out.components) {
      on_component = on_component || r.components[j].eval(n.base[0], n.base[1]).is_zero();
    }
    if (!on_component) pts.insert(n.base);
  }
  out.points.assign(pts.begin(), pts.end());
  return out;
}

NlcLocus nlc_locus(const CurveDivisor& delta) { return nlc_locus(delta, resolve(delta)); }

LcCenters lc_centers(const CurveDivisor& delta, const ResolutionData& r) {
  LcCenters out;
  const NlcLocus nlc = nlc_locus(delta, r);
  const CoeffDivisor coeffs = pair_coefficients(r, delta);
  for (std::size_t j = 0; j < delta.size(); ++j) {
    if (delta.components()[j].coeff == Rational(1)) out.components.push_back(j);
  }
  std::set<PlanePoint> pts;
  for (const auto& n : r.nodes) {
    if (coeffs.coefficient(n.label()) != Rational(1)) continue;
    bool inside = std::find(nlc.points.begin(), nlc.points.end(), n.base) != nlc.points.end();
    for (std::size_t j : nlc.components) {
      inside = inside || r.components[j].eval(n.base[0], n.base[1]).is_zero();
    }
    if (!inside) pts.insert(n.base);
  }
  out.points.assign(pts.begin(), pts.end());
  return out;
}

LcCenters lc_centers(const CurveDivisor& delta) { return lc_centers(delta, resolve(delta)); }

LineParam line_parametrization(const PlaneCurve& line) {
  if (line.degree() != 1) throw InvalidArgument("restriction target must be a line");
  const Poly2& p = line.poly();
  const Rational a = p.coeff(1, 0), b = p.coeff(0, 1), c = p.coeff(0, 0);
  if (!b.is_zero()) {
    return {Poly1::variable(), Poly1({-c / b, -a / b})};
  }
  return {Poly1::constant(-c / a), Poly1::variable()};
}

LinePointDivisor restrict_divisor(const CurveDivisor& b, const PlaneCurve& line) {
  const LineParam lp = line_parametrization(line);
  std::map<Rational, Rational> acc;
  for (const auto& w : b.components()) {
    const Poly1 r = w.curve.poly().along(lp.x, lp.y);
    if (r.is_zero()) throw CommonComponent(w.curve.poly().str() + " contains the line " + line.poly().str());
    if (irrational_part(r).degree() > 0) {
      throw NonRationalPoint(w.curve.poly().str() + " meets the line at an irrational point");
    }
    for (const auto& [t, m] : rational_roots(r)) acc[t] += w.coeff * Rational(m);
  }
  LinePointDivisor out{line, {}};
  for (const auto& [t, c] : acc) out.points.push_back({t, c});
  return out;
}

namespace {

LineIdeal line_ideal(const LinePointDivisor& bs, bool nlc) {
  Poly1 g = Poly1::constant(1);
  for (const auto& p : bs.points) {
    const long e = nlc ? nlc_exponent(p.coeff) : mult_exponent(p.coeff);
    g = g * Poly1::linear_root(p.param).pow(static_cast<int>(e));
  }
  return {g};
}

}  // namespace

LineIdeal nlc_on_line(const LinePointDivisor& bs) { return line_ideal(bs, true); }
LineIdeal mult_on_line(const LinePointDivisor& bs) { return line_ideal(bs, false); }

std::vector<Poly1> LineIdeal::slice(int degree) const {
  std::vector<Poly1> out;
  if (generator.is_zero()) return out;
  for (int i = 0; i + generator.degree() <= degree; ++i) out.push_back(Poly1::monomial(1, i) * generator);
  return out;
}

int restriction_degree(const ValuationIdeal& ideal, int degree) {
  const ResolutionData& r = *ideal.resolution;
  long need = 0;
  for (const auto& c : ideal.conditions) {
    if (is_component(c.divisor)) {
      need += c.order * r.components[component_index(c.divisor, r)].total_degree();
    } else {
      need += c.order;
    }
  }
  return static_cast<int>(std::max<long>(degree, need));
}

LineIdeal restrict_ideal(const ValuationIdeal& ideal, const PlaneCurve& line, int degree) {
  const LineParam lp = line_parametrization(line);
  const TruncatedBasis basis = truncated_basis(ideal, restriction_degree(ideal, degree));
  Poly1 g;
  for (const auto& p : basis.polys()) g = gcd(g, p.along(lp.x, lp.y));
  return {g};
}

bool line_slice_equal(const LineIdeal& a, const LineIdeal& b, int degree) {
  return a.slice(degree) == b.slice(degree);
}

bool line_contained(const LineIdeal& a, const LineIdeal& b) {
  if (a.generator.is_zero()) return true;
  if (b.generator.is_zero()) return false;
  return divmod(a.generator, b.generator).second.is_zero();
}

std::vector<Rational> jumping_numbers_curve(const CurveDivisor& delta, std::shared_ptr<const ResolutionData> r,
                                            const Rational& c_max, int degree) {
  // Candidates: values of c where some floor(c * a - k) changes.
  std::set<Rational> candidates;
  const CoeffDivisor unit = pair_coefficients(*r, delta);
  for (const auto& n : r->nodes) {
    const Rational a = unit.coefficient(n.label()) + Rational(n.k);
    if (a.sign() <= 0) continue;
    for (long m = 1;; ++m) {
      const Rational c = (Rational(n.k) + Rational(m)) / a;
      if (c > c_max) break;
      candidates.insert(c);
    }
  }
  for (const auto& w : delta.components()) {
    for (long m = 1; Rational(m) / w.coeff <= c_max; ++m) candidates.insert(Rational(m) / w.coeff);
  }
  auto slice_at = [&](const Rational& c) {
    return truncated_basis(ideal_from_coefficients(r, pair_coefficients(*r, delta.scaled(c)), CurveIdealKind::mult),
                           degree);
  };
  std::vector<Rational> jumps;
  TruncatedBasis previous = slice_of_polys({Poly2::constant(Rational(1))}, degree);
  for (const auto& c : candidates) {
    TruncatedBasis here = slice_at(c);
    if (here.rows != previous.rows) jumps.push_back(c);
    previous = std::move(here);
  }
  return jumps;
}

std::vector<Rational> jumping_numbers_curve(const CurveDivisor& delta, const Rational& c_max, int degree) {
  return jumping_numbers_curve(delta, std::make_shared<const ResolutionData>(resolve(delta)), c_max, degree);
}

}  // namespace nlc
