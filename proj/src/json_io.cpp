#include "nlc/json_io.hpp"

#include <algorithm>

#include "nlc/parse.hpp"

namespace nlc {

Json rational_json(const Rational& r) { return r.str(); }

Json point_json(const PlanePoint& p) { return Json::array({p[0].str(), p[1].str()}); }

Json polynomial_json(const Poly2& p) {
  std::vector<std::pair<Poly2::Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1], db = b.first[0] + b.first[1];
    return da != db ? da > db : a.first[0] > b.first[0];
  });
  Json out = Json::array();
  for (const auto& [e, c] : terms) out.push_back(Json::array({monomial_str(e), c.str()}));
  return out;
}

Json exponent_json(const Exponent& v) {
  Json out = Json::array();
  for (long e : v) out.push_back(e);
  return out;
}

Json monomial_ideal_json(const MonomialIdealGens& a) {
  Json gens = Json::array();
  for (const auto& g : a.gens()) gens.push_back(exponent_json(g));
  return gens;
}

Json generators_json(const GeneratorResult& r) {
  Json out;
  out["generators"] = monomial_ideal_json(r.ideal);
  out["complete"] = r.complete;
  return out;
}

Json resolution_json(const ResolutionData& r) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes) {
    Json node;
    node["id"] = n.label();
    node["parent"] = n.parent == 0 ? Json(nullptr) : Json("E" + std::to_string(n.parent));
    node["chart"] = n.chart;
    node["center"] = point_json(n.center);
    node["base_point"] = point_json(n.base);
    node["k"] = n.k;
    Json prox = Json::array();
    for (int p : n.proximity) prox.push_back("E" + std::to_string(p));
    node["proximity"] = prox;
    Json ord = Json::object();
    for (std::size_t j = 0; j < n.ord.size(); ++j) ord[CurveDivisor::label(j)] = n.ord[j];
    node["ord"] = ord;
    node["padding"] = n.padding;
    nodes.push_back(std::move(node));
  }
  Json comps = Json::object();
  for (std::size_t j = 0; j < r.components.size(); ++j) comps[CurveDivisor::label(j)] = r.components[j].str();
  Json crossings = Json::array();
  for (const auto& [a, b] : r.certificate.crossings) crossings.push_back(Json::array({a, b}));
  Json out;
  out["nodes"] = nodes;
  out["components"] = comps;
  out["snc"] = {{"plane_bad_points", r.certificate.plane_bad_points},
                {"exceptional_points_checked", r.certificate.exceptional_points_checked},
                {"crossings", crossings}};
  return out;
}

Json ideal_json(const ValuationIdeal& ideal, const TruncatedBasis& basis) {
  Json conds = Json::array();
  for (const auto& c : ideal.conditions) conds.push_back({{"divisor", c.divisor}, {"order", c.order}});
  Json polys = Json::array();
  for (const auto& p : basis.polys()) polys.push_back(polynomial_json(p));
  Json out;
  out["conditions"] = conds;
  out["basis_degree"] = basis.degree;
  out["basis"] = polys;
  return out;
}

Json coeff_divisor_json(const CoeffDivisor& d) {
  Json out = Json::object();
  for (const auto& [label, c] : d.entries()) out[label] = c.str();
  return out;
}

Json line_divisor_json(const LinePointDivisor& d) {
  Json pts = Json::array();
  for (const auto& p : d.points) pts.push_back({{"t", p.param.str()}, {"coeff", p.coeff.str()}});
  Json out;
  out["line"] = d.line.poly().str();
  const LineParam lp = line_parametrization(d.line);
  out["parametrization"] = {{"x", lp.x.str()}, {"y", lp.y.str()}};
  out["points"] = pts;
  return out;
}

Json line_ideal_json(const LineIdeal& ideal, int degree) {
  Json slice = Json::array();
  for (const auto& p : ideal.slice(degree)) slice.push_back(p.str());
  Json out;
  out["generator"] = ideal.generator.is_zero() ? "0" : ideal.generator.str();
  out["basis_degree"] = degree;
  out["basis"] = slice;
  return out;
}

Json curve_divisor_json(const CurveDivisor& d) { return divisor_str(d); }

}  // namespace nlc
