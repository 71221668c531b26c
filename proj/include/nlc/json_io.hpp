#pragma once

#include <json.hpp>

#include "nlc/curve.hpp"
#include "nlc/monomial.hpp"

namespace nlc {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);  // "p" or "p/q"
Json point_json(const PlanePoint& p);
Json polynomial_json(const Poly2& p);   // [[monomial, coeff], ...] descending grlex
Json exponent_json(const Exponent& v);

// {generators: [[int]], complete: bool}
Json generators_json(const GeneratorResult& r);
Json monomial_ideal_json(const MonomialIdealGens& a);

// {nodes: [{id, parent, center, k, proximity, ord}], components, snc}
Json resolution_json(const ResolutionData& r);

// {conditions: [{divisor, order}], basis_degree, basis: [[[monomial, coeff]]]}
Json ideal_json(const ValuationIdeal& ideal, const TruncatedBasis& basis);

Json coeff_divisor_json(const CoeffDivisor& d);
Json line_divisor_json(const LinePointDivisor& d);
Json line_ideal_json(const LineIdeal& ideal, int degree);
Json curve_divisor_json(const CurveDivisor& d);

}  // namespace nlc
