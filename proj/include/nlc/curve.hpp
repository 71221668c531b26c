#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nlc/linear_algebra.hpp"
#include "nlc/resolution.hpp"

namespace nlc {

struct OrderCondition {
  std::string divisor;  // "E<i>" or "C<j>"
  long order = 0;       // >= 1
  friend bool operator==(const OrderCondition&, const OrderCondition&) = default;
};

// {h : ord_E(h) >= m for every condition (E, m)} on the resolution.
struct ValuationIdeal {
  std::shared_ptr<const ResolutionData> resolution;
  std::vector<OrderCondition> conditions;
  long total_order() const;
};

enum class CurveIdealKind { nlc, mult };

ValuationIdeal ideal_from_coefficients(std::shared_ptr<const ResolutionData> r, const CoeffDivisor& coeffs,
                                       CurveIdealKind kind);
ValuationIdeal nlc_ideal(const CurveDivisor& delta, const ResolveOptions& options = {});
ValuationIdeal mult_ideal(const CurveDivisor& delta, const ResolveOptions& options = {});

long ord_of(const Poly2& h, const std::string& divisor, const ResolutionData& r);

struct MembershipEntry {
  std::string divisor;
  long required = 0;
  long achieved = 0;
};

struct Membership {
  bool member = true;
  std::vector<MembershipEntry> certificate;
};

Membership member(const Poly2& h, const ValuationIdeal& ideal);

// Canonical basis of the polynomials of degree <= d in the ideal: reduced
// row echelon form over monomial columns in descending graded-lex order.
struct TruncatedBasis {
  int degree = 0;
  std::vector<Poly2::Exponent> columns;
  RationalMatrix rows;
  std::vector<Poly2> polys() const;
  std::size_t dim() const { return rows.size(); }
};

std::vector<Poly2::Exponent> graded_columns(int degree);
TruncatedBasis truncated_basis(const ValuationIdeal& ideal, int degree);
TruncatedBasis slice_of_polys(const std::vector<Poly2>& gens, int degree);

bool ideal_equal(const ValuationIdeal& a, const ValuationIdeal& b, int degree);
bool ideal_contained(const ValuationIdeal& a, const ValuationIdeal& b, int degree);  // a ⊆ b
bool slice_contained(const TruncatedBasis& a, const TruncatedBasis& b);

// max(10, 2 * sum of required orders)
int default_degree(const ValuationIdeal& ideal);

// Values c in (0, c_max] where the multiplier ideal of c * delta changes,
// detected on degree-d slices.
std::vector<Rational> jumping_numbers_curve(const CurveDivisor& delta, std::shared_ptr<const ResolutionData> r,
                                            const Rational& c_max, int degree);
std::vector<Rational> jumping_numbers_curve(const CurveDivisor& delta, const Rational& c_max, int degree);

bool is_lc(const CurveDivisor& delta);
bool is_klt(const CurveDivisor& delta);

struct NlcLocus {
  std::vector<std::size_t> components;  // indices with d_j > 1
  std::vector<PlanePoint> points;       // images of exceptionals with coefficient > 1, off those components
};

NlcLocus nlc_locus(const CurveDivisor& delta, const ResolutionData& r);
NlcLocus nlc_locus(const CurveDivisor& delta);

struct LcCenters {
  std::vector<std::size_t> components;
  std::vector<PlanePoint> points;
  bool empty() const { return components.empty() && points.empty(); }
};

LcCenters lc_centers(const CurveDivisor& delta, const ResolutionData& r);
LcCenters lc_centers(const CurveDivisor& delta);

// Lines, parametrised by t: x = t when the line is not vertical, else y = t.
struct LineParam {
  Poly1 x, y;
};

LineParam line_parametrization(const PlaneCurve& line);

struct LinePoint {
  Rational param;
  Rational coeff;
  friend bool operator==(const LinePoint&, const LinePoint&) = default;
};

struct LinePointDivisor {
  PlaneCurve line;
  std::vector<LinePoint> points;  // sorted by parameter
};

LinePointDivisor restrict_divisor(const CurveDivisor& b, const PlaneCurve& line);

// Ideal of Q[t] given by its monic generator (zero for the zero ideal).
struct LineIdeal {
  Poly1 generator;
  std::vector<Poly1> slice(int degree) const;  // basis t^i * generator of degree <= d
  friend bool operator==(const LineIdeal&, const LineIdeal&) = default;
};

LineIdeal nlc_on_line(const LinePointDivisor& bs);
LineIdeal mult_on_line(const LinePointDivisor& bs);

// Image of the ideal in the coordinate ring of the line.
// The basis is taken at degree max(d, deg G + sum of exceptional orders), G
// the product of the component conditions, which is enough to generate the
// restricted ideal.
LineIdeal restrict_ideal(const ValuationIdeal& ideal, const PlaneCurve& line, int degree);
int restriction_degree(const ValuationIdeal& ideal, int degree);

bool line_slice_equal(const LineIdeal& a, const LineIdeal& b, int degree);
bool line_contained(const LineIdeal& a, const LineIdeal& b);  // a ⊆ b

}  // namespace nlc
