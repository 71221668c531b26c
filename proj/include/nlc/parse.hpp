#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "nlc/monomial.hpp"
#include "nlc/polynomial.hpp"
#include "nlc/resolution.hpp"

namespace nlc {

// Polynomial in x, y:
//   expr := ['+'|'-'] term (('+'|'-') term)*
//   term := factor ('*' factor)*
//   factor := (rational | var | '(' expr ')') ('^' posint)*
Poly2 parse_polynomial(std::string_view text);

// "c1*(p1) + c2*(p2) + ..." validated into a CurveDivisor.
CurveDivisor parse_divisor(std::string_view text);

// Comma-separated monomials over x1..xn (or x, y, z). The dimension is the
// largest variable index used unless given.
MonomialIdealGens parse_monomial_ideal(std::string_view text, std::optional<std::size_t> dim = {});

// Comma-separated nonnegative integers, e.g. "1,0".
Exponent parse_exponent(std::string_view text);

// A line "a*x + b*y + c" (any degree-1 polynomial).
PlaneCurve parse_line(std::string_view text);

std::string divisor_str(const CurveDivisor& d);
std::string monomial_ideal_str(const MonomialIdealGens& a);
std::string monomial_str(const Poly2::Exponent& e);

}  // namespace nlc
