#pragma once

#include <vector>

#include "nlc/rational.hpp"

namespace nlc {

// One linear constraint  coeffs . w + constant  (>= 0, or > 0 if strict)
// over real unknowns w. Integer data; callers clear denominators.
struct LinearConstraint {
  std::vector<Integer> coeffs;
  Integer constant = 0;
  bool strict = false;
};

// Exact decision of whether a mixed strict / non-strict system has a real
// (equivalently, rational) solution, by Fourier–Motzkin elimination.
bool is_feasible(std::vector<LinearConstraint> system);

// Builds  (sum_i num_i / den_i * w_i)  constraints with common denominator
// cleared.
LinearConstraint make_constraint(const std::vector<Rational>& coeffs,
                                 const Rational& constant, bool strict);

}  // namespace nlc
