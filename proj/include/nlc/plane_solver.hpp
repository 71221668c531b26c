#pragma once

#include <array>
#include <vector>

#include "nlc/polynomial.hpp"

namespace nlc {

using PlanePoint = std::array<Rational, 2>;

struct PlaneSolution {
  std::vector<PlanePoint> rational;  // sorted lexicographically
  bool has_irrational = false;       // some common zero over Q̄ is not rational
  bool certified = true;             // false if the irrational flag was set without proof
};

// Common zeros of a finite system in Q[x, y]. The zero set must be finite;
// InvalidArgument otherwise.
PlaneSolution solve_system(const std::vector<Poly2>& system, std::size_t algebra_cap = 900);

}  // namespace nlc
