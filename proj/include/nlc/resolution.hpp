#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nlc/divisor.hpp"
#include "nlc/plane_solver.hpp"
#include "nlc/polynomial.hpp"

namespace nlc {

// Nonconstant squarefree plane polynomial scaled so that its leading
// graded-lex coefficient is 1. Irreducibility is not required.
class PlaneCurve {
 public:
  explicit PlaneCurve(const Poly2& poly);
  const Poly2& poly() const { return poly_; }
  int degree() const { return poly_.total_degree(); }
  friend bool operator==(const PlaneCurve&, const PlaneCurve&) = default;

 private:
  Poly2 poly_;
};

struct WeightedCurve {
  PlaneCurve curve;
  Rational coeff;
  friend bool operator==(const WeightedCurve&, const WeightedCurve&) = default;
};

// Effective Q-divisor sum d_j C_j with positive d_j and pairwise coprime C_j.
// Component j carries the label "C<j+1>".
class CurveDivisor {
 public:
  CurveDivisor() = default;
  explicit CurveDivisor(std::vector<WeightedCurve> components);

  const std::vector<WeightedCurve>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  CurveDivisor scaled(const Rational& s) const;
  // Appends a component (validated against the existing ones).
  CurveDivisor plus(const PlaneCurve& curve, const Rational& coeff) const;
  static std::string label(std::size_t j) { return "C" + std::to_string(j + 1); }

  friend bool operator==(const CurveDivisor&, const CurveDivisor&) = default;

 private:
  std::vector<WeightedCurve> components_;
};

struct ResolutionNode {
  int id = 0;          // exceptional E<id>, ids start at 1
  int parent = 0;      // node whose exceptional holds the center; 0 for a plane point
  int chart = 0;       // chart of the parent the center is expressed in (0 = plane)
  PlanePoint center;   // coordinates in that chart
  PlanePoint base;     // image point in the plane
  long k = 0;          // coefficient of E in K_Y - f^*K_X
  std::vector<int> proximity;
  std::vector<long> ord;  // ord_E(C_j) per component
  Poly2 map_x, map_y;     // chart with E = {u = 0}: (x, y) = (map_x(u,v), map_y(u,v))
  bool padding = false;   // blown up at a point that was already SNC
  std::string label() const { return "E" + std::to_string(id); }
};

struct SncCertificate {
  std::size_t plane_bad_points = 0;
  std::size_t exceptional_points_checked = 0;
  // Pairs of divisors meeting transversally at rational points of exceptionals.
  std::vector<std::pair<std::string, std::string>> crossings;
};

struct ResolutionData {
  std::vector<Poly2> components;
  std::vector<ResolutionNode> nodes;
  SncCertificate certificate;
  const ResolutionNode& node(int id) const { return nodes.at(static_cast<std::size_t>(id - 1)); }
};

struct ResolveOptions {
  std::optional<std::uint64_t> shuffle_seed;  // random processing order of pending points
  int padding = 0;                             // extra blow-ups at SNC points
  std::uint64_t padding_seed = 0;
  std::size_t max_nodes = 200;
};

ResolutionData resolve(const CurveDivisor& delta, const ResolveOptions& options = {});

// Coefficients of Delta_Y over {E_i} and {C_j}.
CoeffDivisor pair_coefficients(const ResolutionData& r, const CurveDivisor& delta);

}  // namespace nlc
