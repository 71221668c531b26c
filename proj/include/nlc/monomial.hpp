#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nlc/rational.hpp"

namespace nlc {

using Exponent = std::vector<long>;

// Monomial ideal in n variables given by its minimal generators, sorted by
// total degree and then lexicographically descending.
class MonomialIdealGens {
 public:
  MonomialIdealGens() = default;
  // Minimalises the input; throws InvalidArgument on an empty set,
  // negative entries or inconsistent lengths.
  MonomialIdealGens(std::size_t dim, std::vector<Exponent> gens);
  static MonomialIdealGens unit(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Exponent>& gens() const { return gens_; }
  bool contains(const Exponent& v) const;  // v dominates some generator
  bool is_unit() const;
  long max_degree() const;

  friend bool operator==(const MonomialIdealGens&, const MonomialIdealGens&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Exponent> gens_;
};

MonomialIdealGens product(const MonomialIdealGens& a, const MonomialIdealGens& b);
MonomialIdealGens power(const MonomialIdealGens& a, long p);
// a ⊆ b
bool contained(const MonomialIdealGens& a, const MonomialIdealGens& b);

struct RayValuation {
  explicit RayValuation(Exponent w);  // must be primitive, nonnegative, nonzero
  Exponent w;
};

struct MonomialPair {
  MonomialIdealGens ideal;
  Rational c;
};

// Formal product a_1^{c_1} ... a_k^{c_k}; ord_w is additive over factors.
struct MixedPair {
  std::vector<MonomialPair> factors;
  std::size_t dim() const;
};

MixedPair as_mixed(const MonomialPair& p);

enum class IdealKind { nlc, mult };

long ord_ray(const RayValuation& w, const MonomialIdealGens& a);
Rational delta_coefficient(const RayValuation& w, const MonomialPair& p);
Rational delta_coefficient(const RayValuation& w, const MixedPair& p);

// Exact membership via linear feasibility over the linearity regions of ord.
bool member(const Exponent& v, const MixedPair& p, IdealKind kind);
bool nlc_member(const Exponent& v, const MonomialPair& p);
bool mult_member(const Exponent& v, const MonomialPair& p);

// Equivalent finite description: v is in the ideal iff <r, v> >= bound for
// every listed (r, bound). Built from extreme rays of the violation cones.
struct RayInequality {
  Exponent ray;
  Integer bound;
};

struct InequalityDescription {
  std::size_t dim = 0;
  std::vector<RayInequality> inequalities;
  Exponent box;  // every minimal generator satisfies g_i <= box[i]
  long certified_degree() const;
  bool contains(const Exponent& v) const;
};

InequalityDescription describe(const MixedPair& p, IdealKind kind);

struct GeneratorResult {
  MonomialIdealGens ideal;
  bool complete = false;
  long degree_bound = 0;
  long certified_degree = 0;
};

// n * ceil(sum_f c_f * max |u|) over the factors, raised to the certified degree.
long default_degree_bound(const MixedPair& p);

GeneratorResult generators(const MixedPair& p, IdealKind kind, std::optional<long> degree_bound = {});
GeneratorResult nlc_generators(const MonomialPair& p, std::optional<long> degree_bound = {});
GeneratorResult mult_generators(const MonomialPair& p, std::optional<long> degree_bound = {});

// Extreme rays of the linearity regions of ord_w(a): the rays of the normal
// fan of the Newton polyhedron, sorted.
std::vector<Exponent> normal_fan_rays(const MonomialIdealGens& a);

std::vector<Rational> jumping_numbers_monomial(const MonomialIdealGens& a, const Rational& c_max);

struct GradedSystemSpec {
  enum class Kind { powers, ray_truncation };
  Kind kind = Kind::powers;
  MonomialIdealGens base;  // powers
  Exponent w0;             // ray truncation
  MonomialIdealGens member_at(long p) const;
};

struct AsymptoticResult {
  std::vector<std::pair<long, MonomialIdealGens>> terms;
  std::optional<MonomialIdealGens> maximal;
  std::optional<long> stabilized_at;
};

AsymptoticResult asymptotic_nlc(const GradedSystemSpec& g, const Rational& c, const std::vector<long>& schedule);

std::string exponent_str(const Exponent& v);

}  // namespace nlc
