#include "nlc/feasibility.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace nlc {
namespace {

// Divide by the gcd of all entries so duplicates can be detected.
void normalize(LinearConstraint& c) {
  Integer g = abs(c.constant);
  for (const auto& a : c.coeffs) g = gcd(g, a);
  if (g > 1) {
    for (auto& a : c.coeffs) a /= g;
    c.constant /= g;
  }
}

struct ConstraintKey {
  const LinearConstraint* c;
  bool operator<(const ConstraintKey& o) const {
    if (c->strict != o.c->strict) return c->strict < o.c->strict;
    if (c->constant != o.c->constant) return c->constant < o.c->constant;
    return c->coeffs < o.c->coeffs;
  }
};

std::vector<LinearConstraint> dedupe(std::vector<LinearConstraint> in) {
  std::vector<LinearConstraint> out;
  out.reserve(in.size());
  std::set<ConstraintKey> seen;
  for (auto& c : in) {
    normalize(c);
    out.push_back(std::move(c));
  }
  std::vector<LinearConstraint> unique;
  for (auto& c : out) {
    if (seen.insert(ConstraintKey{&c}).second) unique.push_back(c);
  }
  return unique;
}

}  // namespace

bool is_feasible(std::vector<LinearConstraint> system) {
  if (system.empty()) return true;
  const std::size_t n = system.front().coeffs.size();
  system = dedupe(std::move(system));

  for (std::size_t var = 0; var < n; ++var) {
    std::vector<LinearConstraint> pos, neg, rest;
    for (auto& c : system) {
      const int s = sgn(c.coeffs[var]);
      if (s > 0) {
        pos.push_back(std::move(c));
      } else if (s < 0) {
        neg.push_back(std::move(c));
      } else {
        rest.push_back(std::move(c));
      }
    }
    // A variable bounded on one side only can always be chosen to satisfy
    // its constraints; those constraints drop out.
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const Integer a = p.coeffs[var];
        const Integer b = -q.coeffs[var];
        LinearConstraint combo;
        combo.coeffs.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
          combo.coeffs[k] = b * p.coeffs[k] + a * q.coeffs[k];
        }
        combo.constant = b * p.constant + a * q.constant;
        combo.strict = p.strict || q.strict;
        rest.push_back(std::move(combo));
      }
    }
    system = dedupe(std::move(rest));
  }

  for (const auto& c : system) {
    const int s = sgn(c.constant);
    if (s < 0 || (s == 0 && c.strict)) return false;
  }
  return true;
}

LinearConstraint make_constraint(const std::vector<Rational>& coeffs,
                                 const Rational& constant, bool strict) {
  Integer l = constant.denominator();
  for (const auto& a : coeffs) l = lcm(l, a.denominator());
  LinearConstraint c;
  c.coeffs.reserve(coeffs.size());
  for (const auto& a : coeffs) c.coeffs.push_back(a.numerator() * (l / a.denominator()));
  c.constant = constant.numerator() * (l / constant.denominator());
  c.strict = strict;
  return c;
}

}  // namespace nlc
