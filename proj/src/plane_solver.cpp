#include "nlc/plane_solver.hpp"

#include <algorithm>

#include "nlc/errors.hpp"
#include "nlc/linear_algebra.hpp"

namespace nlc {

namespace {

// Q[x, y] / (r(x), s(y)) with r, s monic; elements are dense vectors indexed
// by i * deg s + j for x^i y^j.
class QuotientAlgebra {
 public:
  QuotientAlgebra(Poly1 r, Poly1 s) : r_(std::move(r)), s_(std::move(s)) {
    dr_ = r_.degree();
    ds_ = s_.degree();
  }
  std::size_t dim() const { return static_cast<std::size_t>(dr_ * ds_); }

  RationalVector reduce(const Poly2& p) const {
    RationalVector out(dim());
    for (const auto& [e, c] : p.terms()) {
      const Poly1 px = divmod(Poly1::monomial(1, e[0]), r_).second;
      const Poly1 py = divmod(Poly1::monomial(1, e[1]), s_).second;
      for (int i = 0; i <= px.degree(); ++i) {
        if (px.coeffs()[i].is_zero()) continue;
        for (int j = 0; j <= py.degree(); ++j) {
          out[i * ds_ + j] += c * px.coeffs()[i] * py.coeffs()[j];
        }
      }
    }
    return out;
  }

  RationalVector mul_x(const RationalVector& a) const {
    RationalVector out(dim());
    for (int i = 0; i < dr_; ++i) {
      for (int j = 0; j < ds_; ++j) {
        const Rational& c = a[i * ds_ + j];
        if (c.is_zero()) continue;
        if (i + 1 < dr_) {
          out[(i + 1) * ds_ + j] += c;
        } else {
          // x^dr = -(r_0 + ... + r_{dr-1} x^{dr-1})
          for (int k = 0; k < dr_; ++k) out[k * ds_ + j] -= c * r_.coeffs()[k];
        }
      }
    }
    return out;
  }

  RationalVector mul_y(const RationalVector& a) const {
    RationalVector out(dim());
    for (int i = 0; i < dr_; ++i) {
      for (int j = 0; j < ds_; ++j) {
        const Rational& c = a[i * ds_ + j];
        if (c.is_zero()) continue;
        if (j + 1 < ds_) {
          out[i * ds_ + j + 1] += c;
        } else {
          for (int k = 0; k < ds_; ++k) out[i * ds_ + k] -= c * s_.coeffs()[k];
        }
      }
    }
    return out;
  }

 private:
  Poly1 r_, s_;
  int dr_ = 0, ds_ = 0;
};

// True when the system has a common zero with r(x) = 0 and s(y) = 0.
bool has_zero_in_algebra(const std::vector<Poly2>& system, const Poly1& r, const Poly1& s) {
  QuotientAlgebra alg(r.monic(), s.monic());
  RowSpace span(alg.dim());
  // The ideal generated by the system is the Q-span of f * x^i * y^j.
  for (const auto& f : system) {
    RationalVector row = alg.reduce(f);
    for (int i = 0; i < r.degree(); ++i) {
      RationalVector col = row;
      for (int j = 0; j < s.degree(); ++j) {
        span.insert(col);
        if (span.rank() == alg.dim()) return false;
        col = alg.mul_y(col);
      }
      row = alg.mul_x(row);
    }
  }
  return span.rank() < alg.dim();
}

Poly1 univariate_gcd_at(const std::vector<Poly2>& system, const Rational& value, bool fix_x) {
  Poly1 g;
  for (const auto& f : system) g = gcd(g, fix_x ? f.at_x(value) : f.at_y(value));
  if (g.is_zero()) throw InvalidArgument("polynomial system has a positive-dimensional zero set");
  return g;
}

// Finds a combination q of the later polynomials coprime to p.
std::vector<Poly2> coprime_partners(const Poly2& p, const std::vector<Poly2>& rest) {
  static const int weights[][3] = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {2, 1, 1},
                                   {1, -1, 0}, {1, 3, 2}, {3, 1, -1}, {1, -2, 3}, {2, -3, 1},
                                   {0, 0, 1}, {1, 1, 1}, {5, -2, 3}, {-3, 7, 2}};
  std::vector<Poly2> out;
  for (const auto& w : weights) {
    Poly2 q;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const int wi = w[i % 3] + static_cast<int>(i / 3);
      q += Rational(wi) * rest[i];
    }
    if (q.is_zero()) continue;
    if (gcd(p, q).is_constant()) {
      out.push_back(std::move(q));
      if (out.size() == 2) break;
    }
  }
  return out;
}

Poly1 projection(const Poly2& p, const std::vector<Poly2>& partners) {
  Poly1 g;
  for (const auto& q : partners) g = gcd(g, resultant_y(p, q));
  return g;
}

}  // namespace

PlaneSolution solve_system(const std::vector<Poly2>& input, std::size_t algebra_cap) {
  PlaneSolution out;
  std::vector<Poly2> system;
  for (const auto& f : input) {
    if (f.is_zero()) continue;
    if (f.is_constant()) return out;
    system.push_back(f);
  }
  if (system.size() < 2) throw InvalidArgument("polynomial system has a positive-dimensional zero set");

  const Poly2& p = system.front();
  const std::vector<Poly2> rest(system.begin() + 1, system.end());
  const std::vector<Poly2> partners = coprime_partners(p, rest);
  if (partners.empty()) throw InvalidArgument("polynomial system has a positive-dimensional zero set");

  std::vector<Poly2> swapped_partners;
  for (const auto& q : partners) swapped_partners.push_back(q.swap_xy());
  const Poly1 rx = projection(p, partners);
  const Poly1 sy = projection(p.swap_xy(), swapped_partners);

  for (const auto& [a, m] : rational_roots(rx)) {
    const Poly1 g = univariate_gcd_at(system, a, true);
    for (const auto& [b, mb] : rational_roots(g)) out.rational.push_back({a, b});
    if (irrational_part(g).degree() > 0) out.has_irrational = true;
  }
  for (const auto& [b, m] : rational_roots(sy)) {
    const Poly1 g = univariate_gcd_at(system, b, false);
    if (irrational_part(g).degree() > 0) out.has_irrational = true;
  }
  if (!out.has_irrational) {
    const Poly1 rirr = squarefree_part(irrational_part(rx));
    const Poly1 sirr = squarefree_part(irrational_part(sy));
    if (rirr.degree() > 0 && sirr.degree() > 0) {
      if (static_cast<std::size_t>(rirr.degree() * sirr.degree()) > algebra_cap) {
        out.has_irrational = true;
        out.certified = false;
      } else if (has_zero_in_algebra(system, rirr, sirr)) {
        out.has_irrational = true;
      }
    }
  }
  std::sort(out.rational.begin(), out.rational.end());
  return out;
}

}  // namespace nlc
