#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlc/rational.hpp"

namespace nlc {

// Dense univariate polynomial over Q, coefficients stored low degree first
// with no trailing zeros.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coeffs);
  static Poly1 constant(const Rational& c);
  static Poly1 monomial(const Rational& c, int degree);
  static Poly1 variable() { return monomial(1, 1); }
  // Monic linear factor (t - root).
  static Poly1 linear_root(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational eval(const Rational& t) const;
  Poly1 derivative() const;
  Poly1 monic() const;
  Poly1 pow(int e) const;
  Poly1 compose(const Poly1& inner) const;

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Rational& s, const Poly1& p);
  Poly1 operator-() const;
  friend bool operator==(const Poly1&, const Poly1&) = default;

  std::string str(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);
Poly1 gcd(Poly1 a, Poly1 b);  // monic; gcd(0, 0) = 0
Poly1 squarefree_part(const Poly1& p);

struct RootMultiplicity {
  Rational root;
  int multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

// All rational roots with multiplicities, ascending.
std::vector<RootMultiplicity> rational_roots(const Poly1& p);

// p with every rational root divided out (monic). Constant iff every complex
// root of p is rational.
Poly1 irrational_part(const Poly1& p);

// Sparse bivariate polynomial over Q in variables (x, y). The same type
// serves chart coordinates (u, v); only printing names the variables.
class Poly2 {
 public:
  using Exponent = std::array<int, 2>;
  using Terms = std::map<Exponent, Rational>;

  Poly2() = default;
  static Poly2 constant(const Rational& c);
  static Poly2 monomial(const Rational& c, int i, int j);
  static Poly2 x() { return monomial(1, 1, 0); }
  static Poly2 y() { return monomial(1, 0, 1); }
  static Poly2 from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(int i, int j) const;

  int total_degree() const;   // -1 for zero
  int degree_x() const;
  int degree_y() const;
  // Lowest total degree of a term: the multiplicity at the origin.
  int order_at_origin() const;
  // Largest power of x (resp. y) dividing the polynomial.
  int x_adic_order() const;
  int y_adic_order() const;
  // Graded-lex leading exponent (total degree first, then x degree).
  Exponent leading_exponent() const;

  Rational eval(const Rational& a, const Rational& b) const;
  Poly2 dx() const;
  Poly2 dy() const;
  Poly2 substitute(const Poly2& X, const Poly2& Y) const;
  Poly2 translate(const Rational& a, const Rational& b) const;
  Poly2 swap_xy() const;
  Poly2 pow(int e) const;
  Poly2 divide_by_monomial(int i, int j) const;
  // Drops terms whose x exponent is >= bound.
  Poly2 truncate_x(int bound) const;
  // Leading grlex coefficient scaled to 1.
  Poly2 normalized() const;

  Poly1 at_x_zero() const;  // p(0, y) as a polynomial in y
  Poly1 at_y_zero() const;  // p(x, 0) as a polynomial in x
  Poly1 at_x(const Rational& a) const;  // p(a, y)
  Poly1 at_y(const Rational& b) const;  // p(x, b)
  Poly1 along(const Poly1& xt, const Poly1& yt) const;  // p(x(t), y(t))

  // Coefficients in Q[x] indexed by y degree.
  std::vector<Poly1> as_poly_in_y() const;
  static Poly2 from_poly_in_y(const std::vector<Poly1>& cs);

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Rational& s, const Poly2& p);
  Poly2 operator-() const;
  friend bool operator==(const Poly2&, const Poly2&) = default;

  // Terms in descending graded-lex order, e.g. "x^3 - y^2".
  std::string str(std::string_view xname = "x", std::string_view yname = "y") const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

// Multivariate division by a single polynomial (grlex); the remainder is zero
// exactly when g divides f.
std::pair<Poly2, Poly2> divmod(const Poly2& f, const Poly2& g);
bool divides(const Poly2& g, const Poly2& f);
Poly2 gcd(const Poly2& a, const Poly2& b);  // normalized; gcd(0,0) = 0
bool is_squarefree(const Poly2& p);

// Res_y(f, g) as a polynomial in x, with the formal y-degrees of f and g.
Poly1 resultant_y(const Poly2& f, const Poly2& g);

Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace nlc
