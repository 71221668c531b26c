#include "nlc/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nlc/errors.hpp"

namespace nlc {

// ---------------------------------------------------------------- Poly1

Poly1::Poly1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly1 Poly1::constant(const Rational& c) { return Poly1({c}); }

Poly1 Poly1::monomial(const Rational& c, int degree) {
  std::vector<Rational> cs(degree + 1);
  cs[degree] = c;
  return Poly1(std::move(cs));
}

Poly1 Poly1::linear_root(const Rational& root) { return Poly1({-root, 1}); }

void Poly1::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly1::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Rational Poly1::eval(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly1 Poly1::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> cs(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly1(std::move(cs));
}

Poly1 Poly1::monic() const {
  if (is_zero()) return {};
  const Rational inv = Rational(1) / leading();
  return inv * *this;
}

Poly1 Poly1::pow(int e) const {
  Poly1 result = constant(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Poly1 Poly1::compose(const Poly1& inner) const {
  Poly1 acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner + constant(*it);
  }
  return acc;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly1(std::move(cs));
}

Poly1 operator*(const Rational& s, const Poly1& p) {
  std::vector<Rational> cs = p.coeffs_;
  for (auto& c : cs) c *= s;
  return Poly1(std::move(cs));
}

Poly1 Poly1::operator-() const { return Rational(-1) * *this; }

std::string Poly1::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational a = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    if (i >= 1) mono = std::string(var) + (i > 1 ? "^" + std::to_string(i) : "");
    if (mono.empty()) {
      out += a.str();
    } else if (a == Rational(1)) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly1(), a};
  std::vector<Rational> quo(a.degree() - db + 1);
  const Rational inv = Rational(1) / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[k + db] * inv;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (int i = 0; i <= db; ++i) rem[k + i] -= q * b.coeffs()[i];
  }
  return {Poly1(std::move(quo)), Poly1(std::move(rem))};
}

Poly1 gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    Poly1 r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly1 squarefree_part(const Poly1& p) {
  if (p.degree() <= 0) return p.monic();
  Poly1 g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) {
      Integer r = (v * v + c) % n;
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs(x - y);
      d = gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::vector<Integer>& primes) {
  if (n <= 1) return;
  for (unsigned long p = 2; p < 10000; ++p) {
    if (p * p > n) break;
    while (n % p == 0) {
      primes.push_back(Integer(p));
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> primes;
  factor_into(abs(n), primes);
  std::map<Integer, int> counts;
  for (const auto& p : primes) counts[p]++;
  std::vector<Integer> divs{1};
  for (const auto& [p, k] : counts) {
    const std::size_t before = divs.size();
    Integer pk = 1;
    for (int e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < before; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Integer primitive version of p (same roots).
std::vector<Integer> integer_coefficients(const Poly1& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.denominator());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    out.push_back(c.numerator() * (l / c.denominator()));
    g = gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& c : out) c /= g;
  }
  return out;
}

}  // namespace

std::vector<RootMultiplicity> rational_roots(const Poly1& p) {
  std::vector<RootMultiplicity> out;
  if (p.degree() <= 0) return out;
  Poly1 sf = squarefree_part(p);
  std::vector<Rational> candidates;
  // Zero roots first, then strip them.
  std::vector<Integer> ic = integer_coefficients(sf);
  std::size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) candidates.push_back(Rational(0));
  std::vector<Integer> trimmed(ic.begin() + low, ic.end());
  if (trimmed.size() >= 2) {
    auto ps = positive_divisors(trimmed.front());
    auto qs = positive_divisors(trimmed.back());
    std::set<Rational> seen;
    for (const auto& q : qs) {
      for (const auto& pd : ps) {
        if (gcd(pd, q) != 1) continue;
        for (int s : {1, -1}) {
          Rational r(Integer(s) * pd, q);
          if (!seen.insert(r).second) continue;
          // Horner over the integer coefficients.
          Rational acc;
          for (auto it = trimmed.rbegin(); it != trimmed.rend(); ++it) acc = acc * r + Rational(*it);
          if (acc.is_zero()) candidates.push_back(r);
        }
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& r : candidates) {
    Poly1 rest = p;
    int m = 0;
    const Poly1 lin = Poly1::linear_root(r);
    while (true) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++m;
    }
    out.push_back({r, m});
  }
  return out;
}

Poly1 irrational_part(const Poly1& p) {
  if (p.is_zero()) return p;
  Poly1 rest = p;
  for (const auto& [r, m] : rational_roots(p)) {
    rest = divmod(rest, Poly1::linear_root(r).pow(m)).first;
  }
  return rest.monic();
}

// ---------------------------------------------------------------- Poly2

Poly2 Poly2::constant(const Rational& c) { return monomial(c, 0, 0); }

Poly2 Poly2::monomial(const Rational& c, int i, int j) {
  Poly2 p;
  if (!c.is_zero()) p.terms_[{i, j}] = c;
  return p;
}

Poly2 Poly2::from_terms(Terms terms) {
  Poly2 p;
  for (auto& [e, c] : terms) {
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
  }
  return p;
}

void Poly2::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Rational Poly2::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1]);
  return d;
}

int Poly2::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0]);
  return d;
}

int Poly2::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[1]);
  return d;
}

int Poly2::order_at_origin() const {
  if (terms_.empty()) throw ZeroPolynomial();
  int d = terms_.begin()->first[0] + terms_.begin()->first[1];
  for (const auto& [e, c] : terms_) d = std::min(d, e[0] + e[1]);
  return d;
}

int Poly2::x_adic_order() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.begin()->first[0];  // map is ordered by x exponent first
}

int Poly2::y_adic_order() const {
  if (terms_.empty()) throw ZeroPolynomial();
  int d = terms_.begin()->first[1];
  for (const auto& [e, c] : terms_) d = std::min(d, e[1]);
  return d;
}

Poly2::Exponent Poly2::leading_exponent() const {
  if (terms_.empty()) throw ZeroPolynomial();
  Exponent best = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    const int de = e[0] + e[1], db = best[0] + best[1];
    if (de > db || (de == db && e[0] > best[0])) best = e;
  }
  return best;
}

Rational Poly2::eval(const Rational& a, const Rational& b) const {
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < e[0]; ++k) t *= a;
    for (int k = 0; k < e[1]; ++k) t *= b;
    acc += t;
  }
  return acc;
}

Poly2 Poly2::dx() const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    if (e[0] > 0) out.add_term({e[0] - 1, e[1]}, c * Rational(e[0]));
  }
  return out;
}

Poly2 Poly2::dy() const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    if (e[1] > 0) out.add_term({e[0], e[1] - 1}, c * Rational(e[1]));
  }
  return out;
}

Poly2 Poly2::substitute(const Poly2& X, const Poly2& Y) const {
  std::vector<Poly2> xp{constant(1)}, yp{constant(1)};
  const int dx = degree_x(), dy = degree_y();
  for (int k = 1; k <= dx; ++k) xp.push_back(xp.back() * X);
  for (int k = 1; k <= dy; ++k) yp.push_back(yp.back() * Y);
  Poly2 out;
  for (const auto& [e, c] : terms_) out += c * (xp[e[0]] * yp[e[1]]);
  return out;
}

Poly2 Poly2::translate(const Rational& a, const Rational& b) const {
  return substitute(x() + constant(a), y() + constant(b));
}

Poly2 Poly2::swap_xy() const {
  Poly2 out;
  for (const auto& [e, c] : terms_) out.terms_[{e[1], e[0]}] = c;
  return out;
}

Poly2 Poly2::pow(int e) const {
  Poly2 result = constant(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Poly2 Poly2::divide_by_monomial(int i, int j) const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    if (e[0] < i || e[1] < j) throw InvalidArgument("monomial does not divide polynomial");
    out.terms_[{e[0] - i, e[1] - j}] = c;
  }
  return out;
}

Poly2 Poly2::truncate_x(int bound) const {
  Poly2 out;
  for (const auto& [e, c] : terms_) {
    if (e[0] < bound) out.terms_.emplace(e, c);
  }
  return out;
}

Poly2 Poly2::normalized() const {
  if (terms_.empty()) return *this;
  const Rational inv = Rational(1) / terms_.at(leading_exponent());
  return inv * *this;
}

Poly1 Poly2::at_x_zero() const { return at_x(0); }
Poly1 Poly2::at_y_zero() const { return at_y(0); }

Poly1 Poly2::at_x(const Rational& a) const {
  std::vector<Rational> cs(std::max(degree_y(), -1) + 1);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < e[0]; ++k) t *= a;
    cs[e[1]] += t;
  }
  return Poly1(std::move(cs));
}

Poly1 Poly2::at_y(const Rational& b) const {
  std::vector<Rational> cs(std::max(degree_x(), -1) + 1);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < e[1]; ++k) t *= b;
    cs[e[0]] += t;
  }
  return Poly1(std::move(cs));
}

Poly1 Poly2::along(const Poly1& xt, const Poly1& yt) const {
  std::vector<Poly1> xp{Poly1::constant(1)}, yp{Poly1::constant(1)};
  for (int k = 1; k <= degree_x(); ++k) xp.push_back(xp.back() * xt);
  for (int k = 1; k <= degree_y(); ++k) yp.push_back(yp.back() * yt);
  Poly1 out;
  for (const auto& [e, c] : terms_) out += c * (xp[e[0]] * yp[e[1]]);
  return out;
}

std::vector<Poly1> Poly2::as_poly_in_y() const {
  std::vector<std::vector<Rational>> raw(std::max(degree_y(), -1) + 1);
  for (const auto& [e, c] : terms_) {
    auto& row = raw[e[1]];
    if (static_cast<int>(row.size()) <= e[0]) row.resize(e[0] + 1);
    row[e[0]] = c;
  }
  std::vector<Poly1> out;
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(std::move(row));
  return out;
}

Poly2 Poly2::from_poly_in_y(const std::vector<Poly1>& cs) {
  Poly2 out;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    for (int i = 0; i <= cs[j].degree(); ++i) {
      out.add_term({i, static_cast<int>(j)}, cs[j].coeffs()[i]);
    }
  }
  return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
  }
  return out;
}

Poly2 operator*(const Rational& s, const Poly2& p) {
  if (s.is_zero()) return {};
  Poly2 out = p;
  for (auto& [e, c] : out.terms_) c *= s;
  return out;
}

Poly2 Poly2::operator-() const { return Rational(-1) * *this; }

std::string Poly2::str(std::string_view xname, std::string_view yname) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1], db = b.first[0] + b.first[1];
    if (da != db) return da > db;
    return a.first[0] > b.first[0];
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    const bool neg = c.sign() < 0;
    const Rational a = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    auto power = [](std::string_view v, int k) {
      return k == 0 ? std::string() : std::string(v) + (k > 1 ? "^" + std::to_string(k) : "");
    };
    const std::string px = power(xname, e[0]), py = power(yname, e[1]);
    mono = px;
    if (!py.empty()) mono += (mono.empty() ? "" : "*") + py;
    if (mono.empty()) {
      out += a.str();
    } else if (a == Rational(1)) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

std::pair<Poly2, Poly2> divmod(const Poly2& f, const Poly2& g) {
  if (g.is_zero()) throw InvalidArgument("polynomial division by zero");
  const Poly2::Exponent lg = g.leading_exponent();
  const Rational lc = g.coeff(lg[0], lg[1]);
  Poly2 p = f, quo, rem;
  while (!p.is_zero()) {
    const Poly2::Exponent lp = p.leading_exponent();
    const Rational cp = p.coeff(lp[0], lp[1]);
    if (lp[0] >= lg[0] && lp[1] >= lg[1]) {
      Poly2 t = Poly2::monomial(cp / lc, lp[0] - lg[0], lp[1] - lg[1]);
      quo += t;
      p -= t * g;
    } else {
      Poly2 t = Poly2::monomial(cp, lp[0], lp[1]);
      rem += t;
      p -= t;
    }
  }
  return {quo, rem};
}

bool divides(const Poly2& g, const Poly2& f) { return divmod(f, g).second.is_zero(); }

namespace {

using PolyY = std::vector<Poly1>;

void trim_y(PolyY& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly1 content_y(const PolyY& p) {
  Poly1 g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

PolyY primitive_y(PolyY p) {
  const Poly1 c = content_y(p);
  if (c.is_zero()) return p;
  for (auto& coeff : p) coeff = divmod(coeff, c).first;
  return p;
}

PolyY pseudo_remainder(PolyY a, const PolyY& b) {
  const std::size_t db = b.size() - 1;
  const Poly1& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Poly1 la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = lb * c;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_y(a);
  }
  return a;
}

}  // namespace

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  PolyY pa = a.as_poly_in_y(), pb = b.as_poly_in_y();
  const Poly1 content = gcd(content_y(pa), content_y(pb));
  pa = primitive_y(pa);
  pb = primitive_y(pb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (pb.size() > 1) {
    PolyY r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    pb = primitive_y(std::move(r));
    if (pb.empty()) break;
  }
  // pb empty: pa is the gcd; pb a nonzero y-constant: primitive gcd is 1.
  PolyY g = pb.empty() ? pa : PolyY{Poly1::constant(1)};
  for (auto& c : g) c = content * c;
  return Poly2::from_poly_in_y(g).normalized();
}

bool is_squarefree(const Poly2& p) {
  if (p.is_zero()) return false;
  const Poly2 g = gcd(gcd(p, p.dx()), p.dy());
  return g.is_constant();
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Rational inv = Rational(1) / m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Rational f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Poly1 resultant_y(const Poly2& f, const Poly2& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const PolyY pf = f.as_poly_in_y(), pg = g.as_poly_in_y();
  const int m = static_cast<int>(pf.size()) - 1, n = static_cast<int>(pg.size()) - 1;
  int dfx = 0, dgx = 0;
  for (const auto& c : pf) dfx = std::max(dfx, c.degree());
  for (const auto& c : pg) dgx = std::max(dgx, c.degree());
  const int bound = n * dfx + m * dgx;

  // Evaluate the Sylvester determinant at bound+1 integer points and
  // interpolate (Newton form).
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    const Rational a(k);
    const int size = m + n;
    Rational value;
    if (size == 0) {
      value = 1;
    } else {
      std::vector<std::vector<Rational>> syl(size, std::vector<Rational>(size));
      for (int r = 0; r < n; ++r) {
        for (int i = 0; i <= m; ++i) syl[r][r + (m - i)] = pf[i].eval(a);
      }
      for (int r = 0; r < m; ++r) {
        for (int j = 0; j <= n; ++j) syl[n + r][r + (n - j)] = pg[j].eval(a);
      }
      value = determinant(std::move(syl));
    }
    xs.push_back(a);
    ys.push_back(value);
  }
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < xs.size(); ++level) {
    for (std::size_t i = xs.size() - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  Poly1 result = Poly1::constant(dd.back());
  for (std::size_t i = xs.size() - 1; i-- > 0;) {
    result = result * Poly1::linear_root(xs[i]) + Poly1::constant(dd[i]);
  }
  return result;
}

}  // namespace nlc
