#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nlc/curve.hpp"
#include "nlc/harness.hpp"
#include "nlc/monomial.hpp"
#include "nlc/parse.hpp"

using namespace nlc;

namespace {

const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();

struct Outcome {
  bool ok = true;
  std::string note;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.note += (o.note.empty() ? "" : "; ") + what;
  }
}

TruncatedBasis max_ideal_power(int e, int degree) {
  std::vector<Poly2> gens;
  for (int i = 0; i <= e; ++i) gens.push_back(Poly2::monomial(1, i, e - i));
  return slice_of_polys(gens, degree);
}

Outcome three_lines() {
  Outcome o;
  const CurveDivisor d = parse_divisor("1*(x) + 1*(y) + 1*(x - y)");
  const int deg = 6;
  expect(o, truncated_basis(nlc_ideal(d), deg).rows == max_ideal_power(2, deg).rows, "J_NLC(D) != m^2");
  const CurveDivisor s = d.scaled(Rational(9, 10));
  expect(o, truncated_basis(mult_ideal(s), deg).rows == max_ideal_power(1, deg).rows, "J(9/10 D) != m");
  expect(o, truncated_basis(nlc_ideal(s), deg).rows == max_ideal_power(1, deg).rows, "J_NLC(9/10 D) != m");
  return o;
}

Outcome cusp_and_line() {
  Outcome o;
  const CurveDivisor b = parse_divisor("1*(y^2 - x^3)");
  const PlaneCurve s(X);
  const CurveDivisor sb = b.plus(s, Rational(1));
  expect(o, truncated_basis(nlc_ideal(sb), 6).rows == max_ideal_power(2, 6).rows, "J_NLC(X, S+B) != n^2");
  const LinePointDivisor bs = restrict_divisor(b, s);
  expect(o, bs.points == std::vector<LinePoint>{{Rational(0), Rational(2)}}, "B_S != 2*(0)");
  expect(o, nlc_on_line(bs).generator == Poly1::monomial(1, 2), "J_NLC(S, B_S) != m^2");
  const TrialReport t = check_restriction(s, b, 6);
  expect(o, t.verdict == Verdict::pass, "restriction equality: " + t.reason);
  return o;
}

Outcome blow_up_example() {
  Outcome o;
  const MonomialIdealGens m2(2, {{1, 0}, {0, 1}});
  const MonomialIdealGens m2sq = power(m2, 2);
  auto nlc2 = [&](Rational c) { return nlc_generators({m2, c}); };
  auto mult2 = [&](Rational c) { return mult_generators({m2, c}); };
  expect(o, nlc2(Rational(2)).ideal.is_unit() && nlc2(Rational(2)).complete, "n=2 c=2: J_NLC not trivial");
  expect(o, mult2(Rational(2)).ideal == m2, "n=2 c=2: J != m");
  expect(o, nlc2(Rational(5, 2)).ideal == m2 && mult2(Rational(5, 2)).ideal == m2, "n=2 c=5/2: not both m");
  expect(o, nlc2(Rational(3)).ideal == m2sq && nlc2(Rational(3)).complete, "n=2 c=3: J_NLC != m^2");

  const MonomialIdealGens m3(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  expect(o, nlc_member({0, 0, 0}, {m3, Rational(3)}), "n=3 c=3: 1 not a member");
  const MonomialPair p{m3, Rational(7, 2)};
  expect(o, !nlc_member({0, 0, 0}, p), "n=3 c=7/2: 1 is a member");
  expect(o, nlc_member({1, 0, 0}, p), "n=3 c=7/2: x not a member");
  expect(o, nlc_member({2, 0, 0}, p), "n=3 c=7/2: x^2 not a member");
  expect(o, nlc_generators(p).ideal == m3, "n=3 c=7/2: generators != m");
  return o;
}

Outcome smooth_divisor() {
  Outcome o;
  const CurveDivisor d = parse_divisor("1*(x)");
  expect(o, nlc_ideal(d).conditions.empty(), "J_NLC(X, D) not trivial");
  const TruncatedBasis x_slice = slice_of_polys({X}, 6);
  expect(o, truncated_basis(nlc_ideal(d.scaled(Rational(11, 10))), 6).rows == x_slice.rows,
         "J_NLC(11/10 D) != (x)");
  expect(o, truncated_basis(mult_ideal(d), 6).rows == x_slice.rows, "J(D) != (x)");
  return o;
}

Outcome cusp_threshold() {
  Outcome o;
  const CurveDivisor cusp = parse_divisor("1*(y^2 - x^3)");
  expect(o, is_lc(cusp.scaled(Rational(5, 6))), "not lc at 5/6");
  expect(o, !is_lc(cusp.scaled(Rational(5, 6) + Rational(1, 100))), "lc at 5/6 + 1/100");
  const auto curve_jumps = jumping_numbers_curve(cusp, Rational(1), 8);
  expect(o, !curve_jumps.empty() && curve_jumps.front() == Rational(5, 6), "first curve jump != 5/6");
  const MonomialIdealGens a(2, {{3, 0}, {0, 2}});
  expect(o, oracle_lct(a, 25) == Rational(5, 6), "ray oracle threshold != 5/6");
  const auto mono_jumps = jumping_numbers_monomial(a, Rational(1));
  expect(o, !mono_jumps.empty() && mono_jumps.front() == Rational(5, 6), "first monomial jump != 5/6");
  return o;
}

Outcome suite(const std::string& property, std::size_t trials, int degree) {
  Outcome o;
  const CheckReport r = run_property(property, trials, 1, degree);
  if (!r.passed()) {
    o.ok = false;
    o.note = std::to_string(r.failures.size()) + " failures, first seed " + std::to_string(r.failures[0].seed) + ": " +
             r.failures[0].reason;
  }
  return o;
}

Outcome jumping_suite() {
  Outcome o;
  const MonomialIdealGens m2(2, {{1, 0}, {0, 1}});
  const MonomialIdealGens a(2, {{2, 0}, {0, 3}});
  for (const auto& [ideal, name] : {std::pair{m2, "m"}, std::pair{a, "(x^2, y^3)"}}) {
    const TrialReport t = check_jumping_monomial(ideal, Rational(4), 3);
    expect(o, t.verdict == Verdict::pass, std::string(name) + ": " + t.reason);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "three concurrent lines", 1, three_lines},
      {2, "cusp plus line restriction example", 1, cusp_and_line},
      {3, "monomial blow-up example", 1, blow_up_example},
      {4, "smooth divisor", 1, smooth_divisor},
      {5, "cusp log canonical threshold", 60, cusp_threshold},
      {6, "restriction suite (100 instances, degree 8)", 60, [] { return suite("restriction", 100, 8); }},
      {7, "subadditivity suite (100 pairs)", 60, [] { return suite("subadditivity", 100, 8); }},
      {8, "resolution independence (50 x 3 variants)", 120,
       [] { return suite("resolution-independence", 50, 8); }},
      {9, "oracle agreement (200 queries)", 120, [] { return suite("oracle", 200, 8); }},
      {10, "jumping numbers of m and (x^2, y^3)", 30, jumping_suite},
      {11, "lc-center criterion on the curve corpus", 600, [] { return suite("lc-centers", 100, 10); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.ok = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.limit_s, o.note.empty() ? "" : " - ", o.note.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
