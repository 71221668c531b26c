#include <doctest.h>

#include "nlc/errors.hpp"
#include "nlc/harness.hpp"
#include "nlc/parse.hpp"

using namespace nlc;

TEST_SUITE("parse") {
  TEST_CASE("polynomials") {
    const Poly2 X = Poly2::x(), Y = Poly2::y();
    CHECK(parse_polynomial("y^2 - x^3") == Y.pow(2) - X.pow(3));
    CHECK(parse_polynomial("x") == X);
    CHECK(parse_polynomial(" -(x+ y)^2*1/2 ") == Rational(-1, 2) * (X + Y).pow(2));
    CHECK(parse_polynomial("3/4*x*y + 2") == Rational(3, 4) * X * Y + Poly2::constant(2));
  }

  TEST_CASE("parse errors carry offsets") {
    try {
      parse_polynomial("y^2 -");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_polynomial("0.5*x"), NonRationalLiteral);
    CHECK_THROWS_AS(parse_polynomial("x^0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x"), ParseError);
  }

  TEST_CASE("divisors") {
    const CurveDivisor d = parse_divisor("1*(x) + 1*(y^2 - x^3)");
    REQUIRE(d.size() == 2);
    CHECK(d.components()[1].curve.poly() == PlaneCurve(parse_polynomial("y^2-x^3")).poly());
    CHECK_THROWS_AS(parse_divisor("1*(x) + 1*(x)"), CommonFactor);
    CHECK_THROWS_AS(parse_divisor("1*(x^2)"), NotSquarefree);
    CHECK_THROWS_AS(parse_divisor("0.5*(x)"), NonRationalLiteral);
    CHECK_THROWS_AS(parse_divisor("1*x"), ParseError);
  }

  TEST_CASE("divisor round trip on the curve corpus") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const CurveDivisor d = corpus_curve(seed);
      CHECK(parse_divisor(divisor_str(d)) == d);
    }
  }

  TEST_CASE("monomial ideals") {
    const MonomialIdealGens a = parse_monomial_ideal("x^2*y, y^3");
    CHECK(a.dim() == 2);
    CHECK(a.gens() == std::vector<Exponent>{{2, 1}, {0, 3}});
    CHECK(parse_monomial_ideal("x1*x3, x2^2").dim() == 3);
    CHECK(parse_monomial_ideal("x", 2).dim() == 2);
    CHECK(parse_monomial_ideal("1").is_unit());
    CHECK_THROWS_AS(parse_monomial_ideal("x + y"), ParseError);
    CHECK_THROWS(parse_monomial_ideal("x, x2"));
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      InstanceGenConfig cfg;
      cfg.seed = seed;
      cfg.family = seed % 2 ? Family::monomial_2var : Family::monomial_3var;
      const MonomialIdealGens m = *generate(cfg).monomial;
      CHECK(parse_monomial_ideal(monomial_ideal_str(m), m.dim()) == m);
    }
  }

  TEST_CASE("exponents and lines") {
    CHECK(parse_exponent("1, 0") == Exponent{1, 0});
    CHECK_THROWS(parse_exponent("1,-1"));
    CHECK(parse_line("x - 2*y + 1").poly().total_degree() == 1);
    CHECK_THROWS(parse_line("x*y"));
    CHECK(monomial_str({2, 1}) == "x^2*y");
    CHECK(monomial_str({0, 0}) == "1");
  }
}
