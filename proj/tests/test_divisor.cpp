#include <doctest.h>

#include "nlc/divisor.hpp"
#include "nlc/errors.hpp"
#include "nlc/feasibility.hpp"
#include "nlc/linear_algebra.hpp"

using namespace nlc;

TEST_SUITE("divisor") {
  TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse(" -7/3 ").str() == "-7/3");
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK_THROWS_AS(Rational::parse("0.5"), NonRationalLiteral);
    CHECK_THROWS_AS(Rational::parse("1e3"), NonRationalLiteral);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  }

  TEST_CASE("floor and ceil of negative fractions") {
    CHECK(Rational(-1, 4).floor() == -1);
    CHECK(Rational(-1, 4).ceil() == 0);
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(7, 3).ceil() == 3);
  }

  TEST_CASE("round_up") {
    CHECK(round_up({{"A", Rational(3, 2)}, {"B", Rational(-1, 4)}}) == CoeffDivisor{{"A", Rational(2)}});
    CHECK(round_up({{"A", Rational(2)}}) == CoeffDivisor{{"A", Rational(2)}});
    CHECK(round_up({}).empty());
  }

  TEST_CASE("round_down") {
    CHECK(round_down({{"A", Rational(3, 2)}, {"B", Rational(-1, 4)}}) ==
          CoeffDivisor{{"A", Rational(1)}, {"B", Rational(-1)}});
    CHECK(round_down({{"A", Rational(1)}}) == CoeffDivisor{{"A", Rational(1)}});
    CHECK(round_down({{"A", Rational(5, 6)}}).empty());
  }

  TEST_CASE("parts") {
    const DivisorParts p = parts({{"A", Rational(2)}, {"B", Rational(1)}, {"C", Rational(1, 2)}});
    CHECK(p.lt1 == CoeffDivisor{{"C", Rational(1, 2)}});
    CHECK(p.eq1 == CoeffDivisor{{"B", Rational(1)}});
    CHECK(p.gt1 == CoeffDivisor{{"A", Rational(2)}});
    CHECK(p.frac == CoeffDivisor{{"C", Rational(1, 2)}});

    const DivisorParts q = parts({{"A", Rational(1)}});
    CHECK(q.lt1.empty());
    CHECK(q.eq1 == CoeffDivisor{{"A", Rational(1)}});
    CHECK(q.gt1.empty());
    CHECK(q.frac.empty());

    const DivisorParts r = parts({{"A", Rational(7, 3)}});
    CHECK(r.gt1 == CoeffDivisor{{"A", Rational(7, 3)}});
    CHECK(r.frac == CoeffDivisor{{"A", Rational(1, 3)}});
  }

  TEST_CASE("exponents") {
    CHECK(nlc_exponent(Rational(2)) == 2);
    CHECK(nlc_exponent(Rational(1)) == 0);
    CHECK(nlc_exponent(Rational(7, 3)) == 2);
    CHECK(mult_exponent(Rational(1)) == 1);
    CHECK(mult_exponent(Rational(2)) == 2);
    CHECK(mult_exponent(Rational(5, 6)) == 0);
  }

  TEST_CASE("nlc and multiplier exponents differ exactly at 1") {
    for (long p = -12; p <= 36; ++p) {
      for (long q = 1; q <= 6; ++q) {
        const Rational d(p, q);
        CHECK(nlc_exponent(d) <= mult_exponent(d));
        CHECK((nlc_exponent(d) != mult_exponent(d)) == (d == Rational(1)));
        if (d == Rational(1)) CHECK(mult_exponent(d) - nlc_exponent(d) == 1);
      }
    }
  }

  TEST_CASE("parts reassemble the divisor") {
    for (long p = -9; p <= 20; ++p) {
      const CoeffDivisor d{{"A", Rational(p, 4)}, {"B", Rational(p + 3, 3)}};
      const DivisorParts s = parts(d);
      CHECK(s.lt1 + s.eq1 + s.gt1 == d);
      CHECK(round_down(d) + s.frac == d);
    }
  }

  TEST_CASE("row echelon and nullspace") {
    const RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(m, 3) == 2);
    const RationalMatrix ns = nullspace(m, 3);
    REQUIRE(ns.size() == 1);
    for (const auto& row : m) {
      Rational s;
      for (std::size_t i = 0; i < 3; ++i) s += row[i] * ns[0][i];
      CHECK(s.is_zero());
    }
    RowSpace rs(3);
    CHECK(rs.insert({1, 0, 1}));
    CHECK_FALSE(rs.insert({2, 0, 2}));
    CHECK(rs.contains({3, 0, 3}));
    CHECK_FALSE(rs.contains({0, 1, 0}));
  }

  TEST_CASE("strict and non-strict feasibility") {
    // w >= 0, w < 0
    CHECK_FALSE(is_feasible({make_constraint({1}, 0, false), make_constraint({-1}, 0, true)}));
    // w >= 0, -w >= 0
    CHECK(is_feasible({make_constraint({1}, 0, false), make_constraint({-1}, 0, false)}));
    // w1 + w2 > 1, w1 <= 1/2, w2 <= 1/2
    CHECK_FALSE(is_feasible({make_constraint({1, 1}, -1, true), make_constraint({-1, 0}, Rational(1, 2), false),
                             make_constraint({0, -1}, Rational(1, 2), false)}));
    CHECK(is_feasible({make_constraint({1, 1}, -1, false), make_constraint({-1, 0}, Rational(1, 2), false),
                       make_constraint({0, -1}, Rational(1, 2), false)}));
  }
}
