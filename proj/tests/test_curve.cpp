#include <doctest.h>

#include "nlc/curve.hpp"
#include "nlc/errors.hpp"
#include "nlc/harness.hpp"
#include "nlc/parse.hpp"

using namespace nlc;

namespace {

const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();
const Poly2 ONE = Poly2::constant(Rational(1));

CurveDivisor div(std::vector<std::pair<Poly2, Rational>> parts) {
  std::vector<WeightedCurve> w;
  for (auto& [p, c] : parts) w.push_back({PlaneCurve(p), c});
  return CurveDivisor(std::move(w));
}

const CurveDivisor CUSP = div({{Y.pow(2) - X.pow(3), Rational(1)}});
const CurveDivisor CUSP_LINE = div({{X, Rational(1)}, {Y.pow(2) - X.pow(3), Rational(1)}});
const CurveDivisor THREE = div({{X, Rational(1)}, {Y, Rational(1)}, {X - Y, Rational(1)}});

std::shared_ptr<const ResolutionData> res(const CurveDivisor& d) {
  return std::make_shared<const ResolutionData>(resolve(d));
}

std::vector<long> ks(const ResolutionData& r) {
  std::vector<long> out;
  for (const auto& n : r.nodes) out.push_back(n.k);
  return out;
}

std::vector<long> ords(const Poly2& h, const ResolutionData& r) {
  std::vector<long> out;
  for (const auto& n : r.nodes) out.push_back(ord_of(h, n.label(), r));
  return out;
}

TruncatedBasis slice(std::vector<Poly2> gens, int d) { return slice_of_polys(gens, d); }

}  // namespace

TEST_SUITE("curve") {
  TEST_CASE("divisor validation") {
    CHECK_THROWS_AS((void)PlaneCurve(X.pow(2)), NotSquarefree);
    CHECK_THROWS_AS((void)PlaneCurve(Poly2()), ZeroPolynomial);
    CHECK_THROWS_AS((void)PlaneCurve(ONE), InvalidArgument);
    CHECK_THROWS_AS(div({{X, Rational(1)}, {Rational(2) * X, Rational(1)}}), CommonFactor);
    CHECK_THROWS(div({{X, Rational(0)}}));
  }

  TEST_CASE("cusp resolution") {
    const ResolutionData r = resolve(CUSP);
    CHECK(ks(r) == std::vector<long>{1, 2, 4});
    REQUIRE(r.nodes.size() == 3);
    std::vector<long> o;
    for (const auto& n : r.nodes) o.push_back(n.ord[0]);
    CHECK(o == std::vector<long>{2, 3, 6});
    CHECK(ords(Y.pow(2) - X.pow(3), r) == o);
  }

  TEST_CASE("three lines and a smooth curve") {
    const ResolutionData r = resolve(THREE);
    REQUIRE(r.nodes.size() == 1);
    CHECK(r.nodes[0].k == 1);
    CHECK(r.nodes[0].ord == std::vector<long>{1, 1, 1});
    CHECK(resolve(div({{X, Rational(1)}})).nodes.empty());
  }

  TEST_CASE("higher cusp recurrences") {
    const ResolutionData r = resolve(div({{Y.pow(2) - X.pow(7), Rational(1)}}));
    CHECK(ks(r) == std::vector<long>{1, 2, 3, 4, 8});
    for (const auto& n : r.nodes) {
      long k = 1;
      for (int p : n.proximity) k += r.node(p).k;
      CHECK(k == n.k);
      CHECK(ord_of(r.components[0], n.label(), r) == n.ord[0]);
    }
  }

  TEST_CASE("pair coefficients") {
    const ResolutionData r3 = resolve(THREE);
    CHECK(pair_coefficients(r3, THREE).coefficient("E1") == Rational(2));
    const ResolutionData rc = resolve(CUSP_LINE);
    const CoeffDivisor c = pair_coefficients(rc, CUSP_LINE);
    CHECK(c.coefficient("E1") == Rational(2));
    CHECK(c.coefficient("E2") == Rational(2));
    CHECK(c.coefficient("E3") == Rational(4));
    const CurveDivisor line = div({{X, Rational(1)}});
    CHECK(pair_coefficients(resolve(line), line).coefficient("C1") == Rational(1));
  }

  TEST_CASE("ideals") {
    const ValuationIdeal n3 = nlc_ideal(THREE);
    CHECK(n3.conditions == std::vector<OrderCondition>{{"E1", 2}});
    CHECK(truncated_basis(n3, 3).dim() == 7);

    const ValuationIdeal nc = nlc_ideal(CUSP_LINE);
    CHECK(nc.conditions == std::vector<OrderCondition>{{"E1", 2}, {"E2", 2}, {"E3", 4}});
    CHECK(truncated_basis(nc, 2).polys() == std::vector<Poly2>{X.pow(2), X * Y, Y.pow(2)});

    CHECK(nlc_ideal(div({{X, Rational(1)}})).conditions.empty());
    CHECK(truncated_basis(nlc_ideal(div({{X, Rational(1)}})), 1).dim() == 3);

    CHECK(mult_ideal(div({{X, Rational(1)}})).conditions == std::vector<OrderCondition>{{"C1", 1}});
    CHECK(mult_ideal(THREE.scaled(Rational(9, 10))).conditions == std::vector<OrderCondition>{{"E1", 1}});
    CHECK(mult_ideal(div({{X, Rational(11, 10)}})).conditions == std::vector<OrderCondition>{{"C1", 1}});
  }

  TEST_CASE("valuations and membership") {
    const auto r = res(CUSP_LINE);
    CHECK(ords(X * Y, *r) == std::vector<long>{2, 3, 5});
    CHECK(ords(X, *r) == std::vector<long>{1, 1, 2});
    CHECK(ords(Y, *r) == std::vector<long>{1, 2, 3});
    CHECK(ords(ONE, *r) == std::vector<long>{0, 0, 0});
    const ValuationIdeal nc = nlc_ideal(CUSP_LINE);
    CHECK(member(X * Y, nc).member);
    CHECK_FALSE(member(X, nc).member);
    CHECK(member(ONE, nlc_ideal(div({{X, Rational(1)}}))).member);
  }

  TEST_CASE("valuations are additive") {
    const auto r = res(CUSP_LINE);
    const std::vector<Poly2> hs{X + Y, Y.pow(2) - X.pow(3), X - Y.pow(2), X * X + Y, Y + X * Y};
    for (const auto& a : hs)
      for (const auto& b : hs) {
        const auto oa = ords(a, *r), ob = ords(b, *r), oab = ords(a * b, *r);
        for (std::size_t i = 0; i < oa.size(); ++i) CHECK(oab[i] == oa[i] + ob[i]);
      }
  }

  TEST_CASE("ideal comparison") {
    const ValuationIdeal a = nlc_ideal(THREE);
    const ValuationIdeal b = mult_ideal(THREE.scaled(Rational(9, 10)));
    CHECK(ideal_equal(a, a, 4));
    CHECK_FALSE(ideal_equal(a, b, 2));
    CHECK(ideal_contained(a, b, 4));
    CHECK_FALSE(ideal_contained(b, a, 4));
    CHECK(default_degree(a) == 10);
  }

  TEST_CASE("lc and klt") {
    CHECK(is_lc(CUSP.scaled(Rational(5, 6))));
    CHECK_FALSE(is_lc(CUSP.scaled(Rational(5, 6) + Rational(1, 100))));
    CHECK(is_lc(THREE.scaled(Rational(2, 3))));
    CHECK_FALSE(is_klt(THREE.scaled(Rational(2, 3))));
    // lc iff no non-lc conditions
    for (long p = 1; p <= 12; ++p) {
      const CurveDivisor d = CUSP_LINE.scaled(Rational(p, 6));
      CHECK(is_lc(d) == nlc_ideal(d).conditions.empty());
    }
  }

  TEST_CASE("loci and centers") {
    const NlcLocus l3 = nlc_locus(THREE);
    CHECK(l3.components.empty());
    CHECK(l3.points == std::vector<PlanePoint>{{Rational(0), Rational(0)}});
    CHECK(nlc_locus(div({{X, Rational(3, 2)}})).components == std::vector<std::size_t>{0});
    const NlcLocus half = nlc_locus(div({{X, Rational(1, 2)}}));
    CHECK((half.components.empty() && half.points.empty()));

    CHECK(lc_centers(div({{X, Rational(1)}})).components == std::vector<std::size_t>{0});
    const LcCenters c = lc_centers(THREE.scaled(Rational(2, 3)));
    CHECK(c.components.empty());
    CHECK(c.points == std::vector<PlanePoint>{{Rational(0), Rational(0)}});
    CHECK(lc_centers(THREE).components == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("restriction to a line") {
    const LinePointDivisor bs = restrict_divisor(CUSP, PlaneCurve(X));
    REQUIRE(bs.points.size() == 1);
    CHECK(bs.points[0] == LinePoint{Rational(0), Rational(2)});
    CHECK(nlc_on_line(bs).generator == Poly1::monomial(1, 2));

    const LinePointDivisor by = restrict_divisor(div({{Y, Rational(1)}}), PlaneCurve(X));
    CHECK(by.points == std::vector<LinePoint>{{Rational(0), Rational(1)}});
    CHECK(nlc_on_line(by).generator == Poly1::constant(1));
    CHECK(mult_on_line(by).generator == Poly1::variable());

    const LinePointDivisor tang = restrict_divisor(div({{Y - X.pow(2), Rational(1, 2)}}), PlaneCurve(Y));
    CHECK(tang.points == std::vector<LinePoint>{{Rational(0), Rational(1)}});

    LinePointDivisor five{PlaneCurve(X), {{Rational(0), Rational(5, 2)}}};
    CHECK(nlc_on_line(five).generator == Poly1::monomial(1, 2));

    CHECK_THROWS_AS(restrict_divisor(div({{X, Rational(1)}}), PlaneCurve(X)), CommonComponent);
    CHECK_THROWS_AS(restrict_divisor(div({{Y.pow(2) - Poly2::constant(2), Rational(1)}}), PlaneCurve(X)),
                    NonRationalPoint);
  }

  TEST_CASE("restricted ideals") {
    const ValuationIdeal nc = nlc_ideal(CUSP_LINE);
    CHECK(restrict_ideal(nc, PlaneCurve(X), 2).generator == Poly1::monomial(1, 2));
    CHECK(restrict_ideal(nlc_ideal(div({{X, Rational(1)}})), PlaneCurve(X - Y + ONE), 3).generator ==
          Poly1::constant(1));
    CHECK(restrict_ideal(nlc_ideal(THREE), PlaneCurve(Y - X.pow(1) + Poly2()), 2).generator == Poly1::monomial(1, 2));
    CHECK(restriction_degree(nc, 2) >= 2);
  }

  TEST_CASE("hyperplane inclusion on the restriction corpus") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const RestrictionInstance inst = corpus_restriction(seed);
      const CurveDivisor sb = inst.b.plus(inst.line, Rational(1));
      const LineIdeal with_s = restrict_ideal(nlc_ideal(sb), inst.line, 8);
      const LineIdeal without = restrict_ideal(nlc_ideal(inst.b), inst.line, 8);
      INFO(inst.descriptor.dump());
      CHECK(line_contained(with_s, without));
    }
  }

  TEST_CASE("truncated slices of explicit ideals") {
    const TruncatedBasis m2 = slice({X.pow(2), X * Y, Y.pow(2)}, 3);
    CHECK(m2.dim() == 7);
    CHECK(m2.rows == truncated_basis(nlc_ideal(THREE), 3).rows);
    CHECK(slice_contained(m2, slice({X, Y}, 3)));
  }

  TEST_CASE("curve jumping numbers") {
    const auto j = jumping_numbers_curve(CUSP, Rational(1), 8);
    REQUIRE_FALSE(j.empty());
    CHECK(j.front() == Rational(5, 6));
    CHECK(jumping_numbers_curve(div({{X, Rational(1)}}), Rational(2), 6) == std::vector<Rational>{1, 2});
  }

  TEST_CASE("padding and shuffling leave the ideal unchanged") {
    ResolveOptions opt;
    opt.padding = 2;
    opt.padding_seed = 9;
    opt.shuffle_seed = 4;
    for (const auto& d : {CUSP_LINE, THREE, CUSP}) {
      CHECK(ideal_equal(nlc_ideal(d), nlc_ideal(d, opt), 8));
      CHECK(ideal_equal(mult_ideal(d), mult_ideal(d, opt), 8));
    }
    const CurveDivisor line = div({{X, Rational(1)}});
    CHECK(resolve(line, opt).nodes.size() >= 1);
    CHECK(ideal_equal(nlc_ideal(line), nlc_ideal(line, opt), 4));
  }

  TEST_CASE("irrational centers are rejected") {
    // Cusps at x = +-sqrt(2).
    const Poly2 shifted = X.pow(2) - Poly2::constant(2);
    CHECK_THROWS_AS(resolve(div({{Y.pow(2) - shifted.pow(3), Rational(1)}})), NonRationalCenter);
    // Irrational tangent directions are separated by one blow-up at a rational point.
    CHECK(resolve(div({{Y.pow(2) - Rational(2) * X.pow(2), Rational(1)}})).nodes.size() == 1);
  }
}
