#include <doctest.h>

#include "nlc/harness.hpp"
#include "nlc/parse.hpp"

using namespace nlc;

namespace {

const MonomialIdealGens M2(2, {{1, 0}, {0, 1}});

CurveDivisor d(const char* s) { return parse_divisor(s); }

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("generator families") {
    InstanceGenConfig cfg;
    cfg.seed = 1;
    cfg.family = Family::concurrent_lines;
    const Instance lines = generate(cfg);
    REQUIRE(lines.curve);
    CHECK(lines.curve->size() == 4);
    for (const auto& w : lines.curve->components()) {
      CHECK(w.curve.poly().eval(Rational(0), Rational(0)).is_zero());
      CHECK(w.curve.degree() == 1);
    }

    cfg.seed = 2;
    cfg.family = Family::monomial_2var;
    const Instance m = generate(cfg);
    REQUIRE(m.monomial);
    CHECK(m.monomial->gens().size() <= 4);
    CHECK(m.monomial->max_degree() <= 6);

    cfg.seed = 3;
    cfg.family = Family::cusp_family;
    cfg.k = 5;
    const Instance c = generate(cfg);
    REQUIRE(c.curve);
    CHECK(c.curve->components()[0].curve.poly() == PlaneCurve(parse_polynomial("y^2 - x^5")).poly());
    CHECK(c.descriptor["k"] == 5);

    cfg.family = Family::generic_lines;
    CHECK(generate(cfg).descriptor == generate(cfg).descriptor);
  }

  TEST_CASE("oracle examples") {
    CHECK(oracle_monomial_member({1, 1}, {M2, Rational(3)}, 25));
    CHECK(oracle_monomial_member({0, 0}, {M2, Rational(2)}, 25));
    CHECK(oracle_monomial_member({40, 40}, {M2, Rational(5)}, 25));
    CHECK_FALSE(oracle_monomial_member({1, 0}, {M2, Rational(3)}, 25));
  }

  TEST_CASE("named checks") {
    CHECK(check_resolution_independence(d("1*(x) + 1*(y^2 - x^3)"), 3, 8).verdict == Verdict::pass);
    CHECK(check_resolution_independence(d("1*(x) + 1*(y) + 1*(x - y)"), 3, 8).verdict == Verdict::pass);
    CHECK(check_resolution_independence(d("1*(x)"), 3, 4).verdict == Verdict::pass);

    CHECK(check_restriction(PlaneCurve(parse_polynomial("x")), d("1*(y^2 - x^3)"), 6).verdict == Verdict::pass);
    CHECK(check_inversion_adjunction(PlaneCurve(parse_polynomial("x")), d("1*(y^2 - x^3)")).verdict == Verdict::pass);
    CHECK(check_inversion_adjunction(PlaneCurve(parse_polynomial("x")), d("1/2*(y)")).verdict == Verdict::pass);

    CHECK(check_subadditivity_monomial(M2, M2, Rational(3, 2), Rational(3, 2)).verdict == Verdict::pass);
    CHECK(check_subadditivity_monomial(M2, M2, Rational(3), Rational(1, 100)).verdict == Verdict::pass);

    CHECK(check_jumping_monomial(M2, Rational(4), 2).verdict == Verdict::pass);
    CHECK(check_jumping_monomial(MonomialIdealGens(1, {{1}}), Rational(2), 2).verdict == Verdict::pass);
    const TrialReport cusp = check_jumping_curve(d("1*(y^2 - x^3)"), Rational(1), 2, 8);
    CHECK(cusp.verdict == Verdict::pass);
    CHECK(cusp.instance["jumps"][0] == "5/6");

    CHECK(check_inclusion_chain(d("1*(x) + 1*(y) + 1*(x - y)"), {Rational(1, 10)}, 6).verdict == Verdict::pass);
    CHECK(check_inclusion_chain(d("1*(x)"), {Rational(1, 10)}, 6).verdict == Verdict::pass);
    CHECK(check_lc_center_criterion(d("1*(x) + 1*(y) + 1*(x - y)"), 6).verdict == Verdict::pass);
    CHECK(check_small_multiplicity(d("1/2*(x) + 1/2*(y - x^2) + 1*(x + y - 1)")).verdict == Verdict::pass);
  }

  TEST_CASE("reports serialise failures with a reproducible seed") {
    const CheckReport r = run_property("small-multiplicity", 5, 1);
    CHECK(r.passed());
    const Json j = r.to_json(false);
    CHECK(j["property"] == "small-multiplicity");
    CHECK(j["trials"] == 5);
    CHECK(j["failures"].empty());
    CHECK(j["elapsed_ms"] == 0.0);
    CHECK(run_property("oracle", 10, 3).to_json(false).dump() == run_property("oracle", 10, 3).to_json(false).dump());
    CHECK_THROWS(run_property("nonsense", 1, 1));
  }

  TEST_CASE("strict decrease at consecutive jumps fails for y^2 - x^5") {
    // The conditions at 9/10 and at 1 are monomial valuations with weights
    // (1,2), (1,3), (2,5) and both cut out (y, x^2); the multiplier ideal still
    // jumps at 1 because the curve itself reaches coefficient 1.
    const TrialReport t = check_jumping_curve(d("1*(y^2 - x^5)"), Rational(1), 2, 8);
    REQUIRE(t.verdict == Verdict::fail);
    CHECK(t.witness["from"] == "9/10");
    CHECK(t.witness["to"] == "1");
    const CurveDivisor c = d("1*(y^2 - x^5)");
    const TruncatedBasis yx2 = slice_of_polys({parse_polynomial("y"), parse_polynomial("x^2")}, 8);
    CHECK(truncated_basis(nlc_ideal(c.scaled(Rational(9, 10))), 8).rows == yx2.rows);
    CHECK(truncated_basis(nlc_ideal(c), 8).rows == yx2.rows);
  }

  TEST_CASE("monomial jumping structure holds on the corpus") {
    for (std::uint64_t seed = 2; seed <= 40; seed += 2) {
      const TrialReport t = check_jumping_monomial(corpus_oracle_query(seed).pair.ideal, Rational(3), 2);
      INFO(t.witness.dump());
      CHECK(t.verdict == Verdict::pass);
    }
  }

  TEST_CASE("small runs of every property except jumping") {
    for (const auto& p : property_names()) {
      if (p == "jumping") continue;
      const CheckReport r = run_property(p, 6, 101);
      INFO(r.to_json(false).dump());
      CHECK(r.passed());
    }
  }
}
