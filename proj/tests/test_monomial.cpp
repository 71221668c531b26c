#include <doctest.h>

#include <functional>
#include <random>

#include "nlc/errors.hpp"
#include "nlc/harness.hpp"
#include "nlc/monomial.hpp"

using namespace nlc;

namespace {

MonomialIdealGens ideal(std::size_t n, std::vector<Exponent> g) { return MonomialIdealGens(n, std::move(g)); }

const MonomialIdealGens M2 = ideal(2, {{1, 0}, {0, 1}});

// Local ray enumeration in exact arithmetic, kept separate from the harness oracle.
bool brute_member(const Exponent& v, const MixedPair& p, IdealKind kind, long H) {
  const std::size_t n = v.size();
  Exponent w(n, 0);
  bool ok = true;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (!ok) return;
    if (i == n) {
      long g = 0, size = 0;
      for (long x : w) g = std::gcd(g, x), size += x;
      if (g != 1) return;
      Rational cord;
      for (const auto& f : p.factors) {
        long o = -1;
        for (const auto& u : f.ideal.gens()) {
          long s = 0;
          for (std::size_t j = 0; j < n; ++j) s += w[j] * u[j];
          if (o < 0 || s < o) o = s;
        }
        cord += f.c * Rational(o);
      }
      const Rational delta = cord - Rational(size) + Rational(1);
      long shifted = 0;
      for (std::size_t j = 0; j < n; ++j) shifted += w[j] * (v[j] + 1);
      const bool active = kind == IdealKind::mult ? true : delta > Rational(1);
      if (active && !(Rational(shifted) > cord)) ok = false;
      return;
    }
    for (long x = 0; x <= H; ++x) w[i] = x, walk(i + 1);
  };
  walk(0);
  return ok;
}

}  // namespace

TEST_SUITE("monomial") {
  TEST_CASE("ideal normalisation") {
    const auto a = ideal(2, {{2, 1}, {0, 3}, {3, 1}, {2, 2}});
    CHECK(a.gens() == std::vector<Exponent>{{2, 1}, {0, 3}});
    CHECK(a.contains({5, 1}));
    CHECK_FALSE(a.contains({1, 2}));
    CHECK(MonomialIdealGens::unit(3).is_unit());
    CHECK_THROWS_AS(ideal(2, {{1, -1}}), InvalidArgument);
    CHECK(product(M2, M2) == power(M2, 2));
    CHECK(contained(power(M2, 2), M2));
    CHECK_FALSE(contained(M2, power(M2, 2)));
  }

  TEST_CASE("ord_ray and delta_coefficient") {
    CHECK(ord_ray(RayValuation({1, 1}), M2) == 1);
    const auto a = ideal(2, {{2, 1}, {0, 3}});
    CHECK(ord_ray(RayValuation({1, 1}), a) == 3);
    CHECK(ord_ray(RayValuation({1, 2}), a) == 4);
    CHECK(delta_coefficient(RayValuation({1, 1}), MonomialPair{M2, Rational(2)}) == Rational(1));
    CHECK(delta_coefficient(RayValuation({1, 1}), MonomialPair{M2, Rational(3)}) == Rational(2));
    CHECK(delta_coefficient(RayValuation({1, 2}), MonomialPair{M2, Rational(3)}) == Rational(1));
    CHECK_THROWS(RayValuation({2, 2}));
  }

  TEST_CASE("membership examples") {
    CHECK(nlc_member({0, 0}, {M2, Rational(2)}));
    CHECK_FALSE(nlc_member({1, 0}, {M2, Rational(3)}));
    CHECK(nlc_member({1, 1}, {M2, Rational(3)}));
    CHECK_FALSE(mult_member({0, 0}, {M2, Rational(2)}));
    CHECK(mult_member({1, 0}, {M2, Rational(2)}));
    CHECK(mult_member({0, 0}, {M2, Rational(3, 2)}));
  }

  TEST_CASE("generators of powers of the maximal ideal") {
    const auto r3 = nlc_generators({M2, Rational(3)});
    CHECK(r3.complete);
    CHECK(r3.ideal == power(M2, 2));
    const auto r2 = nlc_generators({M2, Rational(2)});
    CHECK(r2.complete);
    CHECK(r2.ideal.is_unit());
    CHECK(mult_generators({M2, Rational(2)}).ideal == M2);
    CHECK(nlc_generators({M2, Rational(5, 2)}).ideal == M2);
    CHECK(mult_generators({M2, Rational(5, 2)}).ideal == M2);
  }

  TEST_CASE("three variables: floor(c) - (n - 1)") {
    const auto m3 = ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    for (long twice = 7; twice <= 12; ++twice) {
      const Rational c(twice, 2);
      const long e = c.floor().get_si() - 2;
      const auto r = nlc_generators({m3, c});
      CHECK(r.complete);
      CHECK(r.ideal == power(m3, e));
    }
    CHECK(nlc_generators({m3, Rational(3)}).ideal.is_unit());
  }

  TEST_CASE("generators agree with the ray oracle on (x^2 y, y^3)") {
    const auto a = ideal(2, {{2, 1}, {0, 3}});
    const MonomialPair p{a, Rational(1)};
    const auto r = nlc_generators(p);
    CHECK(r.complete);
    for (long i = 0; i <= 5; ++i)
      for (long j = 0; j <= 5; ++j) CHECK(r.ideal.contains({i, j}) == brute_member({i, j}, as_mixed(p), IdealKind::nlc, 25));
  }

  TEST_CASE("exact membership, finite description and ray enumeration agree") {
    std::mt19937_64 g(2024);
    const std::vector<Rational> cs{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)};
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Exponent> gens;
      const int k = 1 + static_cast<int>(g() % 3);
      while (static_cast<int>(gens.size()) < k) {
        Exponent e{static_cast<long>(g() % 4), static_cast<long>(g() % 4)};
        if (e[0] + e[1] > 0) gens.push_back(e);
      }
      const MonomialPair p{ideal(2, gens), cs[g() % cs.size()]};
      const MixedPair mp = as_mixed(p);
      for (IdealKind kind : {IdealKind::nlc, IdealKind::mult}) {
        const InequalityDescription d = describe(mp, kind);
        const GeneratorResult r = generators(mp, kind);
        CHECK(r.complete);
        for (long i = 0; i <= 4; ++i) {
          for (long j = 0; j <= 4; ++j) {
            const Exponent v{i, j};
            const bool exact = member(v, mp, kind);
            CHECK(exact == d.contains(v));
            CHECK(exact == r.ideal.contains(v));
            CHECK(exact == brute_member(v, mp, kind, 15));
          }
        }
      }
    }
  }

  TEST_CASE("mixed pairs split additively") {
    // a^c b^d with a = b equals a^(c+d)
    const MixedPair same{{{M2, Rational(3, 2)}, {M2, Rational(3, 2)}}};
    CHECK(generators(same, IdealKind::nlc).ideal == nlc_generators({M2, Rational(3)}).ideal);
    const MixedPair cross{{{ideal(2, {{1, 0}}), Rational(3, 2)}, {ideal(2, {{0, 1}}), Rational(1, 2)}}};
    for (long i = 0; i <= 3; ++i)
      for (long j = 0; j <= 3; ++j)
        CHECK(member({i, j}, cross, IdealKind::nlc) == brute_member({i, j}, cross, IdealKind::nlc, 12));
  }

  TEST_CASE("certified degree bounds every minimal generator") {
    const auto a = ideal(2, {{3, 0}, {1, 1}, {0, 4}});
    for (long twice = 1; twice <= 8; ++twice) {
      const MonomialPair p{a, Rational(twice, 2)};
      const auto r = nlc_generators(p, 40);
      CHECK(r.complete);
      CHECK(r.ideal.max_degree() <= r.certified_degree);
      CHECK(r.ideal == nlc_generators(p).ideal);
    }
  }

  TEST_CASE("insufficient bound is reported as incomplete") {
    const auto r = nlc_generators({M2, Rational(6)}, 2);
    CHECK_FALSE(r.complete);
  }

  TEST_CASE("jumping numbers") {
    CHECK(jumping_numbers_monomial(M2, Rational(4)) == std::vector<Rational>{2, 3, 4});
    CHECK(jumping_numbers_monomial(ideal(1, {{1}}), Rational(2)) == std::vector<Rational>{1, 2});
    const auto j = jumping_numbers_monomial(ideal(2, {{2, 0}, {0, 3}}), Rational(1));
    REQUIRE_FALSE(j.empty());
    CHECK(j.front() == Rational(5, 6));
    CHECK(oracle_lct(ideal(2, {{2, 0}, {0, 3}}), 25) == Rational(5, 6));
  }

  TEST_CASE("first jumping number equals the oracle threshold") {
    std::mt19937_64 g(77);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Exponent> gens;
      const int k = 1 + static_cast<int>(g() % 3);
      while (static_cast<int>(gens.size()) < k) {
        Exponent e{static_cast<long>(g() % 4), static_cast<long>(g() % 4)};
        if (e[0] + e[1] > 0) gens.push_back(e);
      }
      const auto a = ideal(2, gens);
      const auto j = jumping_numbers_monomial(a, Rational(2));
      REQUIRE_FALSE(j.empty());
      CHECK(j.front() == oracle_lct(a, 20));
    }
  }

  TEST_CASE("asymptotic ideals") {
    GradedSystemSpec g;
    g.kind = GradedSystemSpec::Kind::powers;
    g.base = M2;
    const auto r = asymptotic_nlc(g, Rational(3), {1, 2, 6});
    REQUIRE(r.maximal);
    CHECK(*r.maximal == power(M2, 2));
    CHECK(r.stabilized_at == 1);

    g.base = ideal(2, {{2, 0}, {0, 3}});
    const auto s = asymptotic_nlc(g, Rational(1), {1, 2});
    REQUIRE(s.terms.size() == 2);
    CHECK(s.terms[0].second == s.terms[1].second);

    GradedSystemSpec t;
    t.kind = GradedSystemSpec::Kind::ray_truncation;
    t.w0 = {1, 1};
    const auto u = asymptotic_nlc(t, Rational(3), {1, 2, 4, 8});
    CHECK(u.stabilized_at.has_value());
    // a_m a_l is contained in a_(m+l)
    for (long m = 1; m <= 3; ++m)
      for (long l = 1; l <= 3; ++l) CHECK(contained(product(t.member_at(m), t.member_at(l)), t.member_at(m + l)));
  }

  TEST_CASE("inclusion chain on a grid") {
    const auto a = ideal(2, {{2, 1}, {0, 3}, {4, 0}});
    for (long twice = 1; twice <= 8; ++twice) {
      const MonomialPair p{a, Rational(twice, 2)};
      CHECK(check_inclusion_chain_monomial(p, {Rational(1, 10), Rational(1, 3)}).verdict == Verdict::pass);
    }
  }
}
