#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlc/curve.hpp"
#include "nlc/json_io.hpp"
#include "nlc/monomial.hpp"

namespace nlc {

enum class Verdict { pass, fail, skip };

struct TrialReport {
  std::string property;
  std::uint64_t seed = 0;
  Json instance = Json::object();
  Verdict verdict = Verdict::pass;
  std::string reason;              // skip reason or failure summary
  Json witness = Json::object();   // populated on failure
};

struct CheckReport {
  std::string property;
  std::size_t trials = 0;
  std::size_t skipped = 0;
  std::vector<TrialReport> failures;
  double elapsed_ms = 0;
  bool passed() const { return failures.empty(); }
  // {property, trials, failures: [{seed, instance, witness}], elapsed_ms}
  Json to_json(bool include_timing = true) const;
};

enum class Family { concurrent_lines, generic_lines, cusp_family, monomial_2var, monomial_3var };

std::string family_name(Family f);

struct InstanceGenConfig {
  std::uint64_t seed = 1;
  Family family = Family::concurrent_lines;
  std::vector<Rational> pool{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  int size = 4;        // lines, or maximum number of monomial generators
  int max_degree = 6;  // monomial generator degree
  int k = 0;           // cusp exponent; 0 picks one from the seed
};

struct Instance {
  std::optional<CurveDivisor> curve;
  std::optional<MonomialIdealGens> monomial;
  Json descriptor;
};

Instance generate(const InstanceGenConfig& config);

// Membership decided by enumerating primitive rays with entries <= H.
bool oracle_monomial_member(const Exponent& v, const MonomialPair& p, long H, IdealKind kind = IdealKind::nlc);
// min over rays with entries <= H of |w| / ord_w(a)
Rational oracle_lct(const MonomialIdealGens& a, long H);

TrialReport check_resolution_independence(const CurveDivisor& delta, int n_variants, int degree,
                                          std::uint64_t seed = 1);
TrialReport check_restriction(const PlaneCurve& line, const CurveDivisor& b, int degree);
TrialReport check_subadditivity_monomial(const MonomialIdealGens& a, const MonomialIdealGens& b, const Rational& c,
                                         const Rational& d);
TrialReport check_jumping_monomial(const MonomialIdealGens& a, const Rational& c_max, int samples);
TrialReport check_jumping_curve(const CurveDivisor& delta, const Rational& c_max, int samples, int degree);
TrialReport check_inclusion_chain(const CurveDivisor& delta, const std::vector<Rational>& eps, int degree);
TrialReport check_inclusion_chain_monomial(const MonomialPair& p, const std::vector<Rational>& eps);
TrialReport check_inversion_adjunction(const PlaneCurve& line, const CurveDivisor& b);
TrialReport check_lc_center_criterion(const CurveDivisor& delta, int degree);
TrialReport check_small_multiplicity(const CurveDivisor& delta);
TrialReport check_oracle_agreement(const MonomialPair& p, const Exponent& v, long H_low, long H_high);

// Seeded corpora.
CurveDivisor corpus_curve(std::uint64_t seed);
struct RestrictionInstance {
  PlaneCurve line;
  CurveDivisor b;
  Json descriptor;
};
RestrictionInstance corpus_restriction(std::uint64_t seed);
struct OracleQuery {
  MonomialPair pair;
  Exponent v;
};
OracleQuery corpus_oracle_query(std::uint64_t seed);

std::vector<std::string> property_names();
// Runs `trials` trials with seeds first_seed, first_seed + 1, ...
CheckReport run_property(const std::string& property, std::size_t trials, std::uint64_t first_seed, int degree = 8);

}  // namespace nlc
