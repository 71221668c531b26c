#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "nlc/rational.hpp"

namespace nlc {

// A formal Q-divisor: a finite map from prime-divisor labels to nonzero
// rational coefficients. Zero coefficients are never stored, so two divisors
// are equal exactly when their maps are equal.
class CoeffDivisor {
 public:
  using Label = std::string;
  using Entries = std::map<Label, Rational>;

  CoeffDivisor() = default;
  CoeffDivisor(std::initializer_list<std::pair<const Label, Rational>> init);

  void set(const Label& label, const Rational& coeff);
  void add(const Label& label, const Rational& coeff);
  Rational coefficient(const Label& label) const;

  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  std::string str() const;

  friend bool operator==(const CoeffDivisor&, const CoeffDivisor&) = default;
  friend CoeffDivisor operator+(const CoeffDivisor& a, const CoeffDivisor& b);
  friend CoeffDivisor operator-(const CoeffDivisor& a, const CoeffDivisor& b);
  friend CoeffDivisor operator*(const Rational& s, const CoeffDivisor& d);

 private:
  Entries entries_;
};

CoeffDivisor round_up(const CoeffDivisor& d);
CoeffDivisor round_down(const CoeffDivisor& d);

struct DivisorParts {
  CoeffDivisor lt1;   // coefficients < 1
  CoeffDivisor eq1;   // coefficient exactly 1, stored as 1
  CoeffDivisor gt1;   // coefficients > 1
  CoeffDivisor frac;  // D - round_down(D)
};

DivisorParts parts(const CoeffDivisor& d);

// Order a regular function must have along a prime divisor whose pair
// coefficient is d, for the non-lc ideal: floor(d) when d > 1, else 0.
long nlc_exponent(const Rational& d);

// Same for the multiplier ideal: max(0, floor(d)). Differs from
// nlc_exponent only at d = 1.
long mult_exponent(const Rational& d);

}  // namespace nlc
