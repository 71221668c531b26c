#include "nlc/divisor.hpp"

namespace nlc {

CoeffDivisor::CoeffDivisor(
    std::initializer_list<std::pair<const Label, Rational>> init) {
  for (const auto& [label, coeff] : init) add(label, coeff);
}

void CoeffDivisor::set(const Label& label, const Rational& coeff) {
  if (coeff.is_zero()) {
    entries_.erase(label);
  } else {
    entries_[label] = coeff;
  }
}

void CoeffDivisor::add(const Label& label, const Rational& coeff) {
  set(label, coefficient(label) + coeff);
}

Rational CoeffDivisor::coefficient(const Label& label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? Rational(0) : it->second;
}

std::string CoeffDivisor::str() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& [label, coeff] : entries_) {
    if (!out.empty()) out += " + ";
    out += coeff.str() + "*" + label;
  }
  return out;
}

CoeffDivisor operator+(const CoeffDivisor& a, const CoeffDivisor& b) {
  CoeffDivisor out = a;
  for (const auto& [label, coeff] : b.entries_) out.add(label, coeff);
  return out;
}

CoeffDivisor operator-(const CoeffDivisor& a, const CoeffDivisor& b) {
  CoeffDivisor out = a;
  for (const auto& [label, coeff] : b.entries_) out.add(label, -coeff);
  return out;
}

CoeffDivisor operator*(const Rational& s, const CoeffDivisor& d) {
  CoeffDivisor out;
  for (const auto& [label, coeff] : d.entries_) out.set(label, s * coeff);
  return out;
}

CoeffDivisor round_up(const CoeffDivisor& d) {
  CoeffDivisor out;
  for (const auto& [label, coeff] : d.entries()) out.set(label, coeff.ceil());
  return out;
}

CoeffDivisor round_down(const CoeffDivisor& d) {
  CoeffDivisor out;
  for (const auto& [label, coeff] : d.entries()) out.set(label, coeff.floor());
  return out;
}

DivisorParts parts(const CoeffDivisor& d) {
  DivisorParts p;
  const Rational one(1);
  for (const auto& [label, coeff] : d.entries()) {
    if (coeff < one) {
      p.lt1.set(label, coeff);
    } else if (coeff == one) {
      p.eq1.set(label, one);
    } else {
      p.gt1.set(label, coeff);
    }
  }
  p.frac = d - round_down(d);
  return p;
}

long nlc_exponent(const Rational& d) {
  if (d > Rational(1)) return to_long(d.floor());
  return 0;
}

long mult_exponent(const Rational& d) {
  if (d.sign() <= 0) return 0;
  return to_long(d.floor());
}

}  // namespace nlc
