#include "nlc/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "nlc/errors.hpp"

namespace nlc {

Rational::Rational(long long n) : value_(Integer(std::to_string(n))) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  value_ /= o.value_;
  return *this;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

long Rational::to_long() const {
  if (!is_integer()) throw std::overflow_error("rational is not an integer");
  return nlc::to_long(value_.get_num());
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  skip_ws();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string num = read_digits();
  if (num.empty()) throw ParseError("expected integer", pos);
  if (pos < text.size() && (text[pos] == '.' || text[pos] == 'e' || text[pos] == 'E')) {
    throw NonRationalLiteral("decimal literals are not accepted; write p/q", pos);
  }
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_digits();
    if (den.empty()) throw ParseError("expected denominator", pos);
    if (pos < text.size() && text[pos] == '.') {
      throw NonRationalLiteral("decimal literals are not accepted; write p/q", pos);
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  Integer n(num), d(den);
  if (d == 0) throw ParseError("zero denominator", pos);
  if (negative) n = -n;
  return Rational(n, d);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
  return z.get_si();
}

}  // namespace nlc
