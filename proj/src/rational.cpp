#include "lucasrec/rational.hpp"

#include <ostream>

#include "lucasrec/error.hpp"

namespace lucasrec {

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorKind::DomainError, "zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != Integer(1)) {
    num_ = quotient(num_, g);
    den_ = quotient(den_, g);
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  Integer den = Integer::parse(text.substr(slash + 1));
  if (den.is_zero()) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(Integer::parse(text.substr(0, slash)), std::move(den));
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw Error(ErrorKind::DivisionNotExact, to_string() + " is not an integer");
  return num_;
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational& Rational::operator+=(const Rational& o) {
  if (is_integer() && o.is_integer()) {
    num_ += o.num_;
    return *this;
  }
  *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (is_integer() && o.is_integer()) {
    num_ *= o.num_;
    return *this;
  }
  *this = Rational(num_ * o.num_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DomainError, "division by zero");
  *this = Rational(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Rational pow(const Rational& base, std::uint64_t exponent) {
  return Rational(pow(base.numerator(), exponent), pow(base.denominator(), exponent));
}

Rational exact_div(const Rational& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionNotExact, "division by zero");
  return a / Rational(b);
}

}  // namespace lucasrec
