#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lucasrec/integer.hpp"

namespace lucasrec {

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Rational(I value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer numerator, Integer denominator);

  /// Accepts "n" or "p/q" with optional sign. Throws ParseError.
  static Rational parse(std::string_view text);

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_integer() const { return den_ == Integer(1); }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  /// Throws DivisionNotExact when the value is not integral.
  Integer to_integer() const;

  /// "n" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, Normalized{}); }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  struct Normalized {};
  Rational(Integer n, Integer d, Normalized) : num_(std::move(n)), den_(std::move(d)) {}

  Integer num_;
  Integer den_;
};

Rational pow(const Rational& base, std::uint64_t exponent);

/// Division by a nonzero integer; always exact in the field.
Rational exact_div(const Rational& a, const Integer& b);

}  // namespace lucasrec
