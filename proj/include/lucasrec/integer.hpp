#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lucasrec {

/// Arbitrary-precision signed integer.
class Integer {
 public:
  using Rep = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;

  Integer() = default;
  template <std::integral I>
  Integer(I value) : rep_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(Rep rep) : rep_(std::move(rep)) {}

  /// Parses an optionally signed decimal string. Throws ParseError.
  static Integer parse(std::string_view text);

  std::string to_string() const { return rep_.str(); }
  const Rep& rep() const noexcept { return rep_; }

  int sign() const { return rep_.sign(); }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_odd() const { return boost::multiprecision::bit_test(rep_, 0); }

  /// Narrowing conversion; throws SizeLimit when the value does not fit.
  std::int64_t to_int64() const;

  Integer& operator+=(const Integer& o) { rep_ += o.rep_; return *this; }
  Integer& operator-=(const Integer& o) { rep_ -= o.rep_; return *this; }
  Integer& operator*=(const Integer& o) { rep_ *= o.rep_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator-(const Integer& a) { return Integer(Rep(-a.rep_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = a.rep_.compare(b.rep_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  Rep rep_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer pow(const Integer& base, std::uint64_t exponent);

/// Truncating division; throws DomainError on a zero divisor.
Integer quotient(const Integer& a, const Integer& b);
Integer remainder(const Integer& a, const Integer& b);

/// a / b where the caller asserts b | a. Throws DivisionNotExact otherwise.
Integer exact_div(const Integer& a, const Integer& b);

Integer factorial(std::uint64_t n);

/// Exact C(n, k); throws DomainError unless 0 <= k <= n.
Integer binomial(const Integer& n, const Integer& k);

}  // namespace lucasrec
