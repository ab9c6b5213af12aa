#include "lucasrec/integer.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "lucasrec/error.hpp"

namespace lucasrec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionNotExact: return "DivisionNotExact";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InvalidCoeffs: return "InvalidCoeffs";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::DegenerateDivisor: return "DegenerateDivisor";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

Integer Integer::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw Error(ErrorKind::ParseError, "not a decimal integer: '" + std::string(text) + "'");
  }
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  Rep value{std::string(digits)};
  if (text.front() == '-') value = -value;
  return Integer(std::move(value));
}

std::int64_t Integer::to_int64() const {
  if (rep_ > std::numeric_limits<std::int64_t>::max() ||
      rep_ < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::SizeLimit, "integer does not fit in 64 bits");
  }
  return rep_.convert_to<std::int64_t>();
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  return Integer(Integer::Rep(boost::multiprecision::gcd(a.rep(), b.rep())));
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  Integer result(1);
  Integer square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

Integer quotient(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::DomainError, "division by zero");
  return Integer(Integer::Rep(a.rep() / b.rep()));
}

Integer remainder(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::DomainError, "division by zero");
  return Integer(Integer::Rep(a.rep() % b.rep()));
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionNotExact, "division by zero");
  Integer::Rep q;
  Integer::Rep r;
  boost::multiprecision::divide_qr(a.rep(), b.rep(), q, r);
  if (!r.is_zero()) {
    throw Error(ErrorKind::DivisionNotExact, b.to_string() + " does not divide " + a.to_string());
  }
  return Integer(std::move(q));
}

Integer factorial(std::uint64_t n) {
  Integer result(1);
  for (std::uint64_t i = 2; i <= n; ++i) result *= Integer(i);
  return result;
}

Integer binomial(const Integer& n, const Integer& k) {
  if (k.sign() < 0 || k > n) {
    throw Error(ErrorKind::DomainError,
                "binomial(" + n.to_string() + ", " + k.to_string() + ") requires 0 <= k <= n");
  }
  Integer lower = std::min(k, n - k);
  std::int64_t steps = lower.to_int64();
  Integer result(1);
  // After step i the running value is C(n - lower + i, i), so each division is exact.
  Integer top = n - lower;
  for (std::int64_t i = 1; i <= steps; ++i) {
    result = exact_div(result * (top + Integer(i)), Integer(i));
  }
  return result;
}

}  // namespace lucasrec
