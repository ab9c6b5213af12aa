#include "lucasrec/lucas.hpp"

#include <regex>

namespace lucasrec {
namespace {

Integer binomial_or_zero(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  return binomial(Integer(n), Integer(k));
}

// m/(m - j) * C(...) terms are individually fractional; only the sum is integral.
Rational weight(std::int64_t m, std::int64_t denominator) { return Rational(Integer(m), Integer(denominator)); }

}  // namespace

Family Family::parse(const std::string& name) {
  static const std::regex kFib(R"(k_?fibonacci\((\d{1,3})\))");
  std::smatch match;
  if (std::regex_match(name, match, kFib)) {
    auto k = static_cast<std::uint32_t>(std::stoul(match[1]));
    if (k < 1) throw Error(ErrorKind::UnknownFamily, "k-Fibonacci requires k >= 1");
    return Family{FamilyKind::KFibonacci, k};
  }
  if (name == "tribonacci") return Family{FamilyKind::Tribonacci};
  if (name == "padovan") return Family{FamilyKind::Padovan};
  if (name == "narayana") return Family{FamilyKind::Narayana};
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + name + "'");
}

CoeffVector<Integer> Family::coeffs() const {
  switch (kind) {
    case FamilyKind::KFibonacci: return CoeffVector<Integer>({Integer(k), Integer(1)});
    case FamilyKind::Tribonacci: return CoeffVector<Integer>({1, 1, 1});
    case FamilyKind::Padovan: return CoeffVector<Integer>({0, 1, 1});
    case FamilyKind::Narayana: return CoeffVector<Integer>({1, 0, 1});
  }
  throw Error(ErrorKind::UnknownFamily, "unknown family");
}

std::string Family::name() const {
  switch (kind) {
    case FamilyKind::KFibonacci: return "k_fibonacci(" + std::to_string(k) + ")";
    case FamilyKind::Tribonacci: return "tribonacci";
    case FamilyKind::Padovan: return "padovan";
    case FamilyKind::Narayana: return "narayana";
  }
  return "unknown";
}

Integer hat_closed_form(const Family& family, std::uint64_t m_unsigned) {
  if (m_unsigned == 0) throw Error(ErrorKind::DomainError, "hat_closed_form requires m >= 1");
  const auto m = static_cast<std::int64_t>(m_unsigned);
  Rational sum;
  switch (family.kind) {
    case FamilyKind::KFibonacci: {
      const Integer k(family.k);
      for (std::int64_t j = 0; 2 * j <= m && j < m; ++j) {
        sum += weight(m, m - j) * Rational(binomial_or_zero(m - j, j) *
                                           pow(k, static_cast<std::uint64_t>(m - 2 * j)));
      }
      break;
    }
    case FamilyKind::Tribonacci:
      for (std::int64_t j = 0; j < m; ++j) {
        for (std::int64_t l = (j + 1) / 2; l <= j; ++l) {
          sum += weight(m, m - j) * Rational(binomial_or_zero(m - j, l) * binomial_or_zero(l, j - l));
        }
      }
      break;
    case FamilyKind::Padovan:
      for (std::int64_t j = (m + 1) / 2; j < m; ++j) {
        sum += weight(m, m - j) * Rational(binomial_or_zero(m - j, 2 * j - m));
      }
      break;
    case FamilyKind::Narayana:
      for (std::int64_t j = 0; 2 * j <= m - 1; ++j) {
        sum += weight(m, m - 2 * j) * Rational(binomial_or_zero(m - 2 * j, j));
      }
      break;
  }
  return sum.to_integer();
}

}  // namespace lucasrec
