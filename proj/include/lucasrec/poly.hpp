#pragma once

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lucasrec/integer.hpp"
#include "lucasrec/rational.hpp"

namespace lucasrec {

/// Sparse polynomial in c1..cd with rational coefficients.
///
/// Terms are kept in graded-lexicographic order, highest first, so iteration
/// and serialization are deterministic. Zero coefficients are never stored.
/// A polynomial built from a constant has no bound variables; combining it
/// with a d-variable polynomial pads its exponent vectors to length d.
class Poly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(const Integer& constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Poly(I constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  /// The indeterminate c_{index+1} in a ring of `nvars` variables.
  static Poly variable(std::size_t nvars, std::size_t index);

  /// Builds from raw terms; like exponents are merged and zeros dropped.
  /// Throws DomainError when an exponent vector's length differs from nvars.
  static Poly from_terms(std::size_t nvars, const std::vector<std::pair<Exponents, Rational>>& terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint32_t total_degree() const;
  bool has_integer_coefficients() const;

  /// Substitutes c_i = point[i-1]. Throws DomainError if point is too short.
  Rational evaluate(std::span<const Rational> point) const;

  /// Human-readable form such as "c1^2 + 2*c2 - 1/2".
  std::string to_string() const;

  /// Same polynomial viewed in a ring with more variables.
  Poly with_nvars(std::size_t nvars) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(const Poly& a);

  friend bool operator==(const Poly& a, const Poly& b);

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

  /// Divides every coefficient by a nonzero integer.
  friend Poly exact_div(const Poly& a, const Integer& b);

 private:
  void add_term(const Exponents& e, const Rational& coeff);

  std::size_t nvars_ = 0;
  TermMap terms_;
};

Poly pow(const Poly& base, std::uint64_t exponent);

}  // namespace lucasrec
