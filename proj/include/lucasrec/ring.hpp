#pragma once

#include <concepts>
#include <cstdint>

#include "lucasrec/error.hpp"
#include "lucasrec/integer.hpp"
#include "lucasrec/poly.hpp"
#include "lucasrec/rational.hpp"

namespace lucasrec {

// Ring-level predicates for the three coefficient domains.

inline bool is_zero(const Integer& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline bool is_zero(const Poly& a) { return a.is_zero(); }

/// True when the element lies in the integer subring (Z, or Z[c1..cd]).
inline bool is_integral(const Integer&) { return true; }
inline bool is_integral(const Rational& a) { return a.is_integer(); }
inline bool is_integral(const Poly& a) { return a.has_integer_coefficients(); }

/// Commutative ring with unit in which integers embed and in which division by
/// a nonzero integer is defined whenever the caller asserts it is exact.
template <class T>
concept CommutativeRing = std::regular<T> && std::constructible_from<T, Integer> &&
                          requires(const T& a, const T& b, const Integer& n) {
                            { a + b } -> std::same_as<T>;
                            { a - b } -> std::same_as<T>;
                            { a * b } -> std::same_as<T>;
                            { -a } -> std::same_as<T>;
                            { is_zero(a) } -> std::same_as<bool>;
                            { is_integral(a) } -> std::same_as<bool>;
                            { exact_div(a, n) } -> std::same_as<T>;
                          };

/// Domains where one element can be divided exactly by another: Integer
/// (divisibility asserted) and Rational. The polynomial ring is excluded.
template <class T>
concept ExactDivisionRing = CommutativeRing<T> && std::totally_ordered<T> &&
                            (std::same_as<T, Integer> || std::same_as<T, Rational>);

/// a / b in an ExactDivisionRing. Throws DivisionNotExact if b does not divide a.
inline Integer exact_quotient(const Integer& a, const Integer& b) { return exact_div(a, b); }
inline Rational exact_quotient(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionNotExact, "division by zero");
  return a / b;
}

template <CommutativeRing T>
T ring_pow(const T& base, std::uint64_t exponent) {
  T result(Integer(1));
  T square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

/// (-1)^e as a ring element.
template <CommutativeRing T>
T sign_power(std::uint64_t e) {
  return T(Integer(e % 2 == 0 ? 1 : -1));
}

static_assert(CommutativeRing<Integer>);
static_assert(CommutativeRing<Rational>);
static_assert(CommutativeRing<Poly>);

}  // namespace lucasrec
