#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lucasrec/bell.hpp"
#include "lucasrec/error.hpp"
#include "lucasrec/recurrence.hpp"
#include "lucasrec/ring.hpp"

namespace lucasrec {

/// The power sums â_n = sum_j alpha_j^n of the characteristic roots, kept
/// root-free: â_0 = d and (â_n) obeys the same recurrence as the sequence.
template <CommutativeRing T>
class LucasTransform {
 public:
  LucasTransform(CoeffVector<T> coeffs, std::vector<T> terms)
      : coeffs_(std::move(coeffs)), terms_(std::move(terms)) {}

  const CoeffVector<T>& coeffs() const noexcept { return coeffs_; }
  const std::vector<T>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  const T& operator[](std::size_t n) const {
    if (n >= terms_.size()) throw Error(ErrorKind::DomainError, "Lucas transform index out of range");
    return terms_[n];
  }

  /// A copy holding â_0..â_N (no-op if already long enough).
  LucasTransform extended(std::size_t N) const {
    LucasTransform out = *this;
    if (N + 1 > out.terms_.size()) extend_terms(out.coeffs_, out.terms_, N + 1);
    return out;
  }

 private:
  CoeffVector<T> coeffs_;
  std::vector<T> terms_;
};

/// â_0..â_N via Newton's identities for n <= d, then the recurrence.
template <CommutativeRing T>
LucasTransform<T> lucas_transform(const CoeffVector<T>& coeffs, std::size_t N) {
  const std::size_t d = coeffs.order();
  std::vector<T> hat;
  hat.reserve(N + 1);
  hat.emplace_back(Integer(d));
  for (std::size_t n = 1; n <= std::min(N, d); ++n) {
    T value = T(Integer(n)) * coeffs.c(n);
    for (std::size_t i = 1; i < n; ++i) value = value + coeffs.c(i) * hat[n - i];
    hat.push_back(std::move(value));
  }
  extend_terms(coeffs, hat, N + 1);
  return LucasTransform<T>(coeffs, std::move(hat));
}

/// â_n = sum_k (k-1)!/(n-1)! B_{n,k}(1! c1, 2! c2, ..., d! cd, 0, ...).
template <CommutativeRing T>
T lucas_transform_bell(const CoeffVector<T>& coeffs, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::DomainError, "lucas_transform_bell requires n >= 1");
  std::vector<T> args;
  for (std::size_t i = 1; i <= coeffs.order(); ++i) args.push_back(T(factorial(i)) * coeffs.c(i));
  BellTriangle<T> bell(n, args);
  T sum(Integer(0));
  for (std::size_t k = 1; k <= n; ++k) sum = sum + T(factorial(k - 1)) * bell(n, k);
  return exact_div(sum, factorial(n - 1));
}

enum class FamilyKind { KFibonacci, Tribonacci, Padovan, Narayana };

/// A recurrence family with a known single- or double-sum formula for â_m.
struct Family {
  FamilyKind kind;
  std::uint32_t k = 1;  // only meaningful for KFibonacci

  /// "k_fibonacci(3)", "tribonacci", "padovan", "narayana". Throws UnknownFamily.
  static Family parse(const std::string& name);

  CoeffVector<Integer> coeffs() const;
  std::string name() const;
};

/// Evaluates the family's closed-form sum for â_m (m >= 1).
Integer hat_closed_form(const Family& family, std::uint64_t m);

}  // namespace lucasrec
