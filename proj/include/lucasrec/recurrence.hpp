#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lucasrec/error.hpp"
#include "lucasrec/matrix.hpp"
#include "lucasrec/ring.hpp"

namespace lucasrec {

/// Coefficients c1..cd of a_n = c1 a_{n-1} + ... + cd a_{n-d}, with cd != 0.
template <CommutativeRing T>
class CoeffVector {
 public:
  CoeffVector() = default;
  explicit CoeffVector(std::vector<T> c) : c_(std::move(c)) {
    if (c_.empty()) throw Error(ErrorKind::InvalidCoeffs, "recurrence order must be at least 1");
    if (is_zero(c_.back())) throw Error(ErrorKind::InvalidCoeffs, "leading coefficient c_d is zero");
  }

  std::size_t order() const noexcept { return c_.size(); }

  /// 1-based access, c(k) for 1 <= k <= d; zero outside that range.
  T c(std::size_t k) const { return (k >= 1 && k <= c_.size()) ? c_[k - 1] : T(Integer(0)); }

  std::span<const T> values() const noexcept { return c_; }

  bool is_integral() const {
    for (const auto& v : c_) {
      if (!lucasrec::is_integral(v)) return false;
    }
    return true;
  }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  std::vector<T> c_;
};

/// A recurrence together with its d initial values a0..a_{d-1}.
template <CommutativeRing T>
struct RecurrenceSpec {
  CoeffVector<T> coeffs;
  std::vector<T> initial;

  RecurrenceSpec() = default;
  RecurrenceSpec(CoeffVector<T> c, std::vector<T> init) : coeffs(std::move(c)), initial(std::move(init)) {
    if (initial.size() != coeffs.order()) {
      throw Error(ErrorKind::InvalidCoeffs, "expected " + std::to_string(coeffs.order()) +
                                                " initial values, got " + std::to_string(initial.size()));
    }
  }

  std::size_t order() const noexcept { return coeffs.order(); }

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

/// Extends `terms` in place by the recurrence until it holds `count` entries.
template <CommutativeRing T>
void extend_terms(const CoeffVector<T>& coeffs, std::vector<T>& terms, std::size_t count) {
  const std::size_t d = coeffs.order();
  auto c = coeffs.values();
  terms.reserve(count);
  while (terms.size() < count) {
    const std::size_t n = terms.size();
    T next(Integer(0));
    for (std::size_t k = 1; k <= d; ++k) {
      if (!is_zero(c[k - 1])) next = next + c[k - 1] * terms[n - k];
    }
    terms.push_back(std::move(next));
  }
}

/// Companion matrix: top row (c1..cd), ones on the subdiagonal.
template <CommutativeRing T>
Matrix<T> companion(const CoeffVector<T>& coeffs) {
  const std::size_t d = coeffs.order();
  Matrix<T> m(d);
  for (std::size_t j = 0; j < d; ++j) m(0, j) = coeffs.values()[j];
  for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = T(Integer(1));
  return m;
}

/// a_{n0}..a_{n1} inclusive, by forward iteration.
template <CommutativeRing T>
std::vector<T> seq_range(const RecurrenceSpec<T>& spec, std::uint64_t n0, std::uint64_t n1) {
  if (n1 < n0) return {};
  std::vector<T> terms = spec.initial;
  extend_terms(spec.coeffs, terms, static_cast<std::size_t>(n1 + 1));
  return {terms.begin() + static_cast<std::ptrdiff_t>(n0), terms.begin() + static_cast<std::ptrdiff_t>(n1 + 1)};
}

/// Indices at or above this go through the companion-matrix power.
inline constexpr std::uint64_t kMatrixPowerThreshold = 2048;

/// a_n; large n is evaluated in O(d^3 log n) ring operations.
template <CommutativeRing T>
T seq_eval(const RecurrenceSpec<T>& spec, std::uint64_t n) {
  const std::size_t d = spec.order();
  if (n < d) return spec.initial[n];
  if (n < kMatrixPowerThreshold) return seq_range(spec, n, n).front();
  // State (a_{k+d-1}, ..., a_k); C maps the state at k to the state at k+1.
  std::vector<T> state(spec.initial.rbegin(), spec.initial.rend());
  auto power = mat_pow(companion(spec.coeffs), n - (d - 1));
  return power.apply(state).front();
}

}  // namespace lucasrec

namespace lucasrec {

/// Coefficients gamma_1..gamma_d of the recurrence obeyed by (a_{mn+r})_n.
template <CommutativeRing T>
struct GammaVector {
  std::uint64_t m = 1;
  std::vector<T> gamma;

  std::size_t order() const noexcept { return gamma.size(); }
  const T& operator[](std::size_t k) const { return gamma.at(k - 1); }  // 1-based

  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

}  // namespace lucasrec
