#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "lucasrec/error.hpp"
#include "lucasrec/matrix.hpp"
#include "lucasrec/rational.hpp"
#include "lucasrec/recurrence.hpp"
#include "lucasrec/ring.hpp"

namespace lucasrec {

/// det(tI - M) as coefficients p_0..p_d of t^0..t^d; monic.
template <CommutativeRing T>
struct CharPoly {
  std::vector<T> coefficients;

  std::size_t degree() const noexcept { return coefficients.size() - 1; }
  const T& operator[](std::size_t power) const { return coefficients.at(power); }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Berkowitz's division-free characteristic polynomial.
///
/// Works over any commutative ring. For the leading (r+1)x(r+1) block the
/// polynomial is T_r * (polynomial of the leading r x r block), where T_r is
/// the lower-triangular Toeplitz matrix with first column
/// (1, -a_rr, -S R, -S M R, ..., -S M^{r-1} R).
template <CommutativeRing T>
CharPoly<T> char_poly(const Matrix<T>& m) {
  const std::size_t n = m.size();
  const T zero(Integer(0));
  const T one(Integer(1));
  if (n == 0) return CharPoly<T>{{one}};

  std::vector<T> v{one, -m(0, 0)};  // highest power first
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<T> column{one, -m(r, r)};
    std::vector<T> x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = m(i, r);
    for (std::size_t step = 0; step < r; ++step) {
      T dot = zero;
      for (std::size_t i = 0; i < r; ++i) dot = dot + m(r, i) * x[i];
      column.push_back(-dot);
      if (step + 1 < r) {
        std::vector<T> next(r, zero);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) next[i] = next[i] + m(i, j) * x[j];
        }
        x = std::move(next);
      }
    }
    std::vector<T> w(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] = w[i] + column[i - j] * v[j];
    }
    v = std::move(w);
  }
  return CharPoly<T>{{v.rbegin(), v.rend()}};
}

/// gamma_k = (-1)^{k+1} e_k(alpha_1^m, ..., alpha_d^m), read off charpoly(C^m)
/// without ever touching the roots.
template <CommutativeRing T>
GammaVector<T> char_poly_of_power(const CoeffVector<T>& coeffs, std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::DomainError, "char_poly_of_power requires m >= 1");
  const std::size_t d = coeffs.order();
  CharPoly<T> p = char_poly(mat_pow(companion(coeffs), m));
  GammaVector<T> out{m, {}};
  for (std::size_t k = 1; k <= d; ++k) out.gamma.push_back(-p[d - k]);
  return out;
}

struct RecurrenceReport {
  std::size_t checked = 0;
  std::vector<std::size_t> violations;

  bool verified() const noexcept { return violations.empty(); }
};

/// Lists every n >= from with terms[n] != sum_k gamma_k terms[n-k].
template <CommutativeRing T>
RecurrenceReport verify_recurrence(std::span<const T> terms, std::span<const T> gamma, std::size_t from) {
  if (from < gamma.size()) throw Error(ErrorKind::DomainError, "verify_recurrence requires from >= order");
  RecurrenceReport report;
  for (std::size_t n = from; n < terms.size(); ++n) {
    T expected(Integer(0));
    for (std::size_t k = 1; k <= gamma.size(); ++k) expected = expected + gamma[k - 1] * terms[n - k];
    ++report.checked;
    if (expected != terms[n]) report.violations.push_back(n);
  }
  return report;
}

enum class FitStatus { Unique, Underdetermined };

struct RecurrenceFit {
  FitStatus status = FitStatus::Unique;
  std::vector<Rational> coeffs;                     // empty unless Unique
  std::vector<std::size_t> remainder_violations;    // indices n >= 2d that disagree
};

/// Solves terms[n] = sum_k g_k terms[n-k] on d <= n < 2d by exact elimination.
/// Throws NoSolution when that window is inconsistent.
RecurrenceFit fit_recurrence(std::span<const Rational> terms, std::size_t d);

}  // namespace lucasrec
