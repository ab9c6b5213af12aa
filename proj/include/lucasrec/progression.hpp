#pragma once

#include <cstdint>
#include <vector>

#include "lucasrec/bell.hpp"
#include "lucasrec/error.hpp"
#include "lucasrec/lucas.hpp"
#include "lucasrec/recurrence.hpp"
#include "lucasrec/ring.hpp"

namespace lucasrec {

/// gamma_k = (1/k!) sum_{j=1}^k (-1)^{j+1} B_{k,j}(0! â_m, 1! â_{2m}, ..., (k-1)! â_{km}).
/// `hat` must already hold â_{km}.
template <CommutativeRing T>
T gamma_bell(const LucasTransform<T>& hat, std::uint64_t m, std::size_t k) {
  if (m == 0 || k == 0) throw Error(ErrorKind::DomainError, "gamma_bell requires m >= 1 and k >= 1");
  std::vector<T> args;
  args.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) args.push_back(T(factorial(i - 1)) * hat[i * m]);
  BellTriangle<T> bell(k, args);
  T sum(Integer(0));
  for (std::size_t j = 1; j <= k; ++j) {
    sum = (j % 2 == 1) ? sum + bell(k, j) : sum - bell(k, j);
  }
  return exact_div(sum, factorial(k));
}

/// gamma_d = (-1)^{(d+1)(m+1)} c_d^m.
template <CommutativeRing T>
T gamma_last(const CoeffVector<T>& coeffs, std::uint64_t m) {
  const std::uint64_t d = coeffs.order();
  return sign_power<T>((d + 1) * (m + 1)) * ring_pow(coeffs.c(d), m);
}

/// Coefficients of the order-d recurrence obeyed by every (a_{mn+r})_n.
///
/// gamma_1..gamma_{d-1} come from the Bell formula and need only
/// â_m..â_{(d-1)m}; gamma_d uses its closed form. When the input coefficients
/// are integral the results must be too, otherwise DivisionNotExact is thrown.
template <CommutativeRing T>
GammaVector<T> gamma_coefficients(const CoeffVector<T>& coeffs, std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::DomainError, "gamma_coefficients requires m >= 1");
  const std::size_t d = coeffs.order();
  LucasTransform<T> hat = lucas_transform(coeffs, (d - 1) * m);
  GammaVector<T> out{m, {}};
  out.gamma.reserve(d);
  for (std::size_t k = 1; k < d; ++k) out.gamma.push_back(gamma_bell(hat, m, k));
  out.gamma.push_back(gamma_last(coeffs, m));

  if (coeffs.is_integral()) {
    for (std::size_t k = 1; k <= d; ++k) {
      if (!is_integral(out[k])) {
        throw Error(ErrorKind::DivisionNotExact, "gamma_" + std::to_string(k) + " is not integral");
      }
    }
  }
  return out;
}

/// The subsequence b_n = a_{mn+r} as a recurrence in its own right.
template <CommutativeRing T>
struct SubsequenceRecurrence {
  GammaVector<T> gamma;
  std::uint64_t r = 0;
  std::vector<T> initial;  // b_0..b_{d-1}

  RecurrenceSpec<T> spec() const { return RecurrenceSpec<T>(CoeffVector<T>(gamma.gamma), initial); }
};

template <CommutativeRing T>
SubsequenceRecurrence<T> subseq_recurrence(const RecurrenceSpec<T>& spec, std::uint64_t m, std::uint64_t r) {
  SubsequenceRecurrence<T> out{gamma_coefficients(spec.coeffs, m), r, {}};
  const std::size_t d = spec.order();
  for (std::size_t n = 0; n < d; ++n) out.initial.push_back(seq_eval(spec, m * n + r));
  return out;
}

/// Rebuilds â_{m}, â_{2m}, ..., â_{Nm} from gamma alone, using
/// (n-1)! â_{mn} = sum_k (k-1)! B_{n,k}(1! gamma_1, ..., d! gamma_d, 0, ...).
template <CommutativeRing T>
std::vector<T> hat_from_gamma(const GammaVector<T>& gamma, std::size_t N) {
  if (N == 0) throw Error(ErrorKind::DomainError, "hat_from_gamma requires N >= 1");
  std::vector<T> args;
  for (std::size_t i = 1; i <= gamma.order(); ++i) args.push_back(T(factorial(i)) * gamma[i]);
  BellTriangle<T> bell(N, args);
  std::vector<T> out;
  out.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    T sum(Integer(0));
    for (std::size_t k = 1; k <= n; ++k) sum = sum + T(factorial(k - 1)) * bell(n, k);
    out.push_back(exact_div(sum, factorial(n - 1)));
  }
  return out;
}

}  // namespace lucasrec
