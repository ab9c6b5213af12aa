#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lucasrec/error.hpp"
#include "lucasrec/progression.hpp"
#include "lucasrec/recurrence.hpp"
#include "lucasrec/ring.hpp"

namespace lucasrec {

/// q(1) = 1 - c1 - ... - cd.
template <CommutativeRing T>
T q_at_one(const CoeffVector<T>& coeffs) {
  T q(Integer(1));
  for (const auto& c : coeffs.values()) q = q - c;
  return q;
}

/// w_j = sum_{i=0}^{d-1-j} c_i with c_0 = -1, for j = 0..d-1.
template <CommutativeRing T>
std::vector<T> sum_weights(const CoeffVector<T>& coeffs) {
  const std::size_t d = coeffs.order();
  std::vector<T> w(d, T(Integer(0)));
  T running(Integer(-1));
  // w_{d-1} = c_0, w_{d-2} = c_0 + c_1, ...
  for (std::size_t j = d; j-- > 0;) {
    w[j] = running;
    running = running + coeffs.c(d - j);
  }
  return w;
}

/// divisor * sum_{j=0}^n a_j = sum_j weights[j] a_{n+j+1} + constant, for all n >= 0.
template <CommutativeRing T>
struct SumClosedForm {
  T divisor;
  std::vector<T> weights;
  T constant;

  friend bool operator==(const SumClosedForm&, const SumClosedForm&) = default;
};

template <CommutativeRing T>
SumClosedForm<T> sum_closed_form(const RecurrenceSpec<T>& spec) {
  SumClosedForm<T> form{q_at_one(spec.coeffs), sum_weights(spec.coeffs), T(Integer(0))};
  for (std::size_t j = 0; j < spec.order(); ++j) form.constant = form.constant - form.weights[j] * spec.initial[j];
  return form;
}

/// The sequence with generating function 1/q(t): y_0 = 1, y_n = sum_{i=1}^n c_i y_{n-i}.
template <CommutativeRing T>
RecurrenceSpec<T> invert_transform_spec(const CoeffVector<T>& coeffs) {
  std::vector<T> y{T(Integer(1))};
  for (std::size_t n = 1; n < coeffs.order(); ++n) {
    T value(Integer(0));
    for (std::size_t i = 1; i <= n; ++i) value = value + coeffs.c(i) * y[n - i];
    y.push_back(std::move(value));
  }
  return RecurrenceSpec<T>(coeffs, std::move(y));
}

template <CommutativeRing T>
struct IdentityCheck {
  T lhs;
  T rhs;

  bool holds() const { return lhs == rhs; }
};

/// Both sides of q(1) sum_{j<=n} y_j = 1 + sum_j w_j y_{n+j+1}; they agree even when q(1) = 0.
template <CommutativeRing T>
IdentityCheck<T> invert_partial_sum(const CoeffVector<T>& coeffs, std::uint64_t n) {
  const std::size_t d = coeffs.order();
  auto y = seq_range(invert_transform_spec(coeffs), 0, n + d);
  T partial(Integer(0));
  for (std::uint64_t j = 0; j <= n; ++j) partial = partial + y[j];
  auto w = sum_weights(coeffs);
  T rhs(Integer(1));
  for (std::size_t j = 0; j < d; ++j) rhs = rhs + w[j] * y[n + j + 1];
  return {q_at_one(coeffs) * partial, std::move(rhs)};
}

template <CommutativeRing T>
struct LambdaDecomposition {
  std::vector<T> lambdas;  // coordinates in the basis y^(0)..y^(d-1)
  T sum;
};

/// lambda_0 = a_0, lambda_n = a_n - sum_{j=1}^n c_j a_{n-j}.
template <CommutativeRing T>
LambdaDecomposition<T> lambda_decompose(const RecurrenceSpec<T>& spec) {
  LambdaDecomposition<T> out{{}, T(Integer(0))};
  for (std::size_t n = 0; n < spec.order(); ++n) {
    T value = spec.initial[n];
    for (std::size_t j = 1; j <= n; ++j) value = value - spec.coeffs.c(j) * spec.initial[n - j];
    out.sum = out.sum + value;
    out.lambdas.push_back(std::move(value));
  }
  return out;
}

namespace detail {

template <ExactDivisionRing T>
T solve_closed_form(const SumClosedForm<T>& form, const std::vector<T>& lookahead, const char* divisor_name) {
  if (is_zero(form.divisor)) {
    throw Error(ErrorKind::DegenerateDivisor,
                std::string(divisor_name) + " = 0; the closed form cannot be solved for the sum");
  }
  T numerator = form.constant;
  for (std::size_t j = 0; j < form.weights.size(); ++j) numerator = numerator + form.weights[j] * lookahead[j];
  return exact_quotient(numerator, form.divisor);
}

}  // namespace detail

/// sum_{j=0}^n a_j from the d look-ahead terms a_{n+1}..a_{n+d}.
template <ExactDivisionRing T>
T partial_sum_closed(const RecurrenceSpec<T>& spec, std::uint64_t n) {
  return detail::solve_closed_form(sum_closed_form(spec), seq_range(spec, n + 1, n + spec.order()), "q(1)");
}

/// sum_{j=0}^n a_{mj+r}, by applying the partial-sum closed form to the
/// derived subsequence recurrence.
template <ExactDivisionRing T>
T progression_sum(const RecurrenceSpec<T>& spec, std::uint64_t m, std::uint64_t r, std::uint64_t n) {
  auto sub = subseq_recurrence(spec, m, r);
  std::vector<T> lookahead;
  for (std::size_t j = 0; j < spec.order(); ++j) lookahead.push_back(seq_eval(spec, m * (n + j + 1) + r));
  return detail::solve_closed_form(sum_closed_form(sub.spec()), lookahead, "qhat(1)");
}

/// rho with a_{N+s} = sum_{i<d} rho_i a_{N+i} for every N >= 0 (t^s mod the
/// reversed characteristic polynomial).
template <CommutativeRing T>
std::vector<T> shift_reduction(const CoeffVector<T>& coeffs, std::uint64_t s) {
  const std::size_t d = coeffs.order();
  std::vector<T> rho(d, T(Integer(0)));
  if (s < d) {
    rho[s] = T(Integer(1));
    return rho;
  }
  rho[d - 1] = T(Integer(1));
  for (std::uint64_t step = d - 1; step < s; ++step) {
    T top = rho[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) rho[i] = rho[i - 1] + top * coeffs.c(d - i);
    rho[0] = top * coeffs.c(d);
  }
  return rho;
}

/// divisor * sum_{j=0}^n a_{mj+r} = sum_i window[i] a_{mn+r+i} + constant, for all n >= 0.
template <CommutativeRing T>
struct WindowForm {
  std::uint64_t m = 1;
  std::uint64_t r = 0;
  T divisor;
  std::vector<T> window;
  T constant;

  friend bool operator==(const WindowForm&, const WindowForm&) = default;
};

/// Progression sum rewritten over the d consecutive terms starting at a_{mn+r}.
/// Over Integer and Rational the divisor is made positive; over Integer the
/// common content is also divided out. Throws DegenerateDivisor when qhat(1) = 0.
template <CommutativeRing T>
WindowForm<T> progression_sum_form(const RecurrenceSpec<T>& spec, std::uint64_t m, std::uint64_t r) {
  auto sub = subseq_recurrence(spec, m, r);
  auto form = sum_closed_form(sub.spec());
  if (is_zero(form.divisor)) {
    throw Error(ErrorKind::DegenerateDivisor, "qhat(1) = 0 for m = " + std::to_string(m));
  }
  const std::size_t d = spec.order();
  WindowForm<T> out{m, r, form.divisor, std::vector<T>(d, T(Integer(0))), form.constant};
  for (std::size_t j = 0; j < d; ++j) {
    auto rho = shift_reduction(spec.coeffs, m * (j + 1));
    for (std::size_t i = 0; i < d; ++i) out.window[i] = out.window[i] + form.weights[j] * rho[i];
  }

  if constexpr (std::totally_ordered<T>) {
    if (out.divisor < T(Integer(0))) {
      out.divisor = -out.divisor;
      out.constant = -out.constant;
      for (auto& w : out.window) w = -w;
    }
  }
  if constexpr (std::same_as<T, Integer>) {
    Integer g = gcd(out.divisor, out.constant);
    for (const auto& w : out.window) g = gcd(g, w);
    if (g > Integer(1)) {
      out.divisor = exact_div(out.divisor, g);
      out.constant = exact_div(out.constant, g);
      for (auto& w : out.window) w = exact_div(w, g);
    }
  }
  return out;
}

}  // namespace lucasrec
