#pragma once

// Deterministic generators shared by the property tests and the acceptance suite.

#include <cstdint>
#include <random>
#include <vector>

#include "lucasrec/integer.hpp"
#include "lucasrec/recurrence.hpp"

namespace lucasrec::testing {

class SpecGenerator {
 public:
  explicit SpecGenerator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// d in [1, max_order], |c_i| <= max_coeff, c_d != 0.
  CoeffVector<Integer> coeffs(std::size_t max_order = 5, int max_coeff = 3) {
    const auto d = static_cast<std::size_t>(uniform(1, static_cast<int>(max_order)));
    std::vector<Integer> c;
    for (std::size_t i = 0; i < d; ++i) c.emplace_back(uniform(-max_coeff, max_coeff));
    while (c.back().is_zero()) c.back() = Integer(uniform(-max_coeff, max_coeff));
    return CoeffVector<Integer>(std::move(c));
  }

  RecurrenceSpec<Integer> spec(std::size_t max_order = 5, int max_coeff = 3, int max_initial = 5) {
    auto c = coeffs(max_order, max_coeff);
    std::vector<Integer> init;
    for (std::size_t i = 0; i < c.order(); ++i) init.emplace_back(uniform(-max_initial, max_initial));
    return RecurrenceSpec<Integer>(std::move(c), std::move(init));
  }

  std::vector<Integer> ints(std::size_t count, int lo, int hi) {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(uniform(lo, hi));
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<Integer> direct_terms(const RecurrenceSpec<Integer>& spec, std::size_t count) {
  // Plain forward iteration, written independently of the library's seq_range.
  std::vector<Integer> a = spec.initial;
  const std::size_t d = spec.order();
  while (a.size() < count) {
    Integer next(0);
    for (std::size_t k = 1; k <= d; ++k) next += spec.coeffs.c(k) * a[a.size() - k];
    a.push_back(next);
  }
  a.resize(count);
  return a;
}

}  // namespace lucasrec::testing
