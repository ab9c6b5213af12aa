#include "lucasrec/oracle.hpp"

namespace lucasrec {

RecurrenceFit fit_recurrence(std::span<const Rational> terms, std::size_t d) {
  if (d == 0 || terms.size() < 2 * d) {
    throw Error(ErrorKind::DomainError, "fit_recurrence needs d >= 1 and at least 2d terms");
  }
  // Augmented system, row i is the equation for n = d + i.
  std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 1; k <= d; ++k) rows[i][k - 1] = terms[d + i - k];
    rows[i][d] = terms[d + i];
  }

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < d && rank < d; ++col) {
    std::size_t pivot = rank;
    while (pivot < d && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == d) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      Rational factor = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j <= d; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < d; ++i) {
    if (!rows[i][d].is_zero()) {
      throw Error(ErrorKind::NoSolution, "no order-" + std::to_string(d) + " recurrence fits the window");
    }
  }

  RecurrenceFit fit;
  if (rank < d) {
    fit.status = FitStatus::Underdetermined;
    return fit;
  }
  fit.coeffs.resize(d);
  for (std::size_t i = 0; i < d; ++i) fit.coeffs[pivot_col[i]] = rows[i][d] / rows[i][pivot_col[i]];

  for (std::size_t n = 2 * d; n < terms.size(); ++n) {
    Rational expected;
    for (std::size_t k = 1; k <= d; ++k) expected += fit.coeffs[k - 1] * terms[n - k];
    if (expected != terms[n]) fit.remainder_violations.push_back(n);
  }
  return fit;
}

}  // namespace lucasrec
