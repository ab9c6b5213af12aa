#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "lucasrec/error.hpp"
#include "lucasrec/ring.hpp"

namespace lucasrec {

/// Triangle of partial Bell polynomials B_{n,k}(x1, x2, ...) for n <= n_max.
///
/// Built with B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1},
/// B_{0,0} = 1. Arguments past x.size() are zero.
template <CommutativeRing T>
class BellTriangle {
 public:
  BellTriangle(std::size_t n_max, std::span<const T> x) : n_max_(n_max) {
    const T zero(Integer(0));
    rows_.assign(n_max + 1, std::vector<T>(n_max + 1, zero));
    rows_[0][0] = T(Integer(1));
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        T sum = zero;
        for (std::size_t i = 1; i <= n - k + 1 && i <= x.size(); ++i) {
          const T& prev = rows_[n - i][k - 1];
          if (is_zero(x[i - 1]) || is_zero(prev)) continue;
          sum = sum + T(binomial(Integer(n - 1), Integer(i - 1))) * x[i - 1] * prev;
        }
        rows_[n][k] = std::move(sum);
      }
    }
  }

  std::size_t n_max() const noexcept { return n_max_; }

  /// B_{n,k}; zero when k > n.
  const T& operator()(std::size_t n, std::size_t k) const {
    if (n > n_max_) throw Error(ErrorKind::DomainError, "Bell index beyond triangle");
    return k > n ? zero_ : rows_[n][k];
  }

 private:
  std::size_t n_max_;
  std::vector<std::vector<T>> rows_;
  T zero_ = T(Integer(0));
};

template <CommutativeRing T>
T bell_partial(std::size_t n, std::size_t k, std::span<const T> x) {
  if (k > n) return T(Integer(0));
  return BellTriangle<T>(n, x)(n, k);
}

/// B_{m,j}(x1, x2, x3, 0, ...) from the explicit sum over block-type counts:
/// l singletons, 3j-m-2l pairs and m-2j+l triples.
template <CommutativeRing T>
T bell_truncated3(std::size_t m, std::size_t j, const T& x1, const T& x2, const T& x3) {
  if (j > m) throw Error(ErrorKind::DomainError, "bell_truncated3 requires j <= m");
  const auto mi = static_cast<std::int64_t>(m);
  const auto ji = static_cast<std::int64_t>(j);
  const Integer lead = exact_div(factorial(m), factorial(j));
  T total(Integer(0));
  for (std::int64_t l = 0; l <= ji; ++l) {
    const std::int64_t pairs = 3 * ji - mi - 2 * l;
    const std::int64_t triples = mi - 2 * ji + l;
    if (pairs < 0 || triples < 0) continue;
    Integer coeff = lead * binomial(Integer(ji), Integer(ji - l)) *
                    binomial(Integer(ji - l), Integer(mi + l - 2 * ji));
    coeff = exact_div(coeff, pow(Integer(2), static_cast<std::uint64_t>(pairs)) *
                                 pow(Integer(6), static_cast<std::uint64_t>(triples)));
    total = total + T(coeff) * ring_pow(x1, static_cast<std::uint64_t>(l)) *
                        ring_pow(x2, static_cast<std::uint64_t>(pairs)) *
                        ring_pow(x3, static_cast<std::uint64_t>(triples));
  }
  return total;
}

inline constexpr std::size_t kSetPartitionOracleLimit = 10;

/// Brute force: sums prod x_{|block|} over every partition of an n-set into k
/// blocks, enumerated as restricted growth strings.
template <CommutativeRing T>
T set_partition_oracle(std::size_t n, std::size_t k, std::span<const T> x) {
  if (n > kSetPartitionOracleLimit) {
    throw Error(ErrorKind::SizeLimit, "set_partition_oracle supports n <= 10");
  }
  const T zero(Integer(0));
  if (n == 0) return k == 0 ? T(Integer(1)) : zero;
  if (k == 0 || k > n) return zero;

  auto arg = [&](std::size_t size) { return size <= x.size() ? x[size - 1] : zero; };

  T total = zero;
  std::vector<std::size_t> block(n, 0);  // block[i] = block label of element i
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    std::size_t blocks = prefix_max[n - 1] + 1;
    if (blocks == k) {
      std::vector<std::size_t> sizes(k, 0);
      for (std::size_t b : block) ++sizes[b];
      T product(Integer(1));
      for (std::size_t s : sizes) product = product * arg(s);
      total = total + product;
    }
    // Next restricted growth string: bump the rightmost position that may grow.
    std::size_t i = n - 1;
    while (i > 0 && block[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++block[i];
    prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
    for (std::size_t t = i + 1; t < n; ++t) {
      block[t] = 0;
      prefix_max[t] = prefix_max[t - 1];
    }
  }
  return total;
}

}  // namespace lucasrec
