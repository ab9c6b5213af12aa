#include <vector>

#include "doctest.h"
#include "lucasrec/bell.hpp"
#include "support/random_specs.hpp"

using namespace lucasrec;
using lucasrec::testing::SpecGenerator;

namespace {

std::vector<Poly> variables(std::size_t n) {
  std::vector<Poly> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(Poly::variable(n, i));
  return x;
}

Integer stirling2(std::size_t n, std::size_t k) {
  std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) s[i][j] = Integer(j) * s[i - 1][j] + s[i - 1][j - 1];
  }
  return s[n][k];
}

}  // namespace

TEST_CASE("boundary values") {
  std::vector<Integer> x{2, 3};
  CHECK(bell_partial<Integer>(0, 0, x) == Integer(1));
  CHECK(bell_partial<Integer>(4, 0, x) == Integer(0));
  CHECK(bell_partial<Integer>(0, 2, x) == Integer(0));
  CHECK(bell_partial<Integer>(2, 5, x) == Integer(0));
}

TEST_CASE("all singletons and one block") {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto x = variables(n);
    CHECK(bell_partial<Poly>(n, n, x) == pow(x[0], n));
    CHECK(bell_partial<Poly>(n, 1, x) == x[n - 1]);
  }
}

TEST_CASE("small partitions against the set-partition oracle") {
  auto x = variables(2);
  Poly expected = Poly(3) * x[0] * x[1];
  CHECK(set_partition_oracle<Poly>(3, 2, x) == expected);
  CHECK(bell_partial<Poly>(3, 2, x) == expected);

  std::vector<Integer> args{1, 2, 6};
  CHECK(set_partition_oracle<Integer>(4, 2, args) == Integer(36));
  CHECK(bell_partial<Integer>(4, 2, args) == Integer(36));

  auto one = variables(1);
  CHECK(set_partition_oracle<Poly>(4, 4, one) == pow(one[0], 4));
}

TEST_CASE("set-partition oracle counts Stirling numbers") {
  std::vector<Integer> ones(10, Integer(1));
  CHECK(stirling2(6, 3) == Integer(90));
  CHECK(set_partition_oracle<Integer>(6, 3, ones) == Integer(90));
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t k = 0; k <= n; ++k) REQUIRE(set_partition_oracle<Integer>(n, k, ones) == stirling2(n, k));
  }
  CHECK_THROWS_AS(set_partition_oracle<Integer>(11, 3, ones), Error);
}

TEST_CASE("bell_partial equals the set-partition oracle") {
  SpecGenerator gen(101);
  for (std::size_t n = 0; n <= 9; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (int trial = 0; trial < 3; ++trial) {
        auto x = gen.ints(n + 1, -4, 4);
        REQUIRE(bell_partial<Integer>(n, k, x) == set_partition_oracle<Integer>(n, k, x));
      }
    }
  }
  // Symbolic arguments: identical polynomials, not just equal values.
  for (std::size_t n = 1; n <= 6; ++n) {
    auto x = variables(n);
    for (std::size_t k = 1; k <= n; ++k) REQUIRE(bell_partial<Poly>(n, k, x) == set_partition_oracle<Poly>(n, k, x));
  }
}

TEST_CASE("truncated three-argument form") {
  auto x = variables(3);
  CHECK(bell_truncated3<Poly>(3, 2, x[0], x[1], x[2]) == Poly(3) * x[0] * x[1]);
  CHECK(bell_truncated3<Integer>(4, 2, 1, 2, 6) == Integer(36));
  for (std::size_t m = 0; m <= 8; ++m) CHECK(bell_truncated3<Poly>(m, m, x[0], x[1], x[2]) == pow(x[0], m));

  SpecGenerator gen(202);
  for (std::size_t m = 0; m <= 12; ++m) {
    for (std::size_t j = 0; j <= m; ++j) {
      auto args = gen.ints(3, -3, 3);
      REQUIRE(bell_truncated3<Integer>(m, j, args[0], args[1], args[2]) == bell_partial<Integer>(m, j, args));
    }
  }
  for (std::size_t m = 0; m <= 9; ++m) {
    for (std::size_t j = 0; j <= m; ++j) {
      REQUIRE(bell_truncated3<Poly>(m, j, x[0], x[1], x[2]) == bell_partial<Poly>(m, j, x));
    }
  }
  CHECK_THROWS_AS(bell_truncated3<Integer>(2, 3, 1, 1, 1), Error);
}

TEST_CASE("homogeneity") {
  SpecGenerator gen(303);
  for (int lambda : {-1, 2}) {
    for (int mu : {-1, 2}) {
      for (std::size_t n = 0; n <= 8; ++n) {
        auto x = gen.ints(n + 1, -3, 3);
        std::vector<Integer> scaled;
        for (std::size_t i = 0; i < x.size(); ++i) scaled.push_back(Integer(lambda) * pow(Integer(mu), i + 1) * x[i]);
        for (std::size_t k = 0; k <= n; ++k) {
          REQUIRE(bell_partial<Integer>(n, k, scaled) ==
                  pow(Integer(lambda), k) * pow(Integer(mu), n) * bell_partial<Integer>(n, k, x));
        }
      }
    }
  }
}

TEST_CASE("alternating-sign arguments flip by (-1)^(n+k)") {
  SpecGenerator gen(404);
  for (std::size_t n = 0; n <= 9; ++n) {
    auto x = gen.ints(n + 1, -5, 5);
    std::vector<Integer> alternating;
    for (std::size_t i = 0; i < x.size(); ++i) alternating.push_back(i % 2 == 0 ? x[i] : -x[i]);
    for (std::size_t k = 0; k <= n; ++k) {
      Integer expected = bell_partial<Integer>(n, k, x);
      if ((n + k) % 2 == 1) expected = -expected;
      REQUIRE(bell_partial<Integer>(n, k, alternating) == expected);
    }
  }
}
