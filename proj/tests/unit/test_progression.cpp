#include <vector>

#include "doctest.h"
#include "lucasrec/oracle.hpp"
#include "lucasrec/progression.hpp"
#include "support/random_specs.hpp"

using namespace lucasrec;
using lucasrec::testing::direct_terms;
using lucasrec::testing::SpecGenerator;

namespace {

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

CoeffVector<Integer> coeffs(std::initializer_list<int> v) { return CoeffVector<Integer>(ints(v)); }

RecurrenceSpec<Integer> spec(std::initializer_list<int> c, std::initializer_list<int> init) {
  return RecurrenceSpec<Integer>(coeffs(c), ints(init));
}

CoeffVector<Poly> symbolic(std::size_t d) {
  std::vector<Poly> c;
  for (std::size_t i = 0; i < d; ++i) c.push_back(Poly::variable(d, i));
  return CoeffVector<Poly>(c);
}

}  // namespace

TEST_CASE("subsequence recurrences of named sequences") {
  auto padovan = subseq_recurrence(spec({0, 1, 1}, {1, 0, 0}), 2, 1);
  CHECK(padovan.gamma.gamma == ints({2, -1, 1}));
  CHECK(padovan.initial == ints({0, 1, 1}));

  auto tribonacci = subseq_recurrence(spec({1, 1, 1}, {0, 0, 1}), 2, 0);
  CHECK(tribonacci.gamma.gamma == ints({3, 1, 1}));
  CHECK(tribonacci.initial == ints({0, 1, 2}));

  auto narayana = subseq_recurrence(spec({1, 0, 1}, {1, 1, 1}), 3, 2);
  CHECK(narayana.gamma.gamma == ints({4, -3, 1}));
  CHECK(narayana.initial == ints({1, 4, 13}));
  auto n_terms = seq_range(narayana.spec(), 0, 5);
  CHECK(n_terms == ints({1, 4, 13, 41, 129, 406}));

  CHECK(gamma_coefficients(coeffs({2, 1, -2, -1}), 2).gamma == ints({6, -11, 6, -1}));
  CHECK(gamma_coefficients(coeffs({2, 1, -2, -1}), 5).gamma == ints({22, -119, -22, -1}));
  CHECK(gamma_coefficients(coeffs({1, 1}), 1).gamma == ints({1, 1}));
  CHECK_THROWS_AS(gamma_coefficients(coeffs({1, 1}), 0), Error);
}

TEST_CASE("gamma coefficients equal the characteristic polynomial of C^m") {
  SpecGenerator gen(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = gen.coeffs();
    for (std::uint64_t m = 1; m <= 6; ++m) REQUIRE(gamma_coefficients(c, m) == char_poly_of_power(c, m));
  }
}

TEST_CASE("subsequences obey the derived recurrence") {
  SpecGenerator gen(29);
  for (int trial = 0; trial < 60; ++trial) {
    auto s = gen.spec();
    const std::size_t d = s.order();
    for (std::uint64_t m = 1; m <= 5; ++m) {
      auto a = direct_terms(s, static_cast<std::size_t>(m * 40 + 5));
      for (std::uint64_t r = 0; r <= 4; ++r) {
        auto sub = subseq_recurrence(s, m, r);
        std::vector<Integer> b;
        for (std::size_t n = 0; n < 40; ++n) b.push_back(a[m * n + r]);
        REQUIRE(verify_recurrence<Integer>(b, sub.gamma.gamma, d).verified());
        REQUIRE(seq_range(sub.spec(), 0, 39) == b);
      }
    }
  }
}

TEST_CASE("gamma_d from the Bell formula matches its closed form") {
  SpecGenerator gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto c = gen.coeffs();
    for (std::uint64_t m = 1; m <= 5; ++m) {
      auto hat = lucas_transform(c, c.order() * m);
      REQUIRE(gamma_bell(hat, m, c.order()) == gamma_last(c, m));
    }
  }
}

TEST_CASE("the Lucas transform is recovered from gamma") {
  CHECK(hat_from_gamma(gamma_coefficients(coeffs({1, 1, 1}), 2), 4) == ints({3, 11, 39, 131}));
  SpecGenerator gen(37);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = gen.coeffs();
    for (std::uint64_t m = 1; m <= 4; ++m) {
      auto hat = lucas_transform(c, 8 * m);
      auto rebuilt = hat_from_gamma(gamma_coefficients(c, m), 8);
      for (std::size_t n = 1; n <= 8; ++n) REQUIRE(rebuilt[n - 1] == hat[n * m]);
    }
  }
  CHECK_THROWS_AS(hat_from_gamma(gamma_coefficients(coeffs({1, 1}), 2), 0), Error);
}

TEST_CASE("symbolic gamma for orders two and three") {
  for (std::size_t d : {2u, 3u}) {
    auto c = symbolic(d);
    for (std::uint64_t m = 1; m <= 4; ++m) {
      auto gamma = gamma_coefficients(c, m);
      auto hat = lucas_transform(c, 2 * m);
      REQUIRE(gamma[1] == hat[m]);
      REQUIRE(gamma[2] == exact_div(hat[2 * m] - hat[m] * hat[m], Integer(2)));
      REQUIRE(gamma[d] == sign_power<Poly>((d + 1) * (m + 1)) * pow(c.c(d), m));
    }
  }
  auto g = gamma_coefficients(symbolic(3), 2);
  CHECK(g[1].to_string() == "c1^2 + 2*c2");
  CHECK(g[2].to_string() == "2*c1*c3 - c2^2");
  CHECK(g[3].to_string() == "c3^2");
}

TEST_CASE("convolved Fibonacci gamma in terms of Lucas numbers") {
  auto lucas = seq_range(spec({1, 1}, {2, 1}), 0, 30);
  for (std::uint64_t m = 1; m <= 10; ++m) {
    const Integer& L = lucas[m];
    const Integer sign = (m % 2 == 0) ? Integer(1) : Integer(-1);
    auto gamma = gamma_coefficients(coeffs({2, 1, -2, -1}), m);
    REQUIRE(gamma[1] == Integer(2) * L);
    REQUIRE(gamma[2] == Integer(-2) * sign - L * L);
    REQUIRE(gamma[3] == sign * Integer(2) * L);
    REQUIRE(gamma[4] == Integer(-1));
    REQUIRE(lucas[2 * m] == L * L - Integer(2) * sign);
    REQUIRE(lucas[3 * m] == L * L * L - Integer(3) * sign * L);
  }
}

TEST_CASE("rational coefficients") {
  CoeffVector<Rational> c({Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(3))});
  for (std::uint64_t m = 1; m <= 4; ++m) REQUIRE(gamma_coefficients(c, m) == char_poly_of_power(c, m));
}
