#include <vector>

#include "doctest.h"
#include "lucasrec/lucas.hpp"
#include "support/random_specs.hpp"

using namespace lucasrec;
using lucasrec::testing::SpecGenerator;

namespace {

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

CoeffVector<Integer> coeffs(std::initializer_list<int> v) { return CoeffVector<Integer>(ints(v)); }

CoeffVector<Poly> symbolic(std::size_t d) {
  std::vector<Poly> c;
  for (std::size_t i = 0; i < d; ++i) c.push_back(Poly::variable(d, i));
  return CoeffVector<Poly>(c);
}

}  // namespace

TEST_CASE("coefficient vectors reject a zero leading coefficient") {
  CHECK_THROWS_AS(coeffs({1, 0}), Error);
  CHECK_THROWS_AS(CoeffVector<Integer>(std::vector<Integer>{}), Error);
}

TEST_CASE("known Lucas transforms") {
  CHECK(lucas_transform(coeffs({1, 1}), 5).terms() == ints({2, 1, 3, 4, 7, 11}));
  CHECK(lucas_transform(coeffs({1, 1, 1}), 13).terms() ==
        ints({3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443, 815, 1499, 2757}));
  CHECK(lucas_transform(coeffs({0, 1, 1}), 2).terms() == ints({3, 0, 2}));

  // Convolved Fibonacci: â_n = 2 L_n with L = 2, 1, 3, 4, 7, 11.
  CHECK(lucas_transform(coeffs({2, 1, -2, -1}), 5).terms() == ints({4, 2, 6, 8, 14, 22}));
  auto lucas = lucas_transform(coeffs({1, 1}), 30);
  auto convolved = lucas_transform(coeffs({2, 1, -2, -1}), 30);
  for (std::size_t n = 0; n <= 30; ++n) REQUIRE(convolved[n] == Integer(2) * lucas[n]);
}

TEST_CASE("extended continues the same sequence") {
  auto hat = lucas_transform(coeffs({1, 1, 1}), 3);
  CHECK(hat.extended(13).terms() == lucas_transform(coeffs({1, 1, 1}), 13).terms());
  CHECK(hat.extended(2).size() == 4);
  CHECK_THROWS_AS(hat[4], Error);
}

TEST_CASE("Bell-polynomial route") {
  CHECK(lucas_transform_bell(coeffs({1, 1}), 4) == Integer(7));
  CHECK(lucas_transform_bell(coeffs({1, 1, 1}), 5) == Integer(21));
  CHECK(lucas_transform_bell(symbolic(1), 3) == pow(Poly::variable(1, 0), 3));
  CHECK(lucas_transform_bell(coeffs({3}), 1) == Integer(3));
  CHECK_THROWS_AS(lucas_transform_bell(coeffs({1, 1}), 0), Error);
}

TEST_CASE("Bell route equals Newton route on random integer coefficients") {
  SpecGenerator gen(1);
  for (int trial = 0; trial < 60; ++trial) {
    auto c = gen.coeffs();
    auto hat = lucas_transform(c, 20);
    for (std::size_t n = 1; n <= 20; ++n) REQUIRE(lucas_transform_bell(c, n) == hat[n]);
  }
}

TEST_CASE("Bell route equals Newton route symbolically") {
  for (std::size_t d = 1; d <= 3; ++d) {
    auto c = symbolic(d);
    auto hat = lucas_transform(c, 8);
    for (std::size_t n = 1; n <= 8; ++n) REQUIRE(lucas_transform_bell(c, n) == hat[n]);
  }
}

TEST_CASE("symbolic transforms have integer coefficients") {
  for (std::size_t d = 1; d <= 4; ++d) {
    auto hat = lucas_transform(symbolic(d), 10);
    CHECK(hat[0] == Poly(Integer(d)));
    for (std::size_t n = 0; n <= 10; ++n) REQUIRE(hat[n].has_integer_coefficients());
  }
  auto hat2 = lucas_transform(symbolic(2), 3);
  CHECK(hat2[2].to_string() == "c1^2 + 2*c2");
  CHECK(hat2[3].to_string() == "c1^3 + 3*c1*c2");
}

TEST_CASE("rational coefficients") {
  CoeffVector<Rational> c({Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(3))});
  auto hat = lucas_transform(c, 6);
  // Power sums of the roots of t^2 - t/2 - 1/3.
  CHECK(hat[1] == Rational(Integer(1), Integer(2)));
  CHECK(hat[2] == Rational(Integer(1), Integer(4)) + Rational(Integer(2), Integer(3)));
  for (std::size_t n = 1; n <= 6; ++n) REQUIRE(lucas_transform_bell(c, n) == hat[n]);
}

TEST_CASE("family closed forms") {
  CHECK(hat_closed_form(Family{FamilyKind::KFibonacci, 1}, 4) == Integer(7));
  CHECK(hat_closed_form(Family{FamilyKind::Tribonacci}, 6) == Integer(39));
  CHECK(hat_closed_form(Family{FamilyKind::Padovan}, 5) == Integer(5));
  CHECK(hat_closed_form(Family{FamilyKind::Narayana}, 3) == Integer(4));
  CHECK(hat_closed_form(Family{FamilyKind::Narayana}, 6) == Integer(10));
  CHECK_THROWS_AS(Family::parse("pell"), Error);
  CHECK(Family::parse("k_fibonacci(4)").k == 4);
  CHECK_THROWS_AS(hat_closed_form(Family{FamilyKind::Tribonacci}, 0), Error);

  std::vector<Family> families{{FamilyKind::Tribonacci}, {FamilyKind::Padovan}, {FamilyKind::Narayana}};
  for (std::uint32_t k = 1; k <= 5; ++k) families.push_back({FamilyKind::KFibonacci, k});
  for (const auto& family : families) {
    auto hat = lucas_transform(family.coeffs(), 25);
    for (std::uint64_t m = 1; m <= 25; ++m) REQUIRE(hat_closed_form(family, m) == hat[m]);
  }
}

TEST_CASE("k-Lucas numbers are sums of neighbouring k-Fibonacci numbers") {
  for (int k = 1; k <= 5; ++k) {
    RecurrenceSpec<Integer> fib(CoeffVector<Integer>(ints({k, 1})), ints({0, 1}));
    auto f = seq_range(fib, 0, 31);
    auto lucas = lucas_transform(fib.coeffs, 30);
    for (std::size_t m = 1; m <= 30; ++m) REQUIRE(lucas[m] == f[m - 1] + f[m + 1]);
  }
}
