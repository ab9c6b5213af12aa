#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lucasrec/cli.hpp"

using namespace lucasrec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(pow(Integer(num(rng)), 3), Integer(den(rng)));
}

std::vector<Rational> random_rationals(std::mt19937_64& rng) {
  std::vector<Rational> out(std::uniform_int_distribution<int>(0, 5)(rng));
  for (auto& v : out) v = random_rational(rng);
  return out;
}

template <typename Record>
Record round_trip(const Record& rec) {
  nlohmann::json j = rec;
  return nlohmann::json::parse(j.dump()).get<Record>();
}

}  // namespace

TEST_CASE("eval") {
  CHECK(run({"eval", "--catalog", "tribonacci", "--range", "0..9"}).out == "0 0 1 1 2 4 7 13 24 44\n");
  CHECK(run({"eval", "--coeffs", "1,1", "--init", "0,1", "--n", "10"}).out == "55\n");
  CHECK(run({"eval", "--coeffs", "1/2,1/2", "--init", "0,1", "--n", "2"}).out == "1/2\n");

  auto big = run({"eval", "--catalog", "fibonacci", "--n", "3000"});
  CHECK(big.code == exit_code::kOk);
  CHECK(big.out.size() == 628);  // F(3000) has 627 digits
}

TEST_CASE("lucas and gamma") {
  CHECK(run({"lucas", "--coeffs", "1,1", "--N", "5"}).out == "2 1 3 4 7 11\n");
  CHECK(run({"gamma", "--catalog", "convolved_fibonacci", "--m", "3"}).out == "8 -14 -8 -1\n");
  CHECK(run({"gamma", "--coeffs", "1,0,1", "--m", "3"}).out == "4 -3 1\n");
  CHECK(run({"gamma", "--d", "2", "--m", "2", "--symbolic"}).out == "gamma_1 = c1^2 + 2*c2\ngamma_2 = -c2^2\n");
}

TEST_CASE("sums") {
  auto sum = run({"sum", "--catalog", "tribonacci", "--n", "10"});
  CHECK(sum.code == exit_code::kOk);
  CHECK(sum.out.rfind("177\n", 0) == 0);

  auto subsum = run({"subsum", "--catalog", "tribonacci", "--m", "3", "--r", "0", "--n", "5"});
  CHECK(subsum.out == "2031\nsum_{j=0}^{n} a(3j) = 1/2 * (a(3n+2) - a(3n) - 1)\n");
}

TEST_CASE("verify") {
  auto v = run({"verify", "--catalog", "narayana", "--m", "3", "--r", "2"});
  CHECK(v.code == exit_code::kOk);
  CHECK(v.out.find("all four agree") != std::string::npos);

  auto all = run({"verify", "--all-catalog", "--m", "4", "--json"});
  CHECK(all.code == exit_code::kOk);
  auto records = nlohmann::json::parse(all.out).get<std::vector<VerifyRecord>>();
  CHECK(records.size() == catalog_entries().size());
  for (const auto& rec : records) CHECK(rec.all_agree());
}

TEST_CASE("catalog") {
  auto list = run({"catalog"});
  CHECK(list.out.find("tribonacci  A000073") != std::string::npos);
  auto json = run({"catalog", "--json"});
  CHECK(nlohmann::json::parse(json.out) == catalog_to_json(catalog_entries()));
}

TEST_CASE("exit codes") {
  CHECK(run({"sum", "--coeffs", "2,-1", "--init", "0,1", "--n", "3"}).code == exit_code::kDegenerateDivisor);
  CHECK(run({"eval", "--coeffs", "1,0", "--init", "0,1", "--n", "3"}).code == exit_code::kParseError);
  CHECK(run({"eval", "--coeffs", "1,x", "--init", "0,1", "--n", "3"}).code == exit_code::kParseError);
  CHECK(run({"eval", "--coeffs", "1,1", "--init", "0", "--n", "3"}).code != exit_code::kOk);
  CHECK(run({"frobnicate"}).code == exit_code::kParseError);
  CHECK(run({"eval", "--catalog", "nope", "--n", "1"}).code == exit_code::kDomainError);
  CHECK(run({"gamma", "--coeffs", "1,1", "--m", "0"}).code == exit_code::kParseError);

  auto bad = run({"verify", "--catalog", "fibonacci", "--m", "2", "--depth", "100000"});
  CHECK(bad.code != exit_code::kOk);
  CHECK(!bad.err.empty());
}

TEST_CASE("JSON records round trip") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    TermsRecord terms{"t" + std::to_string(trial), static_cast<std::uint64_t>(trial), random_rationals(rng)};
    REQUIRE(round_trip(terms) == terms);

    GammaRecord gamma{"g", 3, random_rationals(rng), {}};
    if (trial % 2 == 0) gamma.symbolic = {Poly::variable(2, 0) * Poly(random_rational(rng)), Poly(7)};
    REQUIRE(round_trip(gamma) == gamma);

    SumRecord sum{"s", 10, random_rational(rng), random_rational(rng), random_rationals(rng), random_rational(rng)};
    REQUIRE(round_trip(sum) == sum);

    SubsumRecord subsum{"ss",
                        2,
                        1,
                        5,
                        random_rational(rng),
                        random_rationals(rng),
                        random_rational(rng),
                        random_rationals(rng),
                        random_rational(rng)};
    REQUIRE(round_trip(subsum) == subsum);

    VerifyRecord verify{"v",  4, 0, 40, random_rationals(rng), random_rationals(rng), trial % 3 == 0, 36, {3, 9},
                        "unique", random_rationals(rng), true};
    REQUIRE(round_trip(verify) == verify);
  }
}
