#include "lucasrec/sequences.hpp"

#include <regex>

#include "lucasrec/error.hpp"
#include "lucasrec/lucas.hpp"

namespace lucasrec {
namespace {

std::vector<Integer> ints(std::initializer_list<std::int64_t> values) {
  return {values.begin(), values.end()};
}

RecurrenceSpec<Integer> make_spec(std::vector<Integer> c, std::vector<Integer> init) {
  return RecurrenceSpec<Integer>(CoeffVector<Integer>(std::move(c)), std::move(init));
}

constexpr std::size_t kFamilyPrefixLength = 25;

CatalogEntry with_generated_prefix(CatalogEntry entry) {
  entry.frozen_prefix = seq_range(entry.spec, 0, kFamilyPrefixLength - 1);
  return entry;
}

std::vector<CatalogEntry> fixed_entries() {
  std::vector<CatalogEntry> out;
  out.push_back({"fibonacci", "A000045", make_spec(ints({1, 1}), ints({0, 1})),
                 ints({0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987, 1597, 2584, 4181}),
                 std::nullopt, "F_n; the k = 1 member of k_fibonacci"});
  out.push_back({"lucas", "A000032", make_spec(ints({1, 1}), ints({2, 1})),
                 ints({2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322, 521, 843, 1364, 2207, 3571, 5778, 9349}),
                 "fibonacci", "Lucas transform of (1, 1)"});
  out.push_back({"tribonacci", "A000073", make_spec(ints({1, 1, 1}), ints({0, 0, 1})),
                 ints({0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927}), std::nullopt,
                 "t_n, t_0 = t_1 = 0, t_2 = 1"});
  out.push_back({"tribonacci_hat", "A001644", make_spec(ints({1, 1, 1}), ints({3, 1, 3})),
                 ints({3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443, 815, 1499, 2757}), "tribonacci",
                 "Lucas transform of (1, 1, 1)"});
  out.push_back({"padovan", "A000931", make_spec(ints({0, 1, 1}), ints({1, 0, 0})),
                 ints({1, 0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37}), std::nullopt,
                 "P_0 = 1, P_1 = P_2 = 0"});
  out.push_back({"perrin", "A001608", make_spec(ints({0, 1, 1}), ints({3, 0, 2})),
                 ints({3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17, 22, 29, 39, 51, 68, 90, 119, 158, 209}), "padovan",
                 "Lucas transform of (0, 1, 1)"});
  out.push_back({"narayana", "A000930", make_spec(ints({1, 0, 1}), ints({1, 1, 1})),
                 ints({1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88, 129, 189, 277, 406, 595, 872}),
                 std::nullopt, "Narayana's cows, N_0 = N_1 = N_2 = 1"});
  out.push_back({"narayana_hat", std::nullopt, make_spec(ints({1, 0, 1}), ints({3, 1, 1})),
                 ints({3, 1, 1, 4, 5, 6, 10, 15, 21, 31, 46, 67, 98, 144, 211, 309, 453, 664, 973, 1426}),
                 "narayana", "Lucas transform of (1, 0, 1)"});
  out.push_back({"convolved_fibonacci", "A001629", make_spec(ints({2, 1, -2, -1}), ints({0, 0, 1, 2})),
                 ints({0, 0, 1, 2, 5, 10, 20, 38, 71, 130, 235, 420, 744, 1308, 2285, 3970, 6865, 11822, 20284,
                       34690}),
                 std::nullopt, "Fibonacci convolved with itself; characteristic roots of multiplicity 2"});
  return out;
}

std::uint32_t parse_parameter(const std::string& text, std::uint32_t lo, std::uint32_t hi, const std::string& name) {
  unsigned long value = std::stoul(text);
  if (value < lo || value > hi) {
    throw Error(ErrorKind::UnknownName, name + " parameter must lie in [" + std::to_string(lo) + ", " +
                                            std::to_string(hi) + "]");
  }
  return static_cast<std::uint32_t>(value);
}

CatalogEntry k_fibonacci(std::uint32_t k) {
  return with_generated_prefix({"k_fibonacci(" + std::to_string(k) + ")", std::nullopt,
                                make_spec({Integer(k), Integer(1)}, ints({0, 1})), {}, std::nullopt,
                                "F_{k,n}: F_{k,n+1} = k F_{k,n} + F_{k,n-1}"});
}

CatalogEntry k_lucas(std::uint32_t k) {
  return with_generated_prefix({"k_lucas(" + std::to_string(k) + ")", std::nullopt,
                                make_spec({Integer(k), Integer(1)}, {Integer(2), Integer(k)}), {},
                                "k_fibonacci(" + std::to_string(k) + ")", "L_{k,n}, Lucas transform of (k, 1)"});
}

CatalogEntry d_step_fibonacci(std::uint32_t d) {
  std::vector<Integer> init(d, Integer(0));
  init.back() = Integer(1);
  return with_generated_prefix({"d_step_fibonacci(" + std::to_string(d) + ")", std::nullopt,
                                make_spec(std::vector<Integer>(d, Integer(1)), std::move(init)), {}, std::nullopt,
                                "f^(d)_n: d-1 zeros then 1"});
}

CatalogEntry d_step_lucas(std::uint32_t d) {
  std::vector<Integer> init{Integer(d)};
  for (std::uint32_t j = 1; j < d; ++j) init.push_back(pow(Integer(2), j) - Integer(1));
  std::string notes = "l^(d)_n: l_0 = d, l_j = 2^j - 1";
  if (d == 2) notes += "; partial sums are A001610";
  if (d == 3) notes += "; partial sums are A073728";
  return with_generated_prefix({"d_step_lucas(" + std::to_string(d) + ")", std::nullopt,
                                make_spec(std::vector<Integer>(d, Integer(1)), std::move(init)), {},
                                "d_step_fibonacci(" + std::to_string(d) + ")", std::move(notes)});
}

}  // namespace

CatalogEntry catalog_get(const std::string& name) {
  for (auto& entry : fixed_entries()) {
    if (entry.name == name) return entry;
  }
  static const std::regex kFamily(R"((k_fibonacci|k_lucas|d_step_fibonacci|d_step_lucas)\((\d{1,4})\))");
  std::smatch match;
  if (std::regex_match(name, match, kFamily)) {
    const std::string family = match[1];
    if (family == "k_fibonacci") return k_fibonacci(parse_parameter(match[2], 1, kMaxFamilyK, family));
    if (family == "k_lucas") return k_lucas(parse_parameter(match[2], 1, kMaxFamilyK, family));
    if (family == "d_step_fibonacci") return d_step_fibonacci(parse_parameter(match[2], 2, kMaxFamilyOrder, family));
    return d_step_lucas(parse_parameter(match[2], 2, kMaxFamilyOrder, family));
  }
  throw Error(ErrorKind::UnknownName, "no catalog entry named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& entry : fixed_entries()) names.push_back(entry.name);
  for (const char* family : {"k_fibonacci(k)", "k_lucas(k)", "d_step_fibonacci(d)", "d_step_lucas(d)"}) {
    names.emplace_back(family);
  }
  return names;
}

std::vector<CatalogEntry> catalog_entries() {
  auto out = fixed_entries();
  for (std::uint32_t k : {2U, 3U}) {
    out.push_back(k_fibonacci(k));
    out.push_back(k_lucas(k));
  }
  for (std::uint32_t d : {3U, 4U, 5U}) {
    out.push_back(d_step_fibonacci(d));
    out.push_back(d_step_lucas(d));
  }
  return out;
}

CatalogReport catalog_selfcheck() {
  CatalogReport report;
  for (const auto& entry : catalog_entries()) {
    ++report.entries_checked;
    const auto& prefix = entry.frozen_prefix;
    if (prefix.empty()) {
      report.mismatches.push_back({entry.name, "empty prefix"});
      continue;
    }
    if (seq_range(entry.spec, 0, prefix.size() - 1) != prefix) {
      report.mismatches.push_back({entry.name, "prefix disagrees with recurrence"});
    }
    if (entry.hat_of) {
      auto base = catalog_get(*entry.hat_of);
      auto hat = lucas_transform(base.spec.coeffs, prefix.size() - 1);
      if (hat.terms() != prefix) {
        report.mismatches.push_back({entry.name, "prefix is not the Lucas transform of " + *entry.hat_of});
      }
    }
  }
  return report;
}

}  // namespace lucasrec
