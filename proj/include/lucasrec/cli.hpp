#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lucasrec/json_io.hpp"
#include "lucasrec/recurrence.hpp"

namespace lucasrec {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kParseError = 2;
inline constexpr int kDomainError = 3;
inline constexpr int kDegenerateDivisor = 4;
}  // namespace exit_code

inline constexpr std::uint64_t kDefaultVerifyDepth = 40;
inline constexpr std::uint64_t kMaxVerifyDepth = 10000;

/// Cross-checks the subsequence recurrence for (a_{mn+r}) four ways: the Bell
/// formula against charpoly(C^m), the Bell value of gamma_d against its closed
/// form, the recurrence against `depth` actual subsequence terms, and an exact
/// refit of those terms.
VerifyRecord verify_progression(const RecurrenceSpec<Integer>& spec, std::uint64_t m, std::uint64_t r,
                                std::uint64_t depth, const std::string& source);
VerifyRecord verify_progression(const RecurrenceSpec<Rational>& spec, std::uint64_t m, std::uint64_t r,
                                std::uint64_t depth, const std::string& source);

/// Runs the command line (without the program name); returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucasrec
