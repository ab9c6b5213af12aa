#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lucasrec/integer.hpp"
#include "lucasrec/recurrence.hpp"

namespace lucasrec {

struct CatalogEntry {
  std::string name;
  std::optional<std::string> oeis;
  RecurrenceSpec<Integer> spec;
  std::vector<Integer> frozen_prefix;
  std::optional<std::string> hat_of;  // entry whose coefficients this is the Lucas transform of
  std::string notes;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

inline constexpr std::uint32_t kMaxFamilyK = 100;
inline constexpr std::uint32_t kMaxFamilyOrder = 20;

/// Looks up a fixed entry ("tribonacci") or a parameterized family
/// ("k_fibonacci(3)", "d_step_lucas(4)"). Throws UnknownName.
CatalogEntry catalog_get(const std::string& name);

/// Fixed entry names followed by family templates such as "k_fibonacci(k)".
std::vector<std::string> catalog_names();

/// Every fixed entry plus a few representative family members.
std::vector<CatalogEntry> catalog_entries();

struct CatalogMismatch {
  std::string entry;
  std::string what;
};

struct CatalogReport {
  std::size_t entries_checked = 0;
  std::vector<CatalogMismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Checks each entry's prefix against its recurrence and each hat-entry
/// against the Lucas transform of its base coefficients.
CatalogReport catalog_selfcheck();

}  // namespace lucasrec
