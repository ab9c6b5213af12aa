#pragma once

// JSON forms of library values and CLI result records. Every number is a
// decimal string ("p/q" for non-integral rationals) so no precision is lost.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "lucasrec/integer.hpp"
#include "lucasrec/poly.hpp"
#include "lucasrec/rational.hpp"
#include "lucasrec/sequences.hpp"

namespace lucasrec {

void to_json(nlohmann::json& j, const Integer& v);
void from_json(const nlohmann::json& j, Integer& v);
void to_json(nlohmann::json& j, const Rational& v);
void from_json(const nlohmann::json& j, Rational& v);
void to_json(nlohmann::json& j, const Poly& v);
void from_json(const nlohmann::json& j, Poly& v);
void to_json(nlohmann::json& j, const CatalogEntry& e);
void from_json(const nlohmann::json& j, CatalogEntry& e);

/// The whole catalog as the {name, oeis, coeffs[], initial[], prefix[]} resource.
nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries);

struct TermsRecord {
  std::string source;
  std::uint64_t first = 0;
  std::vector<Rational> terms;

  friend bool operator==(const TermsRecord&, const TermsRecord&) = default;
};

struct GammaRecord {
  std::string source;
  std::uint64_t m = 1;
  std::vector<Rational> gamma;  // numeric mode
  std::vector<Poly> symbolic;   // symbolic mode

  friend bool operator==(const GammaRecord&, const GammaRecord&) = default;
};

struct SumRecord {
  std::string source;
  std::uint64_t n = 0;
  Rational value;
  Rational divisor;
  std::vector<Rational> weights;
  Rational constant;

  friend bool operator==(const SumRecord&, const SumRecord&) = default;
};

struct SubsumRecord {
  std::string source;
  std::uint64_t m = 1;
  std::uint64_t r = 0;
  std::uint64_t n = 0;
  Rational value;
  std::vector<Rational> gamma;
  Rational divisor;
  std::vector<Rational> window;  // coefficients of a_{mn+r}, ..., a_{mn+r+d-1}
  Rational constant;

  friend bool operator==(const SubsumRecord&, const SubsumRecord&) = default;
};

struct VerifyRecord {
  std::string source;
  std::uint64_t m = 1;
  std::uint64_t r = 0;
  std::uint64_t depth = 0;
  std::vector<Rational> gamma;
  std::vector<Rational> oracle_gamma;
  bool bell_last_agrees = false;
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> violations;
  std::string fit_status;  // "unique", "underdetermined" or "no-solution"
  std::vector<Rational> fitted;
  bool fit_agrees = false;

  bool gamma_agrees() const { return gamma == oracle_gamma; }
  bool all_agree() const { return gamma_agrees() && bell_last_agrees && violations.empty() && fit_agrees; }

  friend bool operator==(const VerifyRecord&, const VerifyRecord&) = default;
};

void to_json(nlohmann::json& j, const TermsRecord& r);
void from_json(const nlohmann::json& j, TermsRecord& r);
void to_json(nlohmann::json& j, const GammaRecord& r);
void from_json(const nlohmann::json& j, GammaRecord& r);
void to_json(nlohmann::json& j, const SumRecord& r);
void from_json(const nlohmann::json& j, SumRecord& r);
void to_json(nlohmann::json& j, const SubsumRecord& r);
void from_json(const nlohmann::json& j, SubsumRecord& r);
void to_json(nlohmann::json& j, const VerifyRecord& r);
void from_json(const nlohmann::json& j, VerifyRecord& r);

}  // namespace lucasrec
