#include "lucasrec/json_io.hpp"

#include "lucasrec/error.hpp"

namespace lucasrec {
namespace {

std::string as_string(const nlohmann::json& j) {
  if (!j.is_string()) throw Error(ErrorKind::ParseError, "expected a decimal string, got " + j.dump());
  return j.get<std::string>();
}

}  // namespace

void to_json(nlohmann::json& j, const Integer& v) { j = v.to_string(); }
void from_json(const nlohmann::json& j, Integer& v) { v = Integer::parse(as_string(j)); }
void to_json(nlohmann::json& j, const Rational& v) { j = v.to_string(); }
void from_json(const nlohmann::json& j, Rational& v) { v = Rational::parse(as_string(j)); }

void to_json(nlohmann::json& j, const Poly& v) {
  auto terms = nlohmann::json::array();
  for (const auto& [e, c] : v.terms()) terms.push_back({{"exponents", e}, {"coefficient", c}});
  j = {{"nvars", v.nvars()}, {"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, Poly& v) {
  const auto nvars = j.at("nvars").get<std::size_t>();
  std::vector<std::pair<Poly::Exponents, Rational>> terms;
  for (const auto& t : j.at("terms")) {
    terms.emplace_back(t.at("exponents").get<Poly::Exponents>(), t.at("coefficient").get<Rational>());
  }
  v = Poly::from_terms(nvars, terms);
}

void to_json(nlohmann::json& j, const CatalogEntry& e) {
  j = {{"name", e.name},
       {"oeis", e.oeis ? nlohmann::json(*e.oeis) : nlohmann::json(nullptr)},
       {"coeffs", std::vector<Integer>(e.spec.coeffs.values().begin(), e.spec.coeffs.values().end())},
       {"initial", e.spec.initial},
       {"prefix", e.frozen_prefix},
       {"hat_of", e.hat_of ? nlohmann::json(*e.hat_of) : nlohmann::json(nullptr)},
       {"notes", e.notes}};
}

void from_json(const nlohmann::json& j, CatalogEntry& e) {
  e.name = j.at("name").get<std::string>();
  e.oeis = j.at("oeis").is_null() ? std::nullopt : std::optional(j.at("oeis").get<std::string>());
  e.spec = RecurrenceSpec<Integer>(CoeffVector<Integer>(j.at("coeffs").get<std::vector<Integer>>()),
                                   j.at("initial").get<std::vector<Integer>>());
  e.frozen_prefix = j.at("prefix").get<std::vector<Integer>>();
  e.hat_of = (!j.contains("hat_of") || j.at("hat_of").is_null())
                 ? std::nullopt
                 : std::optional(j.at("hat_of").get<std::string>());
  e.notes = j.value("notes", "");
}

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries) {
  auto out = nlohmann::json::array();
  for (const auto& e : entries) out.push_back(e);
  return out;
}

void to_json(nlohmann::json& j, const TermsRecord& r) {
  j = {{"kind", "terms"}, {"source", r.source}, {"first", r.first}, {"terms", r.terms}};
}
void from_json(const nlohmann::json& j, TermsRecord& r) {
  r.source = j.at("source").get<std::string>();
  r.first = j.at("first").get<std::uint64_t>();
  r.terms = j.at("terms").get<std::vector<Rational>>();
}

void to_json(nlohmann::json& j, const GammaRecord& r) {
  j = {{"kind", "gamma"}, {"source", r.source}, {"m", r.m}, {"gamma", r.gamma}, {"symbolic", r.symbolic}};
}
void from_json(const nlohmann::json& j, GammaRecord& r) {
  r.source = j.at("source").get<std::string>();
  r.m = j.at("m").get<std::uint64_t>();
  r.gamma = j.at("gamma").get<std::vector<Rational>>();
  r.symbolic = j.at("symbolic").get<std::vector<Poly>>();
}

void to_json(nlohmann::json& j, const SumRecord& r) {
  j = {{"kind", "sum"},          {"source", r.source},   {"n", r.n},
       {"value", r.value},       {"divisor", r.divisor}, {"weights", r.weights},
       {"constant", r.constant}};
}
void from_json(const nlohmann::json& j, SumRecord& r) {
  r.source = j.at("source").get<std::string>();
  r.n = j.at("n").get<std::uint64_t>();
  r.value = j.at("value").get<Rational>();
  r.divisor = j.at("divisor").get<Rational>();
  r.weights = j.at("weights").get<std::vector<Rational>>();
  r.constant = j.at("constant").get<Rational>();
}

void to_json(nlohmann::json& j, const SubsumRecord& r) {
  j = {{"kind", "subsum"}, {"source", r.source},   {"m", r.m},           {"r", r.r},
       {"n", r.n},         {"value", r.value},     {"gamma", r.gamma},   {"divisor", r.divisor},
       {"window", r.window}, {"constant", r.constant}};
}
void from_json(const nlohmann::json& j, SubsumRecord& r) {
  r.source = j.at("source").get<std::string>();
  r.m = j.at("m").get<std::uint64_t>();
  r.r = j.at("r").get<std::uint64_t>();
  r.n = j.at("n").get<std::uint64_t>();
  r.value = j.at("value").get<Rational>();
  r.gamma = j.at("gamma").get<std::vector<Rational>>();
  r.divisor = j.at("divisor").get<Rational>();
  r.window = j.at("window").get<std::vector<Rational>>();
  r.constant = j.at("constant").get<Rational>();
}

void to_json(nlohmann::json& j, const VerifyRecord& r) {
  j = {{"kind", "verify"},
       {"source", r.source},
       {"m", r.m},
       {"r", r.r},
       {"depth", r.depth},
       {"gamma", r.gamma},
       {"oracle_gamma", r.oracle_gamma},
       {"bell_last_agrees", r.bell_last_agrees},
       {"checked", r.checked},
       {"violations", r.violations},
       {"fit_status", r.fit_status},
       {"fitted", r.fitted},
       {"fit_agrees", r.fit_agrees},
       {"all_agree", r.all_agree()}};
}
void from_json(const nlohmann::json& j, VerifyRecord& r) {
  r.source = j.at("source").get<std::string>();
  r.m = j.at("m").get<std::uint64_t>();
  r.r = j.at("r").get<std::uint64_t>();
  r.depth = j.at("depth").get<std::uint64_t>();
  r.gamma = j.at("gamma").get<std::vector<Rational>>();
  r.oracle_gamma = j.at("oracle_gamma").get<std::vector<Rational>>();
  r.bell_last_agrees = j.at("bell_last_agrees").get<bool>();
  r.checked = j.at("checked").get<std::uint64_t>();
  r.violations = j.at("violations").get<std::vector<std::uint64_t>>();
  r.fit_status = j.at("fit_status").get<std::string>();
  r.fitted = j.at("fitted").get<std::vector<Rational>>();
  r.fit_agrees = j.at("fit_agrees").get<bool>();
}

}  // namespace lucasrec
