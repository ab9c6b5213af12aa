#include "lucasrec/cli.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lucasrec/error.hpp"
#include "lucasrec/lucas.hpp"
#include "lucasrec/oracle.hpp"
#include "lucasrec/progression.hpp"
#include "lucasrec/sequences.hpp"
#include "lucasrec/sums.hpp"

namespace lucasrec {
namespace {

struct Options {
  std::string coeffs;
  std::string init;
  std::string catalog;
  std::string range;
  std::optional<std::uint64_t> n;
  std::uint64_t m = 1;
  std::uint64_t r = 0;
  std::uint64_t big_n = 10;
  std::uint64_t d = 0;
  std::uint64_t depth = kDefaultVerifyDepth;
  bool symbolic = false;
  bool json = false;
  bool all_catalog = false;
};

template <class T>
struct Resolved {
  std::string label;
  CoeffVector<T> coeffs;
  std::optional<std::vector<T>> initial;

  RecurrenceSpec<T> spec() const {
    if (!initial) throw Error(ErrorKind::ParseError, "this command needs initial values (--init or --catalog)");
    return RecurrenceSpec<T>(coeffs, *initial);
  }
};

Rational to_rational(const Integer& v) { return Rational(v); }
Rational to_rational(const Rational& v) { return v; }

template <class T>
std::vector<Rational> to_rationals(std::span<const T> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_rational(v));
  return out;
}

std::vector<Rational> parse_list(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    try {
      out.push_back(Rational::parse(item));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, std::string(flag) + ": " + e.what());
    }
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, std::string(flag) + " is empty");
  return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorKind::ParseError, "--range expects a..b");
  try {
    auto lo = Integer::parse(text.substr(0, dots)).to_int64();
    auto hi = Integer::parse(text.substr(dots + 2)).to_int64();
    if (lo < 0 || hi < lo) throw Error(ErrorKind::ParseError, "--range needs 0 <= a <= b");
    return {static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)};
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, std::string("--range: ") + e.what());
  }
}

template <class T>
CoeffVector<T> checked_coeffs(std::vector<T> values) {
  try {
    return CoeffVector<T>(std::move(values));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, std::string("--coeffs: ") + e.what());
  }
}

template <class T>
std::vector<T> lower(const std::vector<Rational>& values) {
  if constexpr (std::same_as<T, Integer>) {
    std::vector<Integer> out;
    for (const auto& v : values) out.push_back(v.to_integer());
    return out;
  } else {
    return values;
  }
}

/// Resolves the spec source and calls `fn` with a Resolved<Integer> when every
/// value is integral, otherwise with a Resolved<Rational>.
template <class Fn>
int with_source(const Options& opts, Fn&& fn) {
  if (!opts.catalog.empty()) {
    if (!opts.coeffs.empty()) throw Error(ErrorKind::ParseError, "--catalog and --coeffs are exclusive");
    auto entry = catalog_get(opts.catalog);
    return fn(Resolved<Integer>{entry.name, entry.spec.coeffs, entry.spec.initial});
  }
  if (opts.coeffs.empty()) throw Error(ErrorKind::ParseError, "need --coeffs or --catalog");
  auto coeffs = parse_list(opts.coeffs, "--coeffs");
  std::optional<std::vector<Rational>> initial;
  if (!opts.init.empty()) initial = parse_list(opts.init, "--init");

  auto integral = [](const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_integer(); });
  };
  std::string label = "coeffs=" + opts.coeffs + (initial ? " init=" + opts.init : "");
  if (integral(coeffs) && (!initial || integral(*initial))) {
    Resolved<Integer> res{label, checked_coeffs(lower<Integer>(coeffs)), std::nullopt};
    if (initial) res.initial = lower<Integer>(*initial);
    return fn(std::move(res));
  }
  return fn(Resolved<Rational>{label, checked_coeffs(std::move(coeffs)), std::move(initial)});
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += values[i].to_string();
  }
  return out;
}

/// "2*a(n+1) - a(n+3) + 1" style rendering of a linear combination.
std::string format_combination(const std::vector<std::pair<Rational, std::string>>& terms, const Rational& constant) {
  std::string out;
  auto append = [&](const Rational& coeff, const std::string& label) {
    if (coeff.is_zero()) return;
    Rational magnitude = coeff.sign() < 0 ? -coeff : coeff;
    if (out.empty()) {
      if (coeff.sign() < 0) out += "-";
    } else {
      out += coeff.sign() < 0 ? " - " : " + ";
    }
    if (label.empty()) {
      out += magnitude.to_string();
    } else {
      if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
      out += label;
    }
  };
  for (const auto& [coeff, label] : terms) append(coeff, label);
  append(constant, "");
  return out.empty() ? "0" : out;
}

std::string index_label(std::uint64_t m, std::uint64_t offset) {
  std::string out = "a(";
  if (m != 1) out += std::to_string(m);
  out += "n";
  if (offset > 0) out += "+" + std::to_string(offset);
  return out + ")";
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

int cmd_eval(const Options& opts, std::ostream& out) {
  return with_source(opts, [&](auto res) {
    auto spec = res.spec();
    TermsRecord rec{res.label, 0, {}};
    if (!opts.range.empty()) {
      auto [lo, hi] = parse_range(opts.range);
      rec.first = lo;
      auto terms = seq_range(spec, lo, hi);
      rec.terms = to_rationals<typename decltype(terms)::value_type>(terms);
    } else if (opts.n) {
      rec.first = *opts.n;
      rec.terms = {to_rational(seq_eval(spec, *opts.n))};
    } else {
      throw Error(ErrorKind::ParseError, "eval needs --n or --range");
    }
    if (opts.json) {
      print_json(out, rec);
    } else {
      out << join(rec.terms) << '\n';
    }
    return exit_code::kOk;
  });
}

int cmd_lucas(const Options& opts, std::ostream& out) {
  return with_source(opts, [&](auto res) {
    auto hat = lucas_transform(res.coeffs, opts.big_n);
    using T = typename decltype(res.coeffs.values())::value_type;
    TermsRecord rec{res.label, 0, to_rationals<std::remove_cv_t<T>>(hat.terms())};
    if (opts.json) {
      print_json(out, rec);
    } else {
      out << join(rec.terms) << '\n';
    }
    return exit_code::kOk;
  });
}

int cmd_gamma_symbolic(const Options& opts, std::ostream& out) {
  std::uint64_t d = opts.d;
  if (d == 0 && !opts.coeffs.empty() && opts.coeffs != "c") d = parse_list(opts.coeffs, "--coeffs").size();
  if (d == 0 && !opts.catalog.empty()) d = catalog_get(opts.catalog).spec.order();
  if (d == 0 || d > 8) throw Error(ErrorKind::ParseError, "--symbolic needs an order 1 <= d <= 8 (--d)");

  std::vector<Poly> vars;
  for (std::size_t i = 0; i < d; ++i) vars.push_back(Poly::variable(d, i));
  auto gamma = gamma_coefficients(CoeffVector<Poly>(vars), opts.m);
  GammaRecord rec{"symbolic d=" + std::to_string(d), opts.m, {}, gamma.gamma};
  if (opts.json) {
    print_json(out, rec);
  } else {
    for (std::size_t k = 1; k <= d; ++k) out << "gamma_" << k << " = " << gamma[k] << '\n';
  }
  return exit_code::kOk;
}

int cmd_gamma(const Options& opts, std::ostream& out) {
  if (opts.symbolic) return cmd_gamma_symbolic(opts, out);
  return with_source(opts, [&](auto res) {
    auto gamma = gamma_coefficients(res.coeffs, opts.m);
    using T = typename decltype(gamma.gamma)::value_type;
    GammaRecord rec{res.label, opts.m, to_rationals<T>(gamma.gamma), {}};
    if (opts.json) {
      print_json(out, rec);
    } else {
      out << join(rec.gamma) << '\n';
    }
    return exit_code::kOk;
  });
}

int cmd_sum(const Options& opts, std::ostream& out) {
  if (!opts.n) throw Error(ErrorKind::ParseError, "sum needs --n");
  return with_source(opts, [&](auto res) {
    auto spec = res.spec();
    using T = typename decltype(spec.initial)::value_type;
    auto form = sum_closed_form(spec);
    SumRecord rec{res.label, *opts.n, to_rational(partial_sum_closed(spec, *opts.n)), to_rational(form.divisor),
                  to_rationals<T>(form.weights), to_rational(form.constant)};
    if (opts.json) {
      print_json(out, rec);
      return exit_code::kOk;
    }
    std::vector<std::pair<Rational, std::string>> terms;
    for (std::size_t j = 0; j < rec.weights.size(); ++j) terms.emplace_back(rec.weights[j], index_label(1, j + 1));
    out << rec.value.to_string() << '\n';
    out << rec.divisor.to_string() << " * sum_{j=0}^{n} a(j) = " << format_combination(terms, rec.constant) << '\n';
    return exit_code::kOk;
  });
}

int cmd_subsum(const Options& opts, std::ostream& out) {
  if (!opts.n) throw Error(ErrorKind::ParseError, "subsum needs --n");
  return with_source(opts, [&](auto res) {
    auto spec = res.spec();
    using T = typename decltype(spec.initial)::value_type;
    auto form = progression_sum_form(spec, opts.m, opts.r);
    auto gamma = gamma_coefficients(spec.coeffs, opts.m);
    SubsumRecord rec{res.label,
                     opts.m,
                     opts.r,
                     *opts.n,
                     to_rational(progression_sum(spec, opts.m, opts.r, *opts.n)),
                     to_rationals<T>(gamma.gamma),
                     to_rational(form.divisor),
                     to_rationals<T>(form.window),
                     to_rational(form.constant)};
    if (opts.json) {
      print_json(out, rec);
      return exit_code::kOk;
    }
    std::vector<std::pair<Rational, std::string>> terms;
    for (std::size_t i = rec.window.size(); i-- > 0;) {
      terms.emplace_back(rec.window[i], index_label(opts.m, opts.r + i));
    }
    std::string body = format_combination(terms, rec.constant);
    std::string lhs = "sum_{j=0}^{n} a(" + (opts.m != 1 ? std::to_string(opts.m) : std::string()) + "j" +
                      (opts.r > 0 ? "+" + std::to_string(opts.r) : std::string()) + ")";
    out << rec.value.to_string() << '\n';
    if (rec.divisor == Rational(1)) {
      out << lhs << " = " << body << '\n';
    } else {
      out << lhs << " = 1/" << rec.divisor.to_string() << " * (" << body << ")\n";
    }
    return exit_code::kOk;
  });
}

template <class T>
VerifyRecord verify_impl(const RecurrenceSpec<T>& spec, std::uint64_t m, std::uint64_t r, std::uint64_t depth,
                         const std::string& source) {
  const std::size_t d = spec.order();
  if (depth < 2 * d) throw Error(ErrorKind::DomainError, "--depth must be at least twice the order");
  if (depth > kMaxVerifyDepth) throw Error(ErrorKind::DomainError, "--depth is bounded by 10000");

  VerifyRecord rec;
  rec.source = source;
  rec.m = m;
  rec.r = r;
  rec.depth = depth;

  auto gamma = gamma_coefficients(spec.coeffs, m);
  rec.gamma = to_rationals<T>(gamma.gamma);
  rec.oracle_gamma = to_rationals<T>(char_poly_of_power(spec.coeffs, m).gamma);
  auto hat = lucas_transform(spec.coeffs, d * m);
  rec.bell_last_agrees = gamma_bell(hat, m, d) == gamma[d];

  auto all = seq_range(spec, 0, m * (depth - 1) + r);
  std::vector<T> sub;
  for (std::uint64_t i = 0; i < depth; ++i) sub.push_back(all[m * i + r]);
  auto report = verify_recurrence<T>(sub, gamma.gamma, d);
  rec.checked = report.checked;
  rec.violations.assign(report.violations.begin(), report.violations.end());

  try {
    auto fit = fit_recurrence(to_rationals<T>(sub), d);
    if (fit.status == FitStatus::Unique) {
      rec.fit_status = "unique";
      rec.fitted = fit.coeffs;
      rec.fit_agrees = fit.coeffs == rec.gamma && fit.remainder_violations.empty();
    } else {
      // A lower-order subsequence (colliding alpha^m) makes the window singular.
      rec.fit_status = "underdetermined";
      rec.fit_agrees = true;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoSolution) throw;
    rec.fit_status = "no-solution";
    rec.fit_agrees = false;
  }
  return rec;
}

void print_verify(std::ostream& out, const VerifyRecord& rec) {
  auto verdict = [](bool ok) { return ok ? "agree" : "DISAGREE"; };
  out << "source: " << rec.source << "  m=" << rec.m << " r=" << rec.r << " depth=" << rec.depth << '\n';
  out << "  gamma (Bell formula):    " << join(rec.gamma) << '\n';
  out << "  gamma (charpoly of C^m): " << join(rec.oracle_gamma) << "  " << verdict(rec.gamma_agrees()) << '\n';
  out << "  gamma_d Bell vs closed:  " << verdict(rec.bell_last_agrees) << '\n';
  out << "  direct recurrence check: " << rec.checked << " indices, " << rec.violations.size() << " violations  "
      << verdict(rec.violations.empty()) << '\n';
  out << "  exact refit:             " << rec.fit_status;
  if (!rec.fitted.empty()) out << " " << join(rec.fitted);
  out << "  " << verdict(rec.fit_agrees) << '\n';
  out << "  result: " << (rec.all_agree() ? "all four agree" : "MISMATCH") << '\n';
}

int cmd_verify(const Options& opts, std::ostream& out) {
  std::vector<VerifyRecord> records;
  if (opts.all_catalog) {
    std::vector<std::future<VerifyRecord>> jobs;
    for (const auto& entry : catalog_entries()) {
      jobs.push_back(std::async(std::launch::async, [entry, &opts] {
        return verify_progression(entry.spec, opts.m, opts.r, opts.depth, entry.name);
      }));
    }
    for (auto& job : jobs) records.push_back(job.get());
  } else {
    with_source(opts, [&](auto res) {
      records.push_back(verify_progression(res.spec(), opts.m, opts.r, opts.depth, res.label));
      return 0;
    });
  }

  bool ok = std::all_of(records.begin(), records.end(), [](const auto& rec) { return rec.all_agree(); });
  if (opts.json) {
    print_json(out, opts.all_catalog ? nlohmann::json(records) : nlohmann::json(records.front()));
  } else {
    for (const auto& rec : records) print_verify(out, rec);
  }
  return ok ? exit_code::kOk : exit_code::kVerificationFailed;
}

int cmd_catalog(const Options& opts, std::ostream& out) {
  if (!opts.catalog.empty()) {
    auto entry = catalog_get(opts.catalog);
    if (opts.json) {
      print_json(out, entry);
    } else {
      std::vector<Rational> prefix(entry.frozen_prefix.begin(), entry.frozen_prefix.end());
      out << entry.name << (entry.oeis ? " (" + *entry.oeis + ")" : "") << ": " << join(prefix) << '\n';
    }
    return exit_code::kOk;
  }
  if (opts.json) {
    print_json(out, catalog_to_json(catalog_entries()));
    return exit_code::kOk;
  }
  for (const auto& name : catalog_names()) {
    std::string oeis;
    if (name.find('(') == std::string::npos) {
      auto entry = catalog_get(name);
      if (entry.oeis) oeis = *entry.oeis;
    }
    out << name << (oeis.empty() ? "" : "  " + oeis) << '\n';
  }
  return exit_code::kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return exit_code::kParseError;
    case ErrorKind::DegenerateDivisor: return exit_code::kDegenerateDivisor;
    default: return exit_code::kDomainError;
  }
}

}  // namespace

VerifyRecord verify_progression(const RecurrenceSpec<Integer>& spec, std::uint64_t m, std::uint64_t r,
                                std::uint64_t depth, const std::string& source) {
  return verify_impl(spec, m, r, depth, source);
}

VerifyRecord verify_progression(const RecurrenceSpec<Rational>& spec, std::uint64_t m, std::uint64_t r,
                                std::uint64_t depth, const std::string& source) {
  return verify_impl(spec, m, r, depth, source);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact linear-recurrence toolkit: Lucas transforms, arithmetic-progression subsequences, partial sums",
               "lucasrec"};
  app.require_subcommand(1);

  auto add_source = [&](CLI::App* cmd, bool needs_init) {
    cmd->add_option("--coeffs", opts.coeffs, "Comma-separated c1,...,cd (integers or p/q)");
    if (needs_init) cmd->add_option("--init", opts.init, "Comma-separated a0,...,a_{d-1}");
    cmd->add_option("--catalog", opts.catalog, "Catalog entry name, e.g. tribonacci or k_fibonacci(2)");
    cmd->add_flag("--json", opts.json, "Emit JSON (numbers as strings)");
  };
  auto add_positive = [](CLI::App* cmd, const char* name, std::uint64_t& target, const char* help) {
    cmd->add_option(name, target, help)->check(CLI::PositiveNumber);
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a_n or a range of terms");
  add_source(eval, true);
  eval->add_option("--n", opts.n, "Single index");
  eval->add_option("--range", opts.range, "Inclusive index range a..b");

  auto* lucas = app.add_subcommand("lucas", "Lucas transform terms 0..N");
  add_source(lucas, false);
  lucas->add_option("--N", opts.big_n, "Last index (default 10)");

  auto* gamma = app.add_subcommand("gamma", "Recurrence coefficients for indices mn+r");
  add_source(gamma, false);
  add_positive(gamma, "--m", opts.m, "Progression step m >= 1");
  gamma->add_flag("--symbolic", opts.symbolic, "Polynomials in c1..cd instead of numbers");
  gamma->add_option("--d", opts.d, "Order for --symbolic");

  auto* sum = app.add_subcommand("sum", "Closed-form partial sum a_0 + ... + a_n");
  add_source(sum, true);
  sum->add_option("--n", opts.n, "Last index")->required();

  auto* subsum = app.add_subcommand("subsum", "Closed-form sum of a_{mj+r} for j = 0..n");
  add_source(subsum, true);
  add_positive(subsum, "--m", opts.m, "Progression step m >= 1");
  subsum->add_option("--r", opts.r, "Offset r >= 0");
  subsum->add_option("--n", opts.n, "Last j")->required();

  auto* verify = app.add_subcommand("verify", "Four-way check of the subsequence recurrence");
  add_source(verify, true);
  add_positive(verify, "--m", opts.m, "Progression step m >= 1");
  verify->add_option("--r", opts.r, "Offset r >= 0");
  verify->add_option("--depth", opts.depth, "Subsequence terms to check (default 40, at most 10000)");
  verify->add_flag("--all-catalog", opts.all_catalog, "Verify every catalog entry");

  auto* catalog = app.add_subcommand("catalog", "List the sequence catalog");
  catalog->add_option("--catalog", opts.catalog, "Show a single entry");
  catalog->add_flag("--json", opts.json, "Emit the catalog JSON resource");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kParseError;
  }

  try {
    if (eval->parsed()) return cmd_eval(opts, out);
    if (lucas->parsed()) return cmd_lucas(opts, out);
    if (gamma->parsed()) return cmd_gamma(opts, out);
    if (sum->parsed()) return cmd_sum(opts, out);
    if (subsum->parsed()) return cmd_subsum(opts, out);
    if (verify->parsed()) return cmd_verify(opts, out);
    if (catalog->parsed()) return cmd_catalog(opts, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kDomainError;
  }
  return exit_code::kParseError;
}

}  // namespace lucasrec
