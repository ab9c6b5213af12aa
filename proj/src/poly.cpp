#include "lucasrec/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lucasrec/error.hpp"

namespace lucasrec {
namespace {

std::uint32_t degree_of(const Poly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

Poly::Exponents padded(const Poly::Exponents& e, std::size_t nvars) {
  Poly::Exponents out = e;
  out.resize(nvars, 0);
  return out;
}

}  // namespace

bool Poly::GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  auto da = degree_of(a);
  auto db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error(ErrorKind::DomainError, "variable index out of range");
  Poly p;
  p.nvars_ = nvars;
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Poly Poly::from_terms(std::size_t nvars, const std::vector<std::pair<Exponents, Rational>>& terms) {
  Poly p;
  p.nvars_ = nvars;
  for (const auto& [e, c] : terms) {
    if (e.size() != nvars) {
      throw Error(ErrorKind::DomainError, "exponent vector length does not match variable count");
    }
    p.add_term(e, c);
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

std::uint32_t Poly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

bool Poly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() < nvars_) throw Error(ErrorKind::DomainError, "evaluation point too short");
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= pow(point[i], e[i]);
    }
    total += term;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = "c" + std::to_string(i + 1);
      if (e[i] > 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    bool unit = magnitude == Rational(1);
    if (factors.empty() || !unit) {
      os << magnitude.to_string();
      if (!factors.empty()) os << "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

Poly Poly::with_nvars(std::size_t nvars) const {
  if (nvars < nvars_) throw Error(ErrorKind::DomainError, "cannot drop variables");
  if (nvars == nvars_) return *this;
  Poly p;
  p.nvars_ = nvars;
  for (const auto& [e, c] : terms_) p.terms_.emplace(padded(e, nvars), c);
  return p;
}

void Poly::add_term(const Exponents& e, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ > nvars_) *this = with_nvars(o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(padded(e, nvars_), c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  std::size_t n = std::max(nvars_, o.nvars_);
  Poly result;
  result.nvars_ = n;
  for (const auto& [ea, ca] : terms_) {
    Exponents base = padded(ea, n);
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e = base;
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      result.add_term(e, ca * cb);
    }
  }
  *this = std::move(result);
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
  std::size_t n = std::max(a.nvars_, b.nvars_);
  return a.with_nvars(n).terms_ == b.with_nvars(n).terms_;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly exact_div(const Poly& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionNotExact, "division by zero");
  Poly r = a;
  Rational divisor(b);
  for (auto& [e, c] : r.terms_) c /= divisor;
  return r;
}

Poly pow(const Poly& base, std::uint64_t exponent) {
  Poly result(1);
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

}  // namespace lucasrec
