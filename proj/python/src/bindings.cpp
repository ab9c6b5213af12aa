#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "lucasrec/bell.hpp"
#include "lucasrec/oracle.hpp"
#include "lucasrec/progression.hpp"
#include "lucasrec/sequences.hpp"
#include "lucasrec/sums.hpp"

namespace py = pybind11;
using namespace lucasrec;

namespace pybind11::detail {

inline object to_pyint(const lucasrec::Integer& v) {
  return reinterpret_steal<object>(PyLong_FromString(v.to_string().c_str(), nullptr, 10));
}

// Python int <-> Integer through the decimal representation.
template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = Integer::parse(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Integer& v, return_value_policy, handle) {
    return to_pyint(v).release();
  }
};

// fractions.Fraction (or int) <-> Rational.
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      value = Rational(Integer::parse(py::str(src).cast<std::string>()));
      return true;
    }
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    value = Rational(Integer::parse(py::str(src.attr("numerator")).cast<std::string>()),
                     Integer::parse(py::str(src.attr("denominator")).cast<std::string>()));
    return true;
  }

  static handle cast(const Rational& v, return_value_policy, handle) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_pyint(v.numerator()), to_pyint(v.denominator())).release();
  }
};

}  // namespace pybind11::detail

namespace {

RecurrenceSpec<Integer> make_spec(std::vector<Integer> coeffs, std::vector<Integer> initial) {
  return RecurrenceSpec<Integer>(CoeffVector<Integer>(std::move(coeffs)), std::move(initial));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact linear recurrence toolkit: Lucas transforms, progression subsequences, closed-form sums.";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def(
      "lucas_transform",
      [](std::vector<Integer> coeffs, std::size_t N) {
        return lucas_transform(CoeffVector<Integer>(std::move(coeffs)), N).terms();
      },
      py::arg("coeffs"), py::arg("N"), "Power sums of the characteristic roots, indices 0..N.");

  m.def(
      "gamma_coefficients",
      [](std::vector<Integer> coeffs, std::uint64_t m) {
        return gamma_coefficients(CoeffVector<Integer>(std::move(coeffs)), m).gamma;
      },
      py::arg("coeffs"), py::arg("m"));

  m.def(
      "gamma_symbolic",
      [](std::size_t d, std::uint64_t m) {
        std::vector<Poly> vars;
        for (std::size_t i = 0; i < d; ++i) vars.push_back(Poly::variable(d, i));
        std::vector<std::string> out;
        for (const auto& g : gamma_coefficients(CoeffVector<Poly>(vars), m).gamma) out.push_back(g.to_string());
        return out;
      },
      py::arg("d"), py::arg("m"), "Gamma coefficients as polynomials in c1..cd, rendered as strings.");

  m.def(
      "char_poly_of_power",
      [](std::vector<Integer> coeffs, std::uint64_t m) {
        return char_poly_of_power(CoeffVector<Integer>(std::move(coeffs)), m).gamma;
      },
      py::arg("coeffs"), py::arg("m"));

  m.def(
      "subseq_recurrence",
      [](std::vector<Integer> coeffs, std::vector<Integer> initial, std::uint64_t m, std::uint64_t r) {
        auto sub = subseq_recurrence(make_spec(std::move(coeffs), std::move(initial)), m, r);
        return py::make_tuple(sub.gamma.gamma, sub.initial);
      },
      py::arg("coeffs"), py::arg("initial"), py::arg("m"), py::arg("r") = 0,
      "(gamma, initial values) of the recurrence for a(mn+r).");

  m.def(
      "hat_from_gamma",
      [](std::vector<Integer> gamma, std::uint64_t m, std::size_t N) {
        return hat_from_gamma(GammaVector<Integer>{m, std::move(gamma)}, N);
      },
      py::arg("gamma"), py::arg("m"), py::arg("N"));

  m.def(
      "seq_range",
      [](std::vector<Integer> coeffs, std::vector<Integer> initial, std::uint64_t n0, std::uint64_t n1) {
        return seq_range(make_spec(std::move(coeffs), std::move(initial)), n0, n1);
      },
      py::arg("coeffs"), py::arg("initial"), py::arg("n0"), py::arg("n1"));

  m.def(
      "seq_eval",
      [](std::vector<Integer> coeffs, std::vector<Integer> initial, std::uint64_t n) {
        return seq_eval(make_spec(std::move(coeffs), std::move(initial)), n);
      },
      py::arg("coeffs"), py::arg("initial"), py::arg("n"));

  m.def(
      "partial_sum_closed",
      [](std::vector<Integer> coeffs, std::vector<Integer> initial, std::uint64_t n) {
        return partial_sum_closed(make_spec(std::move(coeffs), std::move(initial)), n);
      },
      py::arg("coeffs"), py::arg("initial"), py::arg("n"));

  m.def(
      "progression_sum",
      [](std::vector<Integer> coeffs, std::vector<Integer> initial, std::uint64_t m, std::uint64_t r,
         std::uint64_t n) { return progression_sum(make_spec(std::move(coeffs), std::move(initial)), m, r, n); },
      py::arg("coeffs"), py::arg("initial"), py::arg("m"), py::arg("r"), py::arg("n"));

  m.def(
      "bell_partial",
      [](std::size_t n, std::size_t k, std::vector<Integer> x) { return bell_partial<Integer>(n, k, x); },
      py::arg("n"), py::arg("k"), py::arg("x"));

  m.def(
      "fit_recurrence",
      [](std::vector<Rational> terms, std::size_t d) {
        auto fit = fit_recurrence(terms, d);
        return py::make_tuple(fit.status == FitStatus::Unique ? "unique" : "underdetermined", fit.coeffs,
                              fit.remainder_violations);
      },
      py::arg("terms"), py::arg("d"), "(status, coefficients, indices that disagree beyond the fitted window).");

  m.def("catalog_names", &catalog_names);
  m.def(
      "catalog_get",
      [](const std::string& name) {
        auto e = catalog_get(name);
        py::dict out;
        out["name"] = e.name;
        out["oeis"] = e.oeis ? py::object(py::str(*e.oeis)) : py::object(py::none());
        out["coeffs"] = std::vector<Integer>(e.spec.coeffs.values().begin(), e.spec.coeffs.values().end());
        out["initial"] = e.spec.initial;
        out["prefix"] = e.frozen_prefix;
        return out;
      },
      py::arg("name"));
}
