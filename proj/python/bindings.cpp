// Python extension: structured values cross the boundary as JSON text in the
// same format the command line tool reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hopfkit/acceptance.hpp"
#include "hopfkit/arithcheck.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/serialize.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace hopfkit;

namespace {

HopfPresentation parse_presentation(const std::string& text) { return presentation_from_json(parse_json(text)); }

LiftState parse_lift(const std::string& text) { return lift_state_from_json(parse_json(text)); }

std::string gen(const std::string& name, std::uint64_t p, unsigned n, unsigned m) {
  return dump_json(presentation_to_json(builtin_presentation(name, Ring::make(p, n, m))));
}

std::string validate(const std::string& pres) {
  return dump_json(axiom_report_to_json(verify_hopf(parse_presentation(pres))));
}

std::string analyze_text(const std::string& pres) {
  const HopfPresentation h = parse_presentation(pres);
  return dump_json(analysis_to_json(h.ring, analyze(h)));
}

std::string dual_text(const std::string& pres) { return dump_json(presentation_to_json(dual(parse_presentation(pres)))); }

std::string double_text(const std::string& pres) {
  const DoubleResult d = drinfeld_double(parse_presentation(pres));
  Json j;
  j["hopf"] = presentation_to_json(d.double_algebra);
  j["R"] = rmatrix_to_json(d.r_matrix, d.double_algebra.dim);
  return dump_json(j);
}

std::vector<std::size_t> cohomology(const std::string& pres, const std::vector<unsigned>& degrees, bool invariants) {
  const BialgebraComplex cx(parse_presentation(pres));
  std::vector<std::size_t> out;
  for (unsigned n : degrees) out.push_back(invariants ? cx.invariants_complex_dim(n) : cx.cohomology_dim(n));
  return out;
}

std::string lift_text(const std::string& pres, unsigned precision, const std::string& strategy) {
  const LiftStrategy s = LiftStrategy::parse(strategy);
  return dump_json(lift_state_to_json(lift(parse_presentation(pres), precision, s), s));
}

std::string reconcile_text(const std::string& a, const std::string& b) {
  return dump_json(multimap_to_json(reconcile(parse_lift(a), parse_lift(b))));
}

std::string lift_map_text(const std::string& morphism, const std::string& a, const std::string& b) {
  return dump_json(morphism_to_json(lift_morphism(morphism_from_json(parse_json(morphism)), parse_lift(a), parse_lift(b))));
}

std::string lift_rmatrix_text(const std::string& pres, const std::string& r, const std::string& state) {
  const HopfPresentation h = parse_presentation(pres);
  const MultiMap rm = rmatrix_from_json(h.ring, h.dim, parse_json(r));
  return dump_json(rmatrix_to_json(lift_rmatrix(h, rm, parse_lift(state)), h.dim));
}

// Integers beyond 64 bits go through their decimal form.
py::int_ to_py(const BigInt& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list cyclotomic_coeffs(unsigned r) {
  const IntPolynomial phi = cyclotomic(r);
  py::list out;
  for (const auto& c : phi.coeffs()) out.append(to_py(c));
  return out;
}

std::string lemma_text(const std::vector<std::int64_t>& coeffs, unsigned r, std::uint64_t p) {
  const IntPolynomial poly = IntPolynomial::from_ints(coeffs);
  return dump_json(lemma_report_to_json(poly, nonvanishing_verdict(poly, r, p)));
}

}  // namespace

PYBIND11_MODULE(_hopfkit, m) {
  m.doc() = "Exact Hopf algebra computations over finite fields and Galois rings";

  static py::exception<Error> error(m, "HopfkitError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, py::make_tuple(std::string(to_string(e.code())), std::string(e.what())));
    }
  });

  const auto release = py::call_guard<py::gil_scoped_release>();
  m.def("gen", &gen, "name"_a, "p"_a, "n"_a = 1, "m"_a = 1);
  m.def("validate", &validate, "presentation"_a, release);
  m.def("analyze", &analyze_text, "presentation"_a, release);
  m.def("dual", &dual_text, "presentation"_a);
  m.def("double", &double_text, "presentation"_a, release);
  m.def("cohomology", &cohomology, "presentation"_a, "degrees"_a, "invariants"_a = false, release);
  m.def("lift", &lift_text, "presentation"_a, "precision"_a, "strategy"_a = "canonical", release);
  m.def("reconcile", &reconcile_text, "lift_a"_a, "lift_b"_a, release);
  m.def("lift_morphism", &lift_map_text, "morphism"_a, "lift_a"_a, "lift_b"_a, release);
  m.def("lift_rmatrix", &lift_rmatrix_text, "presentation"_a, "r"_a, "lift"_a, release);
  m.def("cyclotomic", &cyclotomic_coeffs, "r"_a);
  m.def("conjugate_product", [](const std::vector<std::int64_t>& coeffs, unsigned r) {
    return to_py(conjugate_product(IntPolynomial::from_ints(coeffs), r));
  }, "coeffs"_a, "r"_a);
  m.def("nonvanishing_verdict", &lemma_text, "coeffs"_a, "r"_a, "p"_a);
  m.def("threshold", [](unsigned d) { return to_py(kaplansky_threshold(d).value); }, "d"_a);
  m.def("acceptance_count", &acceptance_count);
  m.def("run_acceptance", [](const std::vector<unsigned>& only) {
    std::vector<CriterionResult> results;
    {
      py::gil_scoped_release unlocked;
      results = run_acceptance(only);
    }
    py::list out;
    for (const auto& r : results) out.append(py::make_tuple(r.id, r.title, r.passed, r.detail, r.seconds));
    return out;
  }, "only"_a = std::vector<unsigned>{});
}
