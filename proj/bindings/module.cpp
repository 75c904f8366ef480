#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "g2chev/adjoint.hpp"
#include "g2chev/commutators.hpp"
#include "g2chev/constants.hpp"

namespace py = pybind11;
using namespace g2chev;

namespace {

const ConstantTable& table() {
  static const ConstantTable t = solve();
  return t;
}

std::optional<SignAssignment> signs_arg(const std::optional<std::string>& signs) {
  if (!signs || *signs == "symbolic") return std::nullopt;
  return SignAssignment::parse(*signs);
}

py::object coeff_value(const SignCoefficient& c, const std::optional<SignAssignment>& sigma) {
  if (sigma) return py::int_(c.specialize(*sigma).as_integer());
  return py::str(render(c, CoeffStyle::ascii));
}

CoeffStyle style_arg(const std::string& fmt) {
  if (fmt == "ascii") return CoeffStyle::ascii;
  if (fmt == "unicode") return CoeffStyle::unicode;
  if (fmt == "latex") return CoeffStyle::latex;
  throw std::invalid_argument("format must be ascii, unicode or latex");
}

py::dict formula_dict(const CommutatorFormula& f, const std::optional<SignAssignment>& sigma) {
  py::dict out;
  out["left"] = to_string(f.s);
  out["right"] = to_string(f.r);
  py::list terms;
  for (const FormulaTerm& term : f.terms) {
    py::dict jt;
    jt["i"] = term.i;
    jt["j"] = term.j;
    jt["target"] = to_string(term.target);
    jt["coeff"] = coeff_value(term.c, sigma);
    terms.append(jt);
  }
  out["terms"] = terms;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Structure constants and commutator formulas of the Chevalley group of type G2";

  m.def("roots", [] {
    std::vector<std::string> out;
    for (const Root& r : all_roots()) out.push_back(to_string(r));
    return out;
  }, "The 12 roots in canonical order, as strings like '3a+2b'.");

  m.def("inner", [](const std::string& r, const std::string& s) {
    return inner(parse_root(r), parse_root(s));
  }, py::arg("r"), py::arg("s"), "Inner product of two roots.");

  m.def("chain_p", [](const std::string& r, const std::string& s) {
    return chain_p(parse_root(r), parse_root(s));
  }, py::arg("r"), py::arg("s"), "Largest p with s - p*r still a root.");

  m.def("structure_constants", [](const std::optional<std::string>& signs) {
    auto sigma = signs_arg(signs);
    py::dict out;
    for (const auto& [r, s, value] : table().nonzero_entries())
      out[py::str(to_string(r) + "|" + to_string(s))] = coeff_value(value, sigma);
    return out;
  }, py::arg("signs") = py::none(),
     "All 60 nonzero constants keyed 'r|s'; symbolic strings, or integers "
     "when signs is four of +/- like '++++'.");

  m.def("commutator_formula", [](const std::string& left, const std::string& right,
                                 const std::optional<std::string>& signs) {
    return formula_dict(formula(table(), parse_root(left), parse_root(right)), signs_arg(signs));
  }, py::arg("left"), py::arg("right"), py::arg("signs") = py::none(),
     "Structured commutator formula for [x_left(u), x_right(t)].");

  m.def("render_formula", [](const std::string& left, const std::string& right,
                             const std::optional<std::string>& signs, const std::string& fmt) {
    auto sigma = signs_arg(signs);
    CommutatorFormula f = formula(table(), parse_root(left), parse_root(right));
    return render_equation(f, style_arg(fmt), sigma ? &*sigma : nullptr);
  }, py::arg("left"), py::arg("right"), py::arg("signs") = py::none(),
     py::arg("format") = "ascii", "The commutator formula as one equation string.");

  m.def("reference_pairs", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const FormulaKey& key : reference_pairs())
      out.emplace_back(to_string(key.left), to_string(key.right));
    return out;
  }, "The 41 bundled (left, right) pairs, in reference order.");

  m.def("verify", [](const std::string& signs) {
    std::vector<SignAssignment> sigmas;
    if (signs == "all")
      sigmas = all_assignments();
    else
      sigmas.push_back(SignAssignment::parse(signs));

    int formulas_passed = 0, formulas_total = 0;
    int jacobi_passed = 0, jacobi_total = 0;
    int relations_passed = 0, relations_total = 0;
    auto formulas = all_formulas(table());
    for (const SignAssignment& sigma : sigmas) {
      ++relations_total;
      if (relation_violations(table(), sigma).empty()) ++relations_passed;
      AdjointAlgebra oracle(table(), sigma);
      ++jacobi_total;
      if (oracle.jacobi_violations().empty()) ++jacobi_passed;
      for (const CommutatorFormula& f : formulas) {
        ++formulas_total;
        if (oracle.verify_formula(f)) ++formulas_passed;
      }
    }
    py::dict out;
    out["formulas_passed"] = formulas_passed;
    out["formulas_total"] = formulas_total;
    out["jacobi_passed"] = jacobi_passed;
    out["jacobi_total"] = jacobi_total;
    out["relation_suites_passed"] = relations_passed;
    out["relation_suites_total"] = relations_total;
    out["ok"] = formulas_passed == formulas_total && jacobi_passed == jacobi_total &&
                relations_passed == relations_total;
    return out;
  }, py::arg("signs") = "all",
     "Run the relation suite, Jacobi checks and the matrix oracle; signs is "
     "'all' or four of +/-.");
}
