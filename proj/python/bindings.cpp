#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "brho/antirho.hpp"
#include "brho/canonical.hpp"
#include "brho/cycle_detect.hpp"
#include "brho/fast_apply.hpp"
#include "brho/lambda.hpp"
#include "brho/restricted.hpp"

namespace py = pybind11;
using namespace brho;

namespace {

DegreeSeq to_seq(const std::vector<Degree>& d) { return DegreeSeq::from_degrees(d); }

py::tuple rho(const std::string& term, const std::string& engine, const std::string& algorithm,
              std::uint64_t max_steps) {
  const Algorithm alg = parse_algorithm(algorithm);
  RhoResult r;
  {
    py::gil_scoped_release release;
    if (engine == "canonical") {
      RhoOptions o;
      o.algorithm = alg;
      o.max_steps = max_steps;
      r = find_rho(parse_bterm(term), o);
    } else if (engine == "lambda") {
      r = rho_lambda(bterm_to_lambda(parse_bterm(term)), max_steps, kDefaultStepBudget, alg);
    } else if (engine == "restricted") {
      RTermArena arena;
      r = find_rho_restricted(arena, parse_rterm(arena, term), max_steps, alg);
    } else {
      throw std::invalid_argument("unknown engine '" + engine + "'");
    }
  }
  return py::make_tuple(r.entry, r.cycle);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "B-term canonical forms and rho-property search";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<SyntaxError>(m, "TermSyntaxError", base.ptr());
  py::register_exception<NotFound>(m, "NotFound", base.ptr());
  py::register_exception<StepBudgetExceeded>(m, "StepBudgetExceeded", base.ptr());

  m.def("canonical", [](const std::string& term) { return canonicalize(parse_bterm(term)).expanded(); },
        py::arg("term"), "Degrees of the decreasing polynomial equal to the term.");
  m.def("canonical_text", [](const std::string& term) { return canonicalize(parse_bterm(term)).to_string(); },
        py::arg("term"));
  m.def("equivalent",
        [](const std::string& a, const std::string& b) { return equivalent_bterms(parse_bterm(a), parse_bterm(b)); },
        py::arg("term1"), py::arg("term2"));
  m.def("is_monomial", [](const std::string& term) { return is_monomial(canonicalize(parse_bterm(term))); },
        py::arg("term"));
  m.def("apply", [](const std::vector<Degree>& f, const std::vector<Degree>& x) {
    return apply_poly(to_seq(f), to_seq(x)).expanded();
  }, py::arg("fn"), py::arg("arg"), "Canonical form of the application of two canonical forms.");
  m.def("to_term", [](const std::vector<Degree>& d) { return to_string(seq_to_bterm(to_seq(d))); }, py::arg("degrees"));
  m.def("tree", [](const std::vector<Degree>& d) { return to_string(tree_of(to_seq(d))); }, py::arg("degrees"));
  m.def("nodes", [](const std::string& tree) { return nodes(parse_tree(tree)); }, py::arg("tree"));
  m.def("iterate", [](const std::string& term, std::uint64_t count) {
    std::vector<std::vector<Degree>> out;
    for (const DegreeSeq& s : iterate(parse_bterm(term), count)) out.push_back(s.expanded());
    return out;
  }, py::arg("term"), py::arg("count"));
  m.def("rho", &rho, py::arg("term"), py::arg("engine") = "canonical", py::arg("algorithm") = "brent",
        py::arg("max_steps") = 10'000'000'000ULL, "Minimal (entry, cycle) under right self-application.");
  m.def("normal_form", [](const std::string& term) { return to_string(normalize(bterm_to_lambda(parse_bterm(term)))); },
        py::arg("term"), "Beta-eta normal form of the lambda image, de Bruijn notation.");
  m.def("antirho_report", [](std::uint64_t k, std::uint64_t n, std::uint64_t steps) {
    const Report r = check_tkn({k, n}, steps);
    return py::make_tuple(r.all_hold(), r.to_string());
  }, py::arg("k"), py::arg("n"), py::arg("steps") = 100);
}
