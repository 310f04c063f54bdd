// Python bindings: a thin string-based surface over the core operations.
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alfa/corpus.hpp"
#include "alfa/derivation.hpp"
#include "alfa/formula.hpp"
#include "alfa/nd.hpp"
#include "alfa/rules.hpp"
#include "alfa/script.hpp"
#include "alfa/search.hpp"
#include "alfa/semantics.hpp"

namespace py = pybind11;
using namespace alfa;

namespace {

SystemId system_or_throw(const std::string& name) {
  const auto sys = parse_system(name);
  if (!sys) throw std::invalid_argument("unknown system: " + name);
  return *sys;
}

py::list check_script(const std::string& text) {
  LemmaDb db;
  py::list out;
  for (const auto& d : parse_proofs(text)) {
    const Verdict v = db.add(d);
    const Sequent claim = claim_of(d);
    py::dict row;
    row["system"] = system_name(d.system);
    row["name"] = d.name;
    row["ok"] = v.ok;
    row["source"] = print_graph(claim.source);
    row["target"] = print_graph(claim.target);
    row["step"] = v.step_index;
    row["message"] = v.message;
    out.append(row);
  }
  return out;
}

std::optional<std::string> search_text(const std::string& system,
                                       const std::string& source,
                                       const std::string& target, int steps) {
  Sequent goal{parse_graph(source), parse_graph(target)};
  SearchOptions opts;
  opts.max_steps = steps;
  const auto found = prove(system_or_throw(system), goal, LemmaDb{}, opts);
  if (!found) return std::nullopt;
  return print_proof(*found);
}

std::optional<std::string> countermodel_text(const std::string& formula,
                                             int max_worlds) {
  const auto model = kripke_countermodel(parse_formula(formula), max_worlds);
  if (!model) return std::nullopt;
  return print_kripke(*model);
}

py::list compile_nd_text(const std::string& text) {
  py::list out;
  for (const auto& p : parse_nd(text)) {
    const Derivation d = compile_nd(p);
    const Verdict v = check(d, LemmaDb{});
    const Sequent claim = claim_of(d);
    py::dict row;
    row["name"] = p.name;
    row["ok"] = v.ok;
    row["source"] = print_graph(claim.source);
    row["target"] = print_graph(claim.target);
    row["derivation"] = print_proof(d);
    out.append(row);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "existential-graph proof toolkit";

  m.def(
      "canon_graph",
      [](const std::string& text) { return print_graph(parse_graph(text)); },
      py::arg("text"), "Parse a sheet and print its canonical form.");
  m.def(
      "translate",
      [](const std::string& text) {
        return print_formula(translate(parse_graph(text)));
      },
      py::arg("graph"), "Read a sheet as a propositional formula.");
  m.def(
      "embed",
      [](const std::string& text) {
        return print_graph(embed(parse_formula(text)));
      },
      py::arg("formula"), "Draw a propositional formula as a sheet.");
  m.def("check_script", &check_script, py::arg("text"),
        "Check every theorem in a script; returns one dict per theorem.");
  m.def(
      "classical_valid",
      [](const std::string& text) { return classical_valid(parse_formula(text)); },
      py::arg("formula"));
  m.def(
      "ipc_valid",
      [](const std::string& text) { return ipc_valid(parse_formula(text)); },
      py::arg("formula"));
  m.def("countermodel", &countermodel_text, py::arg("formula"),
        py::arg("max_worlds") = 4,
        "Kripke countermodel text for a constructively invalid formula, or "
        "None.");
  m.def("search", &search_text, py::arg("system"), py::arg("source"),
        py::arg("target"), py::arg("steps") = 6,
        "Bounded proof search; returns the derivation script text, or None.");
  m.def("compile_nd", &compile_nd_text, py::arg("text"),
        "Compile natural-deduction proofs; returns one dict per proof.");
}
