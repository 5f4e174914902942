// Python bindings for the core operations. Models, pointed models and
// sheaves cross the boundary as their JSON encodings; formulas are a bound
// class so round trips stay exact.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "intck/bridges.hh"
#include "intck/calculus.hh"
#include "intck/fosem.hh"
#include "intck/models.hh"
#include "intck/translate.hh"

namespace py = pybind11;
using namespace intck;

namespace {

Dialect dialect_of(const std::string& name) {
  if (name == "cond") return Dialect::Cond;
  if (name == "modal") return Dialect::Modal;
  throw std::invalid_argument("unknown dialect '" + name + "' (expected cond or modal)");
}

EvalMode mode_of(const std::string& name) {
  if (name == "int") return EvalMode::Int;
  if (name == "weiss") return EvalMode::Weiss;
  throw std::invalid_argument("unknown mode '" + name + "' (expected int or weiss)");
}

ModelClass class_of(const std::string& name) {
  if (name == "chellas") return ModelClass::Chellas;
  if (name == "weiss") return ModelClass::Weiss;
  throw std::invalid_argument("unknown class '" + name + "' (expected chellas or weiss)");
}

py::list violations_list(const ValidationReport& rep) {
  py::list out;
  for (const Violation& v : rep.violations) {
    py::dict d;
    d["condition"] = v.condition;
    d["witness"] = v.witness;
    d["message"] = v.message;
    out.append(d);
  }
  return out;
}

py::dict verdict_dict(const Verdict& v, const ProofScript& script) {
  py::dict d;
  d["ok"] = v.ok;
  d["line"] = v.line;
  d["reason"] = v.reason;
  d["calculus"] = script.calculus;
  if (v.ok) d["conclusion"] = print(script.conclusion());
  return d;
}

// Formula is a shared_ptr alias, which pybind cannot hold directly; a tiny
// value wrapper keeps the Python class by-value and const-correct.
struct PyFormula {
  Formula f;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Intuitionistic conditional logic toolkit";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ProofFormatError>(m, "ProofFormatError");
  py::register_exception<ModelFormatError>(m, "ModelFormatError");
  py::register_exception<SheafFormatError>(m, "SheafFormatError");
  py::register_exception<EvalError>(m, "EvalError");

  py::class_<PyFormula>(m, "Formula")
      .def("__str__", [](const PyFormula& w) { return print(w.f); })
      .def("__repr__", [](const PyFormula& w) { return "<formula " + print(w.f) + ">"; })
      .def(
          "__eq__", [](const PyFormula& a, const PyFormula& b) { return equal(a.f, b.f); },
          py::is_operator())
      .def("__hash__", [](const PyFormula& w) { return py::hash(py::str(print(w.f))); });

  m.def(
      "parse",
      [](const std::string& text, const std::string& dialect) {
        return PyFormula{parse(dialect_of(dialect), text)};
      },
      py::arg("text"), py::arg("dialect") = "cond",
      "Parse a formula in the given dialect ('cond' or 'modal').");
  m.def(
      "atoms", [](const PyFormula& w) { return atoms(w.f); }, py::arg("formula"),
      "Sorted propositional variables of the formula.");

  m.def(
      "evaluate",
      [](const std::string& model_json, const std::string& mode, const std::string& world,
         const PyFormula& w) {
        return eval(model_from_json(model_json), mode_of(mode), world, w.f);
      },
      py::arg("model_json"), py::arg("mode"), py::arg("world"), py::arg("formula"),
      "Truth of the formula at a world ('int' or 'weiss' clauses).");
  m.def(
      "extension",
      [](const std::string& model_json, const PyFormula& w) {
        return extension(model_from_json(model_json), w.f);
      },
      py::arg("model_json"), py::arg("formula"),
      "Worlds where the formula holds under the intuitionistic clauses.");
  m.def(
      "validate_model",
      [](const std::string& model_json, const std::string& cls) {
        return violations_list(validate(model_from_json(model_json), class_of(cls)));
      },
      py::arg("model_json"), py::arg("cls"),
      "Frame condition violations ('chellas' or 'weiss'); empty means valid.");
  m.def(
      "glue",
      [](const std::string& json1, const std::string& json2) {
        return pointed_to_json(glue(model_from_json(json1), model_from_json(json2)));
      },
      py::arg("model_json1"), py::arg("model_json2"),
      "Glue two models under a fresh root; returns the pointed model as JSON.");
  m.def(
      "countermodel",
      [](const PyFormula& w, const std::string& cls, int max_worlds, long budget,
         uint64_t seed) -> std::optional<std::string> {
        SearchParams params;
        params.cls = class_of(cls);
        params.max_worlds = max_worlds;
        params.budget = budget;
        params.seed = seed;
        if (auto found = countermodel_search(w.f, params)) return pointed_to_json(*found);
        return std::nullopt;
      },
      py::arg("formula"), py::arg("cls") = "chellas", py::arg("max_worlds") = 3,
      py::arg("budget") = 1000, py::arg("seed") = 0,
      "First refuting pointed model as JSON, or None within the budget.");

  m.def(
      "check_proof",
      [](const std::string& text) {
        ProofScript script = parse_proof(text);
        return verdict_dict(check(script), script);
      },
      py::arg("text"), "Check a proof script; returns ok/line/reason/conclusion.");
  m.def(
      "check_corpus",
      [] {
        py::list out;
        for (const auto& [name, verdict] : verify_corpus().entries)
          out.append(py::make_tuple(name, verdict.ok));
        return out;
      },
      "Verify every bundled corpus item; returns (name, ok) pairs.");
  m.def(
      "corpus_script",
      [](const std::string& name) {
        const CorpusItem* item = find_corpus_item(name);
        if (!item) throw std::invalid_argument("unknown corpus item '" + name + "'");
        return print_proof(item->script);
      },
      py::arg("name"), "Proof script text of a bundled corpus item.");
  m.def(
      "port_proof",
      [](const std::string& text, const std::string& target, const std::string& bridge) {
        return print_proof(port_proof(parse_proof(text), target, bridge));
      },
      py::arg("text"), py::arg("target"), py::arg("bridge"),
      "Port a proof script across a bridge; returns the target script text.");
  m.def("bridges", [] {
    std::vector<std::string> out;
    for (const Bridge& b : bridges()) out.push_back(b.id);
    return out;
  });

  m.def(
      "tr", [](const PyFormula& w) { return PyFormula{tr(w.f)}; }, py::arg("formula"),
      "Embed a modal formula into the conditional language.");
  m.def(
      "untr", [](const PyFormula& w) { return PyFormula{untr(w.f)}; }, py::arg("formula"),
      "Project a conditional formula back into the modal language.");
  m.def(
      "project_to_int", [](const PyFormula& w) { return PyFormula{project_to_int(w.f)}; }, py::arg("formula"),
      "Erase conditional arrows down to the propositional skeleton.");
  m.def(
      "st", [](const std::string& x, const PyFormula& w) { return fo_print(st(x, w.f)); },
      py::arg("x"), py::arg("formula"),
      "Standard first-order translation with free world variable x.");

  m.def(
      "validate_sheaf",
      [](const std::string& sheaf_json) {
        return violations_list(validate_sheaf(sheaf_from_json(sheaf_json)));
      },
      py::arg("sheaf_json"), "Sheaf condition violations; empty means valid.");
  m.def(
      "check_th",
      [](const std::string& sheaf_json, const std::vector<std::string>& vars) {
        py::list out;
        for (const auto& fail : check_th(sheaf_from_json(sheaf_json), vars).failures) {
          py::dict d;
          d["sentence"] = fail.sentence;
          d["node"] = fail.node;
          out.append(d);
        }
        return out;
      },
      py::arg("sheaf_json"), py::arg("vars"),
      "Th sentences failing on the sheaf; empty means all hold.");
  m.def(
      "eval_st",
      [](const std::string& sheaf_json, const std::string& node, const std::string& element,
         const PyFormula& w) {
        KripkeSheaf s = sheaf_from_json(sheaf_json);
        return eval_fo(s, node, st("x", w.f), {{"x", element}});
      },
      py::arg("sheaf_json"), py::arg("node"), py::arg("element"), py::arg("formula"),
      "Truth of the standard translation at a node with x bound to element.");
}
