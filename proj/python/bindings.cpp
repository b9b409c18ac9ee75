// Python bindings for the main operations: catalog access, analysis
// reports, point counting, poset export, and the theorem verdicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bstack/catalog.hpp"
#include "bstack/report.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  py::module_ json_mod = py::module_::import("json");
  return json_mod.attr("loads")(j.dump());
}

bstack::GroupPtr resolve(const std::string& spec, int max_order) {
  return bstack::resolve_group(spec, max_order);
}

}  // namespace

PYBIND11_MODULE(_bstack, m) {
  m.doc() = "exact engine for stabilizer posets, reflection arrangements, and "
            "motivic classifying-stack classes";

  py::register_exception<bstack::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<bstack::ArithmeticError>(m, "ArithmeticError",
                                                  PyExc_ArithmeticError);
  py::register_exception<bstack::Error>(m, "EngineError", PyExc_RuntimeError);

  m.def("catalog_families", &bstack::catalog_families,
        "name patterns of the built-in group families");
  m.def("catalog_examples", &bstack::catalog_examples,
        "concrete built-in groups used by the test battery");

  m.def(
      "group_info",
      [](const std::string& spec, int max_order) {
        bstack::GroupPtr g = resolve(spec, max_order);
        py::dict d;
        d["name"] = g->name();
        d["order"] = g->order();
        d["dim"] = g->dim();
        d["zeta_order"] = g->field_order();
        d["exponent"] = g->exponent();
        return d;
      },
      py::arg("spec"), py::arg("max_order") = bstack::kDefaultClosureCap,
      "basic facts about a group ('catalog:NAME' or a JSON file path)");

  m.def(
      "analyze",
      [](const std::string& spec, bool reflection_mode, bool timing, int max_order) {
        bstack::AnalyzeOptions opts;
        opts.closure_cap = max_order;
        opts.reflection_mode = reflection_mode;
        opts.timing = timing;
        return json_to_py(bstack::analyze_group(resolve(spec, max_order), opts));
      },
      py::arg("spec"), py::arg("reflection_mode") = true, py::arg("timing") = false,
      py::arg("max_order") = bstack::kDefaultClosureCap,
      "full analysis report (stabilizer poset, Mobius data, phi, identity "
      "check, verdict certificate)");

  m.def(
      "count_points",
      [](const std::string& spec, long long prime, int max_order) {
        return json_to_py(
            bstack::count_points_report(resolve(spec, max_order), prime));
      },
      py::arg("spec"), py::arg("prime"),
      py::arg("max_order") = bstack::kDefaultClosureCap,
      "arrangement-complement point count over F_p next to chi(p)");

  m.def(
      "export_poset",
      [](const std::string& spec, bool full, const std::string& format,
         int max_order) -> py::object {
        bstack::GroupPtr g = resolve(spec, max_order);
        if (format == "dot") return py::str(bstack::export_poset_dot(g, full));
        if (format == "json") return json_to_py(bstack::export_poset_json(g, full));
        throw bstack::InputError("format must be 'dot' or 'json'");
      },
      py::arg("spec"), py::arg("full") = false, py::arg("format") = "dot",
      py::arg("max_order") = bstack::kDefaultClosureCap,
      "Hasse diagram of the orbit poset (or the full stabilizer poset)");

  m.def(
      "theorem_b",
      [](const std::string& g_spec, const std::string& w_spec, int max_order) {
        bstack::VerdictEngine engine(max_order);
        return json_to_py(engine
                              .verdict_projective_reduction(
                                  resolve(g_spec, max_order), resolve(w_spec, max_order))
                              ->to_json());
      },
      py::arg("g_spec"), py::arg("w_spec"),
      py::arg("max_order") = bstack::kDefaultClosureCap,
      "triviality through an equal projective reduction");

  m.def(
      "theorem_c",
      [](const std::string& w_spec, int q, int max_order) {
        bstack::VerdictEngine engine(max_order);
        return json_to_py(
            engine.verdict_projective_reflection(resolve(w_spec, max_order), q)
                ->to_json());
      },
      py::arg("w_spec"), py::arg("q"),
      py::arg("max_order") = bstack::kDefaultClosureCap,
      "triviality for the projective reflection group W/C_q");
}
