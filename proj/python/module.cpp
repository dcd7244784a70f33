#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "singgraph/gen.hpp"
#include "singgraph/report.hpp"
#include "singgraph/version.hpp"

namespace py = pybind11;

namespace {

// The bindings speak JSON strings; the python package turns them into dicts.
std::string report_json(const std::string& graph_text, bool tower) {
  auto p = sg::run_pipeline(sg::parse_graph(graph_text));
  return sg::dump_json(sg::build_report(p, graph_text, {tower}));
}

std::string report_text(const std::string& graph_text, bool tower) {
  auto p = sg::run_pipeline(sg::parse_graph(graph_text));
  return sg::render_text(sg::build_report(p, graph_text, {tower}));
}

py::dict check(const std::string& graph_text) {
  const auto result = sg::check_graph_text(graph_text);
  py::dict out;
  out["ok"] = result.ok;
  if (!result.ok) out["diagnostic"] = result.diagnostic;
  return out;
}

std::string dot(const std::string& graph_text) {
  return sg::emit_dot(sg::run_pipeline(sg::parse_graph(graph_text)));
}

std::string fundamental_cycle_json(const std::string& graph_text) {
  const auto g = sg::parse_graph(graph_text);
  const auto z = sg::fundamental_cycle(g).final();
  return sg::dump_json(sg::cycle_to_json(g, z));
}

bool negative_definite(const std::string& graph_text) {
  return sg::is_negative_definite(sg::parse_graph(graph_text));
}

bool rational(const std::string& graph_text) {
  const auto g = sg::parse_graph(graph_text);
  if (!sg::is_negative_definite(g)) return false;
  return sg::scalar_invariants(g).rational;
}

std::string chain(const std::vector<long long>& weights) {
  return sg::serialize_graph(sg::gen_chain(weights));
}

std::string cyclic(long long n, long long q) {
  return sg::serialize_graph(sg::gen_cyclic(n, q));
}

sg::ConfigClass class_from_name(const std::string& name, long long q, long long m) {
  using sg::ConfigFamily;
  if (name == "1-A") return {ConfigFamily::OneA, m, q, 0};
  if (name == "2-AL") return {ConfigFamily::TwoAL, m, q, 0};
  if (name == "2-AR") return {ConfigFamily::TwoAR, m, q, 0};
  if (name == "2-AS") return {ConfigFamily::TwoAS, m, 0, 0};
  if (name == "3-A") return {ConfigFamily::ThreeA, m, q, 0};
  if (name == "2-D")
    return m % 2 == 0 ? sg::ConfigClass{ConfigFamily::TwoDEven, m, 0, m / 2}
                      : sg::ConfigClass{ConfigFamily::TwoDOdd, m, 0, (m - 1) / 2};
  if (name == "1-DI") return {ConfigFamily::OneDI, m, 0, m};
  if (name == "1-DII")
    return m % 2 == 0 ? sg::ConfigClass{ConfigFamily::OneDIIEven, m, 0, m / 2}
                      : sg::ConfigClass{ConfigFamily::OneDIIOdd, m, 0, (m - 1) / 2};
  if (name == "1-E6") return {ConfigFamily::OneE6, 6, 0, 0};
  if (name == "1-E7") return {ConfigFamily::OneE7, 7, 0, 0};
  throw sg::DomainError("unknown_class", "unknown catalog class: " + name);
}

std::string catalog(const std::string& cls_name, long long q, long long m,
                    const std::vector<long long>& attach) {
  const auto cls = class_from_name(cls_name, q, m);
  std::vector<long long> weights = attach;
  if (weights.empty()) weights.assign(static_cast<size_t>(cls.n_attached()), -3);
  return sg::serialize_graph(sg::gen_catalog(cls, weights));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "deformation invariants of rational surface singularities from dual graphs";
  m.attr("__version__") = sg::kToolVersion;

  py::register_exception<sg::InternalError>(m, "InternalError", PyExc_RuntimeError);
  py::register_exception<sg::DomainError>(m, "GraphDomainError", PyExc_ValueError);
  py::register_exception<sg::ValidationError>(m, "GraphValidationError", PyExc_ValueError);
  py::register_exception<sg::SchemaError>(m, "GraphSchemaError", PyExc_ValueError);

  m.def("report_json", &report_json, py::arg("graph_text"), py::arg("tower") = false,
        "full invariant report as a JSON string");
  m.def("report_text", &report_text, py::arg("graph_text"), py::arg("tower") = false,
        "full invariant report rendered as text");
  m.def("check", &check, py::arg("graph_text"),
        "validate a graph document; returns {'ok': bool, 'diagnostic': str}");
  m.def("dot", &dot, py::arg("graph_text"), "DOT rendering");
  m.def("fundamental_cycle_json", &fundamental_cycle_json, py::arg("graph_text"),
        "fundamental cycle as a JSON object string");
  m.def("negative_definite", &negative_definite, py::arg("graph_text"));
  m.def("rational", &rational, py::arg("graph_text"));
  m.def("gen_chain", &chain, py::arg("weights"));
  m.def("gen_cyclic", &cyclic, py::arg("n"), py::arg("q"));
  m.def("gen_catalog", &catalog, py::arg("cls"), py::arg("q") = 0, py::arg("m") = 0,
        py::arg("attach") = std::vector<long long>{});
}
