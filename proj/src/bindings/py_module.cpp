#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mgcage/bounds.hpp"
#include "mgcage/construct.hpp"
#include "mgcage/graph.hpp"
#include "mgcage/io.hpp"
#include "mgcage/metrics.hpp"
#include "mgcage/search.hpp"

namespace py = pybind11;
using namespace mgcage;

namespace {

// Graphs cross the boundary as mg-format text; everything else is plain
// dicts, so the module stays usable without any wrapper classes.

using WitnessRow = std::tuple<int, std::string, int, int>;

std::vector<WitnessRow> witness_rows(const std::vector<WitnessStep>& cycle) {
  std::vector<WitnessRow> rows;
  rows.reserve(cycle.size());
  for (const WitnessStep& step : cycle) {
    rows.emplace_back(step.vertex, step.via.is_edge() ? "e" : "a", step.via.u,
                      step.via.v);
  }
  return rows;
}

py::dict girth_dict(const GirthReport& report) {
  py::dict d;
  d["girth"] = report.girth;
  d["witness"] = witness_rows(report.cycle);
  return d;
}

py::dict verify_dict(const MixedGraph& g) {
  py::dict d;
  d["order"] = g.order();
  d["edges"] = g.edge_count();
  d["arcs"] = g.arc_count();
  const RegularityReport reg = regularity(g);
  d["regular"] = reg.is_regular;
  d["z"] = reg.z;
  d["r"] = reg.r;
  const GirthReport gr = girth(g);
  d["girth"] = gr.girth;
  d["witness"] = witness_rows(gr.cycle);
  d["strongly_connected"] = is_strongly_connected(g);
  d["underlying_2connected"] = underlying_is_2connected(g);
  return d;
}

py::dict bounds_dict(const BoundsTable& table) {
  py::dict d;
  std::vector<std::pair<int, std::string>> lower, upper;
  for (const BoundEntry& e : table.lower_bounds) lower.emplace_back(e.value, e.method);
  for (const BoundEntry& e : table.upper_bounds) upper.emplace_back(e.value, e.method);
  d["lower"] = lower;
  d["upper"] = upper;
  d["best_lower"] = table.best_lower;
  d["best_upper"] = table.best_upper;
  return d;
}

std::string graph_text(const ConstructionReport& report) {
  return serialize_mg(report.graph);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "construct, verify, bound, and search [z,r;g]-mixed graphs";

  py::register_exception<Error>(m, "MgError");

  m.def("canonical", [](const std::string& text) { return serialize_mg(parse_mg(text)); },
        py::arg("text"), "re-emit mg text in canonical form");
  m.def("export_dot", [](const std::string& text) { return export_dot(parse_mg(text)); },
        py::arg("text"));

  m.def("verify", [](const std::string& text) { return verify_dict(parse_mg(text)); },
        py::arg("text"), "order, degrees, girth with witness, connectivity");
  m.def("girth", [](const std::string& text) { return girth_dict(girth(parse_mg(text))); },
        py::arg("text"));
  m.def("mixed_distance",
        [](const std::string& text, int u, int v) {
          return mixed_distance(parse_mg(text), u, v);
        },
        py::arg("text"), py::arg("u"), py::arg("v"));
  m.def("nonalternating_girth_cycle",
        [](const std::string& text, std::uint64_t budget) {
          return has_nonalternating_girth_cycle(parse_mg(text), budget);
        },
        py::arg("text"), py::arg("budget") = 10'000'000);

  m.def("moore_bound", &moore_bound, py::arg("r"), py::arg("g"));
  m.def("lower_bound_z1", &lower_bound_z1, py::arg("r"), py::arg("g"));
  m.def("lower_bound_general", &lower_bound_general, py::arg("z"), py::arg("r"),
        py::arg("g"));
  m.def("bounds", [](int z, int r, int g) { return bounds_dict(bounds_table(z, r, g)); },
        py::arg("z"), py::arg("r"), py::arg("g"));

  m.def("cage_10_3_5", [] { return graph_text(construct_cage_10_3_5()); });
  m.def("g5", [](int z, int r) { return graph_text(construct_g5(z, r)); },
        py::arg("z"), py::arg("r"));
  m.def("gcopies",
        [](int r, int g, int z) {
          return graph_text(construct_gcopies(cage_catalog(r, g), g, z));
        },
        py::arg("r"), py::arg("g"), py::arg("z"));
  m.def("biaffine",
        [](int q, int gamma) {
          BiaffinePlane plane = biaffine_incidence(q);
          if (gamma > 0) plane = reduce_plane(plane, gamma);
          return serialize_mg(plane.graph);
        },
        py::arg("q"), py::arg("gamma") = 0);
  m.def("circulant_graph",
        [](int p, int z) { return serialize_mg(circulant(p, z)); }, py::arg("p"),
        py::arg("z"));

  m.def("search",
        [](int z, int r, int g, int n, std::uint64_t budget) {
          const SearchOutcome out = search(z, r, g, n, budget);
          py::dict d;
          d["status"] = std::string(search_status_name(out.status));
          d["nodes"] = out.nodes_expanded;
          d["witness"] = out.witness ? py::cast(serialize_mg(*out.witness))
                                     : py::object(py::none());
          return d;
        },
        py::arg("z"), py::arg("r"), py::arg("g"), py::arg("n"),
        py::arg("budget") = 10'000'000);
  m.def("certify_minimum",
        [](int z, int r, int g, int n_max, std::uint64_t budget) {
          const CertifyOutcome out = certify_minimum(z, r, g, n_max, budget);
          py::dict d;
          d["minimal_n"] = out.minimal_n;
          d["conclusive"] = out.conclusive;
          d["n_lo"] = out.n_lo;
          d["n_hi"] = out.n_hi;
          return d;
        },
        py::arg("z"), py::arg("r"), py::arg("g"), py::arg("n_max"),
        py::arg("budget") = 10'000'000);
}
