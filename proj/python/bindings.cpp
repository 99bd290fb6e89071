#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccq/apparent.hpp"
#include "ccq/commands.hpp"
#include "ccq/error.hpp"
#include "ccq/export.hpp"
#include "ccq/io.hpp"
#include "ccq/parse.hpp"
#include "ccq/pipeline.hpp"
#include "ccq/rational.hpp"
#include "ccq/realroot.hpp"
#include "ccq/subresultant.hpp"

namespace py = pybind11;
using namespace ccq;

namespace {

std::vector<BiPoly> parse_all(const std::vector<std::string>& texts) {
  std::vector<BiPoly> out;
  for (const auto& t : texts) out.push_back(parse_bipoly(t));
  return out;
}

py::dict graph_dict(const TopologyGraph& G) {
  const auto xy = vertex_coordinates(G);
  py::list vertices;
  for (const auto& v : G.vertices) {
    py::dict d;
    d["id"] = v.id;
    d["fiber"] = v.fiber;
    d["kind"] = to_string(v.kind);
    d["x"] = xy[static_cast<std::size_t>(v.id)].first;
    d["y"] = xy[static_cast<std::size_t>(v.id)].second;
    vertices.append(d);
  }
  py::dict g;
  g["vertices"] = vertices;
  g["edges"] = G.edges;
  g["v_app"] = G.v_app;
  g["v_ctrl"] = G.v_ctrl;
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Connectivity queries on real algebraic space curves";
  py::register_exception<Error>(m, "Error");

  m.def(
      "run_command",
      [](const std::string& command, const std::string& json_text, bool components_only,
         std::optional<std::string> eps, std::optional<std::string> dot, std::optional<std::string> svg) {
        CommandOptions opts;
        opts.components_only = components_only;
        opts.dot_path = std::move(dot);
        opts.svg_path = std::move(svg);
        if (eps) opts.eps = parse_rational(*eps);
        CommandOutput r;
        {
          py::gil_scoped_release release;
          r = run_command_text(command, json_text, opts);
        }
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("command"), py::arg("json_text"), py::arg("components_only") = false, py::arg("eps") = py::none(),
      py::arg("dot") = py::none(), py::arg("svg") = py::none(),
      "Runs validate, appsing, topo or connect on problem JSON; returns (exit_code, stdout, stderr).");

  m.def(
      "resultant", [](const std::string& f, const std::string& g) { return to_string(resultant_x2(parse_bipoly(f), parse_bipoly(g))); },
      py::arg("f"), py::arg("g"), "Res_x2(f, g) as a polynomial in x1.");

  m.def(
      "first_subresultant",
      [](const std::string& f, const std::string& g) {
        const auto s = first_subresultant_x2(parse_bipoly(f), parse_bipoly(g));
        return py::make_tuple(to_string(s.sr1), to_string(s.sr10));
      },
      py::arg("f"), py::arg("g"), "(sr1, sr10) with S_1 = sr1 * x2 + sr10.");

  m.def(
      "isolate",
      [](const std::string& p) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& a : isolate(parse_unipoly(p))) out.emplace_back(a.isol().lo.get_str(), a.isol().hi.get_str());
        return out;
      },
      py::arg("p"), "Isolating intervals (lo, hi) of the real roots of a square-free polynomial.");

  m.def(
      "apparent_singularities",
      [](const std::string& omega, const std::vector<std::string>& rhos) {
        const OneDimParam C{2 + static_cast<int>(rhos.size()), parse_bipoly(omega), parse_all(rhos)};
        const ApparentResult a = apparent_singularities(C);
        py::dict d;
        d["q_app"] = to_string(a.q_app);
        d["R"] = to_string(a.R);
        d["R_star"] = to_string(a.R_star);
        d["q"] = to_string(a.q);
        d["sr1"] = to_string(a.sr1);
        d["sr10"] = to_string(a.sr10);
        d["criterion_degenerate"] = a.criterion_degenerate;
        return d;
      },
      py::arg("omega"), py::arg("rhos") = std::vector<std::string>{}, "q_app and the polynomials it is derived from.");

  m.def(
      "topology",
      [](const std::string& json_text) {
        const ProblemFile f = parse_problem(json_text);
        PipelineResult r;
        {
          py::gil_scoped_release release;
          r = run_pipeline(f.curve, f.queries);
        }
        py::dict d;
        d["graph"] = graph_dict(r.graph);
        d["resolved"] = graph_dict(r.resolved);
        d["partition"] = r.partition.blocks;
        d["components"] = r.partition.component_count;
        return d;
      },
      py::arg("json_text"), "Topology graph, resolved graph and query partition of a problem.");
}
