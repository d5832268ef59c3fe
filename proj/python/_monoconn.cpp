#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monoconn/coloring.hpp"
#include "monoconn/constructions.hpp"
#include "monoconn/generators.hpp"
#include "monoconn/graph6.hpp"
#include "monoconn/harness.hpp"
#include "monoconn/maxleaf.hpp"
#include "monoconn/report_json.hpp"
#include "monoconn/solvers.hpp"

namespace py = pybind11;
using namespace monoconn;

namespace {

// Records cross the boundary through the same JSON schema the CLI emits.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

SolverLimits limits_for(std::optional<int> max_exact_n) {
  auto limits = SolverLimits::from_env();
  if (max_exact_n) limits.max_exact_n = *max_exact_n;
  return limits;
}

py::dict verify_result(const VerifyResult& r, int colors) {
  py::dict out;
  out["ok"] = r.ok;
  out["colors"] = colors;
  out["uncovered"] = r.uncovered ? py::cast(*r.uncovered) : py::none();
  return out;
}

py::dict constructed(const ConstructedColoring& c) {
  py::dict out;
  out["graph"] = c.graph;
  out["colors"] = color_count(c.coloring);
  out["coloring"] = to_py(coloring_to_json(c.graph, c.coloring));
  return out;
}

}  // namespace

PYBIND11_MODULE(_monoconn, m) {
  m.doc() = "Monochromatic connectivity invariants of small graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ColoringError>(m, "ColoringError", PyExc_ValueError);
  py::register_exception<SolverRangeError>(m, "SolverRangeError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Graph::from_edge_list(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (auto [u, v] : g.edges()) out.emplace_back(u, v);
                               return out;
                             })
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + to_graph6(g) + ", n=" + std::to_string(g.order()) +
               ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_graph6", [](const std::string& text) { return parse_graph6(text); });
  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list_text(text); });
  m.def("generate",
        [](const std::string& kind, int n, std::vector<int> sizes, double p, std::uint64_t seed) {
          return generate(kind, {n, std::move(sizes), p, seed});
        },
        py::arg("kind"), py::arg("n") = 0, py::arg("sizes") = std::vector<int>{},
        py::arg("p") = 0.5, py::arg("seed") = 1);

  m.def("is_connected", &is_connected);
  m.def("diameter", &diameter);
  m.def("vertex_connectivity", &vertex_connectivity);
  m.def("complement", &complement);
  m.def("sufficient_conditions",
        [](const Graph& g) { return to_py(to_json(theorem2_conditions(g))); });

  m.def("max_leaf", [](const Graph& g) { return to_py(to_json(max_leaf_exact(g))); });
  m.def("leaf_number", &leaf_number);

  m.def("tmc", [](const Graph& g, std::optional<int> max_n) {
          return to_py(to_json(g, tmc_exact(g, limits_for(max_n))));
        }, py::arg("graph"), py::arg("max_exact_n") = py::none());
  m.def("mc", [](const Graph& g, std::optional<int> max_n) {
          return to_py(to_json(g, mc_exact(g, limits_for(max_n))));
        }, py::arg("graph"), py::arg("max_exact_n") = py::none());
  m.def("mvc", [](const Graph& g) { return to_py(to_json(g, mvc_exact(g))); });
  m.def("tmc_naive", [](const Graph& g) { return to_py(to_json(g, tmc_naive(g))); });
  m.def("bounds", [](const Graph& g) { return to_py(to_json(bounds(g))); });

  m.def("verify", [](const Graph& g, const py::object& coloring, const std::string& kind) {
          const auto parsed = coloring_from_json(g, from_py(coloring));
          if (kind == "tmc") {
            if (!parsed.vertex_colors || !parsed.edge_colors) {
              throw ColoringError("tmc verification needs vertex_colors and edge_colors");
            }
            TotalColoring c{*parsed.vertex_colors, *parsed.edge_colors};
            return verify_result(verify_tmc(g, c), color_count(c));
          }
          if (kind == "mc") {
            if (!parsed.edge_colors) throw ColoringError("mc verification needs edge_colors");
            EdgeColoring c{*parsed.edge_colors};
            return verify_result(verify_mc(g, c), color_count(c));
          }
          if (kind == "mvc") {
            if (!parsed.vertex_colors) throw ColoringError("mvc verification needs vertex_colors");
            VertexColoring c{*parsed.vertex_colors};
            return verify_result(verify_mvc(g, c), color_count(c));
          }
          throw ColoringError("kind must be tmc, mc or mvc");
        }, py::arg("graph"), py::arg("coloring"), py::arg("kind") = "tmc");

  m.def("construct_wheel", [](int n) { return constructed(wheel_tmc_coloring(n)); });
  m.def("construct_complete", [](int n) { return constructed(complete_tmc_coloring(n)); });
  m.def("construct_multipartite",
        [](const std::vector<int>& sizes) { return constructed(multipartite_tmc_coloring(sizes)); });
  m.def("construct_tree_based", [](const Graph& g) {
    const auto tree = max_leaf_exact(g);
    return constructed({g, tree_based_tmc_coloring(g, tree)});
  });

  m.def("check", [](const Graph& g) { return to_py(to_json(check_all(g))); });
  m.def("survey", [](int n, double p, int trials, std::uint64_t seed) {
          return to_py(to_json(survey_random(n, p, trials, seed)));
        }, py::arg("n"), py::arg("p") = 0.5, py::arg("trials") = 200, py::arg("seed") = 1);
  m.def("hunt", [](const std::string& target, const std::vector<Graph>& corpus) {
          if (target == "problem1") return to_py(to_json(hunt_problem1(corpus)));
          if (target == "conjecture1") return to_py(to_json(hunt_conjecture1(corpus)));
          throw GraphError("target must be problem1 or conjecture1");
        });
  m.def("builtin_corpus", &builtin_corpus, py::arg("max_n"));
}
