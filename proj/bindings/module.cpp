// Thin python surface over the C++ core: generators, exact counts, and the
// estimator/experiment entry points.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subcount/experiment.hpp"
#include "subcount/gen.hpp"
#include "subcount/graph.hpp"
#include "subcount/io.hpp"
#include "subcount/search.hpp"

namespace py = pybind11;
using namespace subcount;

PYBIND11_MODULE(_subcount, m) {
  m.doc() = "sublinear triangle/edge estimation under arboricity advice";

  m.def("count_exact", [](const std::string& spec) {
    const GraphBundle gb = make_graph(spec);
    py::dict d;
    d["n"] = gb.graph.num_vertices();
    d["m"] = gb.graph.num_edges();
    d["triangles"] = gb.exact_triangles;
    d["degeneracy"] = degeneracy(gb.graph);
    return d;
  }, py::arg("spec"), "exact counts for a generator spec or file:<path>");

  m.def("generate", [](const std::string& spec, const std::string& path) {
    save_edge_list(path, make_graph(spec).graph);
  }, py::arg("spec"), py::arg("path"));

  m.def("estimate_csv",
        [](const std::string& spec, const std::string& algo, double eps,
           double delta, std::uint64_t advice, double guess,
           std::uint64_t replicas, std::uint64_t seed, std::uint64_t budget) {
          ExperimentConfig cfg;
          cfg.graph_spec = spec;
          cfg.algo = parse_algo(algo);
          cfg.eps = eps;
          cfg.delta = delta;
          cfg.advice = advice;
          if (guess > 0) cfg.guess = guess;
          cfg.replicas = replicas;
          cfg.base_seed = seed;
          if (budget > 0) cfg.budget = budget;
          return run_experiment(cfg);
        },
        py::arg("spec"), py::arg("algo") = "single-guess",
        py::arg("eps") = 0.05, py::arg("delta") = 0.1, py::arg("advice") = 0,
        py::arg("guess") = 0.0, py::arg("replicas") = 1, py::arg("seed") = 1,
        py::arg("budget") = 0,
        "run an estimator and return the result CSV");

  m.def("adaptive_triangles",
        [](const std::string& spec, double eps, double delta,
           std::uint64_t seed) {
          const GraphBundle gb = make_graph(spec);
          const AdaptiveResult r =
              adaptive_triangles(gb.graph, gb.graph.num_edges(), eps, delta, seed);
          py::dict d;
          d["all_rejected"] = r.all_rejected;
          d["value"] = r.value;
          d["accepted_advice"] = r.accepted_advice;
          d["queries"] = r.ledger.total();
          return d;
        },
        py::arg("spec"), py::arg("eps"), py::arg("delta"), py::arg("seed") = 1);

  py::register_exception<ParameterError>(m, "ParameterError");
  py::register_exception<MalformedFile>(m, "MalformedFile");
}
