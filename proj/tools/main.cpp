// subcount: generators, exact counters, sublinear estimators, experiment
// harness. Exit codes: 0 ok, 2 unreadable/malformed graph file, 3 bad
// parameters.
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "subcount/acceptance.hpp"
#include "subcount/experiment.hpp"
#include "subcount/gen.hpp"
#include "subcount/graph.hpp"
#include "subcount/io.hpp"

using namespace subcount;

namespace {

int write_out(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 2;
  }
  out << body;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sublinear triangle/edge estimation toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "render a generator spec to an edge-list file");
  std::string gen_spec, gen_out;
  gen->add_option("--spec", gen_spec, "graph spec, e.g. er:n=100,p=0.1,seed=1")->required();
  gen->add_option("--out", gen_out, "output path")->required();

  // validate
  auto* val = app.add_subcommand("validate", "check an edge-list file's invariants");
  std::string val_path;
  val->add_option("path", val_path)->required();

  // count-exact
  auto* cnt = app.add_subcommand("count-exact", "exact triangle/edge counts and degeneracy");
  std::string cnt_spec;
  cnt->add_option("--spec", cnt_spec, "graph spec or file:<path>")->required();

  // estimate
  auto* est = app.add_subcommand("estimate", "run an estimator, emit the result CSV");
  ExperimentConfig cfg;
  std::string est_algo = "single-guess", est_out;
  double est_guess = 0;
  std::uint64_t est_budget = 0;
  est->add_option("--spec", cfg.graph_spec, "graph spec or file:<path>")->required();
  est->add_option("--algo", est_algo,
                  "triangles-testable|triangles-adaptive|edges-testable|"
                  "edges-adaptive|single-guess|single-guess-edges");
  est->add_option("--eps", cfg.eps);
  est->add_option("--delta", cfg.delta);
  est->add_option("--advice", cfg.advice, "arboricity advice; 0 = degeneracy");
  est->add_option("--guess", est_guess, "t or m guess for single-guess algos");
  est->add_option("--replicas", cfg.replicas);
  est->add_option("--seed", cfg.base_seed);
  est->add_option("--budget", est_budget, "query budget per replica; 0 = unlimited");
  est->add_flag("--timing", cfg.timing, "fill the ms column (breaks byte-determinism)");
  est->add_option("--out", est_out, "CSV path; default stdout");

  // sweep
  auto* swp = app.add_subcommand("sweep", "query-count scaling sweeps");
  std::string swp_kind = "triangles", swp_out;
  swp->add_option("--kind", swp_kind, "triangles|edges");
  swp->add_option("--out", swp_out);

  // accept
  auto* acc = app.add_subcommand("accept", "run the acceptance battery");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const GraphBundle gb = make_graph(gen_spec);
      save_edge_list(gen_out, gb.graph);
      return 0;
    }
    if (val->parsed()) {
      try {
        const Graph g = load_edge_list(val_path);
        g.validate();
        std::printf("ok: n=%zu m=%zu\n", g.num_vertices(), g.num_edges());
        return 0;
      } catch (const MalformedFile& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 2;
      } catch (const InvariantViolation& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 2;
      }
    }
    if (cnt->parsed()) {
      const GraphBundle gb = make_graph(cnt_spec);
      std::printf("n=%zu m=%zu triangles=%llu degeneracy=%llu\n",
                  gb.graph.num_vertices(), gb.graph.num_edges(),
                  (unsigned long long)gb.exact_triangles,
                  (unsigned long long)degeneracy(gb.graph));
      return 0;
    }
    if (est->parsed()) {
      cfg.algo = parse_algo(est_algo);
      if (est_guess > 0) cfg.guess = est_guess;
      if (est_budget > 0) cfg.budget = est_budget;
      return write_out(est_out, run_experiment(cfg));
    }
    if (swp->parsed()) {
      SweepResult r;
      if (swp_kind == "triangles")
        r = triangle_scaling_sweep(60, 1, {20, 25, 30, 35}, 0.05, 0.5, 11, 31);
      else if (swp_kind == "edges")
        r = edge_scaling_sweep(200000, {1, 2, 4, 8}, 0.42, 0.1, 11, 37);
      else
        throw ParameterError("unknown sweep kind: " + swp_kind);
      return write_out(swp_out, r.csv);
    }
    if (acc->parsed()) return acceptance_main();
  } catch (const MalformedFile& e) {
    std::cerr << "graph file error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
