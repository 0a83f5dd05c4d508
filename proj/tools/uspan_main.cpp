#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uspan/experiment.hpp"

using uspan::ExperimentConfig;

namespace {

void add_instance_flags(CLI::App* cmd, ExperimentConfig& cfg) {
  cmd->add_option("--source", cfg.source, "uniform | clustered | grid | file");
  cmd->add_option("--n", cfg.n, "point count");
  cmd->add_option("--dim", cfg.dim, "dimension for synthetic sources");
  cmd->add_option("--seed", cfg.seed, "instance seed");
  cmd->add_option("--clusters", cfg.clusters, "cluster count (clustered source)");
  cmd->add_option("--cluster-sep", cfg.cluster_sep, "cluster center spacing");
  cmd->add_option("--metric", cfg.metric_kind, "euclidean | matrix");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse spanner construction and checking"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string out_file = "points.csv";
  std::string points_file, matrix_file, graph_file;
  std::string order_name = "random";
  std::uint64_t order_seed = 1;
  double s_val = 0.0, eps_val = 0.0;
  bool skip_triangle = false;

  auto* gen = app.add_subcommand("generate", "write a synthetic instance to CSV");
  add_instance_flags(gen, cfg);
  gen->add_option("--out", out_file, "output file");

  auto* run = app.add_subcommand("run", "build, simulate, verify, export");
  add_instance_flags(run, cfg);
  run->add_option("--points", points_file, "point CSV input (implies --source file)");
  run->add_option("--matrix", matrix_file, "distance matrix CSV input");
  auto* s_opt = run->add_option("--s", s_val, "separation parameter, must exceed 1");
  auto* eps_opt = run->add_option("--epsilon", eps_val, "stretch target: s = 1 + 2/epsilon");
  s_opt->excludes(eps_opt);
  run->add_option("--order", order_name,
                  "random | lex | revlex | decreasing | increasing");
  run->add_option("--order-seed", order_seed, "seed for --order random");
  run->add_option("--sweep", cfg.sweep_n, "run per n in this list, seed offset by index");
  run->add_option("--out", cfg.out_dir, "artifact directory");
  run->add_option("--stretch-exact-limit", cfg.stretch_exact_limit,
                  "all-pairs stretch up to this n, sampled beyond");
  run->add_option("--route-check-limit", cfg.route_check_limit,
                  "all-pairs route checks up to this n");
  run->add_flag("--skip-triangle-check", skip_triangle, "trust matrix inputs");

  auto* ver = app.add_subcommand("verify", "re-check an exported graph against its input");
  ver->add_option("--graph", graph_file, "graph.json to check")->required();
  ver->add_option("--points", points_file, "point CSV the graph was built from");
  ver->add_option("--matrix", matrix_file, "distance matrix CSV");
  ver->add_option("--s", s_val, "override the separation stored in the graph");
  ver->add_flag("--skip-triangle-check", skip_triangle, "trust matrix inputs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      uspan::cmd_generate(cfg, out_file);
      std::printf("wrote %s\n", out_file.c_str());
      return 0;
    }

    if (run->parsed()) {
      if (!points_file.empty() || !matrix_file.empty()) {
        cfg.source = "file";
        cfg.input_file = points_file.empty() ? matrix_file : points_file;
        cfg.metric_kind = points_file.empty() ? "matrix" : "euclidean";
      }
      cfg.validate_triangle = !skip_triangle;
      if (s_opt->count()) cfg.s = s_val;
      if (eps_opt->count()) cfg.epsilon = eps_val;
      cfg.order.strategy = uspan::order_strategy_from_string(order_name);
      cfg.order.seed = order_seed;
      uspan::RunOutcome out = uspan::cmd_run(cfg);
      std::printf("%s\n", out.summary.dump(2).c_str());
      if (out.violations) {
        std::fprintf(stderr, "%d violation(s)\n", out.violations);
        return 1;
      }
      return 0;
    }

    std::optional<double> s_override;
    if (ver->count("--s")) s_override = s_val;
    std::string input = points_file.empty() ? matrix_file : points_file;
    if (input.empty()) throw uspan::ValidationError("verify needs --points or --matrix");
    uspan::VerifyOutcome out =
        uspan::cmd_verify(graph_file, input, points_file.empty() ? "matrix" : "euclidean",
                          s_override, !skip_triangle);
    std::printf("%s\n", out.report.dump(2).c_str());
    if (out.violations) {
      std::fprintf(stderr, "%d violation(s)\n", out.violations);
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
