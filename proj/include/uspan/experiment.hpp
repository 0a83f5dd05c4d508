#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "uspan/metric.hpp"
#include "uspan/pair_order.hpp"

namespace uspan {

/// Everything a run needs. Exactly one of s / epsilon must be set; epsilon is
/// sugar for s = 1 + 2/epsilon and exists only at this layer.
struct ExperimentConfig {
  std::string source = "uniform";  // uniform | clustered | grid | file
  int n = 100;
  int dim = 2;
  std::uint64_t seed = 1;
  int clusters = 2;
  double cluster_sep = 100.0;
  std::string input_file;          // source == "file"
  std::string metric_kind = "euclidean";  // euclidean | matrix
  bool validate_triangle = true;

  std::optional<double> s;
  std::optional<double> epsilon;
  PairOrder order;

  std::vector<int> sweep_n;  // non-empty: run once per n, seed offset by index
  std::string out_dir = "out";
  std::size_t stretch_exact_limit = 500;
  std::size_t route_check_limit = 300;  // all-pairs route checks up to this n

  double resolved_s() const;  // throws ValidationError on bad combinations
};

Metric load_instance(const ExperimentConfig& cfg);

struct RunOutcome {
  int violations = 0;
  nlohmann::json summary;
};

/// Writes a point CSV for the configured generator.
void cmd_generate(const ExperimentConfig& cfg, const std::string& out_file);

/// Build + simulate + verify + export. Artifacts land in cfg.out_dir
/// (per-n subdirectories and a sweep.json when sweeping). The summary is a
/// pure function of the config: byte-identical across repeat runs.
RunOutcome cmd_run(const ExperimentConfig& cfg);

struct VerifyOutcome {
  int violations = 0;
  nlohmann::json report;
};

/// Re-checks an exported graph against a point/matrix file at the given s.
VerifyOutcome cmd_verify(const std::string& graph_file, const std::string& input_file,
                         const std::string& metric_kind, std::optional<double> s,
                         bool validate_triangle = true);

}  // namespace uspan
