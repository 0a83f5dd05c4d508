#include "uspan/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "uspan/export.hpp"
#include "uspan/generate.hpp"
#include "uspan/simulator.hpp"
#include "uspan/spanner.hpp"
#include "uspan/wspd.hpp"

namespace uspan {

namespace fs = std::filesystem;
using nlohmann::json;

double ExperimentConfig::resolved_s() const {
  if (s && epsilon) throw ValidationError("give s or epsilon, not both");
  if (!s && !epsilon) throw ValidationError("one of s / epsilon is required");
  double val = s ? *s : 1.0 + 2.0 / *epsilon;
  if (epsilon && !(*epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  if (!(val > 1.0)) throw ValidationError("separation must exceed 1");
  return val;
}

Metric load_instance(const ExperimentConfig& cfg) {
  if (cfg.source == "file") {
    if (cfg.input_file.empty()) throw ValidationError("source=file needs an input path");
    if (cfg.metric_kind == "matrix")
      return load_matrix_csv(cfg.input_file, cfg.validate_triangle);
    return load_points_csv(cfg.input_file);
  }
  if (cfg.metric_kind == "matrix")
    return Metric::explicit_matrix(gen_geometric_shortest_path_matrix(cfg.n, cfg.seed),
                                   cfg.validate_triangle);
  if (cfg.source == "uniform")
    return Metric::euclidean(gen_uniform(cfg.n, cfg.dim, cfg.seed), cfg.dim);
  if (cfg.source == "clustered")
    return Metric::euclidean(
        gen_clustered(cfg.n, cfg.dim, cfg.clusters, cfg.cluster_sep, cfg.seed), cfg.dim);
  if (cfg.source == "grid") return Metric::euclidean(gen_grid(cfg.n, cfg.dim), cfg.dim);
  throw ValidationError("unknown source: " + cfg.source);
}

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_matrix_csv(const std::string& path, const std::vector<double>& table, int n) {
  std::ostringstream out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ",";
      out << fmt(table[(std::size_t)i * n + j]);
    }
    out << "\n";
  }
  write_text_file(path, out.str());
}

/// All unordered pairs up to `limit` points, a fixed-size deterministic
/// sample beyond.
std::vector<std::pair<int, int>> pairs_to_check(int n, std::size_t limit, std::uint64_t seed) {
  std::vector<std::pair<int, int>> out;
  if ((std::size_t)n <= limit) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back({i, j});
    return out;
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  while (out.size() < 2000) {
    int p = (int)(rng() % (std::uint64_t)n);
    int q = (int)(rng() % (std::uint64_t)n);
    if (p != q) out.push_back({std::min(p, q), std::max(p, q)});
  }
  return out;
}

RunOutcome run_single(const ExperimentConfig& cfg) {
  const double s = cfg.resolved_s();
  Metric m = load_instance(cfg);
  const int n = m.size();
  std::vector<std::string> violations;

  SpannerGraph g = build_spanner(m, s, cfg.order);
  Wspd w = build_greedy_wspd(m, s, cfg.order);

  // The decomposition and the graph are two readings of one object.
  bool same = g.edges.size() == w.pairs.size();
  if (same)
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const auto& e = g.edges[i];
      const auto& p = w.pairs[i];
      if (e.u != p.center_a || e.v != p.center_b || e.r != p.radius || e.seq != p.seq)
        same = false;
    }
  if (!same) violations.push_back("wspd/spanner structures diverge");

  WspdReport wr = verify_wspd(m, w);
  if (!wr.ok())
    violations.push_back("wspd check: " + std::to_string(wr.not_separated.size()) +
                         " unseparated, " + std::to_string(wr.uncovered.size()) + " uncovered");

  SeparationReport sep = verify_separation(m, g);
  if (!sep.ok())
    violations.push_back("edge rule check: " + std::to_string(sep.uncovered.size()) +
                         " uncovered, " + std::to_string(sep.redundant.size()) + " redundant");

  const double beta = (s + 1.0) / (s - 1.0);
  StretchReport st = stretch_report(m, g, cfg.stretch_exact_limit, cfg.seed);
  if (!st.connected)
    violations.push_back("graph is disconnected");
  else if (st.max_stretch > beta + 1e-9)
    violations.push_back("stretch " + fmt(st.max_stretch) + " exceeds " + fmt(beta));

  GraphStats gs = weight_degree_stats(m, g);

  SimState sim = SimState::run_construction(m, s, cfg.order);
  bool sim_same = sim.graph().edges.size() == g.edges.size();
  if (sim_same)
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const auto& a = g.edges[i];
      const auto& b = sim.graph().edges[i];
      if (a.u != b.u || a.v != b.v || a.len != b.len || a.seq != b.seq) sim_same = false;
    }
  if (!sim_same) violations.push_back("simulated build diverges from direct build");
  if (!sim.stores_consistent()) violations.push_back("agent stores inconsistent with edges");
  if (sim.total_store_size() != wr.member_total)
    violations.push_back("store total != ball member total");

  const double d_min = n >= 2 ? aspect_ratio(m).d_min : 1.0;
  WspdIndex idx(w, n);
  auto checks = pairs_to_check(n, cfg.route_check_limit, cfg.seed);
  int max_hops = 0, hop_violations = 0, route_mismatches = 0;
  double max_route_stretch = 0.0;
  for (auto [p, q] : checks) {
    auto path = hop_stretch_path(m, g, idx, p, q);
    int hops = (int)path.size() - 1;
    max_hops = std::max(max_hops, hops);
    if (hops > hop_bound(m.dist(p, q), d_min, s)) ++hop_violations;
    double ratio = path_length(m, path) / m.dist(p, q);
    max_route_stretch = std::max(max_route_stretch, ratio);
    if (sim.local_route(p, q) != path) ++route_mismatches;
  }
  if (hop_violations) violations.push_back(std::to_string(hop_violations) + " hop bound misses");
  if (max_route_stretch > beta + 1e-9)
    violations.push_back("routed stretch " + fmt(max_route_stretch) + " exceeds " + fmt(beta));
  if (route_mismatches)
    violations.push_back(std::to_string(route_mismatches) + " local routes diverge");

  int nn_mismatches = 0, nn_checked = 0;
  for (int x = 0; x < n && n >= 2; ++x) {
    int best = -1;
    double best_d = 0.0;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      double d = m.dist(x, y);
      if (best < 0 || d < best_d || (d == best_d && y < best)) best = y, best_d = d;
    }
    ++nn_checked;
    if (sim.local_nearest_neighbor(x) != best) ++nn_mismatches;
  }
  if (nn_mismatches)
    violations.push_back(std::to_string(nn_mismatches) + " of " + std::to_string(nn_checked) +
                         " local nearest-neighbor answers wrong");

  json summary;
  summary["config"] = {{"source", cfg.source},   {"n", n},
                       {"dim", cfg.dim},         {"seed", cfg.seed},
                       {"s", s},                 {"order", cfg.order.describe()},
                       {"metric", cfg.metric_kind}};
  if (cfg.epsilon) summary["config"]["epsilon"] = *cfg.epsilon;
  summary["graph"] = {{"edges", g.edges.size()},
                      {"edges_per_point", n ? (double)g.edges.size() / n : 0.0},
                      {"total_weight", gs.total_weight},
                      {"max_degree", gs.max_degree},
                      {"avg_degree", gs.avg_degree},
                      {"mst_weight", gs.mst},
                      {"lg_alpha", gs.lg_alpha},
                      {"weight_over_mst_lg_alpha", gs.weight_over_mst_lg_alpha},
                      {"max_degree_over_lg_alpha", gs.max_degree_over_lg_alpha}};
  summary["stretch"] = {{"connected", st.connected},
                        {"max", st.max_stretch},
                        {"bound", beta},
                        {"argmax", {st.argmax_u, st.argmax_v}},
                        {"deciles", st.deciles}};
  summary["wspd"] = {{"pairs", wr.pair_count}, {"member_total", wr.member_total}};
  double lg_a = gs.lg_alpha;
  summary["messages"] = {
      {"construction", sim.construction_messages()},
      {"per_point_lg_alpha",
       lg_a > 0.0 ? (double)sim.construction_messages() / (n * lg_a) : 0.0},
      {"max_store", sim.max_store_size()},
      {"max_store_over_lg_alpha", lg_a > 0.0 ? (double)sim.max_store_size() / lg_a : 0.0},
      {"total_store", sim.total_store_size()}};
  summary["routing"] = {{"pairs_checked", checks.size()},
                        {"max_hops", max_hops},
                        {"max_stretch", max_route_stretch},
                        {"probes", sim.route_probes()}};
  summary["nearest_neighbor"] = {{"checked", nn_checked}, {"mismatches", nn_mismatches}};
  summary["violations"] = violations;

  fs::create_directories(cfg.out_dir);
  write_json_file(cfg.out_dir + "/graph.json", graph_to_json(g));
  write_json_file(cfg.out_dir + "/wspd.json", wspd_to_json(w));
  write_text_file(cfg.out_dir + "/graph.dot", graph_to_dot(g));
  if (m.kind() == MetricKind::Euclidean && m.dim() == 2)
    write_text_file(cfg.out_dir + "/graph.svg", graph_to_svg(m, g));
  write_jsonl_file(cfg.out_dir + "/events.jsonl", sim.log());
  write_json_file(cfg.out_dir + "/summary.json", summary);

  return {(int)violations.size(), summary};
}

}  // namespace

void cmd_generate(const ExperimentConfig& cfg, const std::string& out_file) {
  if (cfg.source == "file") throw ValidationError("generate needs a synthetic source");
  if (cfg.metric_kind == "matrix") {
    write_matrix_csv(out_file, gen_geometric_shortest_path_matrix(cfg.n, cfg.seed), cfg.n);
    return;
  }
  std::vector<double> coords;
  if (cfg.source == "uniform")
    coords = gen_uniform(cfg.n, cfg.dim, cfg.seed);
  else if (cfg.source == "clustered")
    coords = gen_clustered(cfg.n, cfg.dim, cfg.clusters, cfg.cluster_sep, cfg.seed);
  else if (cfg.source == "grid")
    coords = gen_grid(cfg.n, cfg.dim);
  else
    throw ValidationError("unknown source: " + cfg.source);
  write_points_csv(out_file, coords, cfg.dim);
}

RunOutcome cmd_run(const ExperimentConfig& cfg) {
  if (cfg.sweep_n.empty()) return run_single(cfg);

  RunOutcome total;
  json runs = json::array();
  for (std::size_t i = 0; i < cfg.sweep_n.size(); ++i) {
    ExperimentConfig sub = cfg;
    sub.sweep_n.clear();
    sub.n = cfg.sweep_n[i];
    sub.seed = cfg.seed + i;
    sub.out_dir = cfg.out_dir + "/n" + std::to_string(sub.n);
    RunOutcome r = run_single(sub);
    total.violations += r.violations;
    runs.push_back(r.summary);
  }
  total.summary = {{"s", cfg.resolved_s()}, {"runs", runs}};
  fs::create_directories(cfg.out_dir);
  write_json_file(cfg.out_dir + "/sweep.json", total.summary);
  return total;
}

VerifyOutcome cmd_verify(const std::string& graph_file, const std::string& input_file,
                         const std::string& metric_kind, std::optional<double> s,
                         bool validate_triangle) {
  Metric m = metric_kind == "matrix" ? load_matrix_csv(input_file, validate_triangle)
                                     : load_points_csv(input_file);
  json gj = json::parse(read_text_file(graph_file));
  SpannerGraph loaded = graph_from_json(gj);
  std::vector<std::string> violations;

  if (loaded.n != m.size())
    throw ValidationError("graph has n=" + std::to_string(loaded.n) + ", input has " +
                          std::to_string(m.size()) + " points");

  const double use_s = s ? *s : loaded.s;
  if (!(use_s > 1.0)) throw ValidationError("separation must exceed 1");
  SpannerGraph g;
  g.n = loaded.n;
  g.s = use_s;
  int len_mismatches = 0;
  for (const auto& e : loaded.edges) {
    if (e.len != m.dist(e.u, e.v)) ++len_mismatches;
    g.add_edge(e.u, e.v, m.dist(e.u, e.v), e.seq);
  }
  if (len_mismatches)
    violations.push_back(std::to_string(len_mismatches) + " stored lengths disagree with input");

  SeparationReport sep = verify_separation(m, g);
  if (!sep.uncovered.empty())
    violations.push_back(std::to_string(sep.uncovered.size()) + " point pairs uncovered");
  if (!sep.redundant.empty())
    violations.push_back(std::to_string(sep.redundant.size()) + " redundant edges");

  const double beta = (use_s + 1.0) / (use_s - 1.0);
  StretchReport st = stretch_report(m, g);
  if (!st.connected)
    violations.push_back("graph is disconnected");
  else if (st.max_stretch > beta + 1e-9)
    violations.push_back("stretch " + fmt(st.max_stretch) + " exceeds " + fmt(beta));

  json report = {{"n", g.n},
                 {"s", use_s},
                 {"edges", g.edges.size()},
                 {"length_mismatches", len_mismatches},
                 {"uncovered", sep.uncovered.size()},
                 {"redundant", sep.redundant.size()},
                 {"connected", st.connected},
                 {"max_stretch", st.max_stretch},
                 {"stretch_bound", beta},
                 {"violations", violations}};
  return {(int)violations.size(), report};
}

}  // namespace uspan
