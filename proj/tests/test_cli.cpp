#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>

#include "common.hpp"
#include "doctest.h"
#include "uspan/experiment.hpp"
#include "uspan/export.hpp"
#include "uspan/generate.hpp"

using namespace uspan;
namespace fs = std::filesystem;

namespace {

std::string fresh_dir() {
  static int k = 0;
  fs::path p = fs::temp_directory_path() / ("uspan_cli_" + std::to_string(k++));
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

ExperimentConfig base_config() {
  ExperimentConfig cfg;
  cfg.source = "uniform";
  cfg.n = 40;
  cfg.dim = 2;
  cfg.seed = 1;
  cfg.s = 2.0;
  cfg.order.strategy = OrderStrategy::RandomWithSeed;
  cfg.order.seed = 1;
  return cfg;
}

}  // namespace

TEST_CASE("s and epsilon resolve and exclude each other") {
  ExperimentConfig cfg = base_config();
  CHECK(cfg.resolved_s() == 2.0);
  cfg.s.reset();
  cfg.epsilon = 1.0;
  CHECK(cfg.resolved_s() == 3.0);
  cfg.epsilon = 0.5;
  CHECK(cfg.resolved_s() == 5.0);
  cfg.s = 2.0;
  CHECK_THROWS_AS(cfg.resolved_s(), ValidationError);
  cfg.s.reset();
  cfg.epsilon.reset();
  CHECK_THROWS_AS(cfg.resolved_s(), ValidationError);
  cfg.epsilon = -1.0;
  CHECK_THROWS_AS(cfg.resolved_s(), ValidationError);
  cfg.epsilon.reset();
  cfg.s = 1.0;
  CHECK_THROWS_AS(cfg.resolved_s(), ValidationError);
}

TEST_CASE("generated grid instance is the expected lattice") {
  ExperimentConfig cfg = base_config();
  cfg.source = "grid";
  cfg.n = 9;
  std::string file = fresh_dir() + "/grid.csv";
  cmd_generate(cfg, file);
  Metric m = load_points_csv(file);
  REQUIRE(m.size() == 9);
  REQUIRE(m.dim() == 2);
  for (int i = 0; i < 9; ++i) {  // last axis advances fastest
    CHECK(m.point(i)[0] == (double)(i / 3));
    CHECK(m.point(i)[1] == (double)(i % 3));
  }
}

TEST_CASE("clustered instances keep clusters tight and far apart") {
  ExperimentConfig cfg = base_config();
  cfg.source = "clustered";
  cfg.n = 20;
  cfg.clusters = 2;
  cfg.cluster_sep = 100.0;
  std::string file = fresh_dir() + "/clusters.csv";
  cmd_generate(cfg, file);
  Metric m = load_points_csv(file);
  REQUIRE(m.size() == 20);
  int low = 0, high = 0;
  for (int i = 0; i < 20; ++i) {
    double x = m.point(i)[0];
    if (x < 2.0)
      ++low;
    else {
      CHECK(x >= 100.0);
      CHECK(x < 102.0);
      ++high;
    }
  }
  CHECK(low == 10);
  CHECK(high == 10);
}

TEST_CASE("generate refuses file sources, run accepts generated files") {
  ExperimentConfig cfg = base_config();
  cfg.source = "file";
  CHECK_THROWS_AS(cmd_generate(cfg, "x.csv"), ValidationError);
}

TEST_CASE("a clean run reports no violations and writes every artifact") {
  ExperimentConfig cfg = base_config();
  cfg.out_dir = fresh_dir();
  RunOutcome out = cmd_run(cfg);
  CHECK(out.violations == 0);
  CHECK(out.summary["violations"].empty());
  CHECK(out.summary["graph"]["edges"].get<std::size_t>() > 40);
  CHECK(out.summary["stretch"]["connected"].get<bool>());
  CHECK(out.summary["stretch"]["max"].get<double>() <= 3.0 + 1e-9);
  CHECK(out.summary["routing"]["max_hops"].get<int>() >= 1);
  for (const char* f :
       {"graph.json", "wspd.json", "graph.dot", "graph.svg", "events.jsonl", "summary.json"})
    CHECK(fs::exists(cfg.out_dir + "/" + std::string(f)));
}

TEST_CASE("repeat runs are byte-identical") {
  ExperimentConfig cfg = base_config();
  cfg.out_dir = fresh_dir();
  cmd_run(cfg);
  ExperimentConfig cfg2 = base_config();
  cfg2.out_dir = fresh_dir();
  cmd_run(cfg2);
  CHECK(read_text_file(cfg.out_dir + "/summary.json") ==
        read_text_file(cfg2.out_dir + "/summary.json"));
  CHECK(read_text_file(cfg.out_dir + "/graph.json") ==
        read_text_file(cfg2.out_dir + "/graph.json"));
  CHECK(read_text_file(cfg.out_dir + "/events.jsonl") ==
        read_text_file(cfg2.out_dir + "/events.jsonl"));
}

TEST_CASE("file inputs round-trip through generate") {
  std::string dir = fresh_dir();
  ExperimentConfig gen = base_config();
  gen.n = 25;
  cmd_generate(gen, dir + "/pts.csv");

  ExperimentConfig cfg = base_config();
  cfg.source = "file";
  cfg.input_file = dir + "/pts.csv";
  cfg.out_dir = dir + "/out";
  RunOutcome out = cmd_run(cfg);
  CHECK(out.violations == 0);
  CHECK(out.summary["config"]["n"].get<int>() == 25);
}

TEST_CASE("matrix metrics run end to end") {
  ExperimentConfig cfg = base_config();
  cfg.metric_kind = "matrix";
  cfg.n = 30;
  cfg.seed = 2;
  cfg.out_dir = fresh_dir();
  RunOutcome out = cmd_run(cfg);
  CHECK(out.violations == 0);
  CHECK(!fs::exists(cfg.out_dir + "/graph.svg"));  // no coordinates to draw
}

TEST_CASE("epsilon is translated, echoed, and nothing else changes") {
  ExperimentConfig a = base_config();
  a.s.reset();
  a.epsilon = 1.0;
  a.out_dir = fresh_dir();
  RunOutcome out_a = cmd_run(a);
  CHECK(out_a.summary["config"]["s"].get<double>() == 3.0);
  CHECK(out_a.summary["config"]["epsilon"].get<double>() == 1.0);

  ExperimentConfig b = base_config();
  b.s = 3.0;
  b.out_dir = fresh_dir();
  RunOutcome out_b = cmd_run(b);
  CHECK(out_a.summary["graph"] == out_b.summary["graph"]);
}

TEST_CASE("verify accepts its own exports") {
  std::string dir = fresh_dir();
  ExperimentConfig gen = base_config();
  gen.n = 30;
  cmd_generate(gen, dir + "/pts.csv");
  ExperimentConfig cfg = base_config();
  cfg.source = "file";
  cfg.input_file = dir + "/pts.csv";
  cfg.out_dir = dir + "/out";
  REQUIRE(cmd_run(cfg).violations == 0);

  VerifyOutcome v = cmd_verify(dir + "/out/graph.json", dir + "/pts.csv", "euclidean", {});
  CHECK(v.violations == 0);
  CHECK(v.report["length_mismatches"].get<int>() == 0);
  CHECK(v.report["connected"].get<bool>());
}

TEST_CASE("verify flags a corrupted edge length") {
  std::string dir = fresh_dir();
  ExperimentConfig gen = base_config();
  gen.n = 30;
  cmd_generate(gen, dir + "/pts.csv");
  ExperimentConfig cfg = base_config();
  cfg.source = "file";
  cfg.input_file = dir + "/pts.csv";
  cfg.out_dir = dir + "/out";
  REQUIRE(cmd_run(cfg).violations == 0);

  auto gj = nlohmann::json::parse(read_text_file(dir + "/out/graph.json"));
  gj["edges"][0]["len"] = gj["edges"][0]["len"].get<double>() * 1.5;
  write_json_file(dir + "/out/graph.json", gj);
  VerifyOutcome v = cmd_verify(dir + "/out/graph.json", dir + "/pts.csv", "euclidean", {});
  CHECK(v.violations >= 1);
  CHECK(v.report["length_mismatches"].get<int>() == 1);
}

TEST_CASE("verify flags a spanning tree that skips the admission rule") {
  std::string dir = fresh_dir();
  write_points_csv(dir + "/line.csv", {0, 1, 2}, 1);
  nlohmann::json gj = {{"n", 3},
                       {"s", 2.0},
                       {"edges",
                        {{{"u", 0}, {"v", 1}, {"len", 1.0}, {"seq", 0}},
                         {{"u", 1}, {"v", 2}, {"len", 1.0}, {"seq", 1}}}}};
  write_json_file(dir + "/tree.json", gj);
  VerifyOutcome v = cmd_verify(dir + "/tree.json", dir + "/line.csv", "euclidean", {});
  CHECK(v.violations == 1);
  CHECK(v.report["uncovered"].get<int>() == 1);
  CHECK(v.report["redundant"].get<int>() == 0);
  CHECK(v.report["connected"].get<bool>());
}

TEST_CASE("verify rejects graphs that do not match the input size") {
  std::string dir = fresh_dir();
  write_points_csv(dir + "/line.csv", {0, 1, 2}, 1);
  nlohmann::json gj = {{"n", 2}, {"s", 2.0}, {"edges", nlohmann::json::array()}};
  write_json_file(dir + "/bad.json", gj);
  CHECK_THROWS_AS(cmd_verify(dir + "/bad.json", dir + "/line.csv", "euclidean", {}),
                  ValidationError);
}

TEST_CASE("sweeps write one run per size plus a combined report") {
  ExperimentConfig cfg = base_config();
  cfg.sweep_n = {20, 30};
  cfg.out_dir = fresh_dir();
  RunOutcome out = cmd_run(cfg);
  CHECK(out.violations == 0);
  CHECK(out.summary["runs"].size() == 2);
  CHECK(out.summary["runs"][0]["config"]["n"].get<int>() == 20);
  CHECK(out.summary["runs"][1]["config"]["n"].get<int>() == 30);
  CHECK(out.summary["runs"][1]["config"]["seed"].get<std::uint64_t>() == cfg.seed + 1);
  CHECK(fs::exists(cfg.out_dir + "/n20/summary.json"));
  CHECK(fs::exists(cfg.out_dir + "/n30/graph.json"));
  CHECK(fs::exists(cfg.out_dir + "/sweep.json"));
}

TEST_CASE("exported json mirrors the in-memory structures") {
  Metric m = testutil::line_metric({0, 1, 2});
  SpannerGraph g = build_spanner(m, 2.0, base_config().order);
  auto j = graph_to_json(g);
  SpannerGraph back = graph_from_json(j);
  CHECK(back.n == g.n);
  CHECK(back.s == g.s);
  REQUIRE(back.edges.size() == g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    CHECK(back.edges[i].u == g.edges[i].u);
    CHECK(back.edges[i].len == g.edges[i].len);
    CHECK(back.edges[i].r == g.edges[i].r);
  }
  CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 2}}), ValidationError);

  std::string dot = graph_to_dot(g);
  CHECK(dot.find("graph spanner") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);

  Metric flat = Metric::euclidean({0, 0, 1, 0, 0, 1}, 2);
  SpannerGraph fg = build_spanner(flat, 2.0, base_config().order);
  std::string svg = graph_to_svg(flat, fg);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK_THROWS_AS(graph_to_svg(m, g), ValidationError);  // 1-d input
}
