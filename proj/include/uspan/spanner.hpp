#pragma once

#include <cstdint>
#include <vector>

#include "uspan/graph.hpp"
#include "uspan/metric.hpp"
#include "uspan/pair_order.hpp"
#include "uspan/wspd.hpp"

namespace uspan {

/// True iff edge e blocks candidate pair (p,q): both endpoints sit within
/// e.r of e's endpoints, in either orientation.
inline bool edge_blocks(const Metric& m, const SpannerEdge& e, int p, int q) {
  return (m.within(p, e.u, e.r) && m.within(q, e.v, e.r)) ||
         (m.within(p, e.v, e.r) && m.within(q, e.u, e.r));
}

/// The admission rule: (p,q) may be added iff no existing edge blocks it.
/// Radii are derived from `s`, so the graph's own s field is not consulted.
bool edge_rule_admits(const Metric& m, const SpannerGraph& g, double s, int p, int q);

/// Scans the pair sequence once, adding each pair the rule admits. Requires
/// s > 1. Internally prunes the edge scan by length band; the decisions are
/// identical to calling edge_rule_admits per pair.
SpannerGraph build_spanner(const Metric& m, double s, const PairOrder& order);

struct SeparationReport {
  struct RedundantEdge {
    int earlier_seq;
    int later_seq;
  };
  std::vector<std::pair<int, int>> uncovered;  // point pairs no edge covers
  std::vector<RedundantEdge> redundant;        // later edge blocked by earlier
  bool ok() const { return uncovered.empty() && redundant.empty(); }
};

/// Part one: every point pair is covered by some edge's ball pair. Part two:
/// no edge would have been blocked by an earlier one. `present` restricts the
/// point universe (nullptr means all ids).
SeparationReport verify_separation(const Metric& m, const SpannerGraph& g,
                                   const std::vector<char>* present = nullptr);

struct StretchReport {
  bool connected = false;
  double max_stretch = 0.0;
  int argmax_u = -1;
  int argmax_v = -1;
  std::vector<double> deciles;  // 10 values, deciles of the stretch distribution
};

/// Graph-distance over metric-distance for point pairs. Exact all-pairs up to
/// exact_limit nodes; beyond that a seeded sample of sources is used.
StretchReport stretch_report(const Metric& m, const SpannerGraph& g,
                             std::size_t exact_limit = 500, std::uint64_t sample_seed = 0,
                             const std::vector<char>* present = nullptr);

struct GraphStats {
  std::size_t edges = 0;
  double total_weight = 0.0;
  int max_degree = 0;
  double avg_degree = 0.0;
  double mst = 0.0;
  double lg_alpha = 0.0;
  double weight_over_mst_lg_alpha = 0.0;  // +inf when lg_alpha == 0
  double max_degree_over_lg_alpha = 0.0;
};

GraphStats weight_degree_stats(const Metric& m, const SpannerGraph& g);

/// Path from p to q built by recursing through covering pairs: hop to the
/// pair's near center, cross its edge, recurse from the far center. Smallest
/// seq wins among candidate pairs. Throws std::logic_error if some pair has
/// no covering entry (a construction bug, not an input condition).
std::vector<int> hop_stretch_path(const Metric& m, const SpannerGraph& g, const WspdIndex& idx,
                                  int p, int q);

/// Hop budget for a covering-pair path: ceil(2 * (dist/d_min)^(1/(1+lg s))).
int hop_bound(double dist, double d_min, double s);

double path_length(const Metric& m, const std::vector<int>& path);

}  // namespace uspan
