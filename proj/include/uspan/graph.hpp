#pragma once

#include <utility>
#include <vector>

#include "uspan/metric.hpp"

namespace uspan {

/// Ball radius attached to an edge of length len under separation s.
inline double coverage_radius(double len, double s) { return len / (2.0 * s + 2.0); }

struct SpannerEdge {
  int u;
  int v;
  double len;
  int seq;   // build order, unique, never reused
  double r;  // coverage_radius(len, s)
};

/// Undirected weighted graph with build-order metadata. edges stay sorted by
/// seq; deletions erase entries but never renumber survivors.
struct SpannerGraph {
  int n = 0;
  double s = 0.0;
  std::vector<SpannerEdge> edges;

  void add_edge(int u, int v, double len, int seq) {
    if (u == v) throw ValidationError("self-loop edge");
    edges.push_back({u, v, len, seq, coverage_radius(len, s)});
  }
};

using Adjacency = std::vector<std::vector<std::pair<int, double>>>;

Adjacency build_adjacency(const SpannerGraph& g);

/// Dijkstra from source; unreachable nodes get +infinity.
std::vector<double> shortest_paths(const SpannerGraph& g, int source);
std::vector<double> shortest_paths(const Adjacency& adj, int source);

}  // namespace uspan
