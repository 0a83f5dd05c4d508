#include "uspan/graph.hpp"

#include <limits>
#include <queue>

namespace uspan {

Adjacency build_adjacency(const SpannerGraph& g) {
  Adjacency adj(g.n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.v, e.len});
    adj[e.v].push_back({e.u, e.len});
  }
  return adj;
}

std::vector<double> shortest_paths(const Adjacency& adj, int source) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(adj.size(), inf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[source] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (auto [v, w] : adj[u]) {
      double nd = d + w;
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  return dist;
}

std::vector<double> shortest_paths(const SpannerGraph& g, int source) {
  return shortest_paths(build_adjacency(g), source);
}

}  // namespace uspan
