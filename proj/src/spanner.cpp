#include "uspan/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace uspan {

namespace {

// Only edges with len in [|pq|(s+1)/(s+2), |pq|(s+1)/s] can block (p,q); that
// follows from the triangle inequality. The margins absorb floating-point
// slop so the band never excludes a true blocker.
inline void block_band(double len, double s, double& lo, double& hi) {
  lo = len * ((s + 1.0) / (s + 2.0)) * (1.0 - 1e-9);
  hi = len * ((s + 1.0) / s) * (1.0 + 1e-9);
}

using LenIndex = std::vector<std::pair<double, int>>;  // (len, edge index), sorted

inline void len_index_insert(LenIndex& idx, double len, int edge_idx) {
  auto it = std::lower_bound(idx.begin(), idx.end(), std::pair<double, int>{len, edge_idx});
  idx.insert(it, {len, edge_idx});
}

// Seq of some edge blocking (p,q) among edges with seq < before_seq, else -1.
int find_blocker(const Metric& m, const SpannerGraph& g, const LenIndex& idx, int p, int q,
                 double len, int before_seq) {
  double lo, hi;
  block_band(len, g.s, lo, hi);
  auto it = std::lower_bound(idx.begin(), idx.end(), std::pair<double, int>{lo, -1});
  for (; it != idx.end() && it->first <= hi; ++it) {
    const SpannerEdge& e = g.edges[static_cast<std::size_t>(it->second)];
    if (e.seq >= before_seq) continue;
    if (edge_blocks(m, e, p, q)) return e.seq;
  }
  return -1;
}

}  // namespace

bool edge_rule_admits(const Metric& m, const SpannerGraph& g, double s, int p, int q) {
  if (p == q) throw ValidationError("edge rule asked about a self-pair");
  for (const auto& e : g.edges) {
    double r = coverage_radius(e.len, s);
    if ((m.within(p, e.u, r) && m.within(q, e.v, r)) ||
        (m.within(p, e.v, r) && m.within(q, e.u, r)))
      return false;
  }
  return true;
}

SpannerGraph build_spanner(const Metric& m, double s, const PairOrder& order) {
  if (!(s > 1.0)) throw ValidationError("separation s must be > 1");
  SpannerGraph g;
  g.n = m.size();
  g.s = s;
  const auto pairs = make_pair_sequence(m, order);
  LenIndex by_len;
  for (auto [p, q] : pairs) {
    double len = m.dist(p, q);
    if (find_blocker(m, g, by_len, p, q, len, std::numeric_limits<int>::max()) >= 0) continue;
    int idx = static_cast<int>(g.edges.size());
    g.add_edge(p, q, len, idx);
    len_index_insert(by_len, len, idx);
  }
  return g;
}

SeparationReport verify_separation(const Metric& m, const SpannerGraph& g,
                                   const std::vector<char>* present) {
  SeparationReport rep;
  LenIndex by_len;
  by_len.reserve(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    by_len.push_back({g.edges[i].len, static_cast<int>(i)});
  std::sort(by_len.begin(), by_len.end());

  for (int i = 0; i < g.n; ++i) {
    if (present && !(*present)[i]) continue;
    for (int j = i + 1; j < g.n; ++j) {
      if (present && !(*present)[j]) continue;
      if (find_blocker(m, g, by_len, i, j, m.dist(i, j), std::numeric_limits<int>::max()) < 0)
        rep.uncovered.push_back({i, j});
    }
  }
  for (const auto& e : g.edges) {
    int earlier = find_blocker(m, g, by_len, e.u, e.v, e.len, e.seq);
    if (earlier >= 0) rep.redundant.push_back({earlier, e.seq});
  }
  return rep;
}

StretchReport stretch_report(const Metric& m, const SpannerGraph& g, std::size_t exact_limit,
                             std::uint64_t sample_seed, const std::vector<char>* present) {
  StretchReport rep;
  rep.connected = true;
  std::vector<int> nodes;
  for (int i = 0; i < g.n; ++i)
    if (!present || (*present)[i]) nodes.push_back(i);
  if (nodes.size() < 2) {
    rep.deciles.assign(10, 0.0);
    return rep;
  }

  std::vector<int> sources = nodes;
  bool sampled = false;
  if (nodes.size() > exact_limit) {
    std::mt19937_64 rng(sample_seed);
    for (std::size_t i = sources.size(); i > 1; --i)
      std::swap(sources[i - 1], sources[rng() % i]);
    sources.resize(exact_limit);
    std::sort(sources.begin(), sources.end());
    sampled = true;
  }

  const Adjacency adj = build_adjacency(g);
  std::vector<double> ratios;
  for (int src : sources) {
    const auto d = shortest_paths(adj, src);
    for (int t : nodes) {
      if (t == src || (!sampled && t < src)) continue;
      if (!std::isfinite(d[t])) {
        rep.connected = false;
        rep.max_stretch = std::numeric_limits<double>::infinity();
        rep.argmax_u = src;
        rep.argmax_v = t;
        continue;
      }
      double ratio = d[t] / m.dist(src, t);
      ratios.push_back(ratio);
      if (rep.connected && ratio > rep.max_stretch) {
        rep.max_stretch = ratio;
        rep.argmax_u = src;
        rep.argmax_v = t;
      }
    }
  }
  std::sort(ratios.begin(), ratios.end());
  for (int k = 1; k <= 10; ++k) {
    if (ratios.empty()) {
      rep.deciles.push_back(0.0);
    } else {
      std::size_t idx = ratios.size() * static_cast<std::size_t>(k) / 10;
      rep.deciles.push_back(ratios[idx == 0 ? 0 : idx - 1]);
    }
  }
  return rep;
}

GraphStats weight_degree_stats(const Metric& m, const SpannerGraph& g) {
  GraphStats st;
  st.edges = g.edges.size();
  std::vector<int> deg(g.n, 0);
  for (const auto& e : g.edges) {
    st.total_weight += e.len;
    ++deg[e.u];
    ++deg[e.v];
  }
  st.max_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  st.avg_degree = g.n > 0 ? 2.0 * static_cast<double>(st.edges) / g.n : 0.0;
  st.mst = mst_weight(m);
  st.lg_alpha = std::log2(aspect_ratio(m).alpha);
  st.weight_over_mst_lg_alpha = st.total_weight / (st.mst * st.lg_alpha);
  st.max_degree_over_lg_alpha = st.max_degree / st.lg_alpha;
  return st;
}

namespace {

void covering_path_rec(const WspdIndex& idx, int p, int q, std::vector<int>& path, int depth) {
  if (p == q) return;
  if (depth > 200) throw std::logic_error("covering-path recursion too deep");
  const WspPair* pr = idx.find_covering(p, q);
  if (!pr) throw std::logic_error("no covering pair between route endpoints");
  int near_c, far_c;
  if (id_set_contains(pr->members_a, p)) {
    near_c = pr->center_a;
    far_c = pr->center_b;
  } else {
    near_c = pr->center_b;
    far_c = pr->center_a;
  }
  covering_path_rec(idx, p, near_c, path, depth + 1);
  path.push_back(far_c);
  covering_path_rec(idx, far_c, q, path, depth + 1);
}

}  // namespace

std::vector<int> hop_stretch_path(const Metric& m, const SpannerGraph& g, const WspdIndex& idx,
                                  int p, int q) {
  (void)m;
  (void)g;  // the pair centers are exactly the graph's edges
  std::vector<int> path{p};
  covering_path_rec(idx, p, q, path, 0);
  return path;
}

int hop_bound(double dist, double d_min, double s) {
  return static_cast<int>(
      std::ceil(2.0 * std::pow(dist / d_min, 1.0 / (1.0 + std::log2(s)))));
}

double path_length(const Metric& m, const std::vector<int>& path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) total += m.dist(path[i - 1], path[i]);
  return total;
}

}  // namespace uspan
