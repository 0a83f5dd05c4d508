#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "uspan/metric.hpp"
#include "uspan/pair_order.hpp"
#include "uspan/simulator.hpp"
#include "uspan/spanner.hpp"
#include "uspan/wspd.hpp"

namespace testutil {

inline uspan::Metric line_metric(std::vector<double> xs) {
  return uspan::Metric::euclidean(std::move(xs), 1);
}

inline uspan::PairOrder explicit_order(std::vector<std::pair<int, int>> pairs) {
  uspan::PairOrder o;
  o.strategy = uspan::OrderStrategy::ExplicitList;
  o.explicit_pairs = std::move(pairs);
  return o;
}

inline std::vector<std::pair<int, int>> lex_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

/// Reference decomposition written with plain loops and fresh distance
/// calls; shares no code with the library version.
struct NaivePair {
  int a, b;
  double r;
  std::vector<int> mem_a, mem_b;
};

inline std::vector<NaivePair> naive_greedy_wspd(const uspan::Metric& m, double s,
                                                const std::vector<std::pair<int, int>>& seq) {
  std::vector<NaivePair> out;
  for (auto [p, q] : seq) {
    bool covered = false;
    for (const auto& w : out) {
      bool pa = false, pb = false, qa = false, qb = false;
      for (int x : w.mem_a) {
        if (x == p) pa = true;
        if (x == q) qa = true;
      }
      for (int x : w.mem_b) {
        if (x == p) pb = true;
        if (x == q) qb = true;
      }
      if ((pa && qb) || (pb && qa)) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    NaivePair np;
    np.a = p;
    np.b = q;
    np.r = m.dist(p, q) / (2.0 + 2.0 * s);
    for (int x = 0; x < m.size(); ++x) {
      if (m.dist(p, x) <= np.r) np.mem_a.push_back(x);
      if (m.dist(q, x) <= np.r) np.mem_b.push_back(x);
    }
    out.push_back(std::move(np));
  }
  return out;
}

inline int brute_nearest(const uspan::Metric& m, int x, const std::vector<char>* present) {
  int best = -1;
  double best_d = 0.0;
  for (int y = 0; y < m.size(); ++y) {
    if (y == x || (present && !(*present)[y])) continue;
    double d = m.dist(x, y);
    if (best < 0 || d < best_d || (d == best_d && y < best)) {
      best = y;
      best_d = d;
    }
  }
  return best;
}

/// Every structural claim a live simulator state must satisfy. Returns the
/// names of the checks that failed.
inline std::vector<std::string> state_invariant_failures(uspan::SimState& sim,
                                                         bool check_nn = true) {
  std::vector<std::string> fails;
  const auto& m = sim.metric();
  const auto& present = sim.present();

  if (!sim.stores_consistent()) fails.push_back("stores");

  auto sep = uspan::verify_separation(m, sim.graph(), &present);
  if (!sep.ok()) fails.push_back("separation");

  if (sim.present_count() >= 2) {
    auto st = uspan::stretch_report(m, sim.graph(), 2000, 0, &present);
    double beta = (sim.s() + 1.0) / (sim.s() - 1.0);
    if (!st.connected || st.max_stretch > beta + 1e-9) fails.push_back("stretch");

    try {
      for (int p = 0; p < m.size(); ++p) {
        if (!present[p]) continue;
        for (int q = 0; q < m.size(); ++q) {
          if (q == p || !present[q]) continue;
          auto path = sim.local_route(p, q);
          if (path.front() != p || path.back() != q)
            throw uspan::ProtocolViolation("route endpoints");
          if (uspan::path_length(m, path) / m.dist(p, q) > beta + 1e-9)
            throw uspan::ProtocolViolation("route stretch");
        }
      }
    } catch (const uspan::ProtocolViolation&) {
      fails.push_back("routing");
    }

    if (check_nn) {
      try {
        for (int x = 0; x < m.size(); ++x) {
          if (!present[x]) continue;
          if (sim.local_nearest_neighbor(x) != brute_nearest(m, x, &present))
            throw uspan::ProtocolViolation("wrong neighbor");
        }
      } catch (const uspan::ProtocolViolation&) {
        fails.push_back("nearest-neighbor");
      }
    }
  }
  return fails;
}

}  // namespace testutil
