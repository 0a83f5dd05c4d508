#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "uspan/metric.hpp"
#include "uspan/pair_order.hpp"

namespace uspan {

/// One well-separated pair: closed balls of radius `radius` around the two
/// centers, with membership snapshotted at emission time.
struct WspPair {
  int center_a;
  int center_b;
  double radius;
  IdSet members_a;
  IdSet members_b;
  int seq;
};

struct Wspd {
  double s = 0.0;
  std::vector<WspPair> pairs;
  std::string order_desc;
};

/// Orientation-free: (x,y) or (y,x) lands in members_a x members_b.
bool pair_covers(const WspPair& p, int x, int y);

/// Greedy decomposition: walk the pair sequence, emit a ball pair of radius
/// |pq|/(2s+2) for each still-uncovered (p,q), mark everything the new pair
/// covers. Requires s > 1 and n >= 2; every unordered pair ends up covered.
Wspd build_greedy_wspd(const Metric& m, double s, const PairOrder& order);

struct WspdReport {
  std::vector<int> not_separated;               // seq of pairs failing the s test
  std::vector<std::pair<int, int>> uncovered;   // unordered point pairs missed
  std::size_t pair_count = 0;
  std::size_t member_total = 0;                 // sum of |A| + |B|
  bool ok() const { return not_separated.empty() && uncovered.empty(); }
};

/// Checks separation of every pair and coverage of all n(n-1)/2 point pairs.
WspdReport verify_wspd(const Metric& m, const Wspd& w);

/// Covering-pair lookup with the smallest-seq tie-break used everywhere.
class WspdIndex {
 public:
  WspdIndex(const Wspd& w, int n);

  /// First (lowest seq) pair covering (x,y); nullptr if none.
  const WspPair* find_covering(int x, int y) const;

 private:
  const Wspd* w_;
  std::vector<std::vector<int>> pairs_of_;  // per point, pair indices by seq
};

}  // namespace uspan
