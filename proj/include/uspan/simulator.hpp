#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "uspan/graph.hpp"
#include "uspan/metric.hpp"
#include "uspan/pair_order.hpp"

namespace uspan {

/// Raised when a guaranteed local operation cannot proceed (no covering
/// record, empty candidate set, runaway recursion). Never expected on a
/// well-formed state; tests treat any throw as failure.
struct ProtocolViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// What a node remembers about one edge it was notified of. side says which
/// endpoint's ball the holder belongs to; my_dist <= r always.
struct EdgeRecord {
  int u;
  int v;
  double len;
  double r;
  int side;  // 0: holder in u's ball, 1: in v's ball
  double my_dist;
  int seq;

  int near_end() const { return side ? v : u; }
  int far_end() const { return side ? u : v; }
};

struct AgentState {
  std::vector<EdgeRecord> store;  // sorted by seq
};

struct SimEvent {
  long long t = 0;
  std::string kind;  // edge-built | notify-batch | join | leave | recheck
  int a = -1;        // edge endpoint / node id
  int b = -1;
  double len = 0.0;
  double r = 0.0;
  int seq = -1;
  std::vector<int> ids;   // ball of u / removed edge seqs
  std::vector<int> ids2;  // ball of v / affected nodes
};

/// Message-passing view of the construction: each agent keeps only the edge
/// records it was notified about, and every decision reads agent stores plus
/// pointwise distance probes. The global edge list exists only as the audit
/// trail `graph()`.
class SimState {
 public:
  /// Runs the full pairwise schedule with every node present.
  static SimState run_construction(const Metric& m, double s, const PairOrder& schedule);
  /// Same, but only `initial` ids start present (for churn scenarios).
  static SimState run_construction(const Metric& m, double s, const PairOrder& schedule,
                                   const std::vector<int>& initial);

  /// Node joins: its store is rebuilt from the edge endpoints it talks to
  /// (each endpoint hands over records whose ball contains the newcomer),
  /// then every (x, y) pair is checked in ascending-y order.
  void insert_node(int id);

  /// Node leaves: incident edges vanish, every holder purges their records,
  /// and each holder re-checks itself against all present nodes. That recheck
  /// set deliberately over-approximates the pairs whose coverage died.
  void delete_node(int id);

  /// Greedy descent through covering records; returns the node path p..q.
  /// Each candidate record costs one distance probe.
  std::vector<int> local_route(int p, int q);

  /// Nearest present node among the endpoints of x's records.
  int local_nearest_neighbor(int x) const;

  const Metric& metric() const { return *metric_; }
  double s() const { return s_; }
  const SpannerGraph& graph() const { return graph_; }
  const std::vector<char>& present() const { return present_; }
  const AgentState& agent(int id) const { return agents_[id]; }
  int present_count() const;

  long long construction_messages() const { return construction_messages_; }
  long long churn_messages() const { return churn_messages_; }
  long long route_probes() const { return route_probes_; }
  const std::vector<SimEvent>& log() const { return log_; }

  std::size_t max_store_size() const;
  std::size_t total_store_size() const;

  /// Decision read from x's records alone; in a batch build this must agree
  /// with blocked_locally (tested, not assumed).
  bool blocked_by_own_store(int x, int y) const;
  /// Decision used by the protocol: x's records, then y's.
  bool blocked_locally(int x, int y) const;

  /// Test hook: every present node's store holds exactly the current edges
  /// whose balls contain it, with correct side/my_dist fields.
  bool stores_consistent() const;

 private:
  SimState(const Metric& m, double s);

  void process_check(int x, int y);
  void build_edge(int x, int y);
  void add_record(int holder, const EdgeRecord& rec);
  void route_rec(int p, int q, std::vector<int>& path, int depth);

  const Metric* metric_;
  double s_;
  std::vector<char> present_;
  std::vector<AgentState> agents_;
  SpannerGraph graph_;
  int next_seq_ = 0;
  long long clock_ = 0;
  long long construction_messages_ = 0;
  long long churn_messages_ = 0;
  long long route_probes_ = 0;
  std::vector<SimEvent> log_;
};

}  // namespace uspan
