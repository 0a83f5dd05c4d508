#include "uspan/simulator.hpp"

#include <algorithm>
#include <string>

namespace uspan {

SimState::SimState(const Metric& m, double s) : metric_(&m), s_(s) {
  if (!(s > 1.0)) throw ValidationError("separation s must be > 1");
  present_.assign(m.size(), 0);
  agents_.resize(m.size());
  graph_.n = m.size();
  graph_.s = s;
}

int SimState::present_count() const {
  return static_cast<int>(std::count(present_.begin(), present_.end(), 1));
}

std::size_t SimState::max_store_size() const {
  std::size_t mx = 0;
  for (int i = 0; i < static_cast<int>(agents_.size()); ++i)
    if (present_[i]) mx = std::max(mx, agents_[i].store.size());
  return mx;
}

std::size_t SimState::total_store_size() const {
  std::size_t total = 0;
  for (int i = 0; i < static_cast<int>(agents_.size()); ++i)
    if (present_[i]) total += agents_[i].store.size();
  return total;
}

void SimState::add_record(int holder, const EdgeRecord& rec) {
  auto& store = agents_[holder].store;
  auto it = std::lower_bound(store.begin(), store.end(), rec,
                             [](const EdgeRecord& a, const EdgeRecord& b) { return a.seq < b.seq; });
  store.insert(it, rec);
}

bool SimState::blocked_by_own_store(int x, int y) const {
  const Metric& m = *metric_;
  for (const auto& rec : agents_[x].store) {
    if ((m.within(x, rec.u, rec.r) && m.within(y, rec.v, rec.r)) ||
        (m.within(x, rec.v, rec.r) && m.within(y, rec.u, rec.r)))
      return true;
  }
  return false;
}

bool SimState::blocked_locally(int x, int y) const {
  return blocked_by_own_store(x, y) || blocked_by_own_store(y, x);
}

void SimState::build_edge(int x, int y) {
  const Metric& m = *metric_;
  double len = m.dist(x, y);
  int seq = next_seq_++;
  graph_.add_edge(x, y, len, seq);
  double r = graph_.edges.back().r;

  IdSet ball_x = m.ball_masked(x, r, present_);
  IdSet ball_y = m.ball_masked(y, r, present_);
  for (int id : ball_x) add_record(id, {x, y, len, r, 0, m.dist(id, x), seq});
  for (int id : ball_y) add_record(id, {x, y, len, r, 1, m.dist(id, y), seq});
  construction_messages_ += static_cast<long long>(ball_x.size() + ball_y.size());

  SimEvent ev;
  ev.t = clock_++;
  ev.kind = "edge-built";
  ev.a = x;
  ev.b = y;
  ev.len = len;
  ev.r = r;
  ev.seq = seq;
  log_.push_back(std::move(ev));

  SimEvent nv;
  nv.t = clock_++;
  nv.kind = "notify-batch";
  nv.seq = seq;
  nv.ids = std::move(ball_x);
  nv.ids2 = std::move(ball_y);
  log_.push_back(std::move(nv));
}

void SimState::process_check(int x, int y) {
  if (x == y || !present_[x] || !present_[y]) return;
  if (blocked_locally(x, y)) return;
  build_edge(x, y);
}

SimState SimState::run_construction(const Metric& m, double s, const PairOrder& schedule) {
  std::vector<int> all(m.size());
  for (int i = 0; i < m.size(); ++i) all[i] = i;
  return run_construction(m, s, schedule, all);
}

SimState SimState::run_construction(const Metric& m, double s, const PairOrder& schedule,
                                    const std::vector<int>& initial) {
  SimState sim(m, s);
  for (int id : initial) sim.present_[id] = 1;
  const auto pairs = make_pair_sequence(m, schedule);
  for (auto [x, y] : pairs) sim.process_check(x, y);
  return sim;
}

void SimState::insert_node(int id) {
  if (id < 0 || id >= static_cast<int>(present_.size()))
    throw ValidationError("insert: unknown node id");
  if (present_[id]) throw ValidationError("insert: node already present");
  present_[id] = 1;
  agents_[id].store.clear();

  SimEvent ev;
  ev.t = clock_++;
  ev.kind = "join";
  ev.a = id;
  log_.push_back(std::move(ev));

  const Metric& m = *metric_;
  for (int y = 0; y < static_cast<int>(present_.size()); ++y) {
    if (y == id || !present_[y]) continue;
    // y hands over its endpoint records whose ball contains the newcomer;
    // after the sweep the newcomer's store is complete.
    for (const auto& rec : agents_[y].store) {
      if (rec.near_end() != y || rec.my_dist != 0.0) continue;
      if (m.within(id, y, rec.r)) {
        add_record(id, {rec.u, rec.v, rec.len, rec.r, rec.side, m.dist(id, y), rec.seq});
        ++churn_messages_;
      }
    }
    process_check(id, y);
  }
}

void SimState::delete_node(int id) {
  if (id < 0 || id >= static_cast<int>(present_.size()))
    throw ValidationError("delete: unknown node id");
  if (!present_[id]) throw ValidationError("delete: node not present");
  present_[id] = 0;

  std::vector<int> removed_seqs;
  for (const auto& e : graph_.edges)
    if (e.u == id || e.v == id) removed_seqs.push_back(e.seq);
  graph_.edges.erase(std::remove_if(graph_.edges.begin(), graph_.edges.end(),
                                    [&](const SpannerEdge& e) { return e.u == id || e.v == id; }),
                     graph_.edges.end());
  agents_[id].store.clear();

  std::vector<int> affected;
  for (int a = 0; a < static_cast<int>(present_.size()); ++a) {
    if (!present_[a]) continue;
    auto& store = agents_[a].store;
    std::size_t before = store.size();
    store.erase(std::remove_if(store.begin(), store.end(),
                               [&](const EdgeRecord& rec) { return rec.u == id || rec.v == id; }),
                store.end());
    std::size_t purged = before - store.size();
    if (purged > 0) {
      churn_messages_ += static_cast<long long>(purged);
      affected.push_back(a);
    }
  }

  SimEvent ev;
  ev.t = clock_++;
  ev.kind = "leave";
  ev.a = id;
  ev.ids = removed_seqs;
  ev.ids2 = affected;
  log_.push_back(std::move(ev));

  for (int a : affected) {
    SimEvent rv;
    rv.t = clock_++;
    rv.kind = "recheck";
    rv.a = a;
    log_.push_back(std::move(rv));
    for (int z = 0; z < static_cast<int>(present_.size()); ++z) process_check(a, z);
  }
}

void SimState::route_rec(int p, int q, std::vector<int>& path, int depth) {
  if (p == q) return;
  if (depth > 64) throw ProtocolViolation("routing recursion too deep");
  const Metric& m = *metric_;
  const EdgeRecord* hit = nullptr;
  for (const auto& rec : agents_[p].store) {  // seq ascending
    ++route_probes_;
    if (m.within(q, rec.far_end(), rec.r)) {
      hit = &rec;
      break;
    }
  }
  if (!hit) throw ProtocolViolation("no covering record at node " + std::to_string(p));
  int near_c = hit->near_end(), far_c = hit->far_end();
  route_rec(p, near_c, path, depth + 1);
  path.push_back(far_c);
  route_rec(far_c, q, path, depth + 1);
}

std::vector<int> SimState::local_route(int p, int q) {
  if (!present_[p] || !present_[q]) throw ValidationError("route endpoints must be present");
  std::vector<int> path{p};
  route_rec(p, q, path, 0);
  return path;
}

int SimState::local_nearest_neighbor(int x) const {
  if (!present_[x]) throw ValidationError("nearest neighbor of an absent node");
  const Metric& m = *metric_;
  int best = -1;
  double best_d = 0.0;
  auto consider = [&](int cand) {
    if (cand == x) return;
    double d = m.dist(x, cand);
    if (best < 0 || d < best_d || (d == best_d && cand < best)) {
      best = cand;
      best_d = d;
    }
  };
  for (const auto& rec : agents_[x].store) {
    consider(rec.u);
    consider(rec.v);
  }
  if (best < 0 && present_count() > 1)
    throw ProtocolViolation("empty candidate set at node " + std::to_string(x));
  return best;
}

bool SimState::stores_consistent() const {
  const Metric& m = *metric_;
  const int n = static_cast<int>(present_.size());
  for (int a = 0; a < n; ++a) {
    if (!present_[a]) {
      if (!agents_[a].store.empty()) return false;
      continue;
    }
    std::vector<EdgeRecord> expect;
    for (const auto& e : graph_.edges) {
      if (m.within(a, e.u, e.r)) expect.push_back({e.u, e.v, e.len, e.r, 0, m.dist(a, e.u), e.seq});
      if (m.within(a, e.v, e.r)) expect.push_back({e.u, e.v, e.len, e.r, 1, m.dist(a, e.v), e.seq});
    }
    std::sort(expect.begin(), expect.end(),
              [](const EdgeRecord& x, const EdgeRecord& y) { return x.seq < y.seq; });
    const auto& store = agents_[a].store;
    if (store.size() != expect.size()) return false;
    for (std::size_t i = 0; i < store.size(); ++i) {
      const auto& s0 = store[i];
      const auto& e0 = expect[i];
      if (s0.u != e0.u || s0.v != e0.v || s0.seq != e0.seq || s0.side != e0.side ||
          s0.len != e0.len || s0.r != e0.r || s0.my_dist != e0.my_dist)
        return false;
      if (!(s0.my_dist <= s0.r)) return false;
    }
  }
  return true;
}

}  // namespace uspan
