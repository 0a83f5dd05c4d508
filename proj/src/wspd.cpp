#include "uspan/wspd.hpp"

#include <stdexcept>

#include "uspan/graph.hpp"

namespace uspan {

bool pair_covers(const WspPair& p, int x, int y) {
  if (x == y) return false;
  return (id_set_contains(p.members_a, x) && id_set_contains(p.members_b, y)) ||
         (id_set_contains(p.members_a, y) && id_set_contains(p.members_b, x));
}

Wspd build_greedy_wspd(const Metric& m, double s, const PairOrder& order) {
  if (!(s > 1.0)) throw ValidationError("separation s must be > 1");
  if (m.size() < 2) throw ValidationError("need at least two points");
  const int n = m.size();
  const auto seq = make_pair_sequence(m, order);

  Wspd w;
  w.s = s;
  w.order_desc = order.describe();

  std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
  auto cov = [&](int a, int b) -> char& { return covered[static_cast<std::size_t>(a) * n + b]; };
  long long uncovered = static_cast<long long>(n) * (n - 1) / 2;

  for (auto [p, q] : seq) {
    if (cov(p, q)) continue;
    double r = coverage_radius(m.dist(p, q), s);
    WspPair pr;
    pr.center_a = p;
    pr.center_b = q;
    pr.radius = r;
    pr.members_a = m.ball(p, r);
    pr.members_b = m.ball(q, r);
    pr.seq = static_cast<int>(w.pairs.size());
    for (int a : pr.members_a)
      for (int b : pr.members_b) {
        if (!cov(a, b)) {
          cov(a, b) = cov(b, a) = 1;
          --uncovered;
        }
      }
    w.pairs.push_back(std::move(pr));
  }
  if (uncovered != 0) throw std::logic_error("greedy sweep left pairs uncovered");
  return w;
}

WspdReport verify_wspd(const Metric& m, const Wspd& w) {
  const int n = m.size();
  WspdReport rep;
  rep.pair_count = w.pairs.size();
  std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
  for (const auto& p : w.pairs) {
    rep.member_total += p.members_a.size() + p.members_b.size();
    if (!is_s_well_separated(m, p.members_a, p.members_b, w.s)) rep.not_separated.push_back(p.seq);
    for (int a : p.members_a)
      for (int b : p.members_b)
        covered[static_cast<std::size_t>(a) * n + b] =
            covered[static_cast<std::size_t>(b) * n + a] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!covered[static_cast<std::size_t>(i) * n + j]) rep.uncovered.push_back({i, j});
  return rep;
}

WspdIndex::WspdIndex(const Wspd& w, int n) : w_(&w), pairs_of_(n) {
  for (std::size_t i = 0; i < w.pairs.size(); ++i) {
    for (int a : w.pairs[i].members_a) pairs_of_[a].push_back(static_cast<int>(i));
    for (int b : w.pairs[i].members_b) pairs_of_[b].push_back(static_cast<int>(i));
  }
  // emission order == seq order, so each list is already seq-sorted
}

const WspPair* WspdIndex::find_covering(int x, int y) const {
  for (int i : pairs_of_[x]) {
    const WspPair& p = w_->pairs[i];
    if (id_set_contains(p.members_a, x)) {
      if (id_set_contains(p.members_b, y)) return &p;
    } else if (id_set_contains(p.members_b, x) && id_set_contains(p.members_a, y)) {
      return &p;
    }
  }
  return nullptr;
}

}  // namespace uspan
