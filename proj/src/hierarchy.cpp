#include "uspan/hierarchy.hpp"

#include <algorithm>
#include <cmath>

namespace uspan {

bool DiscreteCenterHierarchy::in_level(int id, int level) const {
  return std::binary_search(levels[level].begin(), levels[level].end(), id);
}

int DiscreteCenterHierarchy::ancestor(int id, int level) const {
  int cur = id;
  for (int i = 1; i <= level; ++i) cur = parents[i][cur];
  return cur;
}

double DiscreteCenterHierarchy::level_radius(int level) const {
  return std::ldexp(1.0, level) * scale;
}

DiscreteCenterHierarchy build_hierarchy(const Metric& m) {
  DiscreteCenterHierarchy h;
  h.n = m.size();
  if (h.n >= 2) {
    auto a = aspect_ratio(m);
    h.scale = a.d_min;
    h.alpha = a.alpha;
  }

  h.levels.push_back({});
  h.levels[0].reserve(h.n);
  for (int i = 0; i < h.n; ++i) h.levels[0].push_back(i);
  h.parents.push_back({});  // level 0 has no parent map
  h.desc.push_back(std::vector<IdSet>(h.n));
  for (int i = 0; i < h.n; ++i) h.desc[0][i] = {i};

  while (h.levels.back().size() > 1) {
    const int level = static_cast<int>(h.levels.size());
    const double radius = h.level_radius(level);
    const auto& below = h.levels.back();
    std::vector<int> kept;
    // ascending scan; a candidate survives iff every kept point is >= radius away
    for (int p : below) {
      bool keep = true;
      for (int k : kept)
        if (m.dist(p, k) < radius) {
          keep = false;
          break;
        }
      if (keep) kept.push_back(p);
    }
    std::vector<int> parent(h.n, -1);
    for (int p : below) {
      if (std::binary_search(kept.begin(), kept.end(), p)) {
        parent[p] = p;  // survivors stay their own representative
        continue;
      }
      for (int k : kept)
        if (m.within(p, k, radius)) {
          parent[p] = k;  // kept is ascending, first hit is the lowest id
          break;
        }
    }
    std::vector<IdSet> dlevel(h.n);
    for (int p : below) {
      auto& dst = dlevel[parent[p]];
      const auto& src = h.desc[level - 1][p];
      dst.insert(dst.end(), src.begin(), src.end());
    }
    for (int k : kept) std::sort(dlevel[k].begin(), dlevel[k].end());
    h.levels.push_back(std::move(kept));
    h.parents.push_back(std::move(parent));
    h.desc.push_back(std::move(dlevel));
  }
  h.top_level = static_cast<int>(h.levels.size()) - 1;
  return h;
}

HierarchyReport check_hierarchy(const Metric& m, const DiscreteCenterHierarchy& h) {
  HierarchyReport rep;
  for (int i = 1; i <= h.top_level; ++i) {
    const double radius = h.level_radius(i);
    for (int p : h.levels[i - 1]) {
      int par = h.parents[i][p];
      if (par < 0 || !h.in_level(par, i) || !m.within(p, par, radius))
        ++rep.covering_violations;
    }
    const auto& lv = h.levels[i];
    for (std::size_t a = 0; a < lv.size(); ++a)
      for (std::size_t b = a + 1; b < lv.size(); ++b)
        if (m.dist(lv[a], lv[b]) < radius) ++rep.separation_violations;
  }
  for (int i = 0; i <= h.top_level; ++i) {
    const double bound = h.level_radius(i + 1);
    for (int p = 0; p < h.n; ++p)
      if (!m.within(p, h.ancestor(p, i), bound)) ++rep.ancestor_violations;
  }
  return rep;
}

bool DeformableSpanner::adjacent(int level, int u, int v) const {
  const auto& lv = level_nbrs[level];
  auto it = std::lower_bound(lv.begin(), lv.end(), u,
                             [](const auto& e, int key) { return e.first < key; });
  if (it == lv.end() || it->first != u) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

int DeformableSpanner::degree(int level, int id) const {
  const auto& lv = level_nbrs[level];
  auto it = std::lower_bound(lv.begin(), lv.end(), id,
                             [](const auto& e, int key) { return e.first < key; });
  if (it == lv.end() || it->first != id) return 0;
  return static_cast<int>(it->second.size());
}

DeformableSpanner build_deformable_spanner(const Metric& m, const DiscreteCenterHierarchy& h,
                                           double c) {
  if (!(c >= 1.0)) throw ValidationError("link factor c must be >= 1");
  DeformableSpanner ds;
  ds.c = c;
  ds.level_edges.resize(h.top_level + 1);
  ds.level_nbrs.resize(h.top_level + 1);
  for (int i = 0; i <= h.top_level; ++i) {
    const double threshold = c * h.level_radius(i);
    const auto& lv = h.levels[i];
    std::vector<std::vector<int>> nbr(lv.size());
    for (std::size_t a = 0; a < lv.size(); ++a)
      for (std::size_t b = a + 1; b < lv.size(); ++b) {
        if (m.within(lv[a], lv[b], threshold)) {
          ds.level_edges[i].push_back({lv[a], lv[b]});
          ds.total_weight += m.dist(lv[a], lv[b]);
          ++ds.edge_count;
          nbr[a].push_back(lv[b]);
          nbr[b].push_back(lv[a]);
        }
      }
    ds.level_nbrs[i].reserve(lv.size());
    for (std::size_t a = 0; a < lv.size(); ++a)
      ds.level_nbrs[i].push_back({lv[a], std::move(nbr[a])});
  }
  return ds;
}

Wspd cousin_pair_wspd(const Metric& m, const DiscreteCenterHierarchy& h,
                      const DeformableSpanner& ds) {
  (void)m;
  Wspd w;
  w.s = ds.c / 4.0 - 1.0;
  w.order_desc = "cousin-pairs";
  for (int i = 0; i < h.top_level; ++i) {
    const auto& lv = h.levels[i];
    for (std::size_t a = 0; a < lv.size(); ++a)
      for (std::size_t b = a + 1; b < lv.size(); ++b) {
        int u = lv[a], v = lv[b];
        if (ds.adjacent(i, u, v)) continue;
        int pu = h.parents[i + 1][u], pv = h.parents[i + 1][v];
        if (pu != pv && !ds.adjacent(i + 1, pu, pv)) continue;
        WspPair pr;
        pr.center_a = u;
        pr.center_b = v;
        pr.radius = h.level_radius(i + 1);
        pr.members_a = h.desc[i][u];
        pr.members_b = h.desc[i][v];
        pr.seq = static_cast<int>(w.pairs.size());
        w.pairs.push_back(std::move(pr));
      }
  }
  return w;
}

CousinMapResult map_to_cousin_pair(const Metric& m, const DiscreteCenterHierarchy& h,
                                   const DeformableSpanner& ds, int p, int q) {
  (void)m;
  auto linked = [&](int level) {
    int u = h.ancestor(p, level), v = h.ancestor(q, level);
    return u == v || ds.adjacent(level, u, v);
  };
  CousinMapResult res;
  if (p == q || linked(0)) return res;
  for (int i = 0; i < h.top_level; ++i) {
    if (linked(i + 1)) {
      res.found = true;
      res.level = i;
      res.u = h.ancestor(p, i);
      res.v = h.ancestor(q, i);
      return res;
    }
  }
  return res;  // unreachable when the hierarchy tops out at one node
}

CousinMappingStats cousin_mapping_stats(const Metric& m, const DiscreteCenterHierarchy& h,
                                        const DeformableSpanner& ds, const Wspd& w) {
  CousinMappingStats st;
  std::vector<std::tuple<int, int, int>> hits;
  for (const auto& pr : w.pairs) {
    auto res = map_to_cousin_pair(m, h, ds, pr.center_a, pr.center_b);
    if (!res.found) {
      ++st.unmapped;
      continue;
    }
    ++st.mapped;
    hits.emplace_back(res.level, std::min(res.u, res.v), std::max(res.u, res.v));
  }
  std::sort(hits.begin(), hits.end());
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    st.max_multiplicity = std::max(st.max_multiplicity, static_cast<int>(j - i));
    i = j;
  }
  return st;
}

}  // namespace uspan
