#pragma once

#include <cstddef>
#include <vector>

#include "uspan/metric.hpp"
#include "uspan/wspd.hpp"

namespace uspan {

/// Levels of discrete centers. Level 0 is every point; level i keeps a subset
/// of level i-1 whose members are pairwise >= 2^i apart (distances normalized
/// by d_min) while covering the dropped points within 2^i. The top level is a
/// single point. Ancestors stay within 2^(i+1) of their descendants.
struct DiscreteCenterHierarchy {
  int n = 0;
  double scale = 1.0;  // d_min; thresholds are 2^i * scale in original units
  double alpha = 1.0;
  int top_level = 0;
  std::vector<std::vector<int>> levels;   // levels[i] sorted ids
  std::vector<std::vector<int>> parents;  // parents[i][id] for id in level i-1, else -1
  std::vector<std::vector<IdSet>> desc;   // desc[i][id]: level-0 ids under id at level i

  bool in_level(int id, int level) const;
  /// Representative of id at `level` (id itself at level 0).
  int ancestor(int id, int level) const;
  /// Threshold 2^level * scale, the one formula every comparison uses.
  double level_radius(int level) const;
};

DiscreteCenterHierarchy build_hierarchy(const Metric& m);

struct HierarchyReport {
  std::size_t covering_violations = 0;
  std::size_t separation_violations = 0;
  std::size_t ancestor_violations = 0;
  bool ok() const {
    return covering_violations + separation_violations + ancestor_violations == 0;
  }
};

HierarchyReport check_hierarchy(const Metric& m, const DiscreteCenterHierarchy& h);

/// Per-level proximity graph: u,v in level i are linked iff
/// dist(u,v) <= c * 2^i * scale.
struct DeformableSpanner {
  double c = 0.0;
  std::vector<std::vector<std::pair<int, int>>> level_edges;
  std::vector<std::vector<std::pair<int, std::vector<int>>>> level_nbrs;  // sorted per level
  double total_weight = 0.0;
  std::size_t edge_count = 0;

  bool adjacent(int level, int u, int v) const;
  int degree(int level, int id) const;
};

/// Requires c >= 1.
DeformableSpanner build_deformable_spanner(const Metric& m, const DiscreteCenterHierarchy& h,
                                           double c);

/// Pairs (u,v) at level i that are not linked while their parents at level
/// i+1 are linked (or equal). Emitted as ball pairs over descendant sets with
/// radius 2^(i+1) * scale; separation c/4 - 1.
Wspd cousin_pair_wspd(const Metric& m, const DiscreteCenterHierarchy& h,
                      const DeformableSpanner& ds);

struct CousinMapResult {
  bool found = false;
  int level = -1;
  int u = -1;
  int v = -1;
};

/// Walks ancestors of p and q bottom-up to the first level where they are
/// unlinked but their parents are linked. Not found when p,q are already
/// linked at level 0.
CousinMapResult map_to_cousin_pair(const Metric& m, const DiscreteCenterHierarchy& h,
                                   const DeformableSpanner& ds, int p, int q);

struct CousinMappingStats {
  std::size_t mapped = 0;
  std::size_t unmapped = 0;
  int max_multiplicity = 0;  // most greedy pairs landing on one cousin pair
};

/// Diagnostic: map every greedy pair (by its centers) onto a cousin pair and
/// histogram the hits.
CousinMappingStats cousin_mapping_stats(const Metric& m, const DiscreteCenterHierarchy& h,
                                        const DeformableSpanner& ds, const Wspd& w);

}  // namespace uspan
