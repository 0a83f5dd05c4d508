#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace uspan {

/// Sorted list of point ids, strictly increasing.
using IdSet = std::vector<int>;

inline bool id_set_contains(const IdSet& ids, int id) {
  return std::binary_search(ids.begin(), ids.end(), id);
}

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class MetricKind { Euclidean, ExplicitMatrix };

class GridIndex;

/// Finite point set with a distance oracle: coordinates in R^d or an explicit
/// symmetric distance table. Points must be distinct; a zero minimum pairwise
/// distance would break the aspect ratio and everything built on top.
/// Immutable after construction, safe to share across threads for reads.
class Metric {
 public:
  /// coords is row-major, n = coords.size() / dim. Rejects duplicate points.
  static Metric euclidean(std::vector<double> coords, int dim);

  /// table is a row-major n*n matrix (n inferred). Validates symmetry, zero
  /// diagonal and positive off-diagonal entries; the O(n^3) triangle
  /// inequality check can be skipped for large inputs.
  static Metric explicit_matrix(std::vector<double> table, bool validate_triangle = true);

  MetricKind kind() const { return kind_; }
  int size() const { return n_; }
  int dim() const { return dim_; }  // 0 for matrix metrics

  double dist(int i, int j) const;
  /// All threshold tests in the library go through this predicate (exact <=).
  bool within(int i, int j, double r) const { return dist(i, j) <= r; }

  std::span<const double> point(int i) const;  // euclidean only

  /// Closed ball { j : dist(center, j) <= r }, sorted. Grid-indexed for
  /// euclidean inputs, linear scan for matrix inputs.
  IdSet ball(int center, double r) const;
  /// Reference implementation for differential tests.
  IdSet ball_linear(int center, double r) const;
  /// Ball restricted to ids with mask[id] != 0.
  IdSet ball_masked(int center, double r, const std::vector<char>& mask) const;

  Metric(Metric&&) noexcept;
  Metric& operator=(Metric&&) noexcept;
  Metric(const Metric&) = delete;
  Metric& operator=(const Metric&) = delete;
  ~Metric();

 private:
  Metric() = default;

  MetricKind kind_ = MetricKind::Euclidean;
  int n_ = 0;
  int dim_ = 0;
  std::vector<double> data_;  // coords row-major, or the n*n table
  std::unique_ptr<GridIndex> index_;
};

struct AspectStats {
  double alpha;
  double d_min;
  double d_max;
};

/// Ratio of max to min pairwise distance; requires n >= 2.
AspectStats aspect_ratio(const Metric& m);

/// Max pairwise distance within a (non-empty) id set.
double diam(const Metric& m, const IdSet& a);

/// Min cross distance between two (non-empty) id sets.
double set_distance(const Metric& m, const IdSet& a, const IdSet& b);

/// d(A,B) >= s * max(diam(A), diam(B)), exact comparison.
bool is_s_well_separated(const Metric& m, const IdSet& a, const IdSet& b, double s);

/// MST weight of the complete distance graph (dense Prim, exact).
double mst_weight(const Metric& m);

}  // namespace uspan
