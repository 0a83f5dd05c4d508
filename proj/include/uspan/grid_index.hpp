#pragma once

#include <vector>

namespace uspan {

/// Uniform bucket grid over a fixed euclidean point set. Query returns
/// candidate ids whose cells intersect the axis-aligned box of a ball; the
/// caller does the exact distance filter. Correct for any dimension, sized so
/// the cell count stays O(n).
class GridIndex {
 public:
  GridIndex(const double* coords, int n, int dim);

  /// Appends ids from every cell overlapping [center - r, center + r]^d.
  void candidates(const double* center, double r, std::vector<int>& out) const;

 private:
  long long flat_index(const std::vector<int>& cell) const;

  const double* coords_;
  int n_;
  int dim_;
  int per_axis_ = 1;
  double cell_ = 1.0;
  std::vector<double> lo_;
  std::vector<std::vector<int>> buckets_;
};

}  // namespace uspan
