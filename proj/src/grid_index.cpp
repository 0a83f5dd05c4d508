#include "uspan/grid_index.hpp"

#include <algorithm>
#include <cmath>

namespace uspan {

GridIndex::GridIndex(const double* coords, int n, int dim)
    : coords_(coords), n_(n), dim_(dim), lo_(dim, 0.0) {
  std::vector<double> hi(dim, 0.0);
  for (int k = 0; k < dim; ++k) lo_[k] = hi[k] = coords[k];
  for (int i = 1; i < n; ++i)
    for (int k = 0; k < dim; ++k) {
      double c = coords[static_cast<std::size_t>(i) * dim + k];
      lo_[k] = std::min(lo_[k], c);
      hi[k] = std::max(hi[k], c);
    }
  double extent = 0.0;
  for (int k = 0; k < dim; ++k) extent = std::max(extent, hi[k] - lo_[k]);

  per_axis_ = std::max(1, static_cast<int>(std::floor(std::pow(static_cast<double>(n),
                                                               1.0 / dim))));
  // keep the flat bucket table O(n) even in higher dimensions
  while (per_axis_ > 1 && std::pow(static_cast<double>(per_axis_), dim) > 4.0 * n) --per_axis_;
  cell_ = extent > 0.0 ? extent / per_axis_ : 1.0;

  long long total = 1;
  for (int k = 0; k < dim; ++k) total *= per_axis_;
  buckets_.assign(static_cast<std::size_t>(total), {});

  std::vector<int> cell(dim);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < dim; ++k) {
      double c = coords[static_cast<std::size_t>(i) * dim + k];
      int idx = static_cast<int>(std::floor((c - lo_[k]) / cell_));
      cell[k] = std::clamp(idx, 0, per_axis_ - 1);
    }
    buckets_[static_cast<std::size_t>(flat_index(cell))].push_back(i);
  }
}

long long GridIndex::flat_index(const std::vector<int>& cell) const {
  long long f = 0;
  for (int k = 0; k < dim_; ++k) f = f * per_axis_ + cell[k];
  return f;
}

void GridIndex::candidates(const double* center, double r, std::vector<int>& out) const {
  std::vector<int> lo(dim_), hi(dim_), cur(dim_);
  for (int k = 0; k < dim_; ++k) {
    lo[k] = std::clamp(static_cast<int>(std::floor((center[k] - r - lo_[k]) / cell_)), 0,
                       per_axis_ - 1);
    hi[k] = std::clamp(static_cast<int>(std::floor((center[k] + r - lo_[k]) / cell_)), 0,
                       per_axis_ - 1);
    cur[k] = lo[k];
  }
  // odometer walk over the cell box
  while (true) {
    const auto& bucket = buckets_[static_cast<std::size_t>(flat_index(cur))];
    out.insert(out.end(), bucket.begin(), bucket.end());
    int k = dim_ - 1;
    while (k >= 0 && cur[k] == hi[k]) {
      cur[k] = lo[k];
      --k;
    }
    if (k < 0) break;
    ++cur[k];
  }
}

}  // namespace uspan
