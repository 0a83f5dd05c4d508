#include "uspan/metric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "uspan/grid_index.hpp"

namespace uspan {

Metric::~Metric() = default;
Metric::Metric(Metric&&) noexcept = default;
Metric& Metric::operator=(Metric&&) noexcept = default;

Metric Metric::euclidean(std::vector<double> coords, int dim) {
  if (dim < 1) throw ValidationError("dim must be >= 1");
  if (coords.empty() || coords.size() % static_cast<std::size_t>(dim) != 0)
    throw ValidationError("coordinate count not a multiple of dim");
  Metric m;
  m.kind_ = MetricKind::Euclidean;
  m.dim_ = dim;
  m.n_ = static_cast<int>(coords.size()) / dim;
  m.data_ = std::move(coords);
  for (double c : m.data_)
    if (!std::isfinite(c)) throw ValidationError("non-finite coordinate");
  for (int i = 0; i < m.n_; ++i)
    for (int j = i + 1; j < m.n_; ++j)
      if (m.dist(i, j) == 0.0)
        throw ValidationError("duplicate points " + std::to_string(i) + "," + std::to_string(j));
  m.index_ = std::make_unique<GridIndex>(m.data_.data(), m.n_, m.dim_);
  return m;
}

Metric Metric::explicit_matrix(std::vector<double> table, bool validate_triangle) {
  const std::size_t sz = table.size();
  int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(sz))));
  if (n < 1 || static_cast<std::size_t>(n) * n != sz)
    throw ValidationError("matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (table[static_cast<std::size_t>(i) * n + i] != 0.0)
      throw ValidationError("nonzero diagonal at " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      double d = table[static_cast<std::size_t>(i) * n + j];
      if (!std::isfinite(d)) throw ValidationError("non-finite entry");
      if (i != j && d <= 0.0)
        throw ValidationError("non-positive distance at " + std::to_string(i) + "," +
                              std::to_string(j));
      if (table[static_cast<std::size_t>(j) * n + i] != d)
        throw ValidationError("asymmetric entry at " + std::to_string(i) + "," +
                              std::to_string(j));
    }
  }
  if (validate_triangle) {
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        double dik = table[static_cast<std::size_t>(i) * n + k];
        for (int j = 0; j < n; ++j)
          if (table[static_cast<std::size_t>(i) * n + j] >
              dik + table[static_cast<std::size_t>(k) * n + j])
            throw ValidationError("triangle inequality fails at " + std::to_string(i) + "," +
                                  std::to_string(j) + " via " + std::to_string(k));
      }
  }
  Metric m;
  m.kind_ = MetricKind::ExplicitMatrix;
  m.dim_ = 0;
  m.n_ = n;
  m.data_ = std::move(table);
  return m;
}

double Metric::dist(int i, int j) const {
  if (kind_ == MetricKind::ExplicitMatrix)
    return data_[static_cast<std::size_t>(i) * n_ + j];
  const double* a = data_.data() + static_cast<std::size_t>(i) * dim_;
  const double* b = data_.data() + static_cast<std::size_t>(j) * dim_;
  double sum = 0.0;
  for (int k = 0; k < dim_; ++k) {
    double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::span<const double> Metric::point(int i) const {
  if (kind_ != MetricKind::Euclidean) throw ValidationError("point() on a matrix metric");
  return {data_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
}

IdSet Metric::ball_linear(int center, double r) const {
  IdSet out;
  for (int j = 0; j < n_; ++j)
    if (within(center, j, r)) out.push_back(j);
  return out;
}

IdSet Metric::ball(int center, double r) const {
  if (!index_) return ball_linear(center, r);
  static thread_local std::vector<int> cand;
  cand.clear();
  index_->candidates(data_.data() + static_cast<std::size_t>(center) * dim_, r, cand);
  IdSet out;
  for (int j : cand)
    if (within(center, j, r)) out.push_back(j);
  std::sort(out.begin(), out.end());
  return out;
}

IdSet Metric::ball_masked(int center, double r, const std::vector<char>& mask) const {
  IdSet out;
  if (index_) {
    static thread_local std::vector<int> cand;
    cand.clear();
    index_->candidates(data_.data() + static_cast<std::size_t>(center) * dim_, r, cand);
    for (int j : cand)
      if (mask[j] && within(center, j, r)) out.push_back(j);
    std::sort(out.begin(), out.end());
  } else {
    for (int j = 0; j < n_; ++j)
      if (mask[j] && within(center, j, r)) out.push_back(j);
  }
  return out;
}

AspectStats aspect_ratio(const Metric& m) {
  if (m.size() < 2) throw ValidationError("aspect ratio needs at least two points");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) {
      double d = m.dist(i, j);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  return {hi / lo, lo, hi};
}

double diam(const Metric& m, const IdSet& a) {
  if (a.empty()) throw ValidationError("diam of empty set");
  double hi = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) hi = std::max(hi, m.dist(a[i], a[j]));
  return hi;
}

double set_distance(const Metric& m, const IdSet& a, const IdSet& b) {
  if (a.empty() || b.empty()) throw ValidationError("set distance with empty set");
  double lo = std::numeric_limits<double>::infinity();
  for (int x : a)
    for (int y : b) lo = std::min(lo, x == y ? 0.0 : m.dist(x, y));
  return lo;
}

bool is_s_well_separated(const Metric& m, const IdSet& a, const IdSet& b, double s) {
  return set_distance(m, a, b) >= s * std::max(diam(m, a), diam(m, b));
}

double mst_weight(const Metric& m) {
  int n = m.size();
  if (n <= 1) return 0.0;
  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  std::vector<char> used(n, 0);
  key[0] = 0.0;
  double total = 0.0;
  for (int it = 0; it < n; ++it) {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (!used[v] && (u == -1 || key[v] < key[u])) u = v;
    used[u] = 1;
    total += key[u];
    for (int v = 0; v < n; ++v)
      if (!used[v]) key[v] = std::min(key[v], m.dist(u, v));
  }
  return total;
}

}  // namespace uspan
