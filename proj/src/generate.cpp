#include "uspan/generate.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

namespace uspan {

namespace {

// uniform double in [0,1) from raw engine output; distribution adapters are
// implementation-defined and would break cross-platform reproducibility
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<double> gen_uniform(int n, int dim, std::uint64_t seed) {
  if (n < 1 || dim < 1) throw ValidationError("bad generator shape");
  std::mt19937_64 rng(seed);
  std::vector<double> coords(static_cast<std::size_t>(n) * dim);
  for (auto& c : coords) c = unit_double(rng);
  return coords;
}

std::vector<double> gen_clustered(int n, int dim, int k, double sep, std::uint64_t seed) {
  if (n < 1 || dim < 1 || k < 1) throw ValidationError("bad generator shape");
  std::mt19937_64 rng(seed);
  std::vector<double> coords(static_cast<std::size_t>(n) * dim);
  for (int i = 0; i < n; ++i) {
    int cluster = i % k;
    for (int d = 0; d < dim; ++d) {
      double base = d == 0 ? cluster * sep : 0.0;
      coords[static_cast<std::size_t>(i) * dim + d] = base + unit_double(rng);
    }
  }
  return coords;
}

std::vector<double> gen_grid(int n, int dim) {
  if (n < 1 || dim < 1) throw ValidationError("bad generator shape");
  int side = static_cast<int>(std::ceil(std::pow(static_cast<double>(n), 1.0 / dim)));
  while (std::pow(static_cast<double>(side), dim) < n) ++side;
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(n) * dim);
  std::vector<int> cur(dim, 0);
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < dim; ++d) coords.push_back(static_cast<double>(cur[d]));
    int d = dim - 1;
    while (d >= 0 && ++cur[d] == side) cur[d--] = 0;
  }
  return coords;
}

void write_points_csv(const std::string& path, const std::vector<double>& coords, int dim) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path + " for writing");
  out << "# dim=" << dim << "\n";
  char buf[64];
  const std::size_t n = coords.size() / dim;
  for (std::size_t i = 0; i < n; ++i) {
    for (int d = 0; d < dim; ++d) {
      std::snprintf(buf, sizeof buf, "%.17g", coords[i * dim + d]);
      out << (d ? "," : "") << buf;
    }
    out << "\n";
  }
}

namespace {

std::vector<double> parse_row(const std::string& line) {
  std::vector<double> row;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.find_first_not_of(" \t\r") == std::string::npos) continue;
    row.push_back(std::stod(cell));
  }
  return row;
}

}  // namespace

Metric load_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::string line;
  int dim = 0;
  std::vector<double> coords;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      auto pos = line.find("dim=");
      if (pos != std::string::npos) dim = std::stoi(line.substr(pos + 4));
      continue;
    }
    auto row = parse_row(line);
    if (row.empty()) continue;
    if (dim == 0) dim = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != dim)
      throw ValidationError("row width mismatch in " + path);
    coords.insert(coords.end(), row.begin(), row.end());
  }
  if (coords.empty()) throw ValidationError("no points in " + path);
  return Metric::euclidean(std::move(coords), dim);
}

Metric load_matrix_csv(const std::string& path, bool validate_triangle) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::string line;
  std::vector<double> table;
  std::size_t width = 0, rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto row = parse_row(line);
    if (row.empty()) continue;
    if (width == 0) width = row.size();
    if (row.size() != width) throw ValidationError("ragged matrix in " + path);
    table.insert(table.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows != width) throw ValidationError("matrix is not square in " + path);
  return Metric::explicit_matrix(std::move(table), validate_triangle);
}

std::vector<double> gen_geometric_shortest_path_matrix(int n, std::uint64_t seed,
                                                       double start_radius) {
  if (n < 2) throw ValidationError("need at least two points");
  auto coords = gen_uniform(n, 2, seed);
  auto euclid = [&](int i, int j) {
    double dx = coords[2 * i] - coords[2 * j];
    double dy = coords[2 * i + 1] - coords[2 * j + 1];
    return std::sqrt(dx * dx + dy * dy);
  };
  const double inf = std::numeric_limits<double>::infinity();
  double radius = start_radius > 0.0
                      ? start_radius
                      : 1.8 * std::sqrt(std::log(static_cast<double>(n)) / n);
  std::vector<double> d;
  for (;; radius *= 1.25) {
    d.assign(static_cast<std::size_t>(n) * n, inf);
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double w = euclid(i, j);
        if (w <= radius)
          d[static_cast<std::size_t>(i) * n + j] = d[static_cast<std::size_t>(j) * n + i] = w;
      }
    // relax to an exact fixpoint so the triangle inequality holds verbatim
    bool changed = true;
    while (changed) {
      changed = false;
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
          double dik = d[static_cast<std::size_t>(i) * n + k];
          if (dik == inf) continue;
          for (int j = 0; j < n; ++j) {
            double cand = dik + d[static_cast<std::size_t>(k) * n + j];
            if (cand < d[static_cast<std::size_t>(i) * n + j]) {
              d[static_cast<std::size_t>(i) * n + j] = cand;
              changed = true;
            }
          }
        }
    }
    bool connected = true;
    for (double v : d)
      if (v == inf) {
        connected = false;
        break;
      }
    if (connected) break;
  }
  // symmetrize: relaxation order can leave i->j and j->i an ulp apart
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double lo = std::min(d[static_cast<std::size_t>(i) * n + j],
                           d[static_cast<std::size_t>(j) * n + i]);
      d[static_cast<std::size_t>(i) * n + j] = d[static_cast<std::size_t>(j) * n + i] = lo;
    }
  return d;
}

}  // namespace uspan
