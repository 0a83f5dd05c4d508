#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uspan/metric.hpp"

namespace uspan {

/// Deterministic across platforms: doubles are derived from raw mt19937_64
/// output, never from distribution adapters.
std::vector<double> gen_uniform(int n, int dim, std::uint64_t seed);

/// k tight unit-cube clusters with centers sep apart along the first axis;
/// points assigned round-robin.
std::vector<double> gen_clustered(int n, int dim, int k, double sep, std::uint64_t seed);

/// First n sites of the unit lattice with ceil(n^(1/dim)) per side.
std::vector<double> gen_grid(int n, int dim);

void write_points_csv(const std::string& path, const std::vector<double>& coords, int dim);

/// CSV, one point per line; a leading "# dim=<d>" comment is honored,
/// otherwise the column count of the first row decides.
Metric load_points_csv(const std::string& path);

/// CSV with n rows of n entries.
Metric load_matrix_csv(const std::string& path, bool validate_triangle = true);

/// Shortest-path metric of a random geometric graph in the unit square
/// (radius grown until connected). Iterated to an exact relaxation fixpoint
/// so the triangle inequality holds under exact comparison.
std::vector<double> gen_geometric_shortest_path_matrix(int n, std::uint64_t seed,
                                                       double start_radius = 0.0);

}  // namespace uspan
