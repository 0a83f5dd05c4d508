#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uspan/metric.hpp"

namespace uspan {

enum class OrderStrategy {
  RandomWithSeed,
  Lexicographic,
  ReverseLexicographic,
  DecreasingDistance,
  IncreasingDistance,
  ExplicitList,
};

OrderStrategy order_strategy_from_string(const std::string& name);
std::string to_string(OrderStrategy s);

/// Recipe for enumerating every unordered pair exactly once. The random
/// strategy uses a hand-rolled Fisher-Yates over mt19937_64 so the sequence
/// is identical across platforms.
struct PairOrder {
  OrderStrategy strategy = OrderStrategy::RandomWithSeed;
  std::uint64_t seed = 0;
  std::vector<std::pair<int, int>> explicit_pairs;  // ExplicitList only

  std::string describe() const;
};

/// Materializes the pair sequence; throws ValidationError if an explicit list
/// is not exactly the set of unordered pairs.
std::vector<std::pair<int, int>> make_pair_sequence(const Metric& m, const PairOrder& order);

}  // namespace uspan
