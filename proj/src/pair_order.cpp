#include "uspan/pair_order.hpp"

#include <algorithm>
#include <random>

namespace uspan {

OrderStrategy order_strategy_from_string(const std::string& name) {
  if (name == "random") return OrderStrategy::RandomWithSeed;
  if (name == "lex") return OrderStrategy::Lexicographic;
  if (name == "revlex") return OrderStrategy::ReverseLexicographic;
  if (name == "decreasing") return OrderStrategy::DecreasingDistance;
  if (name == "increasing") return OrderStrategy::IncreasingDistance;
  if (name == "explicit") return OrderStrategy::ExplicitList;
  throw ValidationError("unknown order strategy: " + name);
}

std::string to_string(OrderStrategy s) {
  switch (s) {
    case OrderStrategy::RandomWithSeed: return "random";
    case OrderStrategy::Lexicographic: return "lex";
    case OrderStrategy::ReverseLexicographic: return "revlex";
    case OrderStrategy::DecreasingDistance: return "decreasing";
    case OrderStrategy::IncreasingDistance: return "increasing";
    case OrderStrategy::ExplicitList: return "explicit";
  }
  return "?";
}

std::string PairOrder::describe() const {
  if (strategy == OrderStrategy::RandomWithSeed)
    return "random(seed=" + std::to_string(seed) + ")";
  return to_string(strategy);
}

static std::vector<std::pair<int, int>> lex_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

std::vector<std::pair<int, int>> make_pair_sequence(const Metric& m, const PairOrder& order) {
  const int n = m.size();
  auto pairs = lex_pairs(n);
  switch (order.strategy) {
    case OrderStrategy::Lexicographic:
      break;
    case OrderStrategy::ReverseLexicographic:
      std::reverse(pairs.begin(), pairs.end());
      break;
    case OrderStrategy::RandomWithSeed: {
      // explicit Fisher-Yates: identical sequences on every platform
      std::mt19937_64 rng(order.seed);
      for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[rng() % i]);
      break;
    }
    case OrderStrategy::DecreasingDistance:
      std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        double da = m.dist(a.first, a.second), db = m.dist(b.first, b.second);
        if (da != db) return da > db;
        return a < b;
      });
      break;
    case OrderStrategy::IncreasingDistance:
      std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        double da = m.dist(a.first, a.second), db = m.dist(b.first, b.second);
        if (da != db) return da < db;
        return a < b;
      });
      break;
    case OrderStrategy::ExplicitList: {
      std::vector<std::pair<int, int>> given;
      given.reserve(order.explicit_pairs.size());
      for (auto [a, b] : order.explicit_pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
          throw ValidationError("explicit pair out of range");
        given.push_back({std::min(a, b), std::max(a, b)});
      }
      auto sorted = given;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != pairs)
        throw ValidationError("explicit order must list each unordered pair exactly once");
      return given;
    }
  }
  return pairs;
}

}  // namespace uspan
