#pragma once

#include <cstddef>
#include <utility>

namespace designforge {

using PointPair = std::pair<int, int>;

struct PairCoverage {
  PointPair pair;
  int count = 0;

  friend bool operator==(const PairCoverage&, const PairCoverage&) = default;
};

// Index of pair {u, v}, u < v, in a flat coverage counter: v(v-1)/2 + u.
inline std::size_t pair_index(int u, int v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(v) * (v - 1) / 2 + static_cast<std::size_t>(u);
}

}  // namespace designforge
