#pragma once

// Literal copies of the reference data and library-independent oracles. The
// oracles deliberately avoid the library's edge lists, pair indexing and
// coverage counters so that agreement means something.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace fixtures {

using Pair = std::pair<int, int>;

inline const std::vector<Pair> kShrikhandeEdges = {
    {1, 2},   {1, 4},   {1, 5},   {1, 8},   {1, 13},  {1, 14},  {2, 3},   {2, 5},
    {2, 6},   {2, 14},  {2, 15},  {3, 4},   {3, 6},   {3, 7},   {3, 15},  {3, 16},
    {4, 7},   {4, 8},   {4, 13},  {4, 16},  {5, 6},   {5, 8},   {5, 9},   {5, 12},
    {6, 7},   {6, 9},   {6, 10},  {7, 8},   {7, 10},  {7, 11},  {8, 11},  {8, 12},
    {9, 10},  {9, 12},  {9, 13},  {9, 16},  {10, 11}, {10, 13}, {10, 14}, {11, 12},
    {11, 14}, {11, 15}, {12, 15}, {12, 16}, {13, 14}, {13, 16}, {14, 15}, {15, 16}};

inline const std::vector<Pair> kLineK44Edges = {
    {1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 6},   {1, 7},   {2, 3},   {2, 4},
    {2, 8},   {2, 11},  {2, 12},  {3, 4},   {3, 9},   {3, 13},  {3, 15},  {4, 10},
    {4, 14},  {4, 16},  {5, 6},   {5, 7},   {5, 8},   {5, 9},   {5, 10},  {6, 7},
    {6, 11},  {6, 13},  {6, 14},  {7, 12},  {7, 15},  {7, 16},  {8, 9},   {8, 10},
    {8, 11},  {8, 12},  {9, 10},  {9, 13},  {9, 15},  {10, 14}, {10, 16}, {11, 12},
    {11, 13}, {11, 14}, {12, 15}, {12, 16}, {13, 14}, {13, 15}, {14, 16}, {15, 16}};

using Tuple = std::array<int, 16>;

struct ReferenceBlock {
  bool shrikhande;
  int order;
  int omega;
  Tuple labels;
};

inline const std::vector<ReferenceBlock> kReferenceBlocks = {
    {true, 97, 1, {0, 4, 6, 62, 1, 11, 19, 45, 69, 80, 59, 78, 32, 74, 28, 44}},
    {true, 193, 81, {0, 19, 164, 27, 51, 175, 66, 138, 74, 20, 70, 94, 108, 77, 41, 134}},
    {true, 289, 139, {0, 136, 232, 11, 176, 180, 89, 159, 288, 257, 90, 42, 45, 260, 37, 19}},
    {false, 97, 1, {0, 57, 41, 20, 1, 3, 10, 51, 79, 6, 82, 2, 18, 71, 45, 32}},
    {false, 193, 81, {0, 19, 167, 32, 3, 78, 159, 28, 34, 24, 141, 87, 1, 118, 183, 39}},
    {false, 289, 139, {0, 206, 203, 19, 109, 71, 127, 259, 43, 59, 227, 52, 252, 76, 32, 28}},
};

inline const std::array<Tuple, 2> kShrikhandeK4444 = {{
    {0, 1, 2, 5, 3, 4, 7, 6, 10, 9, 8, 13, 11, 14, 15, 12},
    {0, 2, 8, 10, 9, 3, 5, 15, 12, 14, 4, 6, 7, 13, 11, 1},
}};

inline const std::array<Tuple, 2> kLineK44K4444 = {{
    {0, 1, 2, 3, 5, 6, 7, 4, 11, 10, 15, 14, 8, 9, 13, 12},
    {0, 9, 11, 14, 10, 13, 15, 7, 1, 8, 4, 2, 6, 3, 12, 5},
}};

inline const std::vector<Pair>& edges_for(bool shrikhande) {
  return shrikhande ? kShrikhandeEdges : kLineK44Edges;
}

// GF(17^2) as pairs (a, b) = a z + b with z^2 = -3z - 1, written out directly.
struct Gf289 {
  static int mul(int x, int y) {
    const int a = x / 17, b = x % 17, c = y / 17, d = y % 17;
    // (a z + b)(c z + d) = ac z^2 + (ad + bc) z + bd
    const int ac = a * c;
    int lin = a * d + b * c - 3 * ac;
    int con = b * d - ac;
    lin = ((lin % 17) + 17) % 17;
    con = ((con % 17) + 17) % 17;
    return 17 * lin + con;
  }
  static int add(int x, int y) { return 17 * ((x / 17 + y / 17) % 17) + (x % 17 + y % 17) % 17; }
};

// x -> omega^e x + d over Z_p or GF(17^2), 0 <= e < (n-1)/96, 0 <= d < n.
inline std::vector<Tuple> develop_oracle(const ReferenceBlock& b) {
  const int n = b.order;
  const bool gf = n == 289;
  auto mul = [&](int x, int y) { return gf ? Gf289::mul(x, y) : x * y % n; };
  auto add = [&](int x, int y) { return gf ? Gf289::add(x, y) : (x + y) % n; };
  std::vector<Tuple> out;
  int scale = 1;
  for (int e = 0; e < (n - 1) / 96; ++e) {
    for (int d = 0; d < n; ++d) {
      Tuple t{};
      for (int i = 0; i < 16; ++i) t[i] = add(mul(scale, b.labels[i]), d);
      out.push_back(t);
    }
    scale = mul(scale, b.omega);
  }
  return out;
}

// Pair multiplicities of the labelled copies, pushed through the literal edges.
inline std::map<Pair, int> pair_counts(const std::vector<Tuple>& blocks, bool shrikhande) {
  std::map<Pair, int> counts;
  for (const auto& b : blocks) {
    for (auto [u, v] : edges_for(shrikhande)) {
      int x = b[u - 1], y = b[v - 1];
      if (x > y) std::swap(x, y);
      ++counts[{x, y}];
    }
  }
  return counts;
}

// Every pair of 0..n-1 exactly once.
inline bool covers_complete(const std::vector<Tuple>& blocks, bool shrikhande, int n) {
  const auto counts = pair_counts(blocks, shrikhande);
  if (counts.size() != static_cast<std::size_t>(n) * (n - 1) / 2) return false;
  return std::all_of(counts.begin(), counts.end(), [n](const auto& kv) {
    return kv.second == 1 && kv.first.first >= 0 && kv.first.second < n &&
           kv.first.first != kv.first.second;
  });
}

// The three necessary conditions for a 6-regular, 16-vertex, 48-edge graph.
inline bool admissible_by_clauses(long long n) {
  if (n < 1) return false;
  const bool c1 = n >= 16 || n == 1;
  const bool c2 = (n * (n - 1)) % 96 == 0;
  const bool c3 = (n - 1) % 6 == 0;
  return c1 && c2 && c3;
}

// Triangles inside each open neighbourhood: 0 for a 6-cycle, 2 for two
// disjoint triangles.
inline std::vector<int> neighbourhood_triangles(const std::vector<Pair>& edges, int n) {
  std::set<Pair> e(edges.begin(), edges.end());
  auto adj = [&](int u, int v) { return e.count({std::min(u, v), std::max(u, v)}) > 0; };
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    std::vector<int> nb;
    for (int w = 1; w <= n; ++w) {
      if (w != v && adj(v, w)) nb.push_back(w);
    }
    int triangles = 0;
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        for (std::size_t c = b + 1; c < nb.size(); ++c) {
          triangles += adj(nb[a], nb[b]) && adj(nb[b], nb[c]) && adj(nb[a], nb[c]);
        }
      }
    }
    out.push_back(triangles);
  }
  return out;
}

// Cross-group pairs covered exactly once, same-group pairs never, recomputed
// with a set of pairs rather than an index.
struct GddCheck {
  std::size_t cross_pairs = 0;
  std::size_t covered_once = 0;
  std::size_t defects = 0;
};

inline GddCheck check_gdd(const std::vector<std::vector<int>>& groups,
                          const std::vector<std::vector<int>>& blocks) {
  std::map<int, int> group_of;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int p : groups[g]) group_of[p] = static_cast<int>(g);
  }
  GddCheck r;
  for (auto i = group_of.begin(); i != group_of.end(); ++i) {
    for (auto j = std::next(i); j != group_of.end(); ++j) r.cross_pairs += i->second != j->second;
  }
  std::map<Pair, int> seen;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        const Pair p{std::min(b[i], b[j]), std::max(b[i], b[j])};
        if (!group_of.count(p.first) || !group_of.count(p.second) ||
            group_of[p.first] == group_of[p.second]) {
          ++r.defects;
        }
        ++seen[p];
      }
    }
  }
  for (const auto& [p, c] : seen) {
    if (c == 1) ++r.covered_once;
    else ++r.defects;
  }
  return r;
}

}  // namespace fixtures
