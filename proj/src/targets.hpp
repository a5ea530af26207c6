#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace designforge {

// Unordered edge {u, v} with 1-based endpoints, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 1..vertex_count (at most 64).
//
// The edge list and the per-vertex adjacency bitmasks are built together and
// cross-checked at construction; both are immutable afterwards.
class SmallGraph {
 public:
  static constexpr int kMaxVertices = 64;

  SmallGraph() = default;
  SmallGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool adjacent(int u, int v) const noexcept;
  // Bit (w-1) is set iff w is adjacent to v.
  std::uint64_t neighbors(int v) const noexcept { return adjacency_[v - 1]; }
  int degree(int v) const noexcept;

  // Subgraph induced by the vertices whose bits are set in `mask`, renumbered
  // 1..popcount(mask) in increasing order.
  SmallGraph induced(std::uint64_t mask) const;

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;
};

enum class TargetId { shrikhande, line_k44 };

struct TargetGraph {
  TargetId id;
  SmallGraph graph;
};

const TargetGraph& shrikhande();
const TargetGraph& line_k44();
const TargetGraph& target_graph(TargetId id);

// "shrikhande" / "lk44", the names used in every file format.
std::string_view target_name(TargetId id);
std::optional<TargetId> parse_target_name(std::string_view name);

// mapping[u-1] = image of vertex u of g in h.
using VertexMap = std::vector<int>;

// Backtracking isomorphism test with degree and neighbour-degree-multiset
// pruning. Returns a bijection f with {u,v} in E(g) <=> {f(u),f(v)} in E(h).
std::optional<VertexMap> is_isomorphic(const SmallGraph& g, const SmallGraph& h);

// Applies a vertex map to every edge of g.
SmallGraph relabel(const SmallGraph& g, const VertexMap& mapping);

struct SrgParameters {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

std::optional<SrgParameters> srg_parameters(const SmallGraph& g);

using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix adjacency_matrix(const SmallGraph& g);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Exact check of A^2 = k I + lambda A + mu (J - I - A).
bool satisfies_srg_identity(const SmallGraph& g, const SrgParameters& p);

// Edge-list text format: `graph <n>` then `u v` per edge, u < v, sorted.
std::string write_edge_list(const SmallGraph& g);
SmallGraph read_edge_list(std::istream& in);

}  // namespace designforge
