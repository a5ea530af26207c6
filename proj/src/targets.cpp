#include "targets.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>

#include "error.hpp"

namespace designforge {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

}  // namespace

SmallGraph::SmallGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 1 || vertex_count > kMaxVertices) {
    throw Error(ErrorKind::invalid_argument,
                "vertex count " + std::to_string(vertex_count) + " outside 1..64");
  }
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > vertex_count) {
      throw Error(ErrorKind::invalid_argument, "edge {" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + "} out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::invalid_argument, "loop at vertex " + std::to_string(e.u));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorKind::invalid_argument, "repeated edge");
  }

  adjacency_.assign(vertex_count, 0);
  for (const auto& e : edges_) {
    adjacency_[e.u - 1] |= bit(e.v);
    adjacency_[e.v - 1] |= bit(e.u);
  }

  std::size_t degree_sum = 0;
  for (int v = 1; v <= vertex_count_; ++v) {
    if (adjacency_[v - 1] & bit(v)) throw Error(ErrorKind::invalid_argument, "loop in adjacency");
    degree_sum += static_cast<std::size_t>(std::popcount(adjacency_[v - 1]));
  }
  if (degree_sum != 2 * edges_.size()) {
    throw Error(ErrorKind::invalid_argument, "edge list and adjacency disagree");
  }
}

bool SmallGraph::adjacent(int u, int v) const noexcept {
  if (u < 1 || v < 1 || u > vertex_count_ || v > vertex_count_) return false;
  return (adjacency_[u - 1] & bit(v)) != 0;
}

int SmallGraph::degree(int v) const noexcept { return std::popcount(adjacency_[v - 1]); }

SmallGraph SmallGraph::induced(std::uint64_t mask) const {
  std::vector<int> index(vertex_count_ + 1, 0);
  int count = 0;
  for (int v = 1; v <= vertex_count_; ++v) {
    if (mask & bit(v)) index[v] = ++count;
  }
  std::vector<Edge> sub;
  for (const auto& e : edges_) {
    if (index[e.u] && index[e.v]) sub.push_back({index[e.u], index[e.v]});
  }
  return SmallGraph(std::max(count, 1), std::move(sub));
}

namespace {

SmallGraph from_pairs(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return SmallGraph(16, std::move(edges));
}

}  // namespace

const TargetGraph& shrikhande() {
  static const TargetGraph g{
      TargetId::shrikhande,
      from_pairs({{1, 2},   {1, 4},   {1, 5},   {1, 8},   {1, 13},  {1, 14},  {2, 3},   {2, 5},
                  {2, 6},   {2, 14},  {2, 15},  {3, 4},   {3, 6},   {3, 7},   {3, 15},  {3, 16},
                  {4, 7},   {4, 8},   {4, 13},  {4, 16},  {5, 6},   {5, 8},   {5, 9},   {5, 12},
                  {6, 7},   {6, 9},   {6, 10},  {7, 8},   {7, 10},  {7, 11},  {8, 11},  {8, 12},
                  {9, 10},  {9, 12},  {9, 13},  {9, 16},  {10, 11}, {10, 13}, {10, 14}, {11, 12},
                  {11, 14}, {11, 15}, {12, 15}, {12, 16}, {13, 14}, {13, 16}, {14, 15}, {15, 16}})};
  return g;
}

const TargetGraph& line_k44() {
  static const TargetGraph g{
      TargetId::line_k44,
      from_pairs({{1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 6},   {1, 7},   {2, 3},   {2, 4},
                  {2, 8},   {2, 11},  {2, 12},  {3, 4},   {3, 9},   {3, 13},  {3, 15},  {4, 10},
                  {4, 14},  {4, 16},  {5, 6},   {5, 7},   {5, 8},   {5, 9},   {5, 10},  {6, 7},
                  {6, 11},  {6, 13},  {6, 14},  {7, 12},  {7, 15},  {7, 16},  {8, 9},   {8, 10},
                  {8, 11},  {8, 12},  {9, 10},  {9, 13},  {9, 15},  {10, 14}, {10, 16}, {11, 12},
                  {11, 13}, {11, 14}, {12, 15}, {12, 16}, {13, 14}, {13, 15}, {14, 16}, {15, 16}})};
  return g;
}

const TargetGraph& target_graph(TargetId id) {
  return id == TargetId::shrikhande ? shrikhande() : line_k44();
}

std::string_view target_name(TargetId id) {
  return id == TargetId::shrikhande ? "shrikhande" : "lk44";
}

std::optional<TargetId> parse_target_name(std::string_view name) {
  if (name == "shrikhande") return TargetId::shrikhande;
  if (name == "lk44") return TargetId::line_k44;
  return std::nullopt;
}

namespace {

// Degree followed by the sorted degrees of the neighbours.
std::vector<std::vector<int>> signatures(const SmallGraph& g) {
  std::vector<std::vector<int>> sig(g.vertex_count());
  for (int v = 1; v <= g.vertex_count(); ++v) {
    auto& s = sig[v - 1];
    for (int w = 1; w <= g.vertex_count(); ++w) {
      if (g.adjacent(v, w)) s.push_back(g.degree(w));
    }
    std::sort(s.begin(), s.end());
    s.insert(s.begin(), g.degree(v));
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const SmallGraph& g, const SmallGraph& h)
      : g_(g), h_(h), sig_g_(signatures(g)), sig_h_(signatures(h)) {
    const int n = g.vertex_count();
    map_.assign(n + 1, 0);
    used_.assign(n + 1, false);

    // Place vertices so that each new one has as many already-placed
    // neighbours as possible; adjacency constraints then bite early.
    std::vector<bool> placed(n + 1, false);
    for (int step = 0; step < n; ++step) {
      int best = 0;
      int best_links = -1;
      for (int v = 1; v <= n; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : order_) links += g.adjacent(v, w) ? 1 : 0;
        if (links > best_links || (links == best_links && g.degree(v) > g.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  std::optional<VertexMap> run() {
    if (!extend(0)) return std::nullopt;
    return VertexMap(map_.begin() + 1, map_.end());
  }

 private:
  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const int v = order_[pos];
    for (int c = 1; c <= h_.vertex_count(); ++c) {
      if (used_[c] || sig_h_[c - 1] != sig_g_[v - 1]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < pos && ok; ++i) {
        const int w = order_[i];
        ok = g_.adjacent(v, w) == h_.adjacent(c, map_[w]);
      }
      if (!ok) continue;
      map_[v] = c;
      used_[c] = true;
      if (extend(pos + 1)) return true;
      used_[c] = false;
      map_[v] = 0;
    }
    return false;
  }

  const SmallGraph& g_;
  const SmallGraph& h_;
  std::vector<std::vector<int>> sig_g_;
  std::vector<std::vector<int>> sig_h_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<VertexMap> is_isomorphic(const SmallGraph& g, const SmallGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }
  auto sg = signatures(g);
  auto sh = signatures(h);
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;
  return IsoSearch(g, h).run();
}

SmallGraph relabel(const SmallGraph& g, const VertexMap& mapping) {
  if (static_cast<int>(mapping.size()) != g.vertex_count()) {
    throw Error(ErrorKind::invalid_argument, "vertex map has wrong size");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({mapping[e.u - 1], mapping[e.v - 1]});
  return SmallGraph(g.vertex_count(), std::move(edges));
}

std::optional<SrgParameters> srg_parameters(const SmallGraph& g) {
  const int n = g.vertex_count();
  const int k = g.degree(1);
  for (int v = 2; v <= n; ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  std::optional<int> lambda;
  std::optional<int> mu;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const int common = std::popcount(g.neighbors(u) & g.neighbors(v));
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) slot = common;
      if (*slot != common) return std::nullopt;
    }
  }
  // Complete and empty graphs leave one of the two undetermined.
  return SrgParameters{n, k, lambda.value_or(0), mu.value_or(0)};
}

IntMatrix adjacency_matrix(const SmallGraph& g) {
  const int n = g.vertex_count();
  IntMatrix a(n, std::vector<long long>(n, 0));
  for (const auto& e : g.edges()) {
    a[e.u - 1][e.v - 1] = 1;
    a[e.v - 1][e.u - 1] = 1;
  }
  return a;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

bool satisfies_srg_identity(const SmallGraph& g, const SrgParameters& p) {
  if (p.v != g.vertex_count()) return false;
  const auto a = adjacency_matrix(g);
  const auto a2 = multiply(a, a);
  for (int i = 0; i < p.v; ++i) {
    for (int j = 0; j < p.v; ++j) {
      const long long ident = i == j ? 1 : 0;
      const long long expected =
          p.k * ident + p.lambda * a[i][j] + p.mu * (1 - ident - a[i][j]);
      if (a2[i][j] != expected) return false;
    }
  }
  return true;
}

std::string write_edge_list(const SmallGraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

SmallGraph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    if (n == 0) {
      std::string keyword;
      if (!(fields >> keyword >> n) || keyword != "graph" || n < 1) {
        throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected `graph <n>`");
      }
      continue;
    }
    Edge e;
    std::string extra;
    if (!(fields >> e.u >> e.v) || (fields >> extra)) {
      throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected `u v`");
    }
    edges.push_back(e);
  }
  if (n == 0) throw Error(ErrorKind::parse, "missing `graph <n>` header");
  return SmallGraph(n, std::move(edges));
}

}  // namespace designforge
