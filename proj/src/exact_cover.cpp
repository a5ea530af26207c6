#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <string>

#include "dancing_links.hpp"
#include "error.hpp"
#include "gdd.hpp"

namespace designforge {

namespace {

void enumerate_rows(const std::vector<std::vector<int>>& groups, int k, std::size_t next_group,
                    std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  const std::size_t remaining = static_cast<std::size_t>(k) - current.size();
  for (std::size_t g = next_group; g + remaining <= groups.size(); ++g) {
    for (int p : groups[g]) {
      current.push_back(p);
      enumerate_rows(groups, k, g + 1, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

SearchResult exact_cover_search(const GddType& type, int k, const SearchLimits& limits) {
  const int n = type.point_count();
  if (n > kSearchPointLimit) {
    throw Error(ErrorKind::precondition, "exact cover search is limited to " +
                                             std::to_string(kSearchPointLimit) +
                                             " points, type " + type.to_string() + " has " +
                                             std::to_string(n));
  }
  if (k < 2) throw Error(ErrorKind::invalid_argument, "block size must be at least 2");

  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(n);
  for (auto [g, u] : type.parts) {
    for (int i = 0; i < u; ++i) {
      std::vector<int> group;
      const int start = groups.empty() ? 0 : groups.back().back() + 1;
      for (int x = 0; x < g; ++x) {
        group.push_back(start + x);
        group_of[start + x] = static_cast<int>(groups.size());
      }
      groups.push_back(std::move(group));
    }
  }
  const int u = static_cast<int>(groups.size());

  std::vector<std::vector<int>> rows;
  std::vector<int> current;
  enumerate_rows(groups, k, 0, current, rows);

  // Without loss of generality: for a uniform type with u == k, the blocks on
  // point 0 are {0, g+i, 2g+i, ...} and the block on point g and group-0
  // point x meets group 2 in 2g+x. For u > k one block is {0, g, ..., (k-1)g}.
  std::vector<std::vector<int>> forced;
  if (limits.symmetry_breaking && type.is_uniform() && u >= k) {
    const int g = type.parts.front().first;
    if (u == k) {
      for (int i = 0; i < g; ++i) {
        std::vector<int> block{0};
        for (int j = 1; j < k; ++j) block.push_back(j * g + i);
        forced.push_back(std::move(block));
      }
      if (k >= 3) {
        std::erase_if(rows, [&](const std::vector<int>& r) {
          // rows are ascending, so r[0] is the group-0 point and r[1] the group-1 point
          return group_of[r[0]] == 0 && r[0] != 0 && r[1] == g && group_of[r[2]] == 2 &&
                 r[2] != 2 * g + r[0];
        });
      }
    } else {
      std::vector<int> block;
      for (int j = 0; j < k; ++j) block.push_back(j * g);
      forced.push_back(std::move(block));
    }
  }

  std::mt19937_64 rng(limits.seed);
  std::shuffle(rows.begin(), rows.end(), rng);

  // Column per cross-group pair.
  std::vector<int> column_of(n > 1 ? static_cast<std::size_t>(n) * (n - 1) / 2 : 0, 0);
  int columns = 0;
  for (int v = 1; v < n; ++v) {
    for (int w = 0; w < v; ++w) {
      if (group_of[v] != group_of[w]) column_of[pair_index(w, v)] = ++columns;
    }
  }

  DancingLinks dlx(columns);
  auto row_columns = [&](const std::vector<int>& r) {
    std::vector<int> cols;
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = i + 1; j < r.size(); ++j) cols.push_back(column_of[pair_index(r[i], r[j])]);
    }
    return cols;
  };
  for (std::size_t i = 0; i < rows.size(); ++i) dlx.add_row(row_columns(rows[i]), static_cast<int>(i));
  for (const auto& f : forced) {
    const auto it = std::find(rows.begin(), rows.end(), f);
    if (it == rows.end()) throw Error(ErrorKind::invalid_argument, "forced block is not a row");
    dlx.force_row(static_cast<int>(it - rows.begin()));
  }

  SearchResult result;
  const auto outcome = dlx.search(limits.node_budget);
  result.nodes = dlx.nodes();
  if (outcome == DancingLinks::Result::budget) {
    result.outcome = SearchOutcome::budget_exhausted;
    return result;
  }
  if (outcome == DancingLinks::Result::exhausted) {
    result.outcome = SearchOutcome::proven_nonexistent;
    return result;
  }

  Gdd d;
  d.k = k;
  d.groups = groups;
  d.provenance = "exact cover search, seed " + std::to_string(limits.seed);
  for (int r : dlx.solution()) d.blocks.push_back(rows[r]);
  d = canonical_form(d);
  const auto report = verify_gdd(d);
  if (!report.pass) {
    throw Error(ErrorKind::invalid_argument, "search produced an invalid GDD:\n" + report.to_text());
  }
  result.outcome = SearchOutcome::found;
  result.gdd = std::move(d);
  return result;
}

namespace {

// One attempt for a given (m, extra, cycle). Moving points p = i*m + x (x in
// Z_m, orbit i) lie in group x mod u', u' = u - (extra ? 1 : 0). The `extra`
// points after them form the last group and are permuted in cycles of length
// `cycle`, which divides m; cycle 1 means fixed points. The action is x -> x + 1.
std::optional<SearchResult> orbit_search(int g, int u, int m, int extra, int cycle, int k,
                                         const SearchLimits& limits, std::uint64_t& budget_left) {
  const int n = g * u;
  const int moving = n - extra;
  const int moving_groups = extra ? u - 1 : u;
  const int orbits = moving / m;
  auto is_extra = [moving](int p) { return p >= moving; };
  auto xof = [m](int p) { return p % m; };
  auto orbit = [m](int p) { return p / m; };
  auto group_of = [&](int p) { return is_extra(p) ? moving_groups : xof(p) % moving_groups; };
  auto move = [&](int p, int s) {
    if (!is_extra(p)) return orbit(p) * m + (xof(p) + s) % m;
    const int q = p - moving;
    return moving + q - q % cycle + (q % cycle + s) % cycle;
  };

  // Pair classes under the action; a pair fixed by the half-turn would make a
  // short orbit, which full block orbits cannot cover once.
  std::map<std::tuple<int, int, int>, int> class_id;
  auto pair_class = [&](int p, int q) -> std::optional<int> {
    if (is_extra(p) || is_extra(q)) {
      if (is_extra(p)) std::swap(p, q);
      const int c = (q - moving) / cycle, j = (q - moving) % cycle;
      return class_id.try_emplace({-1 - c, orbit(p), ((xof(p) - j) % cycle + cycle) % cycle},
                                  static_cast<int>(class_id.size()) + 1).first->second;
    }
    int i = orbit(p), j = orbit(q);
    int d = ((xof(q) - xof(p)) % m + m) % m;
    if (i > j) {
      std::swap(i, j);
      d = (m - d) % m;
    }
    if (i == j) {
      if (2 * d == m) return std::nullopt;
      d = std::min(d, m - d);
    }
    return class_id.try_emplace({i, j, d}, static_cast<int>(class_id.size()) + 1).first->second;
  };
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (group_of(p) != group_of(q) && !pair_class(p, q)) return std::nullopt;
    }
  }
  const int classes = static_cast<int>(class_id.size());
  if (classes % (k * (k - 1) / 2) != 0) return std::nullopt;

  auto shifted = [&](const std::vector<int>& block, int s) {
    std::vector<int> out;
    for (int p : block) out.push_back(move(p, s));
    std::sort(out.begin(), out.end());
    return out;
  };
  auto columns_of = [&](const std::vector<int>& block) {
    std::vector<int> cols;
    for (std::size_t a = 0; a < block.size(); ++a) {
      for (std::size_t b = a + 1; b < block.size(); ++b) cols.push_back(*pair_class(block[a], block[b]));
    }
    return cols;
  };

  // One representative per block orbit: the least translate.
  std::set<std::vector<int>> representatives;
  std::vector<int> current;
  auto extend = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == k) {
      if (std::none_of(current.begin(), current.end(),
                       [&](int p) { return !is_extra(p) && xof(p) == 0; })) {
        return;
      }
      auto cols = columns_of(current);
      std::sort(cols.begin(), cols.end());
      if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return;
      std::vector<int> least = shifted(current, 0);
      for (int s = 1; s < m; ++s) least = std::min(least, shifted(current, s));
      representatives.insert(least);
      return;
    }
    for (int p = next; p < n; ++p) {
      bool ok = true;
      for (int q : current) ok = ok && group_of(p) != group_of(q);
      if (!ok) continue;
      current.push_back(p);
      self(self, p + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);

  std::vector<std::vector<int>> rows(representatives.begin(), representatives.end());
  std::mt19937_64 rng(limits.seed);
  std::shuffle(rows.begin(), rows.end(), rng);
  DancingLinks dlx(classes);
  for (std::size_t r = 0; r < rows.size(); ++r) dlx.add_row(columns_of(rows[r]), static_cast<int>(r));

  SearchResult result;
  const auto outcome = dlx.search(budget_left);
  result.nodes = dlx.nodes();
  budget_left -= std::min(budget_left, result.nodes);
  if (outcome != DancingLinks::Result::found) {
    // No invariant solution says nothing about the type itself.
    result.outcome = SearchOutcome::budget_exhausted;
    return result;
  }

  Gdd d;
  d.k = k;
  d.groups.resize(u);
  for (int p = 0; p < n; ++p) d.groups[group_of(p)].push_back(p);
  std::string bases;
  for (int r : dlx.solution()) {
    bases += " {";
    for (std::size_t i = 0; i < rows[r].size(); ++i) bases += (i ? "," : "") + std::to_string(rows[r][i]);
    bases += "}";
    for (int s = 0; s < m; ++s) d.blocks.push_back(shifted(rows[r], s));
  }
  d.provenance = "invariant under Z_" + std::to_string(m) + " (" + std::to_string(orbits) +
                 " point orbits of length " + std::to_string(m) + ", " + std::to_string(extra) +
                 " points in cycles of length " + std::to_string(cycle) + "), base blocks" + bases;
  d = canonical_form(d);
  const auto report = verify_gdd(d);
  if (!report.pass) {
    throw Error(ErrorKind::invalid_argument, "cyclic search produced an invalid GDD:\n" + report.to_text());
  }
  result.outcome = SearchOutcome::found;
  result.gdd = std::move(d);
  return result;
}

}  // namespace

SearchResult cyclic_search(const GddType& type, int k, const SearchLimits& limits) {
  if (!type.is_uniform() || k < 2) {
    throw Error(ErrorKind::precondition, "cyclic search needs a uniform type and k >= 2");
  }
  const auto [g, u] = type.parts.front();
  const int n = g * u;
  std::uint64_t budget_left = limits.node_budget;
  SearchResult last;
  bool applicable = false;
  for (int extra : {0, g}) {
    const int moving = n - extra;
    const int moving_groups = extra ? u - 1 : u;
    for (int m = moving; m >= moving_groups && moving_groups > 0; --m) {
      if (moving % m != 0 || m % moving_groups != 0) continue;
      for (int cycle = 1; cycle <= std::max(extra, 1); ++cycle) {
        if ((extra && extra % cycle != 0) || m % cycle != 0) continue;
        auto attempt = orbit_search(g, u, m, extra, cycle, k, limits, budget_left);
        if (!attempt) continue;
        applicable = true;
        attempt->nodes += last.nodes;
        last = std::move(*attempt);
        if (last.outcome == SearchOutcome::found || budget_left == 0) return last;
      }
    }
  }
  if (!applicable) {
    throw Error(ErrorKind::precondition,
                "type " + type.to_string() + " has no full-orbit cyclic form");
  }
  return last;
}

}  // namespace designforge
