#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pairs.hpp"

namespace designforge {

// Group-size profile, e.g. 24^5 or 6^4 3^1, as (size, multiplicity) runs.
struct GddType {
  std::vector<std::pair<int, int>> parts;

  static GddType uniform(int group_size, int groups) { return {{{group_size, groups}}}; }
  // Accepts "g^u" terms separated by spaces, e.g. "3^5" or "6^4 3^1".
  static GddType parse(std::string_view text);

  int point_count() const;
  int group_count() const;
  bool is_uniform() const { return parts.size() == 1; }
  std::string to_string() const;

  friend bool operator==(const GddType&, const GddType&) = default;
};

struct Gdd {
  int k = 0;
  std::vector<std::vector<int>> groups;
  std::vector<std::vector<int>> blocks;
  // How the design was obtained, e.g. "TD(4,24) from MOLS(8) x MOLS(3)".
  std::string provenance;

  int point_count() const;
  GddType type() const;
};

struct GddReport {
  bool pass = false;
  std::vector<std::string> structure_errors;
  std::vector<PairCoverage> uncovered;    // cross-group pairs in no block
  std::vector<PairCoverage> overcovered;  // cross-group pairs in several blocks
  std::vector<PairCoverage> intra_group;  // same-group pairs inside a block
  std::size_t cross_pairs = 0;            // from the group sizes alone
  std::size_t pairs_from_blocks = 0;      // blocks * k(k-1)/2

  std::string to_text(std::size_t max_items = 20) const;
};

// Checks the three GDD clauses: groups partition the points, blocks are
// k-sets, every cross-group pair lies in exactly one block and no same-group
// pair lies in any block.
GddReport verify_gdd(const Gdd& d);

// Relabels points so group i occupies a contiguous range in order and sorts
// every block and the block list.
Gdd canonical_form(const Gdd& d);

struct LatinSquare {
  int order = 0;
  std::vector<int> cells;  // row-major

  int at(int row, int col) const { return cells[static_cast<std::size_t>(row) * order + col]; }
};

struct MolsSet {
  int order = 0;
  std::vector<LatinSquare> squares;
};

bool is_latin(const LatinSquare& s);
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);
// Validates every square and every pair exhaustively; throws on failure.
MolsSet make_mols(int order, std::vector<LatinSquare> squares);

// L_a(x, y) = a*x + y over GF(q), a = 1..q-1. q prime, or q in {4, 8} using a
// built-in binary field. Anything else is unsupported_order.
MolsSet mols_prime_power(int q);

// MacNeish product; keeps min(|a|, |b|) squares.
MolsSet kronecker_mols(const MolsSet& a, const MolsSet& b);

// TD(k, m) on groups {j*m .. j*m + m - 1}; block (x, y) is
// {x, m + y, 2m + L_1(x, y), ...}. Needs k - 2 squares.
Gdd td_from_mols(int k, const MolsSet& mols);

// TD(k, m) from whatever MOLS the prime-power factors of m provide.
Gdd transversal_design(int k, int m);

using TdProvider = std::function<Gdd(int k, int weight)>;

// Weights every point by w: point p becomes w*p .. w*p + w - 1 and each block
// is replaced by a TD(k, w) laid over its k inflated points.
Gdd inflate(const Gdd& d, int weight, const TdProvider& td = transversal_design);

Gdd read_gdd(std::istream& in);
std::string format_gdd(const Gdd& d);
Gdd read_gdd_file(const std::filesystem::path& path);
void write_gdd_file(const Gdd& d, const std::filesystem::path& path);

// Directory of *.gdd ingredient files, each verified when loaded.
class IngredientStore {
 public:
  IngredientStore() = default;

  static IngredientStore load(const std::filesystem::path& dir);

  void add(Gdd d);
  const Gdd* find(const GddType& type, int k) const;
  const std::vector<Gdd>& entries() const noexcept { return entries_; }

 private:
  std::vector<Gdd> entries_;
};

struct SearchLimits {
  std::uint64_t node_budget = 20'000'000;
  std::uint64_t seed = 1;
  bool symmetry_breaking = true;
};

enum class SearchOutcome { found, budget_exhausted, proven_nonexistent };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::budget_exhausted;
  std::optional<Gdd> gdd;
  std::uint64_t nodes = 0;
};

inline constexpr int kSearchPointLimit = 40;

// Exact-cover search over the cross-group pairs (dancing links). Rows are the
// k-sets meeting k distinct groups. Row order is shuffled by the seed, so the
// result is deterministic per seed. With symmetry breaking, a search that
// finishes without a solution proves nonexistence.
SearchResult exact_cover_search(const GddType& type, int k, const SearchLimits& limits);

// 4-GDD of uniform type g^u invariant under a cyclic group Z_m acting with
// full orbits on the moving points; point (x, orbit) lies in group x mod u'.
// Optionally one group of g points is permuted in short cycles whose length
// divides m (length 1: fixed points), and u' = u - 1. Rows are block orbits,
// columns pair orbits. Tries m from large to small, without and then with the
// extra group, sharing one node budget. Failure only means no invariant
// solution was found. Throws precondition when no m gives full pair orbits.
SearchResult cyclic_search(const GddType& type, int k, const SearchLimits& limits);

struct GddProviderOptions {
  const IngredientStore* store = nullptr;
  // Regenerate a missing ingredient with exact_cover_search when small enough.
  bool allow_search = true;
  SearchLimits search{};
};

// Plain exact-cover search (up to 40 points) and cyclic search, in the order
// most likely to succeed for the type.
SearchResult regenerate_ingredient(const GddType& type, const SearchLimits& limits);

// A verified 4-GDD of type 24^t, t >= 4, with group i = {24i .. 24i + 23}.
// t = 4 is TD(4, 24); larger t inflate a 6^t ingredient by 4 or a 3^t
// ingredient by 8.
Gdd gdd_24_t(int t, const GddProviderOptions& options = {});

}  // namespace designforge
