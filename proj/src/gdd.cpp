#include "gdd.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace designforge {

GddType GddType::parse(std::string_view text) {
  GddType type;
  std::istringstream in{std::string(text)};
  std::string term;
  while (in >> term) {
    const auto caret = term.find('^');
    int g = 0;
    int u = 0;
    bool ok = caret != std::string::npos;
    if (ok) {
      const char* begin = term.data();
      const char* mid = begin + caret;
      const char* end = begin + term.size();
      auto r1 = std::from_chars(begin, mid, g);
      auto r2 = std::from_chars(mid + 1, end, u);
      ok = r1.ec == std::errc{} && r1.ptr == mid && r2.ec == std::errc{} && r2.ptr == end &&
           g > 0 && u > 0;
    }
    if (!ok) throw Error(ErrorKind::parse, "bad GDD type term `" + term + "`, expected g^u");
    type.parts.emplace_back(g, u);
  }
  if (type.parts.empty()) throw Error(ErrorKind::parse, "empty GDD type");
  return type;
}

int GddType::point_count() const {
  int n = 0;
  for (auto [g, u] : parts) n += g * u;
  return n;
}

int GddType::group_count() const {
  int n = 0;
  for (auto [g, u] : parts) n += u;
  return n;
}

std::string GddType::to_string() const {
  std::string out;
  for (auto [g, u] : parts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g) + "^" + std::to_string(u);
  }
  return out;
}

int Gdd::point_count() const {
  int n = 0;
  for (const auto& g : groups) n += static_cast<int>(g.size());
  return n;
}

GddType Gdd::type() const {
  GddType t;
  for (const auto& g : groups) {
    const int size = static_cast<int>(g.size());
    if (!t.parts.empty() && t.parts.back().first == size) {
      ++t.parts.back().second;
    } else {
      t.parts.emplace_back(size, 1);
    }
  }
  return t;
}

GddReport verify_gdd(const Gdd& d) {
  GddReport report;
  const int n = d.point_count();
  std::vector<int> group_of(n, -1);

  if (d.k < 2) report.structure_errors.push_back("block size must be at least 2");
  for (std::size_t gi = 0; gi < d.groups.size(); ++gi) {
    if (d.groups[gi].empty()) report.structure_errors.push_back("group " + std::to_string(gi) + " is empty");
    for (int p : d.groups[gi]) {
      if (p < 0 || p >= n) {
        report.structure_errors.push_back("group " + std::to_string(gi) + " has point " +
                                          std::to_string(p) + " outside 0.." + std::to_string(n - 1));
      } else if (group_of[p] != -1) {
        report.structure_errors.push_back("point " + std::to_string(p) + " is in two groups");
      } else {
        group_of[p] = static_cast<int>(gi);
      }
    }
  }

  long long square_sum = 0;
  for (const auto& g : d.groups) square_sum += static_cast<long long>(g.size()) * g.size();
  report.cross_pairs = static_cast<std::size_t>((static_cast<long long>(n) * n - square_sum) / 2);

  std::vector<std::uint8_t> counts(n > 1 ? static_cast<std::size_t>(n) * (n - 1) / 2 : 0, 0);
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    const auto& block = d.blocks[bi];
    const std::string where = "block " + std::to_string(bi);
    if (static_cast<int>(block.size()) != d.k) {
      report.structure_errors.push_back(where + " has " + std::to_string(block.size()) +
                                        " points, expected " + std::to_string(d.k));
    }
    bool in_range = true;
    for (int p : block) {
      if (p < 0 || p >= n) {
        report.structure_errors.push_back(where + " has point " + std::to_string(p) + " out of range");
        in_range = false;
      }
    }
    if (!in_range) continue;
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (block[i] == block[j]) {
          report.structure_errors.push_back(where + " repeats point " + std::to_string(block[i]));
          continue;
        }
        auto& c = counts[pair_index(block[i], block[j])];
        if (c < 255) ++c;
      }
    }
    report.pairs_from_blocks += block.size() * (block.size() - 1) / 2;
  }

  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      const int c = counts[pair_index(u, v)];
      const bool same = group_of[u] != -1 && group_of[u] == group_of[v];
      if (same) {
        if (c > 0) report.intra_group.push_back({{u, v}, c});
      } else if (c == 0) {
        report.uncovered.push_back({{u, v}, c});
      } else if (c > 1) {
        report.overcovered.push_back({{u, v}, c});
      }
    }
  }

  report.pass = report.structure_errors.empty() && report.uncovered.empty() &&
                report.overcovered.empty() && report.intra_group.empty() &&
                report.pairs_from_blocks == report.cross_pairs;
  return report;
}

std::string GddReport::to_text(std::size_t max_items) const {
  std::ostringstream out;
  out << (pass ? "PASS" : "FAIL") << ": " << cross_pairs << " cross-group pairs, "
      << pairs_from_blocks << " pairs in blocks\n";
  for (std::size_t i = 0; i < structure_errors.size() && i < max_items; ++i) {
    out << "  " << structure_errors[i] << '\n';
  }
  auto list = [&](const char* title, const std::vector<PairCoverage>& items) {
    if (items.empty()) return;
    out << title << " (" << items.size() << "):";
    for (std::size_t i = 0; i < items.size() && i < max_items; ++i) {
      out << " {" << items[i].pair.first << "," << items[i].pair.second << "}x" << items[i].count;
    }
    out << '\n';
  };
  list("uncovered", uncovered);
  list("overcovered", overcovered);
  list("same-group pairs in blocks", intra_group);
  return out.str();
}

Gdd canonical_form(const Gdd& d) {
  const int n = d.point_count();
  std::vector<int> relabel(n, -1);
  Gdd out;
  out.k = d.k;
  out.provenance = d.provenance;
  int next = 0;
  for (const auto& g : d.groups) {
    auto sorted = g;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> group;
    for (int p : sorted) {
      if (p < 0 || p >= n) throw Error(ErrorKind::invalid_argument, "point out of range");
      relabel[p] = next;
      group.push_back(next++);
    }
    out.groups.push_back(std::move(group));
  }
  for (const auto& b : d.blocks) {
    std::vector<int> block;
    for (int p : b) {
      if (p < 0 || p >= n || relabel[p] < 0) {
        throw Error(ErrorKind::invalid_argument, "block point outside the groups");
      }
      block.push_back(relabel[p]);
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

namespace {

[[noreturn]] void fail_self_check(const std::string& what, const GddReport& report) {
  throw Error(ErrorKind::invalid_argument, what + " failed verification:\n" + report.to_text());
}

Gdd certified(Gdd d, const std::string& what) {
  const auto report = verify_gdd(d);
  if (!report.pass) fail_self_check(what, report);
  return d;
}

}  // namespace

Gdd inflate(const Gdd& d, int weight, const TdProvider& td) {
  if (weight < 1) throw Error(ErrorKind::invalid_argument, "weight must be positive");
  const int k = d.k;
  const Gdd ingredient = canonical_form(td(k, weight));
  if (ingredient.type() != GddType::uniform(weight, k) || ingredient.k != k) {
    throw Error(ErrorKind::invalid_argument, "TD provider returned type " +
                                                 ingredient.type().to_string() + ", expected " +
                                                 GddType::uniform(weight, k).to_string());
  }

  Gdd out;
  out.k = k;
  out.provenance = d.provenance + "; inflated by weight " + std::to_string(weight) + " with " +
                   ingredient.provenance;
  for (const auto& g : d.groups) {
    std::vector<int> group;
    for (int p : g) {
      for (int x = 0; x < weight; ++x) group.push_back(weight * p + x);
    }
    std::sort(group.begin(), group.end());
    out.groups.push_back(std::move(group));
  }
  out.blocks.reserve(d.blocks.size() * ingredient.blocks.size());
  for (const auto& b : d.blocks) {
    if (static_cast<int>(b.size()) != k) {
      throw Error(ErrorKind::invalid_argument, "block size differs from k");
    }
    auto sorted = b;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& tb : ingredient.blocks) {
      std::vector<int> block;
      block.reserve(k);
      for (int q : tb) block.push_back(weight * sorted[q / weight] + q % weight);
      std::sort(block.begin(), block.end());
      out.blocks.push_back(std::move(block));
    }
  }
  return certified(std::move(out), "inflation by " + std::to_string(weight));
}

std::string format_gdd(const Gdd& d) {
  std::ostringstream out;
  out << "gdd " << d.k << ' ' << d.type().to_string() << '\n';
  if (!d.provenance.empty()) out << "# provenance: " << d.provenance << '\n';
  auto line = [&](const char* keyword, const std::vector<int>& points) {
    out << keyword;
    for (int p : points) out << ' ' << p;
    out << '\n';
  };
  for (const auto& g : d.groups) line("group", g);
  for (const auto& b : d.blocks) line("block", b);
  return out.str();
}

Gdd read_gdd(std::istream& in) {
  static constexpr std::string_view kProvenance = "# provenance: ";
  Gdd d;
  std::optional<GddType> declared;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    return Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(kProvenance, 0) == 0) {
      d.provenance = line.substr(kProvenance.size());
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (!declared) {
      std::string rest;
      if (keyword != "gdd" || !(fields >> d.k) || !std::getline(fields, rest)) {
        throw fail("expected `gdd <k> <type>`");
      }
      declared = GddType::parse(rest);
      continue;
    }
    if (keyword != "group" && keyword != "block") throw fail("unknown line `" + keyword + "`");
    std::vector<int> points;
    std::string token;
    while (fields >> token) {
      int p = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), p);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw fail("`" + token + "` is not an integer");
      }
      points.push_back(p);
    }
    (keyword == "group" ? d.groups : d.blocks).push_back(std::move(points));
  }
  if (!declared) throw Error(ErrorKind::parse, "missing `gdd <k> <type>` header");
  if (d.type() != *declared) {
    throw Error(ErrorKind::parse, "groups have type " + d.type().to_string() +
                                      ", header says " + declared->to_string());
  }
  const auto report = verify_gdd(d);
  if (!report.pass) {
    throw Error(ErrorKind::parse, "GDD fails verification:\n" + report.to_text());
  }
  return d;
}

Gdd read_gdd_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  try {
    return read_gdd(in);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::parse) throw;
    throw Error(ErrorKind::parse, path.string() + ": " + e.what());
  }
}

void write_gdd_file(const Gdd& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  out << format_gdd(d);
  if (!out) throw Error(ErrorKind::io, "write failed for " + path.string());
}

IngredientStore IngredientStore::load(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorKind::io, "ingredient directory " + dir.string() + " does not exist");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".gdd") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  IngredientStore store;
  for (const auto& f : files) store.add(read_gdd_file(f));
  return store;
}

void IngredientStore::add(Gdd d) {
  const auto report = verify_gdd(d);
  if (!report.pass) fail_self_check("ingredient " + d.type().to_string(), report);
  entries_.push_back(canonical_form(d));
}

const Gdd* IngredientStore::find(const GddType& type, int k) const {
  for (const auto& e : entries_) {
    if (e.k == k && e.type() == type) return &e;
  }
  return nullptr;
}

namespace {

// 4-GDD of type g^u with g = 3 or 6: u >= 4, g(u-1) = 0 mod 3,
// u(u-1)g^2 = 0 mod 12, and 6^4 does not exist.
bool ingredient_exists(int g, int u) {
  if (u < 4) return false;
  if (g * (u - 1) % 3 != 0) return false;
  if (u * (u - 1) * g * g % 12 != 0) return false;
  return !(g == 6 && u == 4);
}

}  // namespace

SearchResult regenerate_ingredient(const GddType& type, const SearchLimits& limits) {
  auto plain = [&] {
    if (type.point_count() > kSearchPointLimit) return SearchResult{};
    return exact_cover_search(type, 4, limits);
  };
  auto cyclic = [&] {
    try {
      return cyclic_search(type, 4, limits);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::precondition) throw;
      return SearchResult{};
    }
  };
  // Plain search settles small group sizes quickly; for larger groups the
  // cyclic search is the one that finishes.
  const bool small_groups = type.is_uniform() && type.parts.front().first <= 3;
  SearchResult first = small_groups ? plain() : cyclic();
  if (first.outcome != SearchOutcome::budget_exhausted) return first;
  SearchResult second = small_groups ? cyclic() : plain();
  second.nodes += first.nodes;
  return second;
}

Gdd gdd_24_t(int t, const GddProviderOptions& options) {
  if (t < 4) {
    throw Error(ErrorKind::precondition,
                "4-GDDs of type 24^t are provided for t >= 4, got t = " + std::to_string(t));
  }

  Gdd result;
  if (t == 4) {
    result = transversal_design(4, 24);
  } else {
    // Weight 4 over type 6^t is preferred: TD(4,4) is the smaller ingredient.
    const std::array<std::pair<int, int>, 2> routes{{{6, 4}, {3, 8}}};
    std::optional<Gdd> base;
    int weight = 0;
    for (auto [g, w] : routes) {
      if (options.store) {
        if (const Gdd* found = options.store->find(GddType::uniform(g, t), 4)) {
          base = *found;
          weight = w;
          break;
        }
      }
    }
    if (!base && options.allow_search) {
      for (auto [g, w] : std::array<std::pair<int, int>, 2>{{{3, 8}, {6, 4}}}) {
        if (!ingredient_exists(g, t)) continue;
        base = regenerate_ingredient(GddType::uniform(g, t), options.search).gdd;
        if (base) {
          weight = w;
          break;
        }
      }
    }
    if (!base) {
      throw Error(ErrorKind::ingredient_unavailable,
                  "no ingredient 4-GDD of type 6^" + std::to_string(t) + " or 3^" +
                      std::to_string(t) + " is available for 4-GDD of type 24^" +
                      std::to_string(t));
    }
    result = inflate(canonical_form(*base), weight);
  }

  const auto report = verify_gdd(result);
  const auto expected_blocks = static_cast<std::size_t>(48) * t * (t - 1);
  if (!report.pass || result.blocks.size() != expected_blocks ||
      result.type() != GddType::uniform(24, t)) {
    fail_self_check("4-GDD of type 24^" + std::to_string(t), report);
  }
  for (int i = 0; i < t; ++i) {
    std::vector<int> expected(24);
    std::iota(expected.begin(), expected.end(), 24 * i);
    if (result.groups[i] != expected) {
      throw Error(ErrorKind::invalid_argument, "group layout is not contiguous");
    }
  }
  return result;
}

}  // namespace designforge
