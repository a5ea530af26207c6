#include "certify.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include "error.hpp"

namespace designforge {

namespace {

std::string pair_text(const PointPair& p) {
  return "{" + std::to_string(p.first) + "," + std::to_string(p.second) + "}";
}

// Coverage counters over all pairs of 0..order-1, saturating at 255.
class PairCounter {
 public:
  explicit PairCounter(int order)
      : order_(order),
        counts_(order > 1 ? static_cast<std::size_t>(order) * (order - 1) / 2 : 0, 0) {}

  void add(int u, int v) {
    auto& c = counts_[pair_index(u, v)];
    if (c < 255) ++c;
  }

  // Appends every pair whose count differs from expected(u, v).
  template <typename Expected>
  void collect(Expected expected, std::vector<PairCoverage>& errors) const {
    for (int v = 1; v < order_; ++v) {
      for (int u = 0; u < v; ++u) {
        const int c = counts_[pair_index(u, v)];
        if (c != expected(u, v)) errors.push_back({{u, v}, c});
      }
    }
  }

 private:
  int order_;
  std::vector<std::uint8_t> counts_;
};

std::size_t expected_block_count(const Certificate& c, CertReport& report) {
  if (c.mode == CertMode::four_partite) {
    if (c.order != 16) {
      report.header_errors.push_back("4partite certificates have order 16, got " +
                                     std::to_string(c.order));
    }
    return 2;
  }
  if (c.order < 1) {
    report.header_errors.push_back("order must be positive");
    return 0;
  }
  const long long n = c.order;
  if (n * (n - 1) % (2 * kTargetEdges) != 0) {
    report.header_errors.push_back("n(n-1) = " + std::to_string(n * (n - 1)) +
                                   " is not divisible by 96");
  }
  return static_cast<std::size_t>(n * (n - 1) / (2 * kTargetEdges));
}

void finish(CertReport& report, const Certificate& c) {
  if (c.declared_count != report.count_actual) {
    report.header_errors.push_back("header declares " + std::to_string(c.declared_count) +
                                   " blocks, file has " + std::to_string(report.count_actual));
  }
  if (report.count_actual != report.count_expected) {
    report.header_errors.push_back("expected " + std::to_string(report.count_expected) +
                                   " blocks, found " + std::to_string(report.count_actual));
  }
  report.pass = report.pair_coverage_errors.empty() && report.label_errors.empty() &&
                report.isomorphism_errors.empty() && report.header_errors.empty();
}

}  // namespace

std::string CertReport::to_text(std::size_t max_items) const {
  std::ostringstream out;
  out << (pass ? "PASS" : "FAIL") << ": " << count_actual << " blocks (expected "
      << count_expected << ")\n";
  auto list = [&](const char* title, const auto& items, auto render) {
    if (items.empty()) return;
    out << title << " (" << items.size() << "):\n";
    for (std::size_t i = 0; i < items.size() && i < max_items; ++i) {
      out << "  " << render(items[i]) << '\n';
    }
    if (items.size() > max_items) out << "  ... " << items.size() - max_items << " more\n";
  };
  auto same = [](const std::string& s) { return s; };
  list("header errors", header_errors, same);
  list("label errors", label_errors, same);
  list("isomorphism errors", isomorphism_errors, same);
  list("pair coverage errors", pair_coverage_errors, [](const PairCoverage& p) {
    return "pair " + pair_text(p.pair) + " covered " + std::to_string(p.count) + " times";
  });
  return out.str();
}

Certificate to_certificate(const Design& d, CertMode mode) {
  Certificate c;
  c.target = d.target;
  c.order = d.order;
  c.mode = mode;
  c.declared_count = d.blocks.size();
  c.blocks = d.blocks;
  return c;
}

Certificate four_partite_certificate(TargetId target, const std::array<LabeledBlock, 2>& blocks) {
  Certificate c;
  c.target = target;
  c.order = 16;
  c.mode = CertMode::four_partite;
  c.declared_count = blocks.size();
  c.blocks.assign(blocks.begin(), blocks.end());
  return c;
}

CertReport certify(const Certificate& c) {
  if (c.mode == CertMode::raw) {
    CertReport report = certify_raw_edges(c.order, c.parts, c.target);
    if (c.declared_count != report.count_actual) {
      report.header_errors.push_back("header declares " + std::to_string(c.declared_count) +
                                     " parts, file has " + std::to_string(report.count_actual));
      report.pass = false;
    }
    return report;
  }

  CertReport report;
  report.count_expected = expected_block_count(c, report);
  report.count_actual = c.blocks.size();
  const int n = std::max(c.order, 0);
  PairCounter counter(n);
  const auto& edges = target_graph(c.target).graph.edges();

  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    const auto& labels = c.blocks[b].labels;
    bool in_range = true;
    for (int i = 0; i < kBlockSize; ++i) {
      if (labels[i] < 0 || labels[i] >= n) {
        report.label_errors.push_back("block " + std::to_string(b) + " position " +
                                      std::to_string(i) + ": label " +
                                      std::to_string(labels[i]) + " out of range");
        in_range = false;
      }
    }
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 1; i < kBlockSize; ++i) {
      if (sorted[i] == sorted[i - 1]) {
        report.label_errors.push_back("block " + std::to_string(b) + ": label " +
                                      std::to_string(sorted[i]) + " repeated");
      }
    }
    if (!in_range) continue;
    for (const auto& e : edges) {
      const int u = labels[e.u - 1];
      const int v = labels[e.v - 1];
      if (u != v) counter.add(u, v);
    }
  }

  if (c.mode == CertMode::four_partite) {
    counter.collect([](int u, int v) { return u % 4 != v % 4 ? 1 : 0; },
                    report.pair_coverage_errors);
  } else {
    counter.collect([](int, int) { return 1; }, report.pair_coverage_errors);
  }
  finish(report, c);
  return report;
}

CertReport certify_raw_edges(int order, const std::vector<EdgeSet>& parts, TargetId target) {
  Certificate shape;
  shape.order = order;
  shape.declared_count = parts.size();
  CertReport report;
  report.count_expected = expected_block_count(shape, report);
  report.count_actual = parts.size();
  const int n = std::max(order, 0);
  PairCounter counter(n);
  const SmallGraph& target_g = target_graph(target).graph;

  for (std::size_t p = 0; p < parts.size(); ++p) {
    const std::string where = "part " + std::to_string(p);
    std::vector<int> points;
    std::vector<PointPair> normalized;
    bool valid = true;
    for (auto [u, v] : parts[p]) {
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
        report.label_errors.push_back(where + ": bad edge " + pair_text({u, v}));
        valid = false;
        continue;
      }
      normalized.emplace_back(std::min(u, v), std::max(u, v));
      points.push_back(u);
      points.push_back(v);
    }
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end()) {
      report.label_errors.push_back(where + ": repeated edge");
      valid = false;
    }
    for (auto [u, v] : normalized) counter.add(u, v);
    if (!valid) continue;

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() != static_cast<std::size_t>(target_g.vertex_count()) ||
        normalized.size() != target_g.edge_count()) {
      report.isomorphism_errors.push_back(where + ": " + std::to_string(points.size()) +
                                          " vertices and " + std::to_string(normalized.size()) +
                                          " edges");
      continue;
    }
    std::vector<Edge> local;
    for (auto [u, v] : normalized) {
      const auto iu = std::lower_bound(points.begin(), points.end(), u) - points.begin();
      const auto iv = std::lower_bound(points.begin(), points.end(), v) - points.begin();
      local.push_back({static_cast<int>(iu) + 1, static_cast<int>(iv) + 1});
    }
    const SmallGraph part_graph(static_cast<int>(points.size()), std::move(local));
    if (!is_isomorphic(part_graph, target_g)) {
      report.isomorphism_errors.push_back(where + ": not isomorphic to " +
                                          std::string(target_name(target)));
    }
  }

  counter.collect([](int, int) { return 1; }, report.pair_coverage_errors);
  finish(report, shape);
  return report;
}

std::vector<EdgeSet> to_raw_edges(const Certificate& c) {
  if (c.mode == CertMode::raw) return c.parts;
  const auto& edges = target_graph(c.target).graph.edges();
  std::vector<EdgeSet> parts;
  parts.reserve(c.blocks.size());
  for (const auto& block : c.blocks) {
    EdgeSet part;
    part.reserve(edges.size());
    for (const auto& e : edges) part.emplace_back(block.labels[e.u - 1], block.labels[e.v - 1]);
    parts.push_back(std::move(part));
  }
  return parts;
}

Certificate to_raw_certificate(const Certificate& c) {
  if (c.mode == CertMode::four_partite) {
    throw Error(ErrorKind::invalid_argument, "raw form supports complete designs only");
  }
  Certificate raw;
  raw.target = c.target;
  raw.order = c.order;
  raw.mode = CertMode::raw;
  raw.parts = to_raw_edges(c);
  raw.declared_count = raw.parts.size();
  return raw;
}

namespace {

std::string_view mode_name(CertMode mode) {
  switch (mode) {
    case CertMode::complete:
      return "complete";
    case CertMode::four_partite:
      return "4partite";
    case CertMode::raw:
      return "raw";
  }
  return "complete";
}

std::optional<CertMode> parse_mode(std::string_view name) {
  if (name == "complete") return CertMode::complete;
  if (name == "4partite") return CertMode::four_partite;
  if (name == "raw") return CertMode::raw;
  return std::nullopt;
}

Error parse_error(int line_no, const std::string& what) {
  return Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<long long> to_integer(std::string_view s) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

int to_int_or_throw(std::string_view s, int line_no) {
  const auto v = to_integer(s);
  if (!v || *v < INT32_MIN || *v > INT32_MAX) {
    throw parse_error(line_no, "`" + std::string(s) + "` is not an integer");
  }
  return static_cast<int>(*v);
}

}  // namespace

std::string format_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "design " << target_name(c.target) << ' ' << c.order << ' ' << mode_name(c.mode)
      << '\n';
  if (c.mode == CertMode::raw) {
    out << "parts " << c.parts.size() << '\n';
    for (const auto& part : c.parts) {
      for (std::size_t i = 0; i < part.size(); ++i) {
        out << (i ? " " : "") << part[i].first << ' ' << part[i].second;
      }
      out << '\n';
    }
    return out.str();
  }
  out << "blocks " << c.blocks.size() << '\n';
  for (const auto& block : c.blocks) {
    for (int i = 0; i < kBlockSize; ++i) out << (i ? " " : "") << block.labels[i];
    out << '\n';
  }
  return out.str();
}

Certificate parse_certificate(std::istream& in) {
  Certificate c;
  std::string line;
  int line_no = 0;
  int stage = 0;  // 0: expect design line, 1: expect count line, 2: body
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    const auto fields = tokens(line);
    if (fields.empty()) continue;

    if (stage == 0) {
      if (fields.size() != 4 || fields[0] != "design") {
        throw parse_error(line_no, "expected `design <shrikhande|lk44> <n> <complete|4partite>`");
      }
      const auto target = parse_target_name(fields[1]);
      if (!target) throw parse_error(line_no, "unknown graph `" + std::string(fields[1]) + "`");
      const auto mode = parse_mode(fields[3]);
      if (!mode) {
        throw parse_error(line_no, "unsupported certificate mode `" + std::string(fields[3]) + "`");
      }
      c.target = *target;
      c.order = to_int_or_throw(fields[2], line_no);
      c.mode = *mode;
      stage = 1;
      continue;
    }

    if (stage == 1) {
      const char* keyword = c.mode == CertMode::raw ? "parts" : "blocks";
      const auto count = fields.size() == 2 ? to_integer(fields[1]) : std::nullopt;
      if (fields.size() != 2 || fields[0] != keyword || !count || *count < 0) {
        throw parse_error(line_no, std::string("expected `") + keyword + " <count>`");
      }
      c.declared_count = static_cast<std::size_t>(*count);
      stage = 2;
      continue;
    }

    if (c.mode == CertMode::raw) {
      const std::size_t expected = 2 * kTargetEdges;
      if (fields.size() != expected) {
        throw parse_error(line_no, "expected " + std::to_string(expected) + " integers, found " +
                                       std::to_string(fields.size()));
      }
      EdgeSet part;
      for (std::size_t i = 0; i < expected; i += 2) {
        part.emplace_back(to_int_or_throw(fields[i], line_no),
                          to_int_or_throw(fields[i + 1], line_no));
      }
      c.parts.push_back(std::move(part));
    } else {
      if (fields.size() != kBlockSize) {
        throw parse_error(line_no, "expected 16 labels, found " + std::to_string(fields.size()));
      }
      LabeledBlock block;
      for (int i = 0; i < kBlockSize; ++i) block.labels[i] = to_int_or_throw(fields[i], line_no);
      c.blocks.push_back(block);
    }
  }
  if (stage == 0) throw parse_error(line_no + 1, "missing `design` header");
  if (stage == 1) throw parse_error(line_no + 1, "missing block count line");
  return c;
}

Certificate read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  try {
    return parse_certificate(in);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::parse) throw;
    throw Error(ErrorKind::parse, path.string() + ": " + e.what());
  }
}

void write_certificate(const Certificate& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  out << format_certificate(c);
  if (!out) throw Error(ErrorKind::io, "write failed for " + path.string());
}

}  // namespace designforge
