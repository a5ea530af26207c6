#include "blocks.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "error.hpp"

namespace designforge {

int BaseBlock::exponents() const {
  const int n = order();
  if ((n - 1) % (2 * kTargetEdges) != 0) {
    throw Error(ErrorKind::precondition,
                "order " + std::to_string(n) + " is not 1 mod 96; cannot develop");
  }
  return (n - 1) / (2 * kTargetEdges);
}

Ring ring_for_order(int n) {
  if (n == kGfBase * kGfBase) return Ring::gf289();
  return Ring::prime_field(n);
}

namespace {

struct CatalogEntry {
  TargetId target;
  int order;
  int omega;
  std::array<int, kBlockSize> labels;
};

constexpr std::array<CatalogEntry, 6> kCatalog{{
    {TargetId::shrikhande, 97, 1, {0, 4, 6, 62, 1, 11, 19, 45, 69, 80, 59, 78, 32, 74, 28, 44}},
    {TargetId::shrikhande, 193, 81,
     {0, 19, 164, 27, 51, 175, 66, 138, 74, 20, 70, 94, 108, 77, 41, 134}},
    {TargetId::shrikhande, 289, 139,
     {0, 136, 232, 11, 176, 180, 89, 159, 288, 257, 90, 42, 45, 260, 37, 19}},
    {TargetId::line_k44, 97, 1, {0, 57, 41, 20, 1, 3, 10, 51, 79, 6, 82, 2, 18, 71, 45, 32}},
    {TargetId::line_k44, 193, 81,
     {0, 19, 167, 32, 3, 78, 159, 28, 34, 24, 141, 87, 1, 118, 183, 39}},
    {TargetId::line_k44, 289, 139,
     {0, 206, 203, 19, 109, 71, 127, 259, 43, 59, 227, 52, 252, 76, 32, 28}},
}};

BaseBlock make_base_block(TargetId target, int n, int omega,
                          const std::array<int, kBlockSize>& labels) {
  BaseBlock b;
  b.target = target;
  b.ring = ring_for_order(n);
  b.omega = Element{omega};
  if (!b.ring.valid(b.omega)) {
    throw Error(ErrorKind::invalid_element, "omega " + std::to_string(omega) + " out of range");
  }
  for (int i = 0; i < kBlockSize; ++i) {
    b.labels[i] = Element{labels[i]};
    if (!b.ring.valid(b.labels[i])) {
      throw Error(ErrorKind::invalid_element,
                  "label " + std::to_string(labels[i]) + " out of range for order " +
                      std::to_string(n));
    }
  }
  return b;
}

}  // namespace

BaseBlock catalog_base_block(TargetId target, int n) {
  for (const auto& entry : kCatalog) {
    if (entry.target == target && entry.order == n) {
      return make_base_block(target, n, entry.omega, entry.labels);
    }
  }
  throw Error(ErrorKind::not_in_catalog, "no base block for " + std::string(target_name(target)) +
                                             " of order " + std::to_string(n));
}

std::vector<BaseBlock> catalog_base_blocks() {
  std::vector<BaseBlock> out;
  for (const auto& entry : kCatalog) out.push_back(catalog_base_block(entry.target, entry.order));
  return out;
}

std::array<LabeledBlock, 2> k4444_decomposition(TargetId target) {
  if (target == TargetId::shrikhande) {
    return {{{{0, 1, 2, 5, 3, 4, 7, 6, 10, 9, 8, 13, 11, 14, 15, 12}},
             {{0, 2, 8, 10, 9, 3, 5, 15, 12, 14, 4, 6, 7, 13, 11, 1}}}};
  }
  return {{{{0, 1, 2, 3, 5, 6, 7, 4, 11, 10, 15, 14, 8, 9, 13, 12}},
           {{0, 9, 11, 14, 10, 13, 15, 7, 1, 8, 4, 2, 6, 3, 12, 5}}}};
}

namespace {

bool labels_distinct(const std::array<Element, kBlockSize>& labels) {
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<std::pair<int, int>> sorted_edge_pairs(const LabeledBlock& block,
                                                   const SmallGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    int a = block.labels[e.u - 1];
    int b = block.labels[e.v - 1];
    if (a > b) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

Design develop(const BaseBlock& b) {
  const int exps = b.exponents();
  const Ring& ring = b.ring;
  // Validates omega before anything is generated.
  unit_group_coset_partition(ring, b.omega, exps);
  if (!labels_distinct(b.labels)) {
    throw Error(ErrorKind::duplicate_label, "base block repeats a label");
  }

  Design design;
  design.order = ring.order();
  design.target = b.target;
  design.blocks.reserve(static_cast<std::size_t>(exps) * ring.order());
  for (int e = 0; e < exps; ++e) {
    const Element multiplier = ring.pow(b.omega, static_cast<std::uint64_t>(e));
    for (int d = 0; d < ring.order(); ++d) {
      LabeledBlock block;
      for (int i = 0; i < kBlockSize; ++i) {
        block.labels[i] = ring.add(ring.mul(multiplier, b.labels[i]), Element{d}).code;
      }
      design.blocks.push_back(block);
    }
  }

  const SmallGraph& g = target_graph(b.target).graph;
  std::vector<std::vector<std::pair<int, int>>> edge_sets;
  edge_sets.reserve(design.blocks.size());
  for (const auto& block : design.blocks) {
    auto sorted = block.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::duplicate_label, "developed block repeats a point");
    }
    edge_sets.push_back(sorted_edge_pairs(block, g));
  }
  std::sort(edge_sets.begin(), edge_sets.end());
  if (std::adjacent_find(edge_sets.begin(), edge_sets.end()) != edge_sets.end()) {
    throw Error(ErrorKind::duplicate_label, "development produces the same block twice");
  }
  return design;
}

bool difference_transversal_check(const BaseBlock& b) {
  if (!labels_distinct(b.labels)) return false;
  std::vector<std::vector<Element>> cosets;
  try {
    cosets = unit_group_coset_partition(b.ring, b.omega, b.exponents());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_a_subgroup) throw;
    return false;
  }

  std::vector<int> coset_of(b.ring.order(), -1);
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (Element x : cosets[i]) coset_of[x.code] = static_cast<int>(i);
  }
  std::vector<bool> hit(cosets.size(), false);
  for (const auto& e : target_graph(b.target).graph.edges()) {
    const Element diff = b.ring.sub(b.labels[e.u - 1], b.labels[e.v - 1]);
    if (diff.code == 0) return false;
    const int c = coset_of[diff.code];
    if (hit[c]) return false;
    hit[c] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

std::string format_base_block_catalog(const std::vector<BaseBlock>& blocks) {
  std::ostringstream out;
  for (const auto& b : blocks) {
    out << target_name(b.target) << ' ' << b.order() << ' ' << b.omega.code;
    for (Element x : b.labels) out << ' ' << x.code;
    out << '\n';
  }
  return out.str();
}

std::vector<BaseBlock> parse_base_block_catalog(std::istream& in) {
  std::vector<BaseBlock> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name;
    int n = 0;
    int omega = 0;
    std::array<int, kBlockSize> labels{};
    fields >> name >> n >> omega;
    for (auto& l : labels) fields >> l;
    std::string extra;
    const auto target = parse_target_name(name);
    if (!fields || (fields >> extra) || !target) {
      throw Error(ErrorKind::parse, "catalog line " + std::to_string(line_no) +
                                        ": expected `<target> <n> <omega> <16 labels>`");
    }
    out.push_back(make_base_block(*target, n, omega, labels));
  }
  return out;
}

}  // namespace designforge
