#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "targets.hpp"

namespace designforge {

inline constexpr int kBlockSize = 16;
inline constexpr int kTargetEdges = 48;

// labels[i] is the point placed on canonical vertex i + 1.
struct LabeledBlock {
  std::array<int, kBlockSize> labels{};

  friend auto operator<=>(const LabeledBlock&, const LabeledBlock&) = default;
};

// A claimed decomposition of K_order into copies of the target graph, each
// given as a labelling of the canonical vertices by points 0..order-1.
struct Design {
  int order = 0;
  TargetId target = TargetId::shrikhande;
  std::vector<LabeledBlock> blocks;
};

struct BaseBlock {
  TargetId target = TargetId::shrikhande;
  Ring ring = Ring::prime_field(2);
  Element omega{1};
  std::array<Element, kBlockSize> labels{};

  int order() const noexcept { return ring.order(); }
  // Number of multipliers omega^e used by the development: (n - 1) / 96.
  int exponents() const;
};

// The ring used for a catalog order: Z_97, Z_193 or GF(17^2).
Ring ring_for_order(int n);

// Verbatim base block and omega for (target, n), n in {97, 193, 289}.
BaseBlock catalog_base_block(TargetId target, int n);
std::vector<BaseBlock> catalog_base_blocks();

// Two labellings over Z_16 whose edge sets partition the pairs of Z_16 lying
// in different residue classes mod 4.
std::array<LabeledBlock, 2> k4444_decomposition(TargetId target);

// Orbit of the base block under x -> omega^e x + d, ordered by (e, d).
// Throws not_a_subgroup for an unusable omega and duplicate_label when a
// developed block repeats a point or two blocks share an edge set.
Design develop(const BaseBlock& b);

// True iff the labels are distinct, {+-omega^e} is a subgroup of order
// 2 * exponents() and the 48 edge differences form a system of
// representatives for its cosets in the unit group.
bool difference_transversal_check(const BaseBlock& b);

// Catalog text: one line `<target> <n> <omega> <16 labels>` per base block.
std::string format_base_block_catalog(const std::vector<BaseBlock>& blocks);
std::vector<BaseBlock> parse_base_block_catalog(std::istream& in);

}  // namespace designforge
