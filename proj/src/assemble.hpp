#pragma once

#include <array>
#include <span>
#include <vector>

#include "blocks.hpp"
#include "gdd.hpp"

namespace designforge {

// n = 1 or n = 1 (mod 96). Cross-checked against necessary_conditions.
bool admissible(long long n);

// The three necessary conditions for a G-design of order n, G d-regular:
// n >= |V| or n = 1; n(n-1) = 0 mod 2|E|; n-1 = 0 mod d.
bool necessary_conditions(long long n, int vertices, int edges, int degree);

// Label l of Z_16 with l = i (mod 4) goes to inflated point 4 * p_i + l / 4,
// where p_0 < p_1 < p_2 < p_3 are the GDD block's points.
std::array<LabeledBlock, 2> inflate_block_to_k4444(std::array<int, 4> block,
                                                   const std::array<LabeledBlock, 2>& decomposition);

// Maps the order-97 design onto group ∪ {infinity}: the k-th inflated point of
// the group (sorted) plays design point k, infinity plays design point 96.
std::vector<LabeledBlock> overlay_group(std::span<const int> group, int infinity,
                                        const Design& d97);

// Design of order n for the target: empty for n = 1, a developed base block
// for 97/193/289, and the GDD construction for n = 96t + 1, t >= 4.
// Blocks are ordered: K_{4,4,4,4} pieces by GDD block, then overlays by group.
Design construct_design(TargetId target, long long n, const GddProviderOptions& options = {});

}  // namespace designforge
