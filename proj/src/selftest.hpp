#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "blocks.hpp"

namespace designforge {

// Develops the base block and runs the full certifier. Development errors
// (bad omega, repeated points) count as failure.
bool develops_to_design(const BaseBlock& b);

// Replaces one label, chosen uniformly, by a different value of the ring.
BaseBlock mutate_one_label(const BaseBlock& b, std::mt19937_64& rng);

struct SelftestResult {
  bool pass = true;
  std::string log;
};

SelftestResult run_selftest(int mutations_per_block = 25, std::uint64_t seed = 1);

// Base blocks, K_{4,4,4,4} tuples and the two edge lists.
std::string catalog_text();

}  // namespace designforge
