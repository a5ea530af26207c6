#include "assemble.hpp"

#include <algorithm>
#include <string>

#include "certify.hpp"
#include "error.hpp"

namespace designforge {

namespace {

constexpr int kPartSize = 4;
constexpr int kOverlayPoints = 96;

}  // namespace

bool necessary_conditions(long long n, int vertices, int edges, int degree) {
  if (n < 1) return false;
  const bool size_ok = n >= vertices || n == 1;
  const bool edge_ok = (n * (n - 1)) % (2LL * edges) == 0;
  const bool degree_ok = (n - 1) % degree == 0;
  return size_ok && edge_ok && degree_ok;
}

bool admissible(long long n) {
  const bool closed_form = n == 1 || (n > 1 && n % 96 == 1);
  const auto& g = shrikhande().graph;
  const bool derived = necessary_conditions(n, g.vertex_count(), static_cast<int>(g.edge_count()),
                                            g.degree(1));
  if (closed_form != derived) {
    throw Error(ErrorKind::invalid_argument,
                "admissibility forms disagree at n = " + std::to_string(n));
  }
  return closed_form;
}

std::array<LabeledBlock, 2> inflate_block_to_k4444(std::array<int, 4> block,
                                                   const std::array<LabeledBlock, 2>& decomposition) {
  std::sort(block.begin(), block.end());
  std::array<LabeledBlock, 2> out;
  for (std::size_t b = 0; b < decomposition.size(); ++b) {
    for (int i = 0; i < kBlockSize; ++i) {
      const int label = decomposition[b].labels[i];
      out[b].labels[i] = kPartSize * block[label % kPartSize] + label / kPartSize;
    }
  }
  return out;
}

std::vector<LabeledBlock> overlay_group(std::span<const int> group, int infinity,
                                        const Design& d97) {
  std::vector<int> points;
  points.reserve(kOverlayPoints + 1);
  for (int p : group) {
    for (int j = 0; j < kPartSize; ++j) points.push_back(kPartSize * p + j);
  }
  std::sort(points.begin(), points.end());
  if (points.size() != kOverlayPoints || d97.order != kOverlayPoints + 1) {
    throw Error(ErrorKind::invalid_argument, "overlay needs a 24-point group and an order-97 design");
  }
  points.push_back(infinity);

  std::vector<LabeledBlock> out;
  out.reserve(d97.blocks.size());
  for (const auto& b : d97.blocks) {
    LabeledBlock mapped;
    for (int i = 0; i < kBlockSize; ++i) mapped.labels[i] = points.at(b.labels[i]);
    out.push_back(mapped);
  }
  return out;
}

Design construct_design(TargetId target, long long n, const GddProviderOptions& options) {
  if (n < 1 || !admissible(n)) {
    throw Error(ErrorKind::precondition,
                "order " + std::to_string(n) + " is not admissible: need n = 1 or n ≡ 1 (mod 96)");
  }
  if (n > 1'000'000) throw Error(ErrorKind::invalid_argument, "order too large");

  Design design;
  design.order = static_cast<int>(n);
  design.target = target;
  if (n == 1) return design;
  if (n == 97 || n == 193 || n == 289) {
    design = develop(catalog_base_block(target, static_cast<int>(n)));
  } else {
    const int t = static_cast<int>((n - 1) / 96);
    const Gdd gdd = gdd_24_t(t, options);
    const auto pieces = k4444_decomposition(target);
    const Design d97 = develop(catalog_base_block(target, 97));
    const int infinity = 96 * t;

    design.blocks.reserve(static_cast<std::size_t>(n) * (n - 1) / 96);
    for (const auto& b : gdd.blocks) {
      for (const auto& piece : inflate_block_to_k4444({b[0], b[1], b[2], b[3]}, pieces)) {
        design.blocks.push_back(piece);
      }
    }
    for (const auto& group : gdd.groups) {
      for (const auto& block : overlay_group(group, infinity, d97)) design.blocks.push_back(block);
    }
  }

  const auto report = certify(to_certificate(design));
  if (!report.pass) {
    throw Error(ErrorKind::invalid_argument,
                "constructed design failed certification:\n" + report.to_text());
  }
  return design;
}

}  // namespace designforge
