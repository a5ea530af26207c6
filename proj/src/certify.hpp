#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "blocks.hpp"
#include "pairs.hpp"
#include "targets.hpp"

namespace designforge {

enum class CertMode {
  complete,      // every pair of 0..n-1 exactly once
  four_partite,  // Z_16, cross pairs between residue classes mod 4 exactly once
  raw,           // parts given as explicit 48-edge sets
};

using EdgeSet = std::vector<PointPair>;

struct Certificate {
  TargetId target = TargetId::shrikhande;
  int order = 0;
  CertMode mode = CertMode::complete;
  // Count from the `blocks`/`parts` header line; a mismatch is reported by
  // certify, not by the parser.
  std::size_t declared_count = 0;
  std::vector<LabeledBlock> blocks;  // complete / four_partite
  std::vector<EdgeSet> parts;        // raw

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertReport {
  bool pass = false;
  std::vector<PairCoverage> pair_coverage_errors;
  std::vector<std::string> label_errors;
  std::vector<std::string> isomorphism_errors;
  std::vector<std::string> header_errors;
  std::size_t count_expected = 0;
  std::size_t count_actual = 0;

  // Human-readable summary, listing at most `max_items` findings per category.
  std::string to_text(std::size_t max_items = 20) const;
};

Certificate to_certificate(const Design& d, CertMode mode = CertMode::complete);
Certificate four_partite_certificate(TargetId target, const std::array<LabeledBlock, 2>& blocks);

// Tuple-form certification; raw-mode certificates are routed to
// certify_raw_edges.
CertReport certify(const Certificate& c);

CertReport certify_raw_edges(int order, const std::vector<EdgeSet>& parts, TargetId target);

// Each block's tuple pushed through the canonical edge list.
std::vector<EdgeSet> to_raw_edges(const Certificate& c);
Certificate to_raw_certificate(const Certificate& c);

std::string format_certificate(const Certificate& c);
Certificate parse_certificate(std::istream& in);
Certificate read_certificate(const std::filesystem::path& path);
void write_certificate(const Certificate& c, const std::filesystem::path& path);

}  // namespace designforge
