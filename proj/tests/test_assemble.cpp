#include <doctest.h>

#include <map>
#include <set>

#include "assemble.hpp"
#include "certify.hpp"
#include "error.hpp"
#include "fixtures.hpp"

using namespace designforge;

TEST_CASE("admissibility") {
  CHECK(admissible(1));
  CHECK(admissible(97));
  CHECK(admissible(385));
  CHECK_FALSE(admissible(0));
  CHECK_FALSE(admissible(16));
  CHECK_FALSE(admissible(98));
  CHECK_FALSE(admissible(49));  // 49*48 = 2352 = 24.5 * 96
  for (long long n = 0; n <= 2000; ++n) {
    CAPTURE(n);
    CHECK(admissible(n) == fixtures::admissible_by_clauses(n));
  }
}

TEST_CASE("K4444 inflation sends each label to its residue class point") {
  const auto pieces = k4444_decomposition(TargetId::shrikhande);
  const auto out = inflate_block_to_k4444({7, 2, 30, 11}, pieces);
  // sorted points 2 < 7 < 11 < 30
  const int p[4] = {2, 7, 11, 30};
  for (int b = 0; b < 2; ++b) {
    for (int i = 0; i < 16; ++i) {
      const int l = pieces[b].labels[i];
      CHECK(out[b].labels[i] == 4 * p[l % 4] + l / 4);
    }
  }
  // The two pieces cover every pair between distinct inflated points once.
  const auto counts = fixtures::pair_counts({out[0].labels, out[1].labels}, true);
  CHECK(counts.size() == 96);
  for (const auto& [pair, c] : counts) {
    CHECK(c == 1);
    CHECK(pair.first / 4 != pair.second / 4);
  }
}

TEST_CASE("group overlay places the order-97 design on group plus infinity") {
  const auto d97 = develop(catalog_base_block(TargetId::line_k44, 97));
  std::vector<int> group;
  for (int i = 0; i < 24; ++i) group.push_back(48 + i);
  const auto blocks = overlay_group(group, 385 - 1, d97);
  CHECK(blocks.size() == 97);
  std::set<int> points;
  for (const auto& b : blocks) points.insert(b.labels.begin(), b.labels.end());
  CHECK(points.size() == 97);
  CHECK(*points.begin() == 4 * 48);
  CHECK(*std::prev(points.end()) == 384);
  CHECK(points.count(4 * 71 + 3));

  std::vector<fixtures::Tuple> tuples;
  for (const auto& b : blocks) tuples.push_back(b.labels);
  const auto counts = fixtures::pair_counts(tuples, false);
  CHECK(counts.size() == 97 * 96 / 2);
  for (const auto& [pair, c] : counts) CHECK(c == 1);

  CHECK_THROWS_AS(overlay_group(std::span<const int>(group).first(23), 384, d97), Error);
}

TEST_CASE("small orders") {
  const auto d1 = construct_design(TargetId::shrikhande, 1);
  CHECK(d1.order == 1);
  CHECK(d1.blocks.empty());
  CHECK(certify(to_certificate(d1)).pass);
  CHECK(construct_design(TargetId::line_k44, 193).blocks.size() == 386);

  try {
    construct_design(TargetId::shrikhande, 98);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

TEST_CASE("order 385: block roles and determinism") {
  for (auto target : {TargetId::shrikhande, TargetId::line_k44}) {
    const auto d = construct_design(target, 385);
    REQUIRE(d.blocks.size() == 1540);
    // First 1152 blocks only join distinct GDD groups; the 4 * 97 overlays
    // only join points of one group or infinity.
    const bool shr = target == TargetId::shrikhande;
    const auto& edges = fixtures::edges_for(shr);
    auto group_of = [](int p) { return p == 384 ? -1 : p / 96; };
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      bool cross = false, inner = false;
      for (auto [u, v] : edges) {
        const int a = group_of(d.blocks[i].labels[u - 1]);
        const int b = group_of(d.blocks[i].labels[v - 1]);
        if (a >= 0 && b >= 0 && a != b) cross = true;
        else inner = true;
      }
      if (i < 1152) CHECK((cross && !inner));
      else CHECK((inner && !cross));
    }
    std::vector<fixtures::Tuple> tuples;
    for (const auto& b : d.blocks) tuples.push_back(b.labels);
    CHECK(fixtures::covers_complete(tuples, shr, 385));

    const auto again = construct_design(target, 385);
    CHECK(again.blocks == d.blocks);
  }
}
