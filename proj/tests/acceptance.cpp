// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "assemble.hpp"
#include "certify.hpp"
#include "fixtures.hpp"
#include "gdd.hpp"
#include "selftest.hpp"

using namespace designforge;

namespace {

// Runtime limits in seconds. Counts and coverage are exact throughout.
constexpr double kCatalogDesignSeconds = 1.0;
constexpr double kFourPartiteSeconds = 0.1;
constexpr double kOrder385Seconds = 10.0;
constexpr double kRegenerateSeconds = 60.0;
constexpr double kTdSeconds = 5.0;
constexpr double kStructureSeconds = 5.0;
constexpr double kAdmissibilitySeconds = 1.0;
constexpr int kOracleMutations = 100;
constexpr int kOracleAffineImages = 20;
constexpr int kSoundnessMutations = 100;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double t = seconds_since(start);
  std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", id, o.pass ? "PASS" : "FAIL", title, t,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

std::string name(TargetId t) { return std::string(target_name(t)); }

std::vector<fixtures::Tuple> tuples(const Design& d) {
  std::vector<fixtures::Tuple> out;
  for (const auto& b : d.blocks) out.push_back(b.labels);
  return out;
}

Outcome catalog_designs() {
  Outcome o;
  for (const auto& p : fixtures::kReferenceBlocks) {
    const auto target = p.shrikhande ? TargetId::shrikhande : TargetId::line_k44;
    const auto tag = name(target) + "/" + std::to_string(p.order);
    const auto start = Clock::now();
    const auto d = develop(catalog_base_block(target, p.order));
    const auto report = certify(to_certificate(d));
    const double t = seconds_since(start);
    const auto expected = static_cast<std::size_t>(p.order) * (p.order - 1) / 96;
    o.require(report.pass, tag + " certifier rejects");
    o.require(d.blocks.size() == expected, tag + " block count " + std::to_string(d.blocks.size()));
    o.require(fixtures::covers_complete(fixtures::develop_oracle(p), p.shrikhande, p.order),
              tag + " oracle development does not cover");
    o.require(fixtures::covers_complete(tuples(d), p.shrikhande, p.order),
              tag + " oracle rejects library development");
    o.require(t < kCatalogDesignSeconds, tag + " too slow");
  }
  return o;
}

Outcome four_partite() {
  Outcome o;
  for (auto target : {TargetId::shrikhande, TargetId::line_k44}) {
    const auto start = Clock::now();
    const auto pieces = k4444_decomposition(target);
    const auto report = certify(four_partite_certificate(target, pieces));
    o.require(seconds_since(start) < kFourPartiteSeconds, name(target) + " too slow");
    o.require(report.pass, name(target) + " certifier rejects");
    const auto counts =
        fixtures::pair_counts({pieces[0].labels, pieces[1].labels}, target == TargetId::shrikhande);
    bool cross_once = counts.size() == 96;
    for (const auto& [pair, c] : counts) cross_once = cross_once && c == 1 && pair.first % 4 != pair.second % 4;
    o.require(cross_once, name(target) + " oracle: not the 96 cross pairs once");
  }
  return o;
}

Outcome order_385() {
  Outcome o;
  for (auto target : {TargetId::shrikhande, TargetId::line_k44}) {
    const auto start = Clock::now();
    const auto d = construct_design(target, 385);
    const auto report = certify(to_certificate(d));
    o.require(seconds_since(start) < kOrder385Seconds, name(target) + " too slow");
    o.require(report.pass, name(target) + " certifier rejects");
    o.require(d.blocks.size() == 1540, name(target) + " block count " + std::to_string(d.blocks.size()));
    o.require(fixtures::covers_complete(tuples(d), target == TargetId::shrikhande, 385),
              name(target) + " oracle rejects");
  }
  return o;
}

Outcome order_481() {
  Outcome o;
  // With the shipped ingredient store.
  const auto store = IngredientStore::load(DESIGNFORGE_DATA_DIR "/ingredients");
  o.require(store.find(GddType::uniform(3, 5), 4) || store.find(GddType::uniform(6, 5), 4),
            "store lacks 3^5 and 6^5");
  GddProviderOptions stored{&store, false, {}};
  for (auto target : {TargetId::shrikhande, TargetId::line_k44}) {
    const auto d = construct_design(target, 481, stored);
    o.require(certify(to_certificate(d)).pass, name(target) + " (store) certifier rejects");
    o.require(d.blocks.size() == 2405, name(target) + " (store) block count");
    o.require(fixtures::covers_complete(tuples(d), target == TargetId::shrikhande, 481),
              name(target) + " (store) oracle rejects");
  }

  // With an empty store: 3^5 is regenerated by exact-cover search.
  const auto start = Clock::now();
  SearchLimits limits;
  const auto regenerated = exact_cover_search(GddType::uniform(3, 5), 4, limits);
  o.require(regenerated.outcome == SearchOutcome::found && regenerated.gdd->blocks.size() == 15,
            "exact-cover search did not regenerate 3^5");
  if (regenerated.gdd) {
    const auto c = fixtures::check_gdd(regenerated.gdd->groups, regenerated.gdd->blocks);
    o.require(c.defects == 0 && c.covered_once == c.cross_pairs, "regenerated 3^5 fails the oracle");
  }
  IngredientStore empty;
  GddProviderOptions searched{&empty, true, limits};
  const auto d = construct_design(TargetId::shrikhande, 481, searched);
  o.require(seconds_since(start) < kRegenerateSeconds, "regeneration path too slow");
  o.require(certify(to_certificate(d)).pass && d.blocks.size() == 2405,
            "pipeline with regenerated ingredient rejects");
  return o;
}

Outcome td_4_24() {
  Outcome o;
  const auto start = Clock::now();
  const auto td = transversal_design(4, 24);
  const auto report = verify_gdd(td);
  o.require(seconds_since(start) < kTdSeconds, "too slow");
  o.require(td.blocks.size() == 576, "block count " + std::to_string(td.blocks.size()));
  o.require(report.pass, "verify_gdd rejects");
  const auto c = fixtures::check_gdd(td.groups, td.blocks);
  o.require(c.cross_pairs == 288 * 4 * 3, "oracle cross pairs " + std::to_string(c.cross_pairs));
  o.require(c.covered_once == c.cross_pairs && c.defects == 0, "oracle coverage");
  return o;
}

Outcome structure() {
  Outcome o;
  const auto start = Clock::now();
  for (auto target : {TargetId::shrikhande, TargetId::line_k44}) {
    const auto& g = target_graph(target).graph;
    o.require(srg_parameters(g) == SrgParameters{16, 6, 2, 2}, name(target) + " srg parameters");
    const auto a = adjacency_matrix(g);
    const auto a2 = multiply(a, a);
    bool identity = true;
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; ++j) identity = identity && a2[i][j] == 2 + (i == j ? 4 : 0);
    }
    o.require(identity, name(target) + " A^2 != 2J + 4I");
  }
  o.require(!is_isomorphic(shrikhande().graph, line_k44().graph), "isomorphism reported");
  o.require(fixtures::neighbourhood_triangles(fixtures::kShrikhandeEdges, 16) !=
                fixtures::neighbourhood_triangles(fixtures::kLineK44Edges, 16),
            "oracle invariant does not separate the graphs");
  o.require(seconds_since(start) < kStructureSeconds, "too slow");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20250505);
  int agreed = 0, rejected = 0;
  for (const auto& base : catalog_base_blocks()) {
    o.require(difference_transversal_check(base) && develops_to_design(base),
              name(base.target) + "/" + std::to_string(base.order()) + " base block");
    for (int i = 0; i < kOracleMutations; ++i) {
      const auto m = mutate_one_label(base, rng);
      const bool fast = difference_transversal_check(m);
      const bool slow = develops_to_design(m);
      if (fast == slow) ++agreed;
      rejected += !slow;
    }
    // x -> u x + d with u a unit permutes the difference cosets, so these
    // images are valid base blocks: agreement on the accepting side.
    std::uniform_int_distribution<int> pick(1, base.order() - 1);
    for (int i = 0; i < kOracleAffineImages; ++i) {
      auto image = base;
      const Element u{pick(rng)}, d{pick(rng)};
      for (auto& l : image.labels) l = base.ring.add(base.ring.mul(u, l), d);
      const bool fast = difference_transversal_check(image);
      const bool slow = develops_to_design(image);
      if (fast == slow) ++agreed;
      o.require(slow, "affine image rejected");
    }
  }
  const int total = 6 * (kOracleMutations + kOracleAffineImages);
  o.require(agreed == total, std::to_string(total - agreed) + " disagreements");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(agreed) + "/" + std::to_string(total) +
              " agree, " + std::to_string(rejected) + " of " + std::to_string(6 * kOracleMutations) +
              " mutants rejected";
  return o;
}

Outcome soundness() {
  Outcome o;
  std::mt19937_64 rng(97385);
  for (int n : {97, 385}) {
    for (auto target : {TargetId::shrikhande, TargetId::line_k44}) {
      const auto cert = to_certificate(construct_design(target, n));
      o.require(certify(cert).pass, name(target) + "/" + std::to_string(n) + " unmutated rejects");
      std::uniform_int_distribution<std::size_t> block(0, cert.blocks.size() - 1);
      std::uniform_int_distribution<int> slot(0, 15), value(0, n - 2);
      int caught = 0;
      for (int i = 0; i < kSoundnessMutations; ++i) {
        auto m = cert;
        auto& label = m.blocks[block(rng)].labels[slot(rng)];
        const int v = value(rng);
        label = v >= label ? v + 1 : v;
        caught += !certify(m).pass;
      }
      o.require(caught == kSoundnessMutations, name(target) + "/" + std::to_string(n) + " " +
                                                   std::to_string(caught) + "/100 rejected");
    }
  }
  return o;
}

Outcome admissibility() {
  Outcome o;
  const auto start = Clock::now();
  int mismatches = 0;
  for (long long n = 1; n <= 10000; ++n) {
    const bool a = admissible(n);
    mismatches += a != fixtures::admissible_by_clauses(n);
    mismatches += a != (n == 1 || n % 96 == 1);
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.require(seconds_since(start) < kAdmissibilitySeconds, "too slow");
  return o;
}

}  // namespace

int main() {
  criterion(1, "catalog base blocks develop to certified designs of order 97/193/289",
            catalog_designs);
  criterion(2, "K4444 decompositions certify in four-partite mode", four_partite);
  criterion(3, "order 385 via TD(4,24) certifies with 1540 blocks", order_385);
  criterion(4, "order 481 via inflated ingredient certifies with 2405 blocks", order_481);
  criterion(5, "TD(4,24) from Kronecker MOLS has 576 blocks covering 3456 cross pairs", td_4_24);
  criterion(6, "srg(16,6,2,2), A^2 = 2J + 4I, targets non-isomorphic", structure);
  criterion(7, "difference check agrees with develop + certify on mutants", oracle_equivalence);
  criterion(8, "certifier rejects every single-label mutant of orders 97 and 385", soundness);
  criterion(9, "admissibility matches the three necessary conditions up to 10000", admissibility);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
