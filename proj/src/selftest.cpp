#include "selftest.hpp"

#include <sstream>

#include "assemble.hpp"
#include "certify.hpp"
#include "error.hpp"

namespace designforge {

bool develops_to_design(const BaseBlock& b) {
  try {
    return certify(to_certificate(develop(b))).pass;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::not_a_subgroup || e.kind() == ErrorKind::duplicate_label) {
      return false;
    }
    throw;
  }
}

BaseBlock mutate_one_label(const BaseBlock& b, std::mt19937_64& rng) {
  BaseBlock m = b;
  std::uniform_int_distribution<int> position(0, kBlockSize - 1);
  std::uniform_int_distribution<int> value(0, b.order() - 2);
  const int i = position(rng);
  int v = value(rng);
  if (v >= b.labels[i].code) ++v;
  m.labels[i] = Element{v};
  return m;
}

SelftestResult run_selftest(int mutations_per_block, std::uint64_t seed) {
  SelftestResult result;
  std::ostringstream log;
  auto check = [&](bool ok, const std::string& what) {
    log << (ok ? "ok   " : "FAIL ") << what << '\n';
    result.pass = result.pass && ok;
  };

  for (const auto* t : {&shrikhande(), &line_k44()}) {
    const std::string name(target_name(t->id));
    const auto p = srg_parameters(t->graph);
    check(p && *p == SrgParameters{16, 6, 2, 2}, name + " is srg(16,6,2,2)");
    check(satisfies_srg_identity(t->graph, {16, 6, 2, 2}), name + " satisfies A^2 = 2J + 4I");
    check(certify(four_partite_certificate(t->id, k4444_decomposition(t->id))).pass,
          name + " K_{4,4,4,4} decomposition certifies");
  }
  check(!is_isomorphic(shrikhande().graph, line_k44().graph),
        "shrikhande and lk44 are not isomorphic");

  std::mt19937_64 rng(seed);
  for (const auto& b : catalog_base_blocks()) {
    const std::string name =
        std::string(target_name(b.target)) + " order " + std::to_string(b.order());
    const bool fast = difference_transversal_check(b);
    check(fast && develops_to_design(b), name + " base block develops into a design");
    int agree = 0;
    for (int i = 0; i < mutations_per_block; ++i) {
      const BaseBlock m = mutate_one_label(b, rng);
      agree += difference_transversal_check(m) == develops_to_design(m) ? 1 : 0;
    }
    check(agree == mutations_per_block, name + ": difference check agrees with certifier on " +
                                            std::to_string(agree) + "/" +
                                            std::to_string(mutations_per_block) + " mutations");
  }

  bool admissible_ok = true;
  for (long long n = 1; n <= 10000; ++n) {
    admissible_ok = admissible_ok && admissible(n) == necessary_conditions(n, 16, 48, 6);
  }
  check(admissible_ok, "admissibility matches the necessary conditions for n <= 10000");

  result.log = log.str();
  return result;
}

std::string catalog_text() {
  std::ostringstream out;
  out << "# base blocks: <graph> <n> <omega> <labels of vertices 1..16>\n"
      << format_base_block_catalog(catalog_base_blocks());
  out << "# K_{4,4,4,4} decompositions over Z_16 (parts = residues mod 4)\n";
  for (auto id : {TargetId::shrikhande, TargetId::line_k44}) {
    for (const auto& block : k4444_decomposition(id)) {
      out << "k4444 " << target_name(id);
      for (int l : block.labels) out << ' ' << l;
      out << '\n';
    }
  }
  for (auto id : {TargetId::shrikhande, TargetId::line_k44}) {
    out << "# edge list: " << target_name(id) << '\n' << write_edge_list(target_graph(id).graph);
  }
  return out.str();
}

}  // namespace designforge
