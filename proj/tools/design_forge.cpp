// Command-line front end over the designforge C API.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "designforge.h"

#ifndef DF_DEFAULT_INGREDIENT_DIR
#define DF_DEFAULT_INGREDIENT_DIR ""
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using OptionsPtr = std::unique_ptr<df_options, Deleter<df_options, df_options_free>>;
using DesignPtr = std::unique_ptr<df_design, Deleter<df_design, df_design_free>>;
using CertificatePtr = std::unique_ptr<df_certificate, Deleter<df_certificate, df_certificate_free>>;
using ReportPtr = std::unique_ptr<df_report, Deleter<df_report, df_report_free>>;
using GddPtr = std::unique_ptr<df_gdd, Deleter<df_gdd, df_gdd_free>>;

// A malformed certificate is a failed verification; every other error is a
// usage or ingredient problem.
int fail(df_status status, bool parse_is_verification = false) {
  std::cerr << "error: " << df_status_name(status) << ": " << df_last_error() << '\n';
  if (status == DF_VERIFICATION_FAILED) return kExitVerification;
  if (status == DF_ERR_PARSE && parse_is_verification) return kExitVerification;
  return kExitUsage;
}

struct StoreFlags {
  std::string ingredients;
  bool no_search = false;
  std::uint64_t budget = 20'000'000;
  std::uint64_t seed = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--ingredients", ingredients,
                    "Ingredient GDD directory (overrides DESIGN_FORGE_INGREDIENTS)");
    cmd->add_flag("--no-search", no_search, "Do not regenerate missing ingredients by search");
    cmd->add_option("--budget", budget, "Node budget for exact-cover search");
    cmd->add_option("--seed", seed, "Seed for exact-cover search");
  }

  // Flag wins over the environment, which wins over the built-in store.
  std::string directory() const {
    if (!ingredients.empty()) return ingredients;
    if (const char* env = std::getenv("DESIGN_FORGE_INGREDIENTS"); env && *env) return env;
    const std::string fallback = DF_DEFAULT_INGREDIENT_DIR;
    std::error_code ec;
    if (!fallback.empty() && std::filesystem::is_directory(fallback, ec)) return fallback;
    return {};
  }

  df_status make(OptionsPtr& out) const {
    df_options* raw = nullptr;
    if (df_status s = df_options_create(&raw); s != DF_OK) return s;
    out.reset(raw);
    if (const auto dir = directory(); !dir.empty()) {
      if (df_status s = df_options_set_ingredient_dir(raw, dir.c_str()); s != DF_OK) return s;
    }
    df_options_set_search(raw, no_search ? 0 : 1);
    df_options_set_search_limits(raw, budget, seed);
    return DF_OK;
  }
};

int run_construct(const std::string& graph_name, std::uint64_t order, const std::string& out,
                  const StoreFlags& store) {
  df_graph graph;
  if (df_status s = df_graph_from_name(graph_name.c_str(), &graph); s != DF_OK) return fail(s);
  if (!df_admissible(order)) {
    std::cerr << "error: order " << order
              << " is not admissible: a design exists iff n ≡ 1 (mod 96) or n = 1\n";
    return kExitUsage;
  }
  OptionsPtr options;
  if (df_status s = store.make(options); s != DF_OK) return fail(s);

  df_design* raw_design = nullptr;
  if (df_status s = df_construct(graph, order, options.get(), &raw_design); s != DF_OK) {
    return fail(s);
  }
  DesignPtr design(raw_design);
  if (df_status s = df_design_write(design.get(), out.c_str()); s != DF_OK) return fail(s);

  // Certify what actually landed on disk.
  df_certificate* raw_cert = nullptr;
  if (df_status s = df_certificate_read(out.c_str(), &raw_cert); s != DF_OK) return fail(s);
  CertificatePtr cert(raw_cert);
  df_report* raw_report = nullptr;
  const df_status s = df_certify(cert.get(), 0, &raw_report);
  ReportPtr report(raw_report);
  if (s != DF_OK && s != DF_VERIFICATION_FAILED) return fail(s);
  std::cout << df_report_text(report.get());
  if (s != DF_OK) {
    std::cerr << "error: constructed certificate failed verification\n";
    return kExitVerification;
  }
  std::cout << "wrote " << out << " (" << df_design_block_count(design.get()) << " blocks)\n";
  return kExitOk;
}

int run_verify(const std::string& path, bool raw) {
  df_certificate* raw_cert = nullptr;
  if (df_status s = df_certificate_read(path.c_str(), &raw_cert); s != DF_OK) {
    return fail(s, true);
  }
  CertificatePtr cert(raw_cert);
  df_report* raw_report = nullptr;
  const df_status s = df_certify(cert.get(), raw ? 1 : 0, &raw_report);
  if (s != DF_OK && s != DF_VERIFICATION_FAILED) return fail(s);
  ReportPtr report(raw_report);
  std::cout << df_report_text(report.get());
  return s == DF_OK ? kExitOk : kExitVerification;
}

int run_gdd(const std::string& type, const std::string& out, const StoreFlags& store) {
  OptionsPtr options;
  if (df_status s = store.make(options); s != DF_OK) return fail(s);
  df_gdd* raw = nullptr;
  if (df_status s = df_gdd_build(type.c_str(), options.get(), &raw); s != DF_OK) return fail(s);
  GddPtr gdd(raw);
  if (df_status s = df_gdd_write(gdd.get(), out.c_str()); s != DF_OK) return fail(s);
  std::cout << "4-GDD of type " << type << ": " << df_gdd_point_count(gdd.get()) << " points, "
            << df_gdd_block_count(gdd.get()) << " blocks, verified\n"
            << "route: " << df_gdd_provenance(gdd.get()) << '\n'
            << "wrote " << out << '\n';
  return kExitOk;
}

int print_text(df_status (*producer)(char**)) {
  char* text = nullptr;
  const df_status s = producer(&text);
  if (text) {
    std::cout << text;
    df_string_free(text);
  }
  if (s == DF_OK) return kExitOk;
  return fail(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify Shrikhande-graph and L(K_{4,4}) designs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", df_version());

  std::string graph;
  std::uint64_t order = 0;
  std::string out;
  StoreFlags store;
  auto* construct = app.add_subcommand("construct", "Build, write and certify a design");
  construct->add_option("--graph", graph, "shrikhande or lk44")->required();
  construct->add_option("--order", order, "Design order n")->required();
  construct->add_option("--out", out, "Certificate path")->required();
  store.attach(construct);

  std::string cert_path;
  bool raw = false;
  auto* verify = app.add_subcommand("verify", "Certify a design certificate");
  verify->add_option("path", cert_path, "Certificate path")->required();
  verify->add_flag("--raw", raw, "Check each block as an explicit edge set up to isomorphism");

  std::string type;
  std::string gdd_out;
  StoreFlags gdd_store;
  auto* gdd = app.add_subcommand("gdd", "Build and verify a 4-GDD");
  gdd->add_option("--type", type, "Type g^u, e.g. 24^5")->required();
  gdd->add_option("--out", gdd_out, "Output path")->required();
  gdd_store.attach(gdd);

  auto* catalog = app.add_subcommand("catalog", "Print base blocks and target edge lists");
  auto* selftest = app.add_subcommand("selftest", "Run oracle-equivalence and structure checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (*construct) return run_construct(graph, order, out, store);
  if (*verify) return run_verify(cert_path, raw);
  if (*gdd) return run_gdd(type, gdd_out, gdd_store);
  if (*catalog) return print_text(df_catalog_text);
  if (*selftest) return print_text(df_selftest);
  return kExitUsage;
}
