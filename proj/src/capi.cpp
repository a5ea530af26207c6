#include "designforge.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "assemble.hpp"
#include "certify.hpp"
#include "error.hpp"
#include "gdd.hpp"
#include "selftest.hpp"

using namespace designforge;

struct df_options {
  std::optional<IngredientStore> store;
  GddProviderOptions provider;
};

struct df_design {
  Design design;
};

struct df_certificate {
  Certificate certificate;
};

struct df_report {
  CertReport report;
  std::string text;
};

struct df_gdd {
  Gdd gdd;
};

namespace {

thread_local std::string last_error;

df_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::precondition:
      return DF_ERR_NOT_ADMISSIBLE;
    case ErrorKind::ingredient_unavailable:
      return DF_ERR_INGREDIENT_UNAVAILABLE;
    case ErrorKind::parse:
      return DF_ERR_PARSE;
    case ErrorKind::io:
      return DF_ERR_IO;
    default:
      return DF_ERR_INVALID_ARGUMENT;
  }
}

template <typename F>
df_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    last_error = e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DF_ERR_INTERNAL;
  }
}

df_status null_argument(const char* name) {
  last_error = std::string("null argument: ") + name;
  return DF_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

df_report* make_report(CertReport report) {
  auto* r = new df_report{std::move(report), {}};
  r->text = r->report.to_text();
  return r;
}

GddProviderOptions provider_for(const df_options* options) {
  if (!options) return GddProviderOptions{};
  GddProviderOptions p = options->provider;
  p.store = options->store ? &*options->store : nullptr;
  return p;
}

}  // namespace

extern "C" {

const char* df_version(void) { return "1.0.0"; }

const char* df_status_name(df_status status) {
  switch (status) {
    case DF_OK:
      return "ok";
    case DF_VERIFICATION_FAILED:
      return "verification failed";
    case DF_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case DF_ERR_NOT_ADMISSIBLE:
      return "order not admissible";
    case DF_ERR_INGREDIENT_UNAVAILABLE:
      return "ingredient unavailable";
    case DF_ERR_PARSE:
      return "parse error";
    case DF_ERR_IO:
      return "i/o error";
    case DF_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* df_last_error(void) { return last_error.c_str(); }

df_status df_graph_from_name(const char* name, df_graph* out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  const auto id = parse_target_name(name);
  if (!id) {
    last_error = std::string("unknown graph `") + name + "`, expected shrikhande or lk44";
    return DF_ERR_INVALID_ARGUMENT;
  }
  *out = *id == TargetId::shrikhande ? DF_GRAPH_SHRIKHANDE : DF_GRAPH_LK44;
  return DF_OK;
}

int df_admissible(uint64_t n) {
  if (n == 0 || n > static_cast<uint64_t>(INT64_MAX)) return 0;
  return admissible(static_cast<long long>(n)) ? 1 : 0;
}

df_status df_options_create(df_options** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new df_options{};
    return DF_OK;
  });
}

df_status df_options_set_ingredient_dir(df_options* options, const char* dir) {
  if (!options) return null_argument("options");
  if (!dir) return null_argument("dir");
  return guarded([&] {
    options->store = IngredientStore::load(dir);
    return DF_OK;
  });
}

df_status df_options_set_search(df_options* options, int enabled) {
  if (!options) return null_argument("options");
  options->provider.allow_search = enabled != 0;
  return DF_OK;
}

df_status df_options_set_search_limits(df_options* options, uint64_t node_budget, uint64_t seed) {
  if (!options) return null_argument("options");
  options->provider.search.node_budget = node_budget;
  options->provider.search.seed = seed;
  return DF_OK;
}

void df_options_free(df_options* options) { delete options; }

df_status df_construct(df_graph graph, uint64_t order, const df_options* options,
                       df_design** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (graph != DF_GRAPH_SHRIKHANDE && graph != DF_GRAPH_LK44) {
    last_error = "unknown graph id";
    return DF_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    if (order == 0 || order > static_cast<uint64_t>(INT64_MAX) ||
        !admissible(static_cast<long long>(order))) {
      last_error = "order " + std::to_string(order) +
                   " is not admissible: a design exists iff n ≡ 1 (mod 96) or n = 1";
      return DF_ERR_NOT_ADMISSIBLE;
    }
    const TargetId id = graph == DF_GRAPH_SHRIKHANDE ? TargetId::shrikhande : TargetId::line_k44;
    *out = new df_design{
        construct_design(id, static_cast<long long>(order), provider_for(options))};
    return DF_OK;
  });
}

uint64_t df_design_order(const df_design* design) {
  return design ? static_cast<uint64_t>(design->design.order) : 0;
}

size_t df_design_block_count(const df_design* design) {
  return design ? design->design.blocks.size() : 0;
}

df_status df_design_block(const df_design* design, size_t index, int32_t labels[16]) {
  if (!design) return null_argument("design");
  if (!labels) return null_argument("labels");
  if (index >= design->design.blocks.size()) {
    last_error = "block index out of range";
    return DF_ERR_INVALID_ARGUMENT;
  }
  const auto& b = design->design.blocks[index];
  for (int i = 0; i < kBlockSize; ++i) labels[i] = b.labels[i];
  return DF_OK;
}

df_status df_design_write(const df_design* design, const char* path) {
  if (!design) return null_argument("design");
  if (!path) return null_argument("path");
  return guarded([&] {
    write_certificate(to_certificate(design->design), path);
    return DF_OK;
  });
}

df_status df_design_certify(const df_design* design, df_report** out) {
  if (!design) return null_argument("design");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = make_report(certify(to_certificate(design->design)));
    return (*out)->report.pass ? DF_OK : DF_VERIFICATION_FAILED;
  });
}

void df_design_free(df_design* design) { delete design; }

df_status df_certificate_read(const char* path, df_certificate** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new df_certificate{read_certificate(path)};
    return DF_OK;
  });
}

df_status df_certificate_parse(const char* text, df_certificate** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    std::istringstream in{std::string(text)};
    *out = new df_certificate{parse_certificate(in)};
    return DF_OK;
  });
}

df_status df_certify(const df_certificate* certificate, int raw, df_report** out) {
  if (!certificate) return null_argument("certificate");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const Certificate& c = certificate->certificate;
    CertReport report;
    if (raw && c.mode == CertMode::four_partite) {
      last_error = "raw-edge certification applies to complete designs only";
      return DF_ERR_INVALID_ARGUMENT;
    }
    if (raw && c.mode == CertMode::complete) {
      Certificate as_raw = to_raw_certificate(c);
      as_raw.declared_count = c.declared_count;
      report = certify(as_raw);
    } else {
      report = certify(c);
    }
    *out = make_report(std::move(report));
    return (*out)->report.pass ? DF_OK : DF_VERIFICATION_FAILED;
  });
}

void df_certificate_free(df_certificate* certificate) { delete certificate; }

int df_report_passed(const df_report* report) { return report && report->report.pass ? 1 : 0; }

size_t df_report_blocks_expected(const df_report* report) {
  return report ? report->report.count_expected : 0;
}

size_t df_report_blocks_actual(const df_report* report) {
  return report ? report->report.count_actual : 0;
}

size_t df_report_pair_errors(const df_report* report) {
  return report ? report->report.pair_coverage_errors.size() : 0;
}

const char* df_report_text(const df_report* report) { return report ? report->text.c_str() : ""; }

void df_report_free(df_report* report) { delete report; }

df_status df_gdd_build(const char* type, const df_options* options, df_gdd** out) {
  if (!type) return null_argument("type");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const GddType parsed = GddType::parse(type);
    if (!parsed.is_uniform()) {
      last_error = "only uniform types g^u are supported";
      return DF_ERR_INVALID_ARGUMENT;
    }
    const auto [g, u] = parsed.parts.front();
    if (g == 24) {
      *out = new df_gdd{gdd_24_t(u, provider_for(options))};
      return DF_OK;
    }
    const auto provider = provider_for(options);
    if (provider.store) {
      if (const Gdd* stored = provider.store->find(parsed, 4)) {
        *out = new df_gdd{*stored};
        return DF_OK;
      }
    }
    if (!provider.allow_search) {
      last_error = "no stored 4-GDD of type " + parsed.to_string() + " and search is disabled";
      return DF_ERR_INGREDIENT_UNAVAILABLE;
    }
    auto result = regenerate_ingredient(parsed, provider.search);
    if (!result.gdd) {
      last_error = "no 4-GDD of type " + parsed.to_string() + ": " +
                   (result.outcome == SearchOutcome::proven_nonexistent
                        ? "exhaustive search proves none exists"
                        : "not found within the search budget") +
                   " (" + std::to_string(result.nodes) + " nodes)";
      return DF_ERR_INGREDIENT_UNAVAILABLE;
    }
    *out = new df_gdd{std::move(*result.gdd)};
    return DF_OK;
  });
}

size_t df_gdd_block_count(const df_gdd* gdd) { return gdd ? gdd->gdd.blocks.size() : 0; }

size_t df_gdd_point_count(const df_gdd* gdd) {
  return gdd ? static_cast<size_t>(gdd->gdd.point_count()) : 0;
}

const char* df_gdd_provenance(const df_gdd* gdd) { return gdd ? gdd->gdd.provenance.c_str() : ""; }

df_status df_gdd_write(const df_gdd* gdd, const char* path) {
  if (!gdd) return null_argument("gdd");
  if (!path) return null_argument("path");
  return guarded([&] {
    write_gdd_file(gdd->gdd, path);
    return DF_OK;
  });
}

void df_gdd_free(df_gdd* gdd) { delete gdd; }

df_status df_catalog_text(char** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(catalog_text());
    return DF_OK;
  });
}

df_status df_selftest(char** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto result = run_selftest();
    *out = copy_string(result.log);
    return result.pass ? DF_OK : DF_VERIFICATION_FAILED;
  });
}

void df_string_free(char* text) { delete[] text; }

}  // extern "C"
