/*
 * designforge: construction and certification of Shrikhande-graph and
 * L(K_{4,4}) designs.
 *
 * Plain C interface over the C++ core. Every object is an opaque handle
 * released with its matching *_free function. Calls return a df_status;
 * on failure df_last_error() holds a message for the calling thread.
 */
#ifndef DESIGNFORGE_H
#define DESIGNFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DESIGNFORGE_BUILDING)
#    define DF_API __declspec(dllexport)
#  else
#    define DF_API __declspec(dllimport)
#  endif
#else
#  define DF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum df_status {
  DF_OK = 0,
  DF_VERIFICATION_FAILED = 1,
  DF_ERR_INVALID_ARGUMENT = 2,
  DF_ERR_NOT_ADMISSIBLE = 3,
  DF_ERR_INGREDIENT_UNAVAILABLE = 4,
  DF_ERR_PARSE = 5,
  DF_ERR_IO = 6,
  DF_ERR_INTERNAL = 7
} df_status;

typedef enum df_graph {
  DF_GRAPH_SHRIKHANDE = 0,
  DF_GRAPH_LK44 = 1
} df_graph;

typedef struct df_options df_options;
typedef struct df_design df_design;
typedef struct df_certificate df_certificate;
typedef struct df_report df_report;
typedef struct df_gdd df_gdd;

DF_API const char* df_version(void);
DF_API const char* df_status_name(df_status status);
/* Message describing the last failing call on this thread ("" if none). */
DF_API const char* df_last_error(void);

/* "shrikhande" or "lk44". */
DF_API df_status df_graph_from_name(const char* name, df_graph* out);

/* 1 iff n = 1 or n = 1 (mod 96). */
DF_API int df_admissible(uint64_t n);

/* Construction options. A NULL options pointer means: no ingredient store,
 * exact-cover regeneration of small ingredients enabled. */
DF_API df_status df_options_create(df_options** out);
/* Loads and verifies every *.gdd file in dir. */
DF_API df_status df_options_set_ingredient_dir(df_options* options, const char* dir);
DF_API df_status df_options_set_search(df_options* options, int enabled);
DF_API df_status df_options_set_search_limits(df_options* options, uint64_t node_budget,
                                              uint64_t seed);
DF_API void df_options_free(df_options* options);

/* Builds and self-certifies a design of the given order. */
DF_API df_status df_construct(df_graph graph, uint64_t order, const df_options* options,
                              df_design** out);
DF_API uint64_t df_design_order(const df_design* design);
DF_API size_t df_design_block_count(const df_design* design);
DF_API df_status df_design_block(const df_design* design, size_t index, int32_t labels[16]);
DF_API df_status df_design_write(const df_design* design, const char* path);
DF_API df_status df_design_certify(const df_design* design, df_report** out);
DF_API void df_design_free(df_design* design);

DF_API df_status df_certificate_read(const char* path, df_certificate** out);
DF_API df_status df_certificate_parse(const char* text, df_certificate** out);
/* raw != 0 routes tuple certificates through the edge-set and isomorphism
 * check instead of the tuple check. */
DF_API df_status df_certify(const df_certificate* certificate, int raw, df_report** out);
DF_API void df_certificate_free(df_certificate* certificate);

DF_API int df_report_passed(const df_report* report);
DF_API size_t df_report_blocks_expected(const df_report* report);
DF_API size_t df_report_blocks_actual(const df_report* report);
DF_API size_t df_report_pair_errors(const df_report* report);
/* Owned by the report. */
DF_API const char* df_report_text(const df_report* report);
DF_API void df_report_free(df_report* report);

/* type is "g^u". 24^t (t >= 4) uses the recursive construction; other
 * types come from the ingredient store, else from exact-cover search
 * (plain up to 40 points, or cyclic) with k = 4. */
DF_API df_status df_gdd_build(const char* type, const df_options* options, df_gdd** out);
DF_API size_t df_gdd_block_count(const df_gdd* gdd);
DF_API size_t df_gdd_point_count(const df_gdd* gdd);
DF_API const char* df_gdd_provenance(const df_gdd* gdd);
DF_API df_status df_gdd_write(const df_gdd* gdd, const char* path);
DF_API void df_gdd_free(df_gdd* gdd);

/* Base blocks, K_{4,4,4,4} tuples and target edge lists as text. */
DF_API df_status df_catalog_text(char** out);
/* Oracle-equivalence, strong-regularity and admissibility checks.
 * DF_OK when all pass, DF_VERIFICATION_FAILED otherwise; *out gets a log. */
DF_API df_status df_selftest(char** out);
DF_API void df_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* DESIGNFORGE_H */
