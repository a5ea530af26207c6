/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "designforge.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_basics(void) {
  df_graph g;
  EXPECT(strlen(df_version()) > 0);
  EXPECT(strcmp(df_status_name(DF_ERR_PARSE), "parse error") == 0);
  EXPECT(df_graph_from_name("lk44", &g) == DF_OK && g == DF_GRAPH_LK44);
  EXPECT(df_graph_from_name("petersen", &g) == DF_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(df_last_error()) > 0);
  EXPECT(df_admissible(97) == 1);
  EXPECT(df_admissible(98) == 0);
  EXPECT(df_admissible(1) == 1);
}

static void test_construct_and_certify(const char* dir) {
  df_design* d = NULL;
  df_report* r = NULL;
  df_certificate* c = NULL;
  int32_t labels[16];
  char path[4096];

  EXPECT(df_construct(DF_GRAPH_SHRIKHANDE, 97, NULL, &d) == DF_OK);
  EXPECT(df_design_order(d) == 97);
  EXPECT(df_design_block_count(d) == 97);
  EXPECT(df_design_block(d, 0, labels) == DF_OK);
  EXPECT(labels[0] == 0 && labels[1] == 4 && labels[15] == 44);
  EXPECT(df_design_block(d, 97, labels) == DF_ERR_INVALID_ARGUMENT);

  EXPECT(df_design_certify(d, &r) == DF_OK);
  EXPECT(df_report_passed(r) == 1);
  EXPECT(df_report_blocks_expected(r) == 97);
  df_report_free(r);

  snprintf(path, sizeof path, "%s/capi_97.cert", dir);
  EXPECT(df_design_write(d, path) == DF_OK);
  df_design_free(d);

  EXPECT(df_certificate_read(path, &c) == DF_OK);
  EXPECT(df_certify(c, 0, &r) == DF_OK);
  EXPECT(df_report_passed(r));
  df_report_free(r);
  EXPECT(df_certify(c, 1, &r) == DF_OK);
  EXPECT(df_report_passed(r));
  df_report_free(r);
  df_certificate_free(c);

  EXPECT(df_construct(DF_GRAPH_LK44, 98, NULL, &d) == DF_ERR_NOT_ADMISSIBLE);
  EXPECT(strstr(df_last_error(), "96") != NULL);
  EXPECT(df_certificate_read("/nonexistent/x.cert", &c) == DF_ERR_IO);
}

static void test_bad_certificates(void) {
  df_certificate* c = NULL;
  df_report* r = NULL;
  EXPECT(df_certificate_parse("design lk44 17 complete\nblocks 1\n1 2 3\n", &c) == DF_ERR_PARSE);
  EXPECT(strstr(df_last_error(), "line 3") != NULL);

  /* Parses, but the declared count is wrong and nothing covers the pairs. */
  EXPECT(df_certificate_parse("design lk44 17 complete\nblocks 1\n", &c) == DF_OK);
  EXPECT(df_certify(c, 0, &r) == DF_VERIFICATION_FAILED);
  EXPECT(df_report_passed(r) == 0);
  EXPECT(df_report_pair_errors(r) > 0);
  EXPECT(strlen(df_report_text(r)) > 0);
  df_report_free(r);
  df_certificate_free(c);
}

static void test_gdd(const char* dir) {
  df_options* o = NULL;
  df_gdd* g = NULL;
  char path[4096];

  EXPECT(df_options_create(&o) == DF_OK);
  EXPECT(df_options_set_search_limits(o, 1000000, 1) == DF_OK);
  EXPECT(df_gdd_build("3^5", o, &g) == DF_OK);
  EXPECT(df_gdd_block_count(g) == 15);
  EXPECT(df_gdd_point_count(g) == 15);
  EXPECT(strlen(df_gdd_provenance(g)) > 0);
  snprintf(path, sizeof path, "%s/capi_3_5.gdd", dir);
  EXPECT(df_gdd_write(g, path) == DF_OK);
  df_gdd_free(g);

  EXPECT(df_gdd_build("24^4", o, &g) == DF_OK);
  EXPECT(df_gdd_block_count(g) == 576);
  df_gdd_free(g);

  EXPECT(df_options_set_search(o, 0) == DF_OK);
  EXPECT(df_gdd_build("24^5", o, &g) == DF_ERR_INGREDIENT_UNAVAILABLE);
  EXPECT(df_options_set_ingredient_dir(o, "/nonexistent/store") == DF_ERR_IO);
  EXPECT(df_gdd_build("nonsense", o, &g) == DF_ERR_PARSE);
  df_options_free(o);
}

static void test_text(void) {
  char* text = NULL;
  EXPECT(df_catalog_text(&text) == DF_OK);
  EXPECT(strstr(text, "shrikhande 97 1 0 4 6 62") != NULL);
  df_string_free(text);
}

int main(int argc, char** argv) {
  const char* dir = argc > 1 ? argv[1] : ".";
  test_basics();
  test_construct_and_certify(dir);
  test_bad_certificates();
  test_gdd(dir);
  test_text();
  /* Null handles are tolerated by the free functions. */
  df_design_free(NULL);
  df_report_free(NULL);
  df_string_free(NULL);
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  puts("c api: all checks passed");
  return 0;
}
