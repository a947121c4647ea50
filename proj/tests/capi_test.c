/* Exercises the C interface from C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "nband/nband.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static char* read_file(const char* dir, const char* name) {
  char path[1024];
  snprintf(path, sizeof path, "%s/%s", dir, name);
  FILE* f = fopen(path, "rb");
  if (!f) return NULL;
  fseek(f, 0, SEEK_END);
  long n = ftell(f);
  fseek(f, 0, SEEK_SET);
  char* buf = malloc((size_t)n + 1);
  size_t got = fread(buf, 1, (size_t)n, f);
  buf[got] = '\0';
  fclose(f);
  return buf;
}

static nband_table* load(const char* dir, const char* name) {
  char* text = read_file(dir, name);
  nband_table* t = NULL;
  if (!text || nband_table_from_json(text, &t) != NBAND_OK) {
    fprintf(stderr, "cannot load %s: %s\n", name, nband_last_error());
    exit(1);
  }
  free(text);
  return t;
}

static int count_tables(const nband_table* t, void* user) {
  (void)t;
  ++*(int*)user;
  return 0;
}

static int stop_after_one(const nband_table* t, void* user) {
  (void)t;
  ++*(int*)user;
  return 1;
}

int main(int argc, char** argv) {
  if (argc < 2) {
    fprintf(stderr, "usage: capi_test FIXTURE_DIR\n");
    return 2;
  }
  const char* dir = argv[1];
  EXPECT(strlen(nband_version()) > 0);

  nband_table* f1 = load(dir, "f1.json");
  nband_table* f2 = load(dir, "f2.json");
  nband_table* maj = load(dir, "majority.json");
  EXPECT(nband_table_arity(f1) == 3);
  EXPECT(nband_table_size(f1) == 4);
  EXPECT(strcmp(nband_table_label(f1, 3), "4") == 0);
  EXPECT(nband_table_label(f1, 4) == NULL);

  const uint32_t* values = NULL;
  uint64_t count = 0;
  EXPECT(nband_table_values(f1, &values, &count) == NBAND_OK);
  EXPECT(count == 64 && values[0] == 0 && values[1] == 2);

  uint32_t tuple[3] = {0, 0, 1}, out = 99;
  EXPECT(nband_table_eval(f1, tuple, 3, &out) == NBAND_OK && out == 2);
  EXPECT(nband_table_eval(f1, tuple, 2, &out) == NBAND_E_INPUT);
  EXPECT(strlen(nband_last_error()) > 0);

  EXPECT(nband_check(f1) == NBAND_OK);
  EXPECT(nband_check(maj) == NBAND_FALSE);

  char* report = NULL;
  EXPECT(nband_analyze(maj, 1, &report) == NBAND_FALSE);
  EXPECT(report && strstr(report, "[0,0,1,1,1]") != NULL);
  nband_string_free(report);

  /* Malformed input */
  nband_table* bad = NULL;
  char* malformed = read_file(dir, "malformed.json");
  EXPECT(nband_table_from_json(malformed, &bad) == NBAND_E_INPUT && bad == NULL);
  free(malformed);
  EXPECT(nband_table_from_json("not json", &bad) == NBAND_E_INPUT);
  EXPECT(nband_table_from_json(NULL, &bad) == NBAND_E_INPUT);

  /* Round trips */
  char* json = NULL;
  char* original = read_file(dir, "f1.json");
  EXPECT(nband_table_to_json(f1, &json) == NBAND_OK);
  EXPECT(strncmp(json, original, strlen(json)) == 0);
  nband_string_free(json);
  free(original);

  nband_system* sys = NULL;
  EXPECT(nband_decompose(f1, &sys) == NBAND_OK);
  EXPECT(nband_system_to_json(sys, &json) == NBAND_OK);
  nband_system* sys2 = NULL;
  EXPECT(nband_system_from_json(json, &sys2) == NBAND_OK);
  nband_string_free(json);
  nband_table* back = NULL;
  EXPECT(nband_compose(sys2, 0, &back) == NBAND_OK);
  EXPECT(nband_isomorphic(back, f1) == NBAND_OK);
  const uint32_t* a = NULL;
  const uint32_t* b = NULL;
  nband_table_values(back, &a, NULL);
  nband_table_values(f1, &b, NULL);
  EXPECT(memcmp(a, b, 64 * sizeof(uint32_t)) == 0);
  EXPECT(nband_validate(sys2, 3, NULL) == NBAND_OK);
  nband_table_free(back);
  nband_system_free(sys2);
  nband_system_free(sys);

  nband_system* none = NULL;
  EXPECT(nband_decompose(maj, &none) == NBAND_E_DOMAIN && none == NULL);

  /* Reducibility */
  char* result = NULL;
  nband_table* g = NULL;
  EXPECT(nband_reduce(f1, &result, &g) == NBAND_FALSE && g == NULL);
  EXPECT(strstr(result, "\"images\":[2,3]") != NULL);
  nband_string_free(result);
  EXPECT(nband_reduce(f2, &result, &g) == NBAND_OK && g != NULL);
  EXPECT(strstr(result, "\"selection\":{\"0\":0,\"1\":1,\"2\":3}") != NULL);
  nband_string_free(result);
  EXPECT(nband_verify_reduction(f2, g, NULL) == NBAND_OK);
  char* why = NULL;
  EXPECT(nband_verify_reduction(f1, g, &why) == NBAND_FALSE);
  EXPECT(why && strlen(why) > 0);
  nband_string_free(why);

  nband_table* ext = NULL;
  EXPECT(nband_extend(g, 3, &ext) == NBAND_OK);
  nband_table_values(ext, &a, NULL);
  nband_table_values(f2, &b, NULL);
  EXPECT(memcmp(a, b, 64 * sizeof(uint32_t)) == 0);
  nband_table_free(ext);
  ext = NULL;
  EXPECT(nband_extend(f2, 3, &ext) == NBAND_E_INPUT && ext == NULL);
  nband_table_free(g);

  int seen = 0;
  EXPECT(nband_brute_force_reductions(f2, 0, count_tables, &seen, &count) == NBAND_OK);
  EXPECT(seen == 1 && count == 1);
  EXPECT(nband_brute_force_reductions(f2, 1, NULL, NULL, &count) == NBAND_E_RESOURCE);

  /* Enumeration */
  uint64_t labeled = 0, iso = 0;
  seen = 0;
  EXPECT(nband_enumerate(2, 3, 0, count_tables, &seen, &labeled, &iso) == NBAND_OK);
  EXPECT(seen == 3 && labeled == 3 && iso == 2);
  seen = 0;
  EXPECT(nband_enumerate(3, 3, 0, stop_after_one, &seen, &labeled, &iso) == NBAND_OK);
  EXPECT(seen == 1 && labeled == 18);
  nband_set_threads(3);
  EXPECT(nband_brute_force_bands(3, 3, NULL, NULL, &labeled, &iso) == NBAND_OK);
  EXPECT(labeled == 18 && iso == 4);
  nband_set_threads(0);
  EXPECT(nband_enumerate(40, 3, 0, NULL, NULL, &labeled, &iso) == NBAND_E_RESOURCE);

  /* Construction from raw values */
  uint32_t xor_values[4] = {0, 1, 1, 0};
  nband_table* x = NULL;
  EXPECT(nband_table_create(2, 2, xor_values, &x) == NBAND_OK);
  EXPECT(nband_extend(x, 3, &ext) == NBAND_OK);
  EXPECT(nband_check(ext) == NBAND_OK);
  nband_table* canon = NULL;
  EXPECT(nband_canonical_form(ext, &canon) == NBAND_OK);
  EXPECT(nband_isomorphic(canon, ext) == NBAND_OK);
  EXPECT(nband_isomorphic(canon, f1) == NBAND_FALSE);
  nband_table_free(canon);
  nband_table_free(ext);
  nband_table_free(x);

  EXPECT(strcmp(nband_status_name(NBAND_E_DOMAIN), "domain error") == 0);

  nband_table_free(f1);
  nband_table_free(f2);
  nband_table_free(maj);
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("capi_test: all checks passed\n");
  return 0;
}
