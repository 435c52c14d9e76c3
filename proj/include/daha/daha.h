#ifndef DAHA_DAHA_H
#define DAHA_DAHA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum daha_status {
  DAHA_OK = 0,
  DAHA_ERR_CONTEXT_MISMATCH = 1,
  DAHA_ERR_SYNTAX = 2,
  DAHA_ERR_NOT_DIVISIBLE = 3,
  DAHA_ERR_NOT_POLYNOMIAL_PRESERVING = 4,
  DAHA_ERR_INVALID_INDEX = 5,
  DAHA_ERR_NON_MINUSCULE = 6,
  DAHA_ERR_ASYMMETRIC_INPUT = 7,
  DAHA_ERR_TAG_MISMATCH = 8,
  DAHA_ERR_NO_DICTIONARY = 9,
  DAHA_ERR_UNSUPPORTED_ROOT_DATA = 10,
  DAHA_ERR_WINDOW_TOO_LARGE = 11,
  DAHA_ERR_MEMBERSHIP_FAILURE = 12,
  DAHA_ERR_UNKNOWN_SUITE = 13,
  DAHA_ERR_INVALID_RANK = 14,
  DAHA_ERR_INVALID_ARGUMENT = 15,
  DAHA_ERR_NULL = 100,
  DAHA_ERR_INTERNAL = 101
} daha_status;

typedef struct daha_poly daha_poly;
typedef struct daha_report daha_report;
typedef struct daha_slice daha_slice;

typedef struct daha_config {
  const char* suite; /* suite name or "all" */
  int n;
  int d_max;
  int ydeg;
  int x_radius;
  uint64_t seed;
  double budget_ms; /* 0 = unlimited */
  int record_timing;
} daha_config;

const char* daha_status_name(int status);
/* Message of the last failed call on this thread. */
const char* daha_last_error(void);
/* Position (1-based) of the last syntax error on this thread, 0 if none. */
size_t daha_last_error_position(void);
void daha_string_free(char* s);

void daha_config_default(daha_config* cfg);
size_t daha_suite_count(void);
const char* daha_suite_name(size_t index);

int daha_poly_parse(const char* text, int n, daha_poly** out);
int daha_poly_to_string(const daha_poly* p, char** out);
int daha_poly_add(const daha_poly* a, const daha_poly* b, daha_poly** out);
int daha_poly_mul(const daha_poly* a, const daha_poly* b, daha_poly** out);
int daha_poly_equal(const daha_poly* a, const daha_poly* b, int* out);
void daha_poly_free(daha_poly* p);

/* roots: "A" (GL_n, uses n), "SL2", "PGL2", "C2", "G2". */
int daha_membership(const daha_poly* f, const char* roots, int d, int* member, char** witness);

int daha_graded_dimension(const char* roots, int n, int d, int isotypic, int use_isotypic, int xlo,
                          int xhi, int ydeg, daha_slice** out);
size_t daha_slice_dimension(const daha_slice* s);
int daha_slice_to_json(const daha_slice* s, char** out);
void daha_slice_free(daha_slice* s);

int daha_eval_word(const char* word, int n, char** out);

int daha_run_suite(const daha_config* cfg, daha_report** out);
int daha_report_serialize(const daha_report* r, char** out);
int daha_report_all_pass(const daha_report* r, int* out);
size_t daha_report_size(const daha_report* r);
/* status: 0 pass, 1 fail, 2 skipped. Strings are owned by the report. */
int daha_report_entry(const daha_report* r, size_t index, const char** label, int* status,
                      const char** witness);
void daha_report_free(daha_report* r);

#ifdef __cplusplus
}
#endif

#endif
