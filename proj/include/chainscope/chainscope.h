/* C interface to the chainscope library. All strings are UTF-8 and
 * NUL-terminated. Strings returned through out-parameters are owned by the
 * caller and released with cs_string_free. */
#ifndef CHAINSCOPE_H
#define CHAINSCOPE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CHAINSCOPE_BUILDING)
#    define CS_API __declspec(dllexport)
#  else
#    define CS_API __declspec(dllimport)
#  endif
#else
#  define CS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
  CS_OK = 0,
  CS_ERR_ARGUMENT = 1,     /* invalid argument or configuration */
  CS_ERR_PRECONDITION = 2, /* documented precondition violated */
  CS_ERR_DOMAIN = 3,       /* state outside the map's domain */
  CS_ERR_INTERNAL = 4
} cs_status;

typedef struct cs_system cs_system;
typedef struct cs_gap_matrix cs_gap_matrix;

/* Library version, e.g. "0.1.0". Static storage. */
CS_API const char* cs_version(void);

/* Message for the most recent failing call on this thread, or "". */
CS_API const char* cs_last_error(void);

CS_API void cs_string_free(char* s);

/* config_json: {"system": ..., "grid_n": ..., "required_points": [...],
 * "cycle_n": ..., "truncation_k": ...}; missing fields take defaults. */
CS_API cs_status cs_system_create(const char* config_json, cs_system** out);
CS_API void cs_system_destroy(cs_system* system);
CS_API size_t cs_system_sample_count(const cs_system* system);
/* Writes the label of sample i into a new string. */
CS_API cs_status cs_system_sample_label(const cs_system* system, size_t i, char** out);
/* Index of the sample named by token ("0.25", "1inf", "#3", ...). */
CS_API cs_status cs_system_resolve(const cs_system* system, const char* token, size_t* out);

CS_API cs_status cs_gap_matrix_build(const cs_system* system, unsigned threads, cs_gap_matrix** out);
/* Wraps a caller-provided row-major n x n matrix (copied). */
CS_API cs_status cs_gap_matrix_from_entries(size_t n, const double* entries, cs_gap_matrix** out);
CS_API void cs_gap_matrix_destroy(cs_gap_matrix* g);
CS_API size_t cs_gap_matrix_size(const cs_gap_matrix* g);
CS_API double cs_gap_matrix_entry(const cs_gap_matrix* g, size_t a, size_t b);
CS_API double cs_gap_matrix_resolution(const cs_gap_matrix* g);

/* *reaches is set to 1 when an eps-chain from x to y exists. When witness is
 * non-null and a chain exists, the shortest witness is written there, up to
 * capacity points; *witness_len receives its full length. */
CS_API cs_status cs_chain_reaches(const cs_gap_matrix* g, double eps, size_t x, size_t y, int* reaches,
                                  size_t* witness, size_t capacity, size_t* witness_len);

/* Writes up to capacity indices of the chain-recurrent set; *count receives the full size. */
CS_API cs_status cs_chain_recurrent_set(const cs_gap_matrix* g, double eps, size_t* out, size_t capacity,
                                        size_t* count);

/* Runs one analysis from a JSON config. Returns the process exit code
 * (0 ok, 1 golden-case failure, 2 validation error, 3 undecided). report, dot
 * and diagnostic may be null; otherwise they receive new strings. */
CS_API int cs_run(const char* config_json, char** report, char** dot, char** diagnostic);

/* only: comma-separated case-name prefixes, or null for all cases. */
CS_API int cs_run_paper_suite(const char* only, double sigma1_metric_scale, char** report, char** diagnostic);

#ifdef __cplusplus
}
#endif

#endif /* CHAINSCOPE_H */
