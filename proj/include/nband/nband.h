/* C interface to the nband library. All handles are opaque; every call that
 * can fail returns an nband_status and leaves a message for
 * nband_last_error() on the calling thread. */
#ifndef NBAND_NBAND_H
#define NBAND_NBAND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef NBAND_BUILDING_LIBRARY
#    define NBAND_API __declspec(dllexport)
#  else
#    define NBAND_API __declspec(dllimport)
#  endif
#else
#  define NBAND_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nband_status {
  NBAND_OK = 0,
  NBAND_FALSE = 1,      /* well-formed input, property does not hold */
  NBAND_E_INPUT = 2,    /* malformed input or bad argument */
  NBAND_E_DOMAIN = 3,   /* input is not a symmetric n-ary band / invalid system */
  NBAND_E_RESOURCE = 4, /* budget exceeded or out of memory */
  NBAND_E_INTERNAL = 5
} nband_status;

typedef struct nband_table nband_table;
typedef struct nband_system nband_system;

/* Return nonzero to stop the stream early. The table is only valid during
 * the call. */
typedef int (*nband_table_callback)(const nband_table* table, void* user);

NBAND_API const char* nband_version(void);
NBAND_API const char* nband_last_error(void);
NBAND_API const char* nband_status_name(nband_status status);

/* Worker threads for exhaustive scans; 0 uses the hardware concurrency.
 * Results never depend on this setting. */
NBAND_API void nband_set_threads(unsigned threads);
/* When zero, operations skip re-checking the axioms of their inputs. */
NBAND_API void nband_set_verify(int verify);

NBAND_API void nband_string_free(char* s);

/* Tables */
NBAND_API nband_status nband_table_from_json(const char* text, nband_table** out);
NBAND_API nband_status nband_table_to_json(const nband_table* t, char** out);
/* Labels "0".."size-1". */
NBAND_API nband_status nband_table_create(unsigned arity, unsigned size, const uint32_t* values,
                                          nband_table** out);
NBAND_API void nband_table_free(nband_table* t);
NBAND_API unsigned nband_table_arity(const nband_table* t);
NBAND_API unsigned nband_table_size(const nband_table* t);
NBAND_API const char* nband_table_label(const nband_table* t, uint32_t element);
NBAND_API nband_status nband_table_values(const nband_table* t, const uint32_t** values,
                                          uint64_t* count);
NBAND_API nband_status nband_table_eval(const nband_table* t, const uint32_t* tuple, size_t len,
                                        uint32_t* out);

/* NBAND_OK when all three axioms hold, NBAND_FALSE otherwise. */
NBAND_API nband_status nband_check(const nband_table* t);
/* Same status as nband_check; *report is JSON when json is nonzero and a
 * labeled text report otherwise. */
NBAND_API nband_status nband_analyze(const nband_table* t, int json, char** report);

/* extend(binary, arity - 1). */
NBAND_API nband_status nband_extend(const nband_table* binary, unsigned arity, nband_table** out);
NBAND_API nband_status nband_canonical_form(const nband_table* t, nband_table** out);
/* NBAND_OK when isomorphic, NBAND_FALSE otherwise. */
NBAND_API nband_status nband_isomorphic(const nband_table* a, const nband_table* b);

/* Strong systems */
NBAND_API nband_status nband_decompose(const nband_table* t, nband_system** out);
NBAND_API nband_status nband_system_from_json(const char* text, nband_system** out);
NBAND_API nband_status nband_system_to_json(const nband_system* s, char** out);
NBAND_API void nband_system_free(nband_system* s);
/* arity 0 uses the arity recorded in the system. */
NBAND_API nband_status nband_compose(const nband_system* s, unsigned arity, nband_table** out);
/* Collects every violation; NBAND_OK when there are none. */
NBAND_API nband_status nband_validate(const nband_system* s, unsigned arity, char** summary);

/* Reducibility. NBAND_OK when reducible, NBAND_FALSE otherwise; *result is
 * the JSON document in both cases and *reduction (optional) receives the
 * binary table when reducible. */
NBAND_API nband_status nband_reduce(const nband_table* t, char** result, nband_table** reduction);
/* NBAND_OK when extend(g, n-1) = f and g is associative, symmetric and
 * surjective; *failures (optional) lists what failed, one per line. */
NBAND_API nband_status nband_verify_reduction(const nband_table* f, const nband_table* g,
                                              char** failures);

/* Enumeration. Streams tables in sorted order, then reports the counts. */
NBAND_API nband_status nband_enumerate(unsigned size, unsigned arity, int up_to_iso,
                                       nband_table_callback cb, void* user, uint64_t* labeled,
                                       uint64_t* iso);
NBAND_API nband_status nband_brute_force_bands(unsigned size, unsigned arity,
                                               nband_table_callback cb, void* user,
                                               uint64_t* labeled, uint64_t* iso);
/* Every binary G with extend(G, n-1) = F; general != 0 also tries
 * non-symmetric G. */
NBAND_API nband_status nband_brute_force_reductions(const nband_table* t, int general,
                                                    nband_table_callback cb, void* user,
                                                    uint64_t* count);

#ifdef __cplusplus
}
#endif

#endif
