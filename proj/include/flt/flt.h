#ifndef FLT_FLT_H
#define FLT_FLT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FLT_API __declspec(dllexport)
#else
#define FLT_API __attribute__((visibility("default")))
#endif

/* Status codes. Every entry point returns one; on failure flt_last_error()
 * holds a message for the calling thread. */
typedef enum flt_status {
    FLT_OK = 0,
    FLT_ERR_INPUT = 1,        /* malformed or out-of-domain input */
    FLT_ERR_CAP = 2,          /* a documented computation cap was exceeded */
    FLT_ERR_VERIFICATION = 3, /* an internal exact check failed */
    FLT_ERR_INCONCLUSIVE = 4, /* effort budget exhausted without an answer */
    FLT_ERR_INTERNAL = 5
} flt_status;

typedef enum flt_mode { FLT_MODE_UNCONDITIONAL = 0, FLT_MODE_GRH = 1 } flt_mode;

typedef enum flt_format { FLT_FORMAT_JSON = 0, FLT_FORMAT_CSV = 1, FLT_FORMAT_MARKDOWN = 2 } flt_format;

/* Opaque handles. */
typedef struct flt_context flt_context;
typedef struct flt_field flt_field;

FLT_API const char* flt_version(void);
FLT_API int flt_schema_version(void);
/* Message of the last failing call on this thread; empty when none. */
FLT_API const char* flt_last_error(void);
/* Frees strings returned through char** out parameters. */
FLT_API void flt_string_free(char* s);

/* A context carries the thread cap and the cache. The cache starts at the
 * default location (FLT_CACHE_DIR, else the user cache directory). */
FLT_API flt_status flt_context_new(flt_context** out);
FLT_API void flt_context_free(flt_context* ctx);
/* 0 uses the hardware concurrency. */
FLT_API flt_status flt_context_set_threads(flt_context* ctx, unsigned threads);
/* NULL or "" disables caching. */
FLT_API flt_status flt_context_set_cache_dir(flt_context* ctx, const char* dir);
/* Cache warnings collected so far, one per line; owned by the context and
 * valid until the next call on it. */
FLT_API const char* flt_context_warnings(flt_context* ctx);

/* Number field Q[x]/(poly) with its maximal order. */
FLT_API flt_status flt_field_new(const char* poly, flt_field** out);
FLT_API void flt_field_free(flt_field* field);
FLT_API flt_status flt_field_degree(const flt_field* field, int* out);
/* Field discriminant in decimal. */
FLT_API flt_status flt_field_disc(const flt_field* field, char** out);

/* Reports. Each writes a JSON document {"schema", "command", "result"} to
 * *out_json (free with flt_string_free). Elements are polynomials in the
 * generator written with x; a NULL field means Q. Optional int outputs may
 * be NULL. */
FLT_API flt_status flt_field_info(const flt_field* field, char** out_json);
/* *verdict: 0 satisfied, 1 fails, 2 inconclusive. */
FLT_API flt_status flt_check(flt_context* ctx, const flt_field* field, flt_mode mode, char** out_json, int* verdict);
/* JSON, CSV or markdown. With diff_golden the JSON carries a golden_diff and
 * *golden_match reports the comparison (always 1 without diff_golden). */
FLT_API flt_status flt_table(flt_context* ctx, long max_disc, flt_format format, int diff_golden, char** out, int* golden_match);
FLT_API flt_status flt_cyclotomic(flt_context* ctx, int n, char** out_json);
FLT_API flt_status flt_pomey_identities(long p, char** out_json, int* all_hold);
FLT_API flt_status flt_pomey_represent(const flt_field* field, const char* d, int t, char** out_json, int* found);
/* screen: 1 screened, 0 unscreened, -1 decided by the assumption check. */
FLT_API flt_status flt_pomey_search(flt_context* ctx, const flt_field* field, long p, long height, int screen, char** out_json,
                                    size_t* counterexamples);
/* c may be NULL; then c^p is taken as -(a^p + b^p). */
FLT_API flt_status flt_frey(const flt_field* field, const char* a, const char* b, const char* c, long p, char** out_json,
                            int* invariants_hold);
FLT_API flt_status flt_steinberg(long f, char** out_json, int* excluded);
FLT_API flt_status flt_eigenvalue_bound(const char* minpoly, long f, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
