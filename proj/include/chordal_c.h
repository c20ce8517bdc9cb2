/* C interface to the chordal clutter library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns a chd_status; on failure chd_last_error() describes the
 * problem (per thread). Strings returned through char** out-parameters are
 * heap allocated and must be released with chd_string_free. */
#ifndef CHORDAL_C_H
#define CHORDAL_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(CHD_BUILDING_LIBRARY)
#define CHD_API __attribute__((visibility("default")))
#else
#define CHD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chd_status {
  CHD_OK = 0,
  CHD_E_ANTICHAIN = 1,
  CHD_E_VERTEX_RANGE = 2,
  CHD_E_NOT_UNIFORM = 3,
  CHD_E_SIZE = 4,
  CHD_E_INVALID_STEP = 5,
  CHD_E_ZERO_IDEAL = 6,
  CHD_E_ZERO_TABLE = 7,
  CHD_E_TOO_MANY_GENERATORS = 8,
  CHD_E_DEGREE_MISMATCH = 9,
  CHD_E_NOT_SIMPLICIAL = 10,
  CHD_E_CIRCUIT_NOT_THROUGH_E = 11,
  CHD_E_PARSE = 12,
  CHD_E_INVALID_ARGUMENT = 13,
  CHD_E_NULL = 100,
  CHD_E_INTERNAL = 101
} chd_status;

typedef enum chd_outcome { CHD_NO = 0, CHD_YES = 1, CHD_UNKNOWN = 2 } chd_outcome;

typedef enum chd_strategy { CHD_GREEDY = 0, CHD_BACKTRACKING = 1 } chd_strategy;

typedef enum chd_variant { CHD_VARIANT_W = 0, CHD_VARIANT_VTV = 1, CHD_VARIANT_E = 2, CHD_VARIANT_RES_L = 3 } chd_variant;

typedef enum chd_engine { CHD_ENGINE_HOCHSTER = 0, CHD_ENGINE_TAYLOR = 1 } chd_engine;

typedef struct chd_clutter chd_clutter;
typedef struct chd_betti chd_betti;

CHD_API const char* chd_version(void);
CHD_API const char* chd_status_name(chd_status status);
/* Message of the last failed call on this thread; "" when none. */
CHD_API const char* chd_last_error(void);
/* Line and column of the last parse error on this thread (0 when unknown). */
CHD_API void chd_last_parse_position(int* line, int* column);
CHD_API void chd_string_free(char* s);

/* ---- clutters ---- */
CHD_API chd_status chd_clutter_parse(const char* text, chd_clutter** out);
CHD_API chd_status chd_clutter_read_file(const char* path, chd_clutter** out);
CHD_API chd_status chd_clutter_fixture(const char* name, chd_clutter** out);
CHD_API chd_status chd_clutter_complete(int n, int d, chd_clutter** out);
CHD_API chd_status chd_clutter_random(int n, int d, double density, uint64_t seed, chd_clutter** out);
/* Builds a generalized chordal clutter from a JSON build script. */
CHD_API chd_status chd_clutter_from_script(const char* script_json, chd_clutter** out);
CHD_API void chd_clutter_free(chd_clutter* c);

CHD_API int chd_clutter_n(const chd_clutter* c);
/* -1 when the clutter carries no uniformity degree. */
CHD_API int chd_clutter_d(const chd_clutter* c);
CHD_API size_t chd_clutter_size(const chd_clutter* c);
/* Canonical text form, or JSON when as_json is nonzero. */
CHD_API chd_status chd_clutter_serialize(const chd_clutter* c, int as_json, char** out);
/* Newline separated fixture names. */
CHD_API chd_status chd_fixture_names(char** out);

/* ---- simplicial elements and chordality ---- */
/* One line per submaximal circuit: "<members>\tsimplicial|not-simplicial". */
CHD_API chd_status chd_simplicial_report(const chd_clutter* c, char** out);
/* Simpliciality of one (d-1)-set given as space separated vertices. */
CHD_API chd_status chd_is_simplicial(const chd_clutter* c, const char* e, int* simplicial, int* vacuous);
/* certificate receives the certificate text (may be NULL). */
CHD_API chd_status chd_check_chordal(const chd_clutter* c, chd_strategy strategy, int* chordal, char** certificate);
CHD_API chd_status chd_verify_certificate(const chd_clutter* c, const char* certificate, int* valid,
                                          size_t* valid_steps);

/* ---- chordality variants ---- */
/* l and field are used by CHD_VARIANT_RES_L only; budget bounds the E search
 * (0 for the default). */
CHD_API chd_status chd_check_variant(const chd_clutter* c, chd_variant variant, int l, int field, uint64_t budget,
                                     chd_outcome* outcome);

/* ---- Betti numbers of I(complement C) ---- */
CHD_API chd_status chd_betti_compute(const chd_clutter* c, int field, chd_engine engine, unsigned threads,
                                     chd_betti** out);
CHD_API void chd_betti_free(chd_betti* t);
CHD_API chd_status chd_betti_tsv(const chd_betti* t, char** out);
/* index receives -1 for infinity. */
CHD_API chd_status chd_betti_stats(const chd_betti* t, int* regularity, int* index, int* projdim, int* linear);

/* ---- linear quotients of I(complement C) ---- */
/* order receives the generator order (one monomial per line) on CHD_YES. */
CHD_API chd_status chd_linear_quotients(const chd_clutter* c, double budget_seconds, chd_outcome* outcome,
                                        char** order);

/* ---- stability ---- */
/* e: space separated vertices. a: NULL or "all" for the full star, otherwise
 * circuits separated by commas ("1 2 5,2 5 6"); "" is the empty set. */
CHD_API chd_status chd_stability(const chd_clutter* c, const char* e, const char* a, const int* fields,
                                 size_t field_count, int diagnostic, unsigned threads, int* holds, char** report_json);
CHD_API chd_status chd_stability_fuzz(int n_max, int d, size_t count, uint64_t seed, const int* fields,
                                      size_t field_count, unsigned threads, size_t* violations, char** report_json);

/* ---- class atlas ---- */
CHD_API chd_status chd_atlas(int n, int d, uint64_t budget, uint64_t seed, unsigned threads, int iso_reduce,
                             size_t* violations, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* CHORDAL_C_H */
