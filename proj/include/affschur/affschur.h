#ifndef AFFSCHUR_AFFSCHUR_H
#define AFFSCHUR_AFFSCHUR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define AFFSCHUR_API __declspec(dllexport)
#else
#define AFFSCHUR_API __attribute__((visibility("default")))
#endif

typedef enum affschur_status {
  AFFSCHUR_OK = 0,
  AFFSCHUR_ERR_ARGUMENT = 1, /* null pointer, bad option, unknown name */
  AFFSCHUR_ERR_PARSE = 2,    /* expression syntax, malformed JSON */
  AFFSCHUR_ERR_CONTEXT = 3,  /* (n, r) mismatch */
  AFFSCHUR_ERR_DOMAIN = 4,   /* non-invertible parameter, division by zero */
  AFFSCHUR_ERR_VERIFY = 5,   /* a check or oracle comparison failed */
  AFFSCHUR_ERR_IO = 6,
  AFFSCHUR_ERR_INTERNAL = 7
} affschur_status;

typedef enum affschur_engine {
  AFFSCHUR_ENGINE_GREEN = 0,
  AFFSCHUR_ENGINE_SCHUR = 1,
  AFFSCHUR_ENGINE_TENSOR = 2
} affschur_engine;

typedef struct affschur_element affschur_element;
typedef struct affschur_matrix affschur_matrix;
typedef struct affschur_cache affschur_cache;

AFFSCHUR_API const char* affschur_version(void);
AFFSCHUR_API const char* affschur_status_name(affschur_status status);
/* Message of the last failure on the calling thread; never null. */
AFFSCHUR_API const char* affschur_last_error(void);
/* Line and column of the last parse error, 0 if none. */
AFFSCHUR_API void affschur_last_error_position(int* line, int* column);
/* Strings returned through char** are owned by the caller. */
AFFSCHUR_API void affschur_string_free(char* s);

/* Elements of S(n,r)~ */
AFFSCHUR_API affschur_status affschur_element_parse(int64_t n, const char* text, affschur_element** out);
AFFSCHUR_API affschur_status affschur_element_from_json(const char* json, affschur_element** out);
AFFSCHUR_API affschur_status affschur_identity(int64_t n, int r, affschur_element** out);
AFFSCHUR_API affschur_status affschur_element_to_json(const affschur_element* x, char** out);
AFFSCHUR_API affschur_status affschur_element_to_string(const affschur_element* x, char** out);
AFFSCHUR_API affschur_status affschur_element_context(const affschur_element* x, int64_t* n, int* r);
AFFSCHUR_API affschur_status affschur_element_term_count(const affschur_element* x, size_t* out);
AFFSCHUR_API affschur_status affschur_element_equal(const affschur_element* x, const affschur_element* y, int* out);
AFFSCHUR_API void affschur_element_free(affschur_element* x);

AFFSCHUR_API affschur_status affschur_add(const affschur_element* x, const affschur_element* y, affschur_element** out);
AFFSCHUR_API affschur_status affschur_multiply(const affschur_element* x, const affschur_element* y,
                                                affschur_engine engine, affschur_element** out);
/* Runs all three engines; AFFSCHUR_ERR_VERIFY if they disagree. */
AFFSCHUR_API affschur_status affschur_multiply_checked(const affschur_element* x, const affschur_element* y,
                                                        affschur_element** out);
/* Replaces the parameter a by a rational value. */
AFFSCHUR_API affschur_status affschur_specialize(const affschur_element* x, const char* a0, affschur_element** out);

/* kind: psi_as, psi_a, psi_a0, det_sharp, det_star, transpose, weyl.
   s is used by psi_as; window (length n) by weyl; param replaces a for
   psi_as and det_sharp when non-null. */
AFFSCHUR_API affschur_status affschur_hom_apply(const char* kind, const affschur_element* x, int64_t s,
                                                 const int64_t* window, size_t window_len, const char* param,
                                                 affschur_element** out);

/* Action on the tensor space, vectors as JSON. */
AFFSCHUR_API affschur_status affschur_act(const affschur_element* x, const char* vector_json, char** out);
/* t.(sigma, eps) with a 1-based one-line permutation. */
AFFSCHUR_API affschur_status affschur_weyl_apply(int64_t n, const int* perm, const int64_t* eps,
                                                  const int64_t* tuple, size_t r, int64_t* out);

/* Periodic matrices */
AFFSCHUR_API affschur_status affschur_matrix_from_json(const char* json, affschur_matrix** out);
AFFSCHUR_API affschur_status affschur_matrix_to_json(const affschur_matrix* g, char** out);
AFFSCHUR_API void affschur_matrix_free(affschur_matrix* g);
AFFSCHUR_API affschur_status affschur_evaluate(const affschur_matrix* g, int r, affschur_element** out);
/* det~ as Laurent text in a. */
AFFSCHUR_API affschur_status affschur_det_tilde(const affschur_matrix* g, char** out);
AFFSCHUR_API affschur_status affschur_in_sl_at(const affschur_matrix* g, const char* a0, int* out);

/* Loop algebra */
AFFSCHUR_API affschur_status affschur_lie_pi(int64_t n, int r, int64_t s, int64_t t, affschur_element** out);
/* using: "Y" or "X"; index text such as "[(1,1)|(2,2)]" or "xi[(1,1)|(2,2)]".
   Writes the expression tree as JSON. */
AFFSCHUR_API affschur_status affschur_decompose(int64_t n, const char* index, const char* using_set, char** out);

/* Nonvanishing witness for a coordinate polynomial given as JSON. */
AFFSCHUR_API affschur_status affschur_witness(const char* polynomial_json, int special, const char* a0, char** out);

/* params_json: {"n":..,"r":..,"window":..,"samples":..,"seed":..}, any
   subset. Writes the report; *passed is 1 or 0. */
AFFSCHUR_API affschur_status affschur_verify(const char* suite, const char* params_json, char** report, int* passed);

/* Structure-constant cache; a null path uses AFFSCHUR_CACHE or the user
   cache directory. */
AFFSCHUR_API affschur_status affschur_cache_open(const char* path, affschur_cache** out);
AFFSCHUR_API void affschur_cache_free(affschur_cache* cache);
AFFSCHUR_API affschur_status affschur_cache_multiply(affschur_cache* cache, const affschur_element* x,
                                                      const affschur_element* y, affschur_element** out);
AFFSCHUR_API affschur_status affschur_cache_stats(const affschur_cache* cache, char** out);
/* n or r below 1 means all. */
AFFSCHUR_API affschur_status affschur_cache_clear(affschur_cache* cache, int64_t n, int r, size_t* removed);
AFFSCHUR_API affschur_status affschur_cache_spot_check(const affschur_cache* cache, size_t count, unsigned seed,
                                                        size_t* checked);

#ifdef __cplusplus
}
#endif

#endif
