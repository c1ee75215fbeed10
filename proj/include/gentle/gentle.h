/* C interface to the gentle word calculus library. */
#ifndef GENTLE_GENTLE_H
#define GENTLE_GENTLE_H

#include <stdint.h>

#if defined(_WIN32)
#define GENTLE_API __declspec(dllexport)
#else
#define GENTLE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Domain errors map one-to-one onto the library error kinds. */
typedef enum gentle_status {
  GENTLE_OK = 0,
  GENTLE_E_PARSE = 1,
  GENTLE_E_NON_COMPOSABLE_RELATION,
  GENTLE_E_TOO_MANY_ARROWS_AT_VERTEX,
  GENTLE_E_GENTLE_CONDITION_2,
  GENTLE_E_GENTLE_CONDITION_3,
  GENTLE_E_NOT_CHAINED,
  GENTLE_E_TRIVIAL_PATH,
  GENTLE_E_NO_VALID_ASSIGNMENT,
  GENTLE_E_HEAD_TAIL_MISMATCH,
  GENTLE_E_INVERSE_CANCELLATION,
  GENTLE_E_RELATION_CROSSED,
  GENTLE_E_TAIL_NOT_PERIODICIZABLE,
  GENTLE_E_SHAPE_MISMATCH,
  GENTLE_E_NOT_CLASSIFIABLE,
  GENTLE_E_NOT_A_STRING_WORD,
  GENTLE_E_NOT_A_BAND_WORD,
  GENTLE_E_SINGULAR_MATRIX,
  GENTLE_E_ADJACENCY_RULE_VIOLATED,
  GENTLE_E_PATH_NOT_IN_P,
  GENTLE_E_WEAK_CYCLIC,
  GENTLE_E_INDEX_OUT_OF_SHAPE,
  GENTLE_E_PERIODIC_INPUT,
  GENTLE_E_WINDOW_REQUIRED,
  GENTLE_E_INFINITE_PREIMAGE,
  GENTLE_E_NOT_CYCLIC,
  GENTLE_E_NOT_A_RECOGNIZED_RESOLUTION,
  GENTLE_E_RANK_MISMATCH,
  GENTLE_E_INFINITE_DIMENSIONAL,
  GENTLE_E_VERTEX_UNKNOWN,
  GENTLE_E_NOT_A_COMPLEX,
  GENTLE_E_INTERNAL,
  GENTLE_E_INVALID_ARGUMENT = 100, /* null pointer or out-of-range option */
  GENTLE_E_VERIFICATION_FAILED = 101
} gentle_status;

typedef struct gentle_presentation gentle_presentation;

/* Output flags. */
#define GENTLE_FLAG_HUMAN 1u      /* angle brackets and infinity signs */
#define GENTLE_FLAG_FLIP_SIGNS 2u /* global initial sign -1 */

GENTLE_API const char* gentle_status_name(gentle_status status);
/* Message of the last failed call on this thread; empty after a success. */
GENTLE_API const char* gentle_last_error(void);
/* Strings returned through char** out parameters are owned by the caller. */
GENTLE_API void gentle_string_free(char* s);

GENTLE_API gentle_status gentle_presentation_load(const char* path, gentle_presentation** out);
GENTLE_API gentle_status gentle_presentation_parse(const char* text, gentle_presentation** out);
GENTLE_API void gentle_presentation_free(gentle_presentation* pres);
GENTLE_API int gentle_presentation_vertex_count(const gentle_presentation* pres);
GENTLE_API int gentle_presentation_arrow_count(const gentle_presentation* pres);

GENTLE_API gentle_status gentle_validate(const gentle_presentation* pres, char** out);
GENTLE_API gentle_status gentle_signs(const gentle_presentation* pres, unsigned flags, char** out);
GENTLE_API gentle_status gentle_word(const gentle_presentation* pres, const char* word, unsigned flags, char** out);
/* matrix_path may be NULL for string words. */
GENTLE_API gentle_status gentle_module(const gentle_presentation* pres, const char* word, const char* matrix_path,
                                       unsigned flags, char** out);
GENTLE_API gentle_status gentle_resolve(const gentle_presentation* pres, const char* word, unsigned flags, char** out);
/* has_window selects the degree window [lo, hi]; matrix_path may be NULL (rank-1 identity over F_2). */
GENTLE_API gentle_status gentle_complex(const gentle_presentation* pres, const char* genword, int has_window, long lo,
                                        long hi, const char* matrix_path, unsigned flags, char** out);
GENTLE_API gentle_status gentle_homword(const gentle_presentation* pres, const char* genword, unsigned flags, char** out);
GENTLE_API gentle_status gentle_kernel(const gentle_presentation* pres, const char* genword, long degree, unsigned flags,
                                       char** out);
/* Module specs: `string "<word>"` or `band "<word>" <matrix file>`. */
GENTLE_API gentle_status gentle_iso(const gentle_presentation* pres, const char* lhs, const char* rhs, unsigned flags,
                                    char** out);
/* Writes the report to out in every case; GENTLE_E_VERIFICATION_FAILED when a check fails. */
GENTLE_API gentle_status gentle_verify(const gentle_presentation* pres, int prime, int max_len, int max_rank,
                                       uint64_t seed, unsigned flags, char** out);

#ifdef __cplusplus
}
#endif

#endif
