/* C interface to the fuskit fusion-ring library. Rings are opaque handles;
 * every call returns a status code and, on failure, leaves a message for
 * fuskit_last_error() in thread-local storage. Strings returned through
 * char** are owned by the caller and released with fuskit_string_free. */
#ifndef FUSKIT_H
#define FUSKIT_H

#include <stddef.h>

#if defined(_WIN32)
#define FUSKIT_API __declspec(dllexport)
#else
#define FUSKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fuskit_ring fuskit_ring;

typedef enum fuskit_status {
  FUSKIT_OK = 0,
  FUSKIT_E_INVALID_ARGUMENT = 1,
  FUSKIT_E_PARSE = 2,
  FUSKIT_E_OVERFLOW = 3,
  FUSKIT_E_FIELD_MISMATCH = 4,
  FUSKIT_E_DIVISION_BY_ZERO = 5,
  FUSKIT_E_CONVERGENCE = 6,
  FUSKIT_E_INDEX_OUT_OF_RANGE = 7,
  FUSKIT_E_SIZE_LIMIT = 8,
  FUSKIT_E_UNKNOWN_ELEMENT = 9,
  FUSKIT_E_NOT_NORMAL = 10,
  FUSKIT_E_GRADING_INCONSISTENCY = 11,
  FUSKIT_E_POINTED_INPUT = 12,
  FUSKIT_E_TYPE_EXTRACTION = 13,
  FUSKIT_E_DETECTOR_DISAGREEMENT = 14,
  FUSKIT_E_NOT_FIB_EXTENSION = 15,
  FUSKIT_E_NOT_CLOSED = 16,
  FUSKIT_E_NOT_POINTED_PRECONDITION = 17,
  FUSKIT_E_NOT_ASSOCIATIVE = 18,
  FUSKIT_E_UNSUPPORTED_NONABELIAN = 19,
  FUSKIT_E_ASSERTION = 20,
  FUSKIT_E_INTERNAL = 100
} fuskit_status;

FUSKIT_API const char* fuskit_version(void);
FUSKIT_API const char* fuskit_status_name(fuskit_status status);
/* Message of the last failed call on this thread, "" if none. */
FUSKIT_API const char* fuskit_last_error(void);
FUSKIT_API void fuskit_string_free(char* s);

/* Ring in the JSON exchange format. Structural problems fail here; the
 * ring axioms are checked by fuskit_ring_validate. */
FUSKIT_API fuskit_status fuskit_ring_from_json(const char* json, fuskit_ring** out);
/* spec is a family spec object ({"family":"gty",...}) or a bare family name. */
FUSKIT_API fuskit_status fuskit_ring_construct(const char* spec, fuskit_ring** out);
FUSKIT_API fuskit_status fuskit_ring_product(const fuskit_ring* a, const fuskit_ring* b, fuskit_ring** out);
FUSKIT_API void fuskit_ring_free(fuskit_ring* ring);

FUSKIT_API fuskit_status fuskit_ring_rank(const fuskit_ring* ring, size_t* out);
/* Canonical exchange-format text. */
FUSKIT_API fuskit_status fuskit_ring_to_json(const fuskit_ring* ring, char** out);
/* *pass is 1 when every axiom holds; report lists each axiom. */
FUSKIT_API fuskit_status fuskit_ring_validate(const fuskit_ring* ring, int* pass, char** report);
FUSKIT_API fuskit_status fuskit_ring_info(const fuskit_ring* ring, char** out);
FUSKIT_API fuskit_status fuskit_ring_classify(const fuskit_ring* ring, char** out);
FUSKIT_API fuskit_status fuskit_ring_grading(const fuskit_ring* ring, char** out);
/* a and b are JSON arrays of basis labels generating the two subrings;
 * NULL means the adjoint subring and the pointed subring. */
FUSKIT_API fuskit_status fuskit_ring_factorize(const fuskit_ring* ring, const char* a, const char* b, int* exact,
                                               char** out);

FUSKIT_API fuskit_status fuskit_solve_lemma41(int bound, char** out);
/* corpus_dir NULL selects the built-in corpus; only is a check-id prefix
 * (NULL or "" for all). */
FUSKIT_API fuskit_status fuskit_verify(const char* corpus_dir, const char* only, int jobs, int* pass, char** out);

#ifdef __cplusplus
}
#endif

#endif
