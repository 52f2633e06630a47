/* C interface to the matwalk exact matrix-identity toolkit.
 *
 * All functions return MW_OK on success; on failure a human-readable
 * message is available from mw_last_error() until the next call on the
 * same thread. Strings returned through out-parameters are owned by the
 * caller and must be released with mw_string_free().
 */
#ifndef MATWALK_H
#define MATWALK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  MW_OK = 0,
  MW_ERR_PARSE = 1,   /* malformed input document or entry */
  MW_ERR_INVALID = 2, /* invalid argument (instance, family, options) */
  MW_ERR_LIMIT = 3,   /* enumeration size limit exceeded */
  MW_ERR_INTERNAL = 4
} mw_status;

/* Opaque exact matrix handle. */
typedef struct mw_matrix mw_matrix;

/* Parse {"n": .., "entries": [[".."]]} with string entries in the
 * integer/rational grammar. */
mw_status mw_matrix_from_json(const char* text, mw_matrix** out);

/* Parse the plain shorthand: n lines of n whitespace-separated entries. */
mw_status mw_matrix_from_plain(const char* text, mw_matrix** out);

/* Deterministic generator. family: tridiagonal | family-one | family-two |
 * rank-one | acyclic | symmetric; domain: integer | rational | symbolic. */
mw_status mw_matrix_generate(const char* family, int order, unsigned long long seed,
                             double density, const char* domain, mw_matrix** out);

mw_status mw_matrix_to_json(const mw_matrix* m, char** out_json);
int mw_matrix_order(const mw_matrix* m);

/* options_json (may be NULL or empty): {"instances": [{"exponents": [..],
 * "indices": [..]}], "random": N, "seed": S, "oracle": bool}.
 * Each run_* call writes a JSON report to *report_json. */
mw_status mw_run_check(const mw_matrix* m, const char* options_json, char** report_json);
mw_status mw_run_verify(const mw_matrix* m, const char* options_json, char** report_json);
mw_status mw_run_oracle(const mw_matrix* m, const char* options_json, char** report_json);
mw_status mw_run_certificate(const mw_matrix* m, char** report_json);

/* options_json: {"class": "acyclic|triangle|certificate|adversarial",
 * "count": N, "seed": S}. */
mw_status mw_run_fuzz(const char* options_json, char** report_json);

/* Message for the most recent failure on this thread; never NULL. */
const char* mw_last_error(void);

void mw_matrix_free(mw_matrix* m);
void mw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MATWALK_H */
