#ifndef BRZETA_H
#define BRZETA_H

/* C interface to the brzeta engines.  Every call returns a status code; on
 * failure brz_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread).  Inputs are JSON documents passed as
 * NUL-terminated strings.  Returned strings are freed with brz_string_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    BRZ_OK = 0,
    BRZ_INVALID_ARGUMENT = 1,
    BRZ_SCHEMA = 2,
    BRZ_FORMULA = 3,
    BRZ_RESOURCE = 4,
    BRZ_STRUCTURE = 5,
    BRZ_INTERNAL = 6
} brz_status;

/* A truncated power series with exact rational coefficients. */
typedef struct brz_series brz_series;
/* A table of exact values (Dirichlet coefficients, counting functions). */
typedef struct brz_table brz_table;

typedef enum {
    BRZ_HEREDITARY_TWO_VARIABLE = 0, /* z^[M/X] w^[X/JX] */
    BRZ_HEREDITARY_TOTAL = 1,        /* w set to 1 */
    BRZ_HEREDITARY_BRS = 2           /* the polynomial F of the BRS factorization */
} brz_hereditary_mode;

typedef enum {
    BRZ_PROLIF_SUM = 0,
    BRZ_PROLIF_SLIVER = 1,
    BRZ_PROLIF_FACTORED = 2 /* prefactor times remainder, cross-checked */
} brz_prolif_mode;

const char* brz_version(void);
const char* brz_last_error(void);

/* Hey product of {"entries":[{"q":2,"r":1,"m":2}, ...]}; inverse != 0 gives
 * the Moebius inverse polynomial. */
brz_status brz_hey(const char* data_json, uint32_t bound, int inverse, brz_series** out);

/* spec_json is {"q":2,"n":2,"columns":[1,2]}.  top_json, when not NULL, is a
 * top class array such as [1,1] and selects the partial zeta (mode ignored). */
brz_status brz_hereditary(const char* spec_json, uint32_t bound, brz_hereditary_mode mode, const char* top_json,
                          brz_series** out);

/* sigma_json is a 1-based permutation array or NULL for the identity. */
brz_status brz_lifted_hey(const char* data_json, const char* sigma_json, uint32_t bound, brz_series** out);

/* spec_json is {"base":{...},"sigma":[...],"truncate":B}; a negative bound uses the
 * document's "truncate".  For BRZ_PROLIF_FACTORED, prefactor and remainder
 * may be requested through the optional out parameters. */
brz_status brz_prolif(const char* spec_json, int64_t bound, brz_prolif_mode mode, brz_series** out,
                      brz_series** prefactor, brz_series** remainder);

/* Enumerates submodules of colength <= colength in a finite model such as
 * {"kind":"local2d","q":2,"c":4}.  top_json restricts to one top class;
 * chain_json ({"tops":[[1],[1]],"quotients":[[1]]}) restricts to one fibre of
 * the filtration by the model's invertible ideal.  two_variable != 0 also
 * records top classes. */
brz_status brz_oracle(const char* model_json, uint32_t colength, const char* top_json, const char* chain_json,
                      int two_variable, brz_series** out);

brz_status brz_lustig(uint32_t q, uint32_t i_max, brz_table** out);
brz_status brz_rossmann(uint64_t n_max, brz_table** out);
brz_status brz_hom_slice(uint32_t q, uint32_t r, uint32_t m, uint32_t count, uint64_t n_max, brz_table** out);

/* Dirichlet coefficients a_1..a_{n_max} of a series; an incomplete table
 * carries a warning (brz_table_warning). */
brz_status brz_series_dirichlet(const brz_series* s, uint64_t n_max, brz_table** out);

/* Returns BRZ_FORMULA naming the first coefficient that is not a
 * nonnegative integer. */
brz_status brz_series_check_natural(const brz_series* s);

brz_status brz_series_json(const brz_series* s, char** out);
brz_status brz_series_csv(const brz_series* s, char** out);
brz_status brz_series_text(const brz_series* s, char** out);
brz_status brz_table_json(const brz_table* t, char** out);
brz_status brz_table_csv(const brz_table* t, char** out);
/* Empty string when the table is complete. */
const char* brz_table_warning(const brz_table* t);

/* Runs one suite (or all when suite is NULL); max < 0 keeps each suite's
 * default size.  Writes a JSON array of results and sets *all_passed. */
brz_status brz_verify(const char* suite, int64_t max, char** json_out, int* all_passed);
/* Names of the suites as a JSON array of {"id","name","summary"}. */
brz_status brz_verify_suites(char** json_out);

void brz_series_free(brz_series* s);
void brz_table_free(brz_table* t);
void brz_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
