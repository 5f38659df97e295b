/* rrmbox — variational eigenvalue tables for a particle in a box and its
 * rank-D projected Hamiltonians, at configurable decimal precision.
 *
 * Conventions: every constructor hands back an owned handle through an out
 * parameter and returns a status code; strings returned through `char**` are
 * owned by the caller and released with rrm_string_free. On any non-OK
 * status, rrm_last_error() carries a human-readable diagnostic for the
 * calling thread.
 */
#ifndef RRMBOX_H
#define RRMBOX_H

#ifdef __GNUC__
#define RRM_API __attribute__((visibility("default")))
#else
#define RRM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rrm_status {
  RRM_OK = 0,
  RRM_ERR_INVALID_ARGUMENT = 1,
  RRM_ERR_NOT_POSITIVE_DEFINITE = 2, /* overlap Cholesky pivot failed */
  RRM_ERR_NO_CONVERGENCE = 3,        /* Jacobi sweep cap exceeded */
  RRM_ERR_DEGENERATE = 4,            /* trial state lost its norm */
  RRM_ERR_INTERNAL = 5
} rrm_status;

typedef struct rrm_context rrm_context;   /* working-precision context */
typedef struct rrm_model rrm_model;       /* which Hamiltonian */
typedef struct rrm_spectrum rrm_spectrum; /* one solved pencil */
typedef struct rrm_table rrm_table;       /* convergence table over N */

RRM_API const char* rrm_status_name(rrm_status status);
RRM_API const char* rrm_last_error(void);
RRM_API void rrm_string_free(char* s);

/* --- precision context ------------------------------------------------- */

/* decimal_digits >= 30 (the supported floor). */
RRM_API rrm_status rrm_context_new(unsigned decimal_digits, rrm_context** out);
/* No floor; exists for deliberate precision-degradation studies. */
RRM_API rrm_status rrm_context_new_unchecked(unsigned decimal_digits, rrm_context** out);
RRM_API unsigned rrm_context_digits(const rrm_context* ctx);
RRM_API void rrm_context_free(rrm_context* ctx);

/* --- models -------------------------------------------------------------*/

RRM_API rrm_status rrm_model_standard(rrm_model** out);
RRM_API rrm_status rrm_model_projected(unsigned d, rrm_model** out);
/* alphas: decimal strings such as "1", "2.5", "-1e-3"; parsed exactly. */
RRM_API rrm_status rrm_model_weighted(const char* const* alphas, unsigned count, rrm_model** out);
RRM_API void rrm_model_free(rrm_model* model);

/* --- single solve ------------------------------------------------------ */

RRM_API rrm_status rrm_solve(const rrm_context* ctx, const rrm_model* model, unsigned basis_size,
                     rrm_spectrum** out);
RRM_API unsigned rrm_spectrum_size(const rrm_spectrum* s);
RRM_API unsigned rrm_spectrum_null_count(const rrm_spectrum* s);
/* Eigenvalue `index` in presentation order (non-null ascending, then the
 * null block). digits = 0 renders full precision, otherwise `digits`
 * significant figures. */
RRM_API rrm_status rrm_spectrum_value(const rrm_spectrum* s, unsigned index, unsigned digits, char** out);
RRM_API void rrm_spectrum_free(rrm_spectrum* s);

/* --- convergence tables -------------------------------------------------*/

RRM_API rrm_status rrm_table_build(const rrm_context* ctx, const rrm_model* model, unsigned n_min,
                           unsigned n_max, unsigned levels, rrm_table** out);
/* format: "table", "csv" or "json". */
RRM_API rrm_status rrm_table_render(const rrm_table* t, const char* format, unsigned digits, char** out);
/* all_ok = 1 when every one-sided bound and monotonicity verdict holds. */
RRM_API rrm_status rrm_table_check_bounds(const rrm_table* t, int* all_ok, char** report);
RRM_API void rrm_table_free(rrm_table* t);

/* --- higher-level runs --------------------------------------------------*/

/* Full verification suite; report is the rendered text. */
RRM_API rrm_status rrm_verify(const rrm_context* ctx, unsigned* passed, unsigned* failed, char** report);

/* Cauchy–Schwarz demonstration sweep for level n within rank d, basis sizes
 * n_min..n_max; all_below = 1 when every quotient stays at or below E_n. */
RRM_API rrm_status rrm_cs_demo(const rrm_context* ctx, unsigned n, unsigned d, unsigned n_min,
                       unsigned n_max, const char* format, unsigned digits, int* all_below,
                       char** out);

#ifdef __cplusplus
}
#endif

#endif /* RRMBOX_H */
