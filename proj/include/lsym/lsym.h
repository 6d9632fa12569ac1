/* C interface to the lsym library.
 *
 * Every call returns an lsym_status. On failure the message is available
 * from lsym_last_error() on the same thread until the next failing call.
 * Strings returned through char** are owned by the caller and released with
 * lsym_string_free(). Requests and responses are JSON documents; exact
 * rationals travel as strings ("-3/4") and integers. Schemas are listed in
 * README.md.
 */
#ifndef LSYM_LSYM_H
#define LSYM_LSYM_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LSYM_API __declspec(dllexport)
#else
#define LSYM_API __attribute__((visibility("default")))
#endif

typedef enum lsym_status {
  LSYM_OK = 0,
  LSYM_ERR_INVALID_ARGUMENT = 1,
  LSYM_ERR_PARSE = 2,
  LSYM_ERR_DENOMINATOR_VANISHES = 3,
  LSYM_ERR_KAPPA_VANISHES = 4,
  LSYM_ERR_MALFORMED_MATRIX = 5,
  LSYM_ERR_NOT_SUBTRACTION_FREE = 6,
  LSYM_ERR_NON_PARTITION_WEIGHT = 7,
  LSYM_ERR_SEARCH_FAILURE = 8,
  LSYM_ERR_CARRIER_NOT_EMPTIED = 9,
  LSYM_ERR_NOT_UNI_UPPER_TRIANGULAR = 10,
  LSYM_ERR_NO_REAL_FACTORIZATION = 11,
  LSYM_ERR_NO_CONVERGENCE = 12,
  LSYM_ERR_DEGENERATE_DENOMINATOR = 13,
  LSYM_ERR_INTERNAL = 100
} lsym_status;

LSYM_API const char* lsym_version(void);
/* "InvalidArgument", "Parse", ... */
LSYM_API const char* lsym_status_name(lsym_status status);
LSYM_API const char* lsym_last_error(void);
LSYM_API void lsym_string_free(char* s);

/* Polynomial with rational coefficients in the variables x[i]^(j). */
typedef struct lsym_poly lsym_poly;
LSYM_API lsym_status lsym_poly_loop_e(int n, int m, int k, long r, lsym_poly** out);
LSYM_API lsym_status lsym_poly_to_string(const lsym_poly* p, char** out);
LSYM_API lsym_status lsym_poly_equal(const lsym_poly* a, const lsym_poly* b, int* out);
LSYM_API void lsym_poly_free(lsym_poly* p);

/* Quotient of polynomials. */
typedef struct lsym_ratexpr lsym_ratexpr;
/* Reads the canonical string form, e.g. "(x[1]^(1) + x[2]^(2))/(x[1]^(2))"; colors mod n. */
LSYM_API lsym_status lsym_ratexpr_parse(const char* text, int n, lsym_ratexpr** out);
LSYM_API lsym_status lsym_ratexpr_from_poly(const lsym_poly* p, lsym_ratexpr** out);
LSYM_API lsym_status lsym_ratexpr_to_string(const lsym_ratexpr* e, char** out);
LSYM_API lsym_status lsym_ratexpr_equal(const lsym_ratexpr* a, const lsym_ratexpr* b, int* out);
/* values_json: [[x_1^(1), ..., x_1^(n)], ...]; result is a rational string. */
LSYM_API lsym_status lsym_ratexpr_eval(const lsym_ratexpr* e, const char* values_json,
                                       char** out);
LSYM_API void lsym_ratexpr_free(lsym_ratexpr* e);

/* Square matrix polynomial in t with real (or exact rational) coefficients.
 * JSON: {"n": 2, "coeffs": [C_0, C_1, ...]} with C_d the n x n coefficient
 * of t^d. Integer and "p/q" entries keep an exact copy. */
typedef struct lsym_matpoly lsym_matpoly;
LSYM_API lsym_status lsym_matpoly_from_json(const char* json, lsym_matpoly** out);
/* params_json: [[x_1^(1), ..., x_1^(n)], ...], one row per whirl. */
LSYM_API lsym_status lsym_matpoly_whirl_product(const char* params_json, lsym_matpoly** out);
LSYM_API lsym_status lsym_matpoly_to_json(const lsym_matpoly* p, char** out);
LSYM_API void lsym_matpoly_free(lsym_matpoly* p);

/* Matrix-polynomial operations; options are JSON objects (may be NULL). */
LSYM_API lsym_status lsym_factor(const lsym_matpoly* p, const char* options, char** out);
LSYM_API lsym_status lsym_tnn(const lsym_matpoly* p, const char* options, char** out);

/* JSON request -> JSON response. */
LSYM_API lsym_status lsym_loop_e(const char* request, char** out);
LSYM_API lsym_status lsym_schur(const char* request, char** out);
LSYM_API lsym_status lsym_powersum(const char* request, char** out);
LSYM_API lsym_status lsym_mn(const char* request, char** out);
LSYM_API lsym_status lsym_rmatrix(const char* request, char** out);
LSYM_API lsym_status lsym_hopf_check(const char* request, char** out);
LSYM_API lsym_status lsym_trop(const char* request, char** out);
LSYM_API lsym_status lsym_comb_r(const char* request, char** out);
LSYM_API lsym_status lsym_cocharge(const char* request, char** out);
LSYM_API lsym_status lsym_energy(const char* request, char** out);
LSYM_API lsym_status lsym_boxball(const char* request, char** out);
LSYM_API lsym_status lsym_certify_schur(const char* request, char** out);
LSYM_API lsym_status lsym_verify(const char* request, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LSYM_LSYM_H */
