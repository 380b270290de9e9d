/*
 * C API for the Drinfeld character toolkit.
 *
 * Conventions:
 *  - Field elements are passed as comma-separated coordinate digits over F_p,
 *    low degree first ("1,0,1").
 *  - Lists of elements (skew/polynomial coefficients, point sets) are
 *    semicolon-separated, low degree first ("1,0;0,1;1,1").
 *  - Functions returning a char** allocate with malloc; release the string
 *    with drf_string_free.
 *  - On any status other than DRF_OK, drf_last_error() describes the error
 *    for the calling thread.
 */
#ifndef DRINFELD_H
#define DRINFELD_H

#include <stdint.h>

#if defined(_WIN32)
#define DRF_API __declspec(dllexport)
#else
#define DRF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum drf_status {
  DRF_OK = 0,
  DRF_VERIFY_FAILED = 1, /* an identity or certificate check returned false */
  DRF_USAGE_ERROR = 2,
  DRF_LIMIT_ERROR = 3,
  DRF_INTERNAL_ERROR = 4
} drf_status;

/* Opaque handle to an immutable finite-field context F_{p^n}. */
typedef struct drf_field drf_field;

DRF_API const char* drf_version(void);
DRF_API const char* drf_status_name(int status);
DRF_API const char* drf_last_error(void);
DRF_API void drf_string_free(char* s);

/* Override the enumeration bound (elements per field with lookup tables). */
DRF_API drf_status drf_set_max_table_size(uint64_t max_elems);

/* ---- field layer ---- */
DRF_API drf_status drf_field_create(uint32_t p, uint32_t n, drf_field** out);
DRF_API void drf_field_release(drf_field* f);
DRF_API drf_status drf_field_info(const drf_field* f, char** json_out);
DRF_API drf_status drf_element_order(const drf_field* f, const char* elem, uint64_t* order_out);
DRF_API drf_status drf_embed_element(const drf_field* src, const drf_field* dst, const char* elem,
                                     char** elem_out);
DRF_API drf_status drf_frobenius(const drf_field* f, const char* elem, uint64_t base_q, int64_t i,
                                 char** elem_out);
DRF_API drf_status drf_power_class(const drf_field* f, const char* elem, uint64_t m,
                                   int* is_mth_power, char** root_out);
DRF_API drf_status drf_poly_roots(const drf_field* f, const char* coeffs, char** json_out);

/* ---- skew-polynomial identities ---- */
DRF_API drf_status drf_verify_lcm_identity(uint64_t q, uint32_t d, int* holds);

/* ---- Drinfeld construction ---- */
/* g_coeffs: coefficients of g(F) in K, low F-degree first ("b;a" for rank 1).
 * phi_coeffs: monic irreducible over F_q; pass NULL or "" for the
 * deterministic degree-d choice. */
DRF_API drf_status drf_division_points(uint32_t p, uint32_t n, uint64_t q, const char* g_coeffs,
                                       uint32_t d, const char* phi_coeffs, char** json_out);
DRF_API drf_status drf_character(uint32_t p, uint32_t n, uint64_t q, const char* g_coeffs,
                                 uint32_t d, const char* phi_coeffs, char** json_out);
DRF_API drf_status drf_kummer(uint32_t p, uint32_t n, uint64_t q, uint32_t d, const char* a,
                              const char* b, char** json_out);
DRF_API drf_status drf_genus(uint64_t q, uint32_t d, uint64_t k, char** json_out);
/* format: "json" or "csv"; exhaustive over valid (a, b). */
DRF_API drf_status drf_audit_surjectivity(uint32_t p, uint32_t n, uint64_t q, uint32_t d,
                                          const char* format, char** out);
DRF_API drf_status drf_subspace(uint32_t p, uint32_t n, uint64_t q, const char* points,
                                char** json_out);

/* ---- inverse constructions ---- */
/* kummer_c: optional representative of the Kummer class in K ("" = derive a
 * deterministic representative of the degree-m class). */
DRF_API drf_status drf_recover(uint32_t p, uint32_t n, uint64_t q, uint32_t degree,
                               const char* kummer_c, char** json_out);
DRF_API drf_status drf_corollary(uint32_t p, uint32_t n, uint64_t q, const char* a, const char* b,
                                 const char* lambda, char** json_out);
DRF_API drf_status drf_cartan(uint64_t q, const char* lambda, const char* u, char** json_out);

/* ---- hypothesis (A) ---- */
DRF_API drf_status drf_hypa_audit(uint32_t m, char** json_out);
DRF_API drf_status drf_hypa_classify(uint32_t max_m, char** json_out);
DRF_API drf_status drf_hypa_witness(uint32_t m, char** json_out);
DRF_API drf_status drf_hypa_quartic(uint32_t m, const char* a, const char* b, const char* c,
                                    const char* format, char** out);
DRF_API drf_status drf_hypa_nonic(int* holds, char** json_out);

/* ---- verification suites ---- */
/* name: "all", "section2".."section6" or "properties". Returns
 * DRF_VERIFY_FAILED when any check in the requested sections fails. */
DRF_API drf_status drf_suite(const char* name, unsigned jobs, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* DRINFELD_H */
