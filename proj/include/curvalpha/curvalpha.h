/*
 * curvalpha C API.
 *
 * Sectional curvature of the area-preserving diffeomorphism group of the flat
 * 2-torus under the H^1 (Euler-alpha) metric, evaluated in exact rational
 * arithmetic. Results live behind opaque handles; strings returned by
 * accessors are owned by the handle and stay valid until it is destroyed.
 *
 * Every function returning cva_status leaves a message for the calling thread
 * in cva_last_error() when it fails.
 */
#ifndef CURVALPHA_H
#define CURVALPHA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CURVALPHA_BUILDING)
#    define CVA_API __declspec(dllexport)
#  else
#    define CVA_API __declspec(dllimport)
#  endif
#else
#  define CVA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cva_status {
  CVA_OK = 0,
  CVA_ERR_INVALID_ARGUMENT = 1,
  CVA_ERR_PARSE = 2,
  CVA_ERR_ZERO_MODE = 3,
  CVA_ERR_DEGENERATE_PLANE = 4,
  CVA_ERR_DEGENERATE_MODE = 5,
  CVA_ERR_DEGENERATE_DIRECTIONS = 6,
  CVA_ERR_INTERNAL = 99
} cva_status;

typedef struct cva_context cva_context;
typedef struct cva_curvature cva_curvature;
typedef struct cva_alpha0 cva_alpha0;
typedef struct cva_sweep cva_sweep;
typedef struct cva_scan cva_scan;
typedef struct cva_verify cva_verify;

typedef struct cva_wave_vector {
  int64_t k1;
  int64_t k2;
} cva_wave_vector;

CVA_API const char* cva_version(void);
CVA_API const char* cva_last_error(void);
CVA_API const char* cva_status_string(cva_status status);

/* Context: torus area (default 1), reporting digits (default 12), thread cap
 * for scans (0 = CURVALPHA_THREADS or hardware concurrency). */
CVA_API cva_status cva_context_create(cva_context** out);
CVA_API void cva_context_destroy(cva_context* ctx);
CVA_API cva_status cva_context_set_area(cva_context* ctx, const char* area);
CVA_API cva_status cva_context_set_digits(cva_context* ctx, int digits);
CVA_API cva_status cva_context_set_threads(cva_context* ctx, unsigned threads);
CVA_API cva_status cva_context_set_beta_tolerance(cva_context* ctx, const char* tolerance);

CVA_API cva_status cva_parse_wave_vector(const char* text, cva_wave_vector* out);

/* Sectional curvature in the plane (cos(k,x), cos(l,x)); alpha is an exact
 * rational or decimal string. */
CVA_API cva_status cva_curvature_compute(const cva_context* ctx, cva_wave_vector k, cva_wave_vector l,
                                         const char* alpha, cva_curvature** out);
CVA_API void cva_curvature_destroy(cva_curvature* h);
CVA_API const char* cva_curvature_raw(const cva_curvature* h, int exact);
CVA_API const char* cva_curvature_normalized(const cva_curvature* h, int exact);
CVA_API const char* cva_curvature_closed(const cva_curvature* h, int exact);
CVA_API const char* cva_curvature_beta(const cva_curvature* h, int exact);
CVA_API int cva_curvature_bracket_sign(const cva_curvature* h);

/* Positivity threshold alpha0 for the plane (k, l). */
CVA_API cva_status cva_alpha0_compute(const cva_context* ctx, cva_wave_vector k, cva_wave_vector l,
                                      const char* alpha_cap, cva_alpha0** out);
CVA_API void cva_alpha0_destroy(cva_alpha0* h);
CVA_API int cva_alpha0_exists(const cva_alpha0* h);
CVA_API int cva_alpha0_below_cap(const cva_alpha0* h);
CVA_API int cva_alpha0_positive_roots(const cva_alpha0* h);
CVA_API const char* cva_alpha0_reason(const cva_alpha0* h);
/* Decimal alpha0, or NULL when no threshold exists. */
CVA_API const char* cva_alpha0_value(const cva_alpha0* h);
CVA_API const char* cva_alpha0_json(const cva_alpha0* h);

/* alpha grid sweep; rows at alpha_min + i (alpha_max - alpha_min)/(steps - 1). */
CVA_API cva_status cva_sweep_compute(const cva_context* ctx, cva_wave_vector k, cva_wave_vector l,
                                     const char* alpha_min, const char* alpha_max, int steps, cva_sweep** out);
CVA_API void cva_sweep_destroy(cva_sweep* h);
CVA_API size_t cva_sweep_rows(const cva_sweep* h);
CVA_API int cva_sweep_bracket_sign(const cva_sweep* h, size_t row);
CVA_API const char* cva_sweep_csv(const cva_sweep* h);

/* Lattice scan for alpha0 over k in [kmin, kmax]^2 \ {0} and the given eps. */
CVA_API cva_status cva_scan_compute(const cva_context* ctx, int64_t kmin, int64_t kmax, const cva_wave_vector* eps,
                                    size_t eps_count, const char* alpha_cap, cva_scan** out);
CVA_API void cva_scan_destroy(cva_scan* h);
CVA_API size_t cva_scan_records(const cva_scan* h);
CVA_API const char* cva_scan_jsonl(const cva_scan* h);
CVA_API const char* cva_scan_csv(const cva_scan* h);
CVA_API const char* cva_scan_summary_json(const cva_scan* h);

/* Randomized invariant suite. connection_divisor is normally "2". */
CVA_API cva_status cva_verify_run(uint64_t seed, int cases, int component_bound, const char* connection_divisor,
                                  cva_verify** out);
CVA_API void cva_verify_destroy(cva_verify* h);
CVA_API int cva_verify_passed(const cva_verify* h);
CVA_API const char* cva_verify_report(const cva_verify* h);

#ifdef __cplusplus
}
#endif

#endif /* CURVALPHA_H */
