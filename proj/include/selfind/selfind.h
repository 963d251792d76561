#ifndef SELFIND_H
#define SELFIND_H

/* C interface to the selfind library. All functions return an sf_status;
 * on failure sf_last_error() describes the problem (per thread). Objects are
 * opaque handles released with the matching _free function; strings handed
 * out by the library are released with sf_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#define SF_API __declspec(dllexport)
#else
#define SF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
  SF_OK = 0,
  SF_ERR_INVALID_ARGUMENT = 1,
  SF_ERR_PARSE = 2,
  SF_ERR_DEGENERATE_CURVE = 3,
  SF_ERR_UNSUPPORTED_CURVE = 4,
  SF_ERR_SEPARATION = 5,
  SF_ERR_PROXIMITY = 6,
  SF_ERR_DOMAIN = 7,
  SF_ERR_DIVERGENT_DOMAIN = 8,
  SF_ERR_FIT = 9,
  SF_ERR_COUNTER_TERM_MISMATCH = 10,
  SF_ERR_EXTRAPOLATION = 11,
  SF_ERR_LOCALITY = 12,
  SF_ERR_TOLERANCE = 13,
  SF_ERR_IO = 14,
  SF_ERR_INTERNAL = 99
} sf_status;

typedef enum sf_form { SF_NEUMANN = 0, SF_WEBER = 1 } sf_form;
typedef enum sf_units { SF_REDUCED = 0, SF_SI = 1 } sf_units;

typedef struct sf_quadrature_spec {
  int panel_order;
  double panels_per_unit_arclength;
  double grading;
  int grading_layers;
  double abs_tol;
  double rel_tol;
} sf_quadrature_spec;

typedef struct sf_curve sf_curve;
typedef struct sf_result sf_result;

SF_API const char* sf_version(void);
SF_API const char* sf_last_error(void);
SF_API const char* sf_status_name(sf_status status);
SF_API void sf_string_free(char* s);

/* A NULL spec pointer anywhere below means the defaults. */
SF_API void sf_quadrature_spec_default(sf_quadrature_spec* spec);

/* Curves */
SF_API sf_status sf_curve_from_json(const char* json, sf_curve** out);
SF_API sf_status sf_curve_load(const char* path, sf_curve** out);
SF_API sf_status sf_curve_to_json(const sf_curve* curve, char** out);
SF_API void sf_curve_free(sf_curve* curve);
SF_API sf_status sf_curve_length(const sf_curve* curve, double* out);
SF_API sf_status sf_curve_is_closed(const sf_curve* curve, int* out);
SF_API sf_status sf_curve_scaled(const sf_curve* curve, double factor, sf_curve** out);
SF_API sf_status sf_curve_offset(const sf_curve* curve, double delta, sf_curve** out);

/* Default schedules. `count` receives the number of values; at most `cap`
 * are written. */
SF_API sf_status sf_default_epsilon_schedule(const sf_curve* curve, double* out, size_t cap, size_t* count);
SF_API sf_status sf_default_z_schedule(double* out, size_t cap, size_t* count);
SF_API sf_status sf_default_delta_schedule(const sf_curve* curve, double* out, size_t cap, size_t* count);

/* Mutual inductance and energies of disjoint curves. */
SF_API sf_status sf_mutual_inductance(const sf_curve* a, const sf_curve* b, sf_form form, sf_units units,
                                      const sf_quadrature_spec* spec, double* out);
SF_API sf_status sf_power_alpha_energy(const sf_curve* a, const sf_curve* b, double alpha, sf_form form,
                                       const sf_quadrature_spec* spec, double* out);

/* Raw strip-excluded self integrals, (mu0/4pi) scaled, one per eps. */
SF_API sf_status sf_strip_integrals(const sf_curve* curve, sf_form form, const double* eps, size_t n, sf_units units,
                                    const sf_quadrature_spec* spec, double* out);
SF_API sf_status sf_z_energy(const sf_curve* curve, sf_form form, double z, sf_units units,
                             const sf_quadrature_spec* spec, double* out);

/* Regularized self-inductances. A NULL schedule with n = 0 uses the default. */
SF_API sf_status sf_hadamard_self(const sf_curve* curve, sf_form form, const double* eps, size_t n, sf_units units,
                                  const sf_quadrature_spec* spec, sf_result** out);
SF_API sf_status sf_continuation_self(const sf_curve* curve, sf_form form, const double* z, size_t n, sf_units units,
                                      const sf_quadrature_spec* spec, sf_result** out);
SF_API sf_status sf_parallel_limit(const sf_curve* curve, const double* delta, size_t n, sf_units units,
                                   const sf_quadrature_spec* spec, sf_result** out);
SF_API sf_status sf_power2_self(const sf_curve* curve, sf_form form, const double* eps, size_t n, sf_units units,
                                const sf_quadrature_spec* spec, sf_result** out);

/* phi(t) at base arc length s1. */
SF_API sf_status sf_phi_local(const sf_curve* curve, double s1, double t, sf_form form, double* out);
/* out[0..3] = res1, res3, expected res1, expected res3. */
SF_API sf_status sf_residues(const sf_curve* curve, sf_form form, sf_units units, const sf_quadrature_spec* spec,
                             double out[4]);

SF_API sf_status sf_result_value(const sf_result* result, double* out);
SF_API sf_status sf_result_error_estimate(const sf_result* result, double* out);
SF_API sf_status sf_result_to_json(const sf_result* result, char** out);
SF_API sf_status sf_result_from_json(const char* json, sf_result** out);
SF_API void sf_result_free(sf_result* result);

/* Solenoids. */
SF_API sf_status sf_solenoid_closed_form(double r, double length, sf_units units, double* out);
SF_API sf_status sf_solenoid_cylinder_oracle(double r, double length, sf_units units, const sf_quadrature_spec* spec,
                                             double* out);
SF_API sf_status sf_solenoid_asymptotic(double r, double length, sf_units units, double* out);
/* Per n: value[i] = H(Gamma_n), per_n2[i] = value / n^2, arc_length[i].
 * Any output pointer may be NULL. */
SF_API sf_status sf_solenoid_convergence(double r, double length, const double* n_list, size_t count, sf_form form,
                                         sf_units units, const sf_quadrature_spec* spec, double* value,
                                         double* per_n2, double* arc_length);

/* Identity suite over the curve files in `curve_dir`; the report is JSON.
 * `all_passed` receives 1 when every check met its tolerance. */
SF_API sf_status sf_verify(const char* curve_dir, const sf_quadrature_spec* spec, char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
