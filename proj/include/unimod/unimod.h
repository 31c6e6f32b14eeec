/* C interface to the unimod library.
 *
 * Handles are opaque and owned by the caller (free with the matching
 * *_free). Functions returning char** hand back a NUL-terminated JSON string
 * that must be released with um_string_free. On failure the out-parameter is
 * left untouched and um_last_error() describes the problem (thread-local). */
#ifndef UNIMOD_H
#define UNIMOD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define UM_API __declspec(dllexport)
#elif defined(__GNUC__)
#define UM_API __attribute__((visibility("default")))
#else
#define UM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum um_status {
  UM_OK = 0,
  UM_ERR_INVALID_ARGUMENT = 1,
  UM_ERR_DIMENSION_MISMATCH = 2,
  UM_ERR_DEGENERATE_FORM = 3,
  UM_ERR_NOT_APPLICABLE = 4,
  UM_ERR_FORM_MISMATCH = 5,
  UM_ERR_NOT_INTEGRAL = 6,
  UM_ERR_INCONSISTENT_INPUT = 7,
  UM_ERR_BUDGET_EXHAUSTED = 8,
  UM_ERR_VERIFICATION_FAILED = 9,
  UM_ERR_PARSE = 10,
  UM_ERR_INTERNAL = 11
} um_status;

typedef struct um_form um_form;
typedef struct um_isometry um_isometry;

UM_API const char* um_version(void);
UM_API const char* um_status_name(um_status status);
/* Message of the last failing call on this thread; "" if none. */
UM_API const char* um_last_error(void);
UM_API void um_string_free(char* s);

/* Forms. `text` is shorthand ("2U+E8", "<1>+2<-1>") or JSON ({"gram": ...}
 * or a bare matrix). `entries` is a row-major dim x dim matrix. */
UM_API um_status um_form_parse(const char* text, um_form** out);
UM_API um_status um_form_from_gram(const int64_t* entries, size_t dim, um_form** out);
UM_API void um_form_free(um_form* form);
UM_API size_t um_form_dim(const um_form* form);
UM_API um_status um_form_to_json(const um_form* form, char** out);
/* Invariants, plus the canonical representative for indefinite forms. */
UM_API um_status um_classify(const um_form* form, char** out);

/* Isometries of a form. */
UM_API um_status um_isometry_create(const um_form* form, const int64_t* entries, size_t dim, um_isometry** out);
UM_API um_status um_isometry_reflection(const um_form* form, const int64_t* gamma, size_t dim, um_isometry** out);
/* g after h. */
UM_API um_status um_isometry_compose(const um_isometry* g, const um_isometry* h, um_isometry** out);
UM_API void um_isometry_free(um_isometry* g);
UM_API um_status um_isometry_to_json(const um_isometry* g, char** out);
UM_API um_status um_isometry_component(const um_isometry* g, int* eps_det, int* eps_plus);
UM_API um_status um_isometry_spinor_norm(const um_isometry* g, int* out);

/* Orbit tools. Vectors and sets are JSON arrays of integers. */
UM_API um_status um_escape(const um_form* form, const char* start_json, size_t steps, char** out);
UM_API um_status um_char_family(const um_form* form, int64_t k, size_t count, char** out);
UM_API um_status um_planes(const um_form* form, long bound, char** out);
UM_API um_status um_coset_certificate(const um_form* form, const char* set_json, size_t n, char** out);

/* Exterior square of a 4x4 integer matrix given as JSON. */
UM_API um_status um_lambda2(const char* matrix_json, char** out);

/* Topology. `phi_t_json` may be NULL; `witness` 0 skips the plane orbit. */
UM_API um_status um_kodaira(int64_t k_dot_omega, int64_t k_squared, char** out);
UM_API um_status um_cy_table(char** out);
UM_API um_status um_kt(int64_t lambda, const char* phi_t_json, size_t witness, uint64_t seed, char** out);

/* Target is one of thm2.2, prop2.4, lemma2.5, lemma2.6, prop4.2, prop4.3,
 * def1.1, all. The report's "status" field says pass or fail. */
UM_API um_status um_verify_paper(const char* target, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* UNIMOD_H */
