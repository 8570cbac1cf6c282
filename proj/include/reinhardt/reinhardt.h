#ifndef REINHARDT_H
#define REINHARDT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RH_API __declspec(dllexport)
#else
#define RH_API __attribute__((visibility("default")))
#endif

/* Status codes double as CLI exit codes. */
typedef enum {
  RH_OK = 0,
  RH_INVALID_INPUT = 1,
  RH_EMPTY_DOMAIN = 2,
  RH_BOUNDARY_INDETERMINATE = 3,
  RH_INTERNAL = 4
} rh_status;

typedef struct rh_spec rh_spec;

/* Every char** result is a NUL-terminated JSON document owned by the caller
   (release with rh_string_free). On failure *out is NULL and rh_last_error()
   describes the problem for the calling thread. */

RH_API const char* rh_version(void);
RH_API const char* rh_last_error(void);
RH_API void rh_string_free(char* s);
/* Caps the interval precision ladder, in bits (>= 64). */
RH_API rh_status rh_set_precision_cap(unsigned bits);

RH_API rh_status rh_spec_parse(const char* text, rh_spec** out);
RH_API void rh_spec_free(rh_spec* spec);
RH_API size_t rh_spec_dim(const rh_spec* spec);
/* The text the spec was parsed from, byte for byte. */
RH_API rh_status rh_spec_source(const rh_spec* spec, char** out);
/* Canonical re-rendering of the spec. */
RH_API rh_status rh_spec_canonical(const rh_spec* spec, char** out);
/* radii: comma-separated rationals. */
RH_API rh_status rh_contains(const rh_spec* spec, const char* radii, int* inside);

RH_API rh_status rh_classify(const rh_spec* spec, char** out);

/* nu: comma-separated integers, p: rational >= 1. rows: 1-based constraint
   indices forming the simplicial frame, or NULL to use all constraints. */
RH_API rh_status rh_norm_exact(const rh_spec* spec, const char* nu, const char* p, const char* rows, char** out);
/* Monte-Carlo estimate; threads = 0 uses every core. The result does not depend on threads. */
RH_API rh_status rh_norm_mc(const rh_spec* spec, const char* nu, const char* p, uint64_t samples, uint64_t seed,
                            unsigned threads, char** out);
RH_API rh_status rh_sup_norm(const rh_spec* spec, const char* nu, char** out);
/* use_mc != 0 estimates by sampling instead of the closed form. */
RH_API rh_status rh_volume(const rh_spec* spec, int use_mc, uint64_t samples, uint64_t seed, char** out);
RH_API rh_status rh_find_integrable(const rh_spec* spec, char** out);

/* exterior: comma-separated rational radii; j0 is 1-based; p_list (comma-separated)
   is used when verify != 0. */
RH_API rh_status rh_witness(const rh_spec* spec, long k, const char* exterior, size_t j0, int verify,
                            const char* p_list, char** out);

/* space: hinf, l2, lp:P, ldiamond:K, ldiamond-ak:K, ak:K, ainf, hinf-closure, hinfk:K. */
RH_API rh_status rh_spectrum(const rh_spec* spec, const char* space, long box, char** out);
RH_API rh_status rh_monomial_in_space(const rh_spec* spec, const char* nu, const char* space, char** out);

#ifdef __cplusplus
}
#endif

#endif
