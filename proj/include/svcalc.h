#ifndef SVCALC_H
#define SVCALC_H

/* C interface to the sign-vector calculus library. Objects live behind
 * opaque handles; fallible calls return a status and leave a message
 * retrievable through svc_last_error() on the calling thread. Strings
 * produced through out-parameters are heap copies owned by the caller;
 * release them with svc_string_free(). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum svc_status {
    SVC_OK = 0,
    SVC_ERROR_INPUT = 2,    /* malformed or inconsistent input */
    SVC_ERROR_INTERNAL = 3, /* a step the theory guarantees failed to hold */
} svc_status;

typedef struct svc_system svc_system;           /* a sign-vector system */
typedef struct svc_arrangement svc_arrangement; /* a hyperplane arrangement */
typedef struct svc_report svc_report;           /* a rendered check result */

const char* svc_version(void);

/* Message for the most recent failure on this thread, empty if none.
 * The pointer stays valid until the next failing call on the thread. */
const char* svc_last_error(void);

void svc_string_free(char* s);

/* ---- systems ------------------------------------------------------- */

/* Text format: a line `elements: a b c`, then one row per vector over
 * {+,-,0}; `#` starts a comment. A system over no elements writes its
 * vector as `()`. */
svc_status svc_system_parse(const char* text, svc_system** out);
svc_status svc_system_format(const svc_system* s, char** out);
svc_status svc_system_json(const svc_system* s, char** out);
size_t svc_system_size(const svc_system* s);     /* number of vectors */
size_t svc_system_elements(const svc_system* s); /* ground set size */
void svc_system_free(svc_system* s);

/* ---- arrangements -------------------------------------------------- */

/* Text format: `dim: <d>` and `kind: central|affine`, then one hyperplane
 * per line as `label : c1 ... cd : offset` with rational entries. */
svc_status svc_arrangement_parse(const char* text, svc_arrangement** out);
void svc_arrangement_free(svc_arrangement* a);

/* All cells of the arrangement as sign vectors over its labels. */
svc_status svc_enumerate(const svc_arrangement* a, svc_system** out);

/* ---- constructions ------------------------------------------------- */

/* Central extension by a new coordinate (NULL label picks a fresh one):
 * the system at +, its opposite at -, the stabilizer at 0. */
svc_status svc_lift(const svc_system* s, const char* label, svc_system** out);

/* Members positive at `label`, with that coordinate removed. */
svc_status svc_restrict(const svc_system* s, const char* label, svc_system** out);

/* Derived systems; `which` is one of sym, asym, topes, P, N, Q, dagger. */
svc_status svc_derive(const svc_system* s, const char* which, svc_system** out);

/* Elimination sets over the system's ground set; `which` is I1, I, or B.
 * `x` and `y` are rows over the system's elements; `e` names the
 * eliminated coordinate for I1 and must be NULL otherwise. The system
 * only supplies the ground set. */
svc_status svc_elimination(const svc_system* s, const char* which, const char* x, const char* y,
                           const char* e, svc_system** out);

/* ---- checks -------------------------------------------------------- */

/* `mode` is om, aom, or com; `strategy` applies to aom only and is one of
 * axioms, dagger, both (NULL picks both). The report fails when the
 * system violates the requested definition. */
svc_status svc_check(const svc_system* s, const char* mode, const char* strategy,
                     svc_report** out);

typedef struct svc_verify_options {
    uint64_t base_seed;   /* first generation seed */
    size_t seed_count;    /* seeds base_seed .. base_seed+seed_count-1 */
    size_t max_n;         /* hyperplanes per generated arrangement */
    size_t max_dim;       /* ambient dimension bound */
    int include_fixtures; /* add the hand fixtures and their mutants */
} svc_verify_options;

void svc_verify_options_default(svc_verify_options* opt);

/* Runs the theorem suite over the generated corpus plus `extra_count`
 * caller-supplied systems. `opt` NULL means defaults. The report fails
 * when any theorem check fails; failures carry certificates. */
svc_status svc_verify(const svc_verify_options* opt, const svc_system* const* extras,
                      const char* const* extra_names, size_t extra_count, svc_report** out);

/* Demonstrates on a pair of distinct equal-support parallel vectors that
 * the composed pair (U, -V) fails to certify U + (-V) as a parallel
 * vector. Pass n1 and n2 as rows to choose the pair, or both NULL to
 * search; the input must be an affine oriented matroid. A system without
 * a qualifying pair yields a passing report that says so. */
svc_status svc_flaw_demo(const svc_system* s, const char* n1, const char* n2, svc_report** out);

/* ---- reports ------------------------------------------------------- */

int svc_report_passed(const svc_report* r); /* 1 pass, 0 fail */
svc_status svc_report_text(const svc_report* r, char** out);
svc_status svc_report_json(const svc_report* r, char** out);
void svc_report_free(svc_report* r);

#ifdef __cplusplus
}
#endif

#endif /* SVCALC_H */
