/*
 * C interface to the possind library: possibilistic conditional
 * independence over finite variable sets.
 *
 * Every object is an opaque handle released with its matching *_free
 * function. Functions report failures through possind_status; the message
 * of the most recent failure on the calling thread is available from
 * possind_last_error(). Strings handed out through char** parameters are
 * owned by the caller and released with possind_string_free().
 *
 * Variable subsets are comma-separated variable names ("X1,X3"); an empty
 * string or NULL is the empty set. Conjunctions are spec strings: "min",
 * "luka", "luka:pow=<p>", "prod", "prod:pow=<p>".
 */
#ifndef POSSIND_H
#define POSSIND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(POSSIND_BUILDING)
#    define POSSIND_API __declspec(dllexport)
#  else
#    define POSSIND_API __declspec(dllimport)
#  endif
#else
#  define POSSIND_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum possind_status {
  POSSIND_OK = 0,
  POSSIND_ERR_DUPLICATE_VARIABLE = 1,
  POSSIND_ERR_EMPTY_FRAME = 2,
  POSSIND_ERR_UNKNOWN_VARIABLE = 3,
  POSSIND_ERR_UNKNOWN_VALUE = 4,
  POSSIND_ERR_OUT_OF_RANGE = 5,
  POSSIND_ERR_SCOPE_MISMATCH = 6,
  POSSIND_ERR_SPACE_MISMATCH = 7,
  POSSIND_ERR_NOT_NORMALISED = 8,
  POSSIND_ERR_BAD_TRIPLET = 9,
  POSSIND_ERR_TOO_LARGE = 10,
  POSSIND_ERR_TOO_SMALL = 11,
  POSSIND_ERR_PARSE = 12,
  POSSIND_ERR_IO = 13,
  POSSIND_ERR_INVALID_ARGUMENT = 100,
  POSSIND_ERR_INTERNAL = 101
} possind_status;

typedef enum possind_relation_kind {
  POSSIND_INDEPENDENCE = 0,
  POSSIND_NONINTERACTIVITY = 1
} possind_relation_kind;

typedef enum possind_level {
  POSSIND_SEMIGRAPHOID = 0,
  POSSIND_GRAPHOID = 1
} possind_level;

/* Axiom indices for possind_axioms_verdict. */
enum {
  POSSIND_AXIOM_SYMMETRY = 0,
  POSSIND_AXIOM_DECOMPOSITION = 1,
  POSSIND_AXIOM_WEAK_UNION = 2,
  POSSIND_AXIOM_CONTRACTION = 3,
  POSSIND_AXIOM_INTERSECTION = 4
};

typedef struct possind_dist possind_dist;
typedef struct possind_evidence possind_evidence;
typedef struct possind_relation possind_relation;
typedef struct possind_axioms possind_axioms;
typedef struct possind_fuzz possind_fuzz;
typedef struct possind_checks possind_checks;

POSSIND_API const char* possind_version(void);
POSSIND_API const char* possind_status_name(possind_status status);
POSSIND_API const char* possind_last_error(void);
POSSIND_API void possind_string_free(char* s);

/* ---- distributions ---------------------------------------------------- */

POSSIND_API possind_status possind_dist_load(const char* path,
                                             possind_dist** out);
POSSIND_API possind_status possind_dist_parse(const char* json,
                                              possind_dist** out);
POSSIND_API possind_status possind_dist_to_json(const possind_dist* dist,
                                                char** out);
/* Grid-valued normalised distribution over X1..Xn with frames {0..frame-1}. */
POSSIND_API possind_status possind_dist_random(size_t variables, size_t frame,
                                               int grid, int strictly_positive,
                                               uint64_t seed,
                                               possind_dist** out);
POSSIND_API void possind_dist_free(possind_dist* dist);

POSSIND_API size_t possind_dist_size(const possind_dist* dist);
POSSIND_API int possind_dist_normalised(const possind_dist* dist);
POSSIND_API possind_status possind_dist_scope(const possind_dist* dist,
                                              char** names);
/* Entry `index` in mixed-radix order; `assignment` reads "X1=0,X2=1". */
POSSIND_API possind_status possind_dist_entry(const possind_dist* dist,
                                              size_t index, char** assignment,
                                              double* value);

POSSIND_API possind_status possind_dist_marginalize(const possind_dist* dist,
                                                    const char* keep,
                                                    possind_dist** out);
POSSIND_API possind_status possind_dist_condition(const possind_dist* dist,
                                                  const char* target,
                                                  const char* given,
                                                  const char* conjunction,
                                                  possind_dist** out);

/* ---- conjunctions ----------------------------------------------------- */

POSSIND_API possind_status possind_conjoin(const char* conjunction, double a,
                                           double b, double* out);
POSSIND_API possind_status possind_residuum(const char* conjunction, double a,
                                            double b, double* out);

/* ---- membership ------------------------------------------------------- */

POSSIND_API possind_status possind_membership(
    const possind_dist* dist, const char* a, const char* b, const char* c,
    const char* conjunction, possind_relation_kind kind, double eps,
    possind_evidence** out);
POSSIND_API int possind_evidence_verdict(const possind_evidence* ev);
POSSIND_API size_t possind_evidence_witness_count(const possind_evidence* ev);
/* `equation` is 0 for the A-side (or factorisation) equality, 1 for the
 * B-side equality of independence. */
POSSIND_API possind_status possind_evidence_witness(
    const possind_evidence* ev, size_t index, int* equation, char** point,
    double* left, double* right);
POSSIND_API void possind_evidence_free(possind_evidence* ev);

/* Closed-form membership test for the conjunction's family. */
POSSIND_API possind_status possind_characterize(
    const possind_dist* dist, const char* a, const char* b, const char* c,
    const char* conjunction, possind_relation_kind kind, double eps,
    int* verdict);

/* ---- relations and axioms --------------------------------------------- */

POSSIND_API possind_status possind_enumerate(const possind_dist* dist,
                                             const char* conjunction,
                                             possind_relation_kind kind,
                                             double eps,
                                             possind_relation** out);
POSSIND_API size_t possind_relation_size(const possind_relation* rel);
/* Number of candidate triplets that were examined. */
POSSIND_API size_t possind_relation_candidates(const possind_relation* rel);
/* Triplet text "({X1},{X2},{X3})"; members are sorted. */
POSSIND_API possind_status possind_relation_triplet(const possind_relation* rel,
                                                    size_t index, char** text);
POSSIND_API void possind_relation_free(possind_relation* rel);

POSSIND_API possind_status possind_check_axioms(const possind_relation* rel,
                                                possind_level level,
                                                possind_axioms** out);
POSSIND_API int possind_axioms_holds(const possind_axioms* ax);
/* 1 holds, 0 fails, -1 not checked at the requested level. */
POSSIND_API int possind_axioms_verdict(const possind_axioms* ax, int axiom);
POSSIND_API size_t possind_axioms_counterexample_count(const possind_axioms* ax);
/* `premises` joins premise triplets with " & ". */
POSSIND_API possind_status possind_axioms_counterexample(
    const possind_axioms* ax, size_t index, char** axiom, char** premises,
    char** conclusion);
POSSIND_API void possind_axioms_free(possind_axioms* ax);

/* ---- fuzzing ---------------------------------------------------------- */

typedef struct possind_fuzz_config {
  size_t trials;
  size_t variables;
  size_t frame;
  int grid;
  int strictly_positive;
  /* Comma-separated conjunction specs, e.g. "min,luka,prod". */
  const char* conjunctions;
  uint64_t seed;
  double eps;
  int stop_on_first_failure;
} possind_fuzz_config;

POSSIND_API void possind_fuzz_config_default(possind_fuzz_config* config);
/* `injected` distributions (may be NULL) are checked before random trials. */
POSSIND_API possind_status possind_fuzz_run(const possind_fuzz_config* config,
                                            const possind_dist* const* injected,
                                            size_t injected_count,
                                            possind_fuzz** out);
POSSIND_API size_t possind_fuzz_trials_run(const possind_fuzz* fz);
POSSIND_API size_t possind_fuzz_relations_checked(const possind_fuzz* fz);
POSSIND_API size_t possind_fuzz_triplets_checked(const possind_fuzz* fz);
POSSIND_API int possind_fuzz_aborted(const possind_fuzz* fz);
POSSIND_API size_t possind_fuzz_failure_count(const possind_fuzz* fz);
POSSIND_API possind_status possind_fuzz_failure(
    const possind_fuzz* fz, size_t index, char** property, size_t* trial,
    uint64_t* seed, char** conjunction, char** detail, char** reproducer);
POSSIND_API size_t possind_fuzz_mined_total(const possind_fuzz* fz);
POSSIND_API size_t possind_fuzz_mined_count(const possind_fuzz* fz);
POSSIND_API possind_status possind_fuzz_mined(const possind_fuzz* fz,
                                              size_t index, size_t* trial,
                                              char** conjunction, char** text);
POSSIND_API void possind_fuzz_free(possind_fuzz* fz);

/* ---- worked-example regressions --------------------------------------- */

POSSIND_API possind_status possind_worked_examples(possind_checks** out);
/* Distributions embedded for the regressions: 0 one-sided min equality,
 * 1 no-interactivity intersection failure. */
POSSIND_API possind_status possind_worked_example_dist(int which,
                                                       possind_dist** out);
POSSIND_API size_t possind_checks_count(const possind_checks* checks);
POSSIND_API possind_status possind_checks_get(const possind_checks* checks,
                                              size_t index, char** name,
                                              int* passed, char** detail);
POSSIND_API void possind_checks_free(possind_checks* checks);

#ifdef __cplusplus
}
#endif

#endif /* POSSIND_H */
