/*
 * hopfroots - numerical toolkit for maps between S^3, RP^3, S^2 and RP^2:
 * mapping degrees, Hopf invariants via fiber linking, and continuation-traced
 * root sets.
 *
 * C interface over the shared library. All objects are opaque handles owned
 * by the library; every function that can fail returns an hr_status, with a
 * human-readable message available from hr_last_error() (thread-local).
 */

#ifndef HOPFROOTS_H
#define HOPFROOTS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hr_status {
  HR_OK = 0,
  HR_ERR_DEGENERATE_INPUT,
  HR_ERR_POLE_PROXIMITY,
  HR_ERR_TYPE_MISMATCH,
  HR_ERR_NON_SMOOTH_POINT,
  HR_ERR_PARITY,
  HR_ERR_IRREGULAR_VALUE,
  HR_ERR_IRREGULAR_POINT,
  HR_ERR_CRITICAL_VALUE_SEARCH,
  HR_ERR_UNSTABLE_COUNT,
  HR_ERR_CORRECTOR_DIVERGED,
  HR_ERR_SINGULAR_CURVE_POINT,
  HR_ERR_OPEN_OR_TOO_LONG,
  HR_ERR_CURVES_NOT_SEPARATED,
  HR_ERR_PROJECTION_FAILURE,
  HR_ERR_DECOMPOSITION_OVERLAP,
  HR_ERR_THEOREM_CHECK_FAILED,
  HR_ERR_CLASSIFICATION_MISMATCH,
  HR_ERR_PARSE,
  HR_ERR_IO,
  HR_ERR_INVALID_ARGUMENT,
  HR_ERR_INTERNAL
} hr_status;

/* Opaque handles. */
typedef struct hr_map hr_map;
typedef struct hr_curves hr_curves;
typedef struct hr_report hr_report;

/* Options for the degree engine. Initialize with hr_degree_opts_init. */
typedef struct hr_degree_opts {
  int seeds;               /* multistart count (default 500) */
  double newton_tol;       /* residual bound (default 1e-11) */
  int max_newton_iters;    /* default 50 */
  double dedupe_tol;       /* angular distance between roots (default 1e-6) */
  int stability_check;     /* re-run with doubled seeds (default 1) */
  uint64_t seed;           /* deterministic seeding (default 1) */
} hr_degree_opts;

/* Options for root tracing and fiber linking. */
typedef struct hr_trace_opts {
  double step;                   /* arclength step, radians (default 0.01) */
  double corrector_tol;          /* default 1e-10 */
  int max_steps;                 /* default 100000 */
  double closure_radius;         /* 0 selects step/2 */
  int min_steps_before_closure;  /* default 10 */
  int seeds;                     /* multistart count (default 200) */
  double component_dedupe;       /* Hausdorff threshold (default 1e-4) */
  uint64_t seed;                 /* default 1 */
} hr_trace_opts;

const char* hr_version(void);

/* Message for the most recent failure on this thread. */
const char* hr_last_error(void);

void hr_degree_opts_init(hr_degree_opts* opts);
void hr_trace_opts_init(hr_trace_opts* opts);

/*
 * Maps are written in a prefix composition language, e.g.
 *   "hopf"                          the fibration S3 -> S2
 *   "compose(hopf, power(3))"       h o a_3
 *   "compose(hprime, power_rp(3))"  h' o a'_3 on RP3
 * Generators: hopf, hprime, power(k), power_rp(k), cover3, cover2,
 * collapse3, const(x,y,z), antipodal, reflect, qsquare, identity,
 * identity_rp, rot_s3(i,j,angle), rot_s2(i,j,angle).
 */
hr_status hr_map_parse(const char* expr, hr_map** out);

/* Class-n representative for domain "s3"|"rp3" and target "s2"|"rp2". */
hr_status hr_map_class(const char* domain, const char* target, int n,
                       hr_map** out);

void hr_map_free(hr_map* map);

/* Space tags as lowercase strings ("s3", "s2", "rp3", "rp2"). */
const char* hr_map_domain(const hr_map* map);
const char* hr_map_target(const hr_map* map);

/* Canonical expression string; fails with HR_ERR_INVALID_ARGUMENT when the
 * buffer is too small. */
hr_status hr_map_format(const hr_map* map, char* buf, size_t cap);

/*
 * Evaluates the map. `point` carries ambient coordinates of the domain
 * (4 for S3/RP3, 3 for S2/RP2); the image is written to `out` with its
 * length in *out_len. Projective points are canonical representatives.
 */
hr_status hr_map_eval(const hr_map* map, const double* point, int point_len,
                      double out[4], int* out_len);

/* Signed mapping degree (3-dimensional targets). */
hr_status hr_degree(const hr_map* map, const hr_degree_opts* opts,
                    int* degree_out);

/* Hopf invariant of an S2-valued map on S3 via fiber linking. */
hr_status hr_hopf_invariant(const hr_map* map, const hr_trace_opts* opts,
                            int* value_out);

/*
 * Traces the components of the root set f^-1(y) for an S2-valued map.
 * y has 3 coordinates. RP3-domain maps are traced through their lift; the
 * returned points then represent antipodal classes.
 */
hr_status hr_trace_roots(const hr_map* map, const double* y, int y_len,
                         const hr_trace_opts* opts, hr_curves** out);

int hr_curves_count(const hr_curves* curves);
int hr_curve_point_count(const hr_curves* curves, int index);
int hr_curve_closed(const hr_curves* curves, int index);
double hr_curve_length(const hr_curves* curves, int index);

/* Copies vertex i as 4 doubles each into `xyzw` (capacity in doubles). */
hr_status hr_curve_points(const hr_curves* curves, int index, double* xyzw,
                          size_t cap);

/* CSV export: component,idx,x1,x2,x3,x4,sx,sy,sz with stereographic columns
 * from the pole (0,0,0,1) (fallback (0,0,0,-1) when a curve passes within
 * 1e-3 of the default). Byte-stable for fixed inputs. */
hr_status hr_curves_export_csv(const hr_curves* curves, const char* path);

void hr_curves_free(hr_curves* curves);

/*
 * Class table check: for every n in [nmin, nmax] the Hopf invariant of the
 * lifted class-n representative must equal n. On mismatch the table is still
 * returned and the status is HR_ERR_CLASSIFICATION_MISMATCH.
 */
hr_status hr_classify(int nmin, int nmax, const hr_trace_opts* opts,
                      hr_report** out);

/* Root-set report of an S2-valued map over y (3 coordinates), or of an
 * RP2-valued map over the class of y (decomposed across both lifts). */
hr_status hr_root_report(const hr_map* map, const double* y, int y_len,
                         const hr_trace_opts* opts, hr_report** out);

/* Minimal root-set demo for the class (domain, target, n); checks the
 * predicted topology and reports HR_ERR_THEOREM_CHECK_FAILED on mismatch
 * (the report is still produced). */
hr_status hr_minimal_root_demo(const char* domain, const char* target, int n,
                               const hr_trace_opts* opts, hr_report** out);

/*
 * Runs the verification suite ("paper" or "quick"). Summary and curve
 * exports are written under out_dir when it is non-NULL/non-empty. The
 * returned report carries one record per check; hr_report_ok tells whether
 * everything passed.
 */
hr_status hr_run_suite(const char* suite, uint64_t seed, const char* out_dir,
                       hr_report** out);

int hr_report_ok(const hr_report* report);
const char* hr_report_text(const hr_report* report);
const char* hr_report_json(const hr_report* report);
void hr_report_free(hr_report* report);

#ifdef __cplusplus
}
#endif

#endif /* HOPFROOTS_H */
