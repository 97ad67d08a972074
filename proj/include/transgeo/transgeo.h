/* C interface to the transgeo library.
 *
 * Every fallible call returns a tg_status; results go through out-parameters.
 * Objects are opaque handles released with the matching *_free function.
 * Strings returned through char** are released with tg_string_free.
 * Matrices are 9 doubles in row-major order.
 */
#ifndef TRANSGEO_H
#define TRANSGEO_H

#include <stddef.h>

#if defined(TG_BUILDING_LIBRARY)
#define TG_API __attribute__((visibility("default")))
#else
#define TG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tg_status {
  TG_OK = 0,
  TG_ERR_INVALID_ARGUMENT,
  TG_ERR_INVALID_PARAM,
  TG_ERR_NULL_VECTOR,
  TG_ERR_OUTSIDE_CONE,
  TG_ERR_NOT_TANGENT,
  TG_ERR_NOT_UNIT_TANGENT,
  TG_ERR_ZERO_PARAM,
  TG_ERR_NON_POSITIVE_PARAM,
  TG_ERR_MIXED_PARAM,
  TG_ERR_COINCIDENT_POINTS,
  TG_ERR_COINCIDENT_WITH_VERTEX,
  TG_ERR_COINCIDENT_LINES,
  TG_ERR_DEGENERATE_TRIANGLE,
  TG_ERR_NO_RIGHT_ANGLE,
  TG_ERR_INVALID_SIDES,
  TG_ERR_INSUFFICIENT_SAMPLES,
  TG_ERR_TOO_FEW_POINTS,
  TG_ERR_EVALUATOR_DOMAIN,
  TG_ERR_NO_CONVERGENCE,
  TG_ERR_ILL_CONDITIONED,
  TG_ERR_UNKNOWN_QUANTITY,
  TG_ERR_INTERNAL
} tg_status;

typedef enum tg_format { TG_FORMAT_JSON = 0, TG_FORMAT_CSV = 1 } tg_format;

/* Error name such as "OutsideCone"; "Ok" for TG_OK. */
TG_API const char* tg_status_name(tg_status status);
/* Message of the last failed call on this thread; "" if none. */
TG_API const char* tg_last_error(void);
TG_API void tg_string_free(char* s);

typedef struct tg_point tg_point;
typedef struct tg_line tg_line;
typedef struct tg_triangle tg_triangle;
typedef struct tg_table tg_table;
typedef struct tg_report tg_report;

/* form */
TG_API tg_status tg_quad_form(double t, const double v[3], double* out);
TG_API tg_status tg_bilinear_form(double t, const double u[3], const double v[3], double* out);
TG_API tg_status tg_gen_cos(double t, double s, double* out);
TG_API tg_status tg_gen_sin(double t, double s, double* out);

/* points */
TG_API tg_status tg_point_new(double t, const double v[3], tg_point** out);
TG_API void tg_point_free(tg_point* p);
TG_API tg_status tg_point_coords(const tg_point* p, double out[3]);
TG_API tg_status tg_point_param(const tg_point* p, double* t);
TG_API tg_status tg_tangent_metric(const tg_point* at, const double u[3], const double v[3],
                                   double* out);

/* metric */
TG_API tg_status tg_distance(const tg_point* a, const tg_point* b, double* out);
TG_API tg_status tg_angular_distance(const tg_point* a, const tg_point* b, double* out);
TG_API tg_status tg_angle(const tg_point* vertex, const tg_point* p, const tg_point* q,
                          double* out);
TG_API tg_status tg_unit_tangent(const tg_point* from, const tg_point* to, double out[3]);
TG_API tg_status tg_geodesic_point(const tg_point* start, const double dir[3], double s,
                                   tg_point** out);

/* lines */
TG_API tg_status tg_line_through(const tg_point* a, const tg_point* b, tg_line** out);
TG_API tg_status tg_line_from_covector(double t, const double e[3], tg_line** out);
TG_API void tg_line_free(tg_line* l);
TG_API tg_status tg_line_normal(const tg_line* l, double out[3]);
TG_API tg_status tg_on_line(const tg_line* l, const tg_point* p, double tol, int* out);
TG_API tg_status tg_intersect(const tg_line* l1, const tg_line* l2, tg_point** out);
TG_API tg_status tg_pole(const tg_line* l, tg_point** out);
TG_API tg_status tg_equator(const tg_point* p, tg_line** out);
TG_API tg_status tg_perpendicular(const tg_line* l1, const tg_line* l2, double tol, int* out);

/* isometries */
TG_API tg_status tg_is_isometry(double t, const double m[9], double tol, int* out);
TG_API tg_status tg_involution(const tg_point* p, double out[9]);
TG_API tg_status tg_stabilizer_rotation(const tg_point* p, double theta, double out[9]);
TG_API tg_status tg_coherent_translation(double t, double d, double out[9]);
/* Writes n points (3n doubles) of the circle about center through `through`. */
TG_API tg_status tg_circle_orbit(const tg_point* center, const tg_point* through, size_t n,
                                 double* out);

typedef enum tg_euclidean_class {
  TG_CLASS_IDENTITY = 0,
  TG_CLASS_TRANSLATION = 1,
  TG_CLASS_ROTATION = 2
} tg_euclidean_class;

typedef struct tg_family_report {
  int is_coherent;
  tg_euclidean_class euclidean_class;
  double fit_residual;
  double limit_shape_residual;
  double max_form_residual;
  double max_det_residual;
  double limit_matrix[9];
} tg_family_report;

/* ts[n] and ms[9n]: a sampled family t -> A(t). */
TG_API tg_status tg_check_coherent_family(const double* ts, const double* ms, size_t n,
                                          double tol, tg_family_report* out);

typedef struct tg_line_axiom_report {
  double max_deviation;
  double control_deviation;
  int certified;
} tg_line_axiom_report;

TG_API tg_status tg_line_axiom_check(const tg_point* const* points, size_t n, double tol,
                                     tg_line_axiom_report* out);

/* triangles */
typedef struct tg_measurements {
  double t;
  double a, b, c;
  double A, B, C;
  double area;
} tg_measurements;

TG_API tg_status tg_triangle_new(const tg_point* a, const tg_point* b, const tg_point* c,
                                 tg_triangle** out);
/* (0,0,1), (x,0,1), (0,y,1): right angle at A. */
TG_API tg_status tg_right_triangle(double t, double x, double y, tg_triangle** out);
/* Right angle at C = (0,0,1) with legs a = |BC| and b = |AC|. */
TG_API tg_status tg_right_triangle_from_legs(double t, double a, double b, tg_triangle** out);
TG_API void tg_triangle_free(tg_triangle* tri);
TG_API tg_status tg_triangle_vertex(const tg_triangle* tri, int index, double out[3]);
/* Relabels so the right angle is at C. */
TG_API tg_status tg_triangle_right_at_c(const tg_triangle* tri, tg_triangle** out);
TG_API tg_status tg_triangle_measure(const tg_triangle* tri, tg_measurements* out);
TG_API tg_status tg_pythagoras_check(const tg_triangle* tri, double* out);
TG_API tg_status tg_right_triangle_table(const tg_triangle* tri, double out[6]);
TG_API tg_status tg_sine_rule_ratios(const tg_triangle* tri, double out[3]);
TG_API tg_status tg_bisector_spread(const tg_triangle* tri, double* out);
TG_API tg_status tg_curvature_estimate(const tg_triangle* tri, double* out);
TG_API tg_status tg_area_euler(double t, double a, double b, double c, double* out);
/* {"a":..,"b":..,"c":..,"A":..,"B":..,"C":..,"area":..,"t":..} */
TG_API tg_status tg_measurements_json(const tg_measurements* m, char** out);

/* transition analysis */

/* Writes up to cap points of the 41-point default grid; returns the full count. */
TG_API size_t tg_default_grid(double* out, size_t cap);

/* Evaluator callback: return 0 and set *out, or nonzero when t is outside its domain. */
typedef int (*tg_eval_fn)(double t, void* ctx, double* out);

typedef struct tg_limit {
  double value;
  double error;
  double order;
  size_t points_used;
} tg_limit;

/* below = 0: limit from t > 0; otherwise from t < 0. */
TG_API tg_status tg_numeric_limit(tg_eval_fn f, void* ctx, int below, tg_limit* out);
/* coefficients receives order + 1 values. */
TG_API tg_status tg_series_fit(tg_eval_fn f, void* ctx, int order, double* coefficients,
                               double* residual);

typedef struct tg_quantity_config {
  double x, y;
  int has_points; /* use p, q for the distance quantity */
  double p[3], q[3];
} tg_quantity_config;

TG_API tg_status tg_quantity_eval(const char* name, const tg_quantity_config* cfg, double t,
                                  double* out);
TG_API tg_status tg_quantity_limit(const char* name, const tg_quantity_config* cfg, int below,
                                   tg_limit* out);
/* {"coefficients":[...],"residual":...} */
TG_API tg_status tg_quantity_series_json(const char* name, const tg_quantity_config* cfg,
                                         int order, char** out);

TG_API tg_status tg_sweep(const char* name, const tg_quantity_config* cfg, const double* grid,
                          size_t n, tg_table** out);
TG_API tg_status tg_geodesic_table(double t, const double p[3], const double q[3], int n,
                                   tg_table** out);
TG_API void tg_table_free(tg_table* table);
TG_API size_t tg_table_rows(const tg_table* table);
TG_API size_t tg_table_columns(const tg_table* table);
TG_API tg_status tg_table_value(const tg_table* table, size_t row, size_t col, double* out);
TG_API tg_status tg_table_format(const tg_table* table, tg_format fmt, char** out);

typedef struct tg_pythagoras_report {
  double x, y;
  double max_identity_residual;
  double leg_x_limit, leg_y_limit, hypotenuse_limit;
  double leg_x_limit_below, leg_y_limit_below, hypotenuse_limit_below;
  double relation_residual;
  double euclidean_residual;
  double naive_limit;
  double rearrangement_order;
} tg_pythagoras_report;

TG_API tg_status tg_pythagoras_transition(double x, double y, const double* grid, size_t n,
                                          tg_pythagoras_report* out);

/* verification battery */
typedef struct tg_check {
  const char* suite; /* valid while the report lives */
  const char* name;
  double t; /* NaN when the check is not tied to one t */
  double value;
  double tolerance;
  int passed;
} tg_check;

/* suite: "form", "metric", "group", "trig", "transition" or "all". tol < 0 keeps
 * the per-check tolerances. */
TG_API tg_status tg_verify(const char* suite, const double* grid, size_t n, double tol,
                           tg_report** out);
TG_API void tg_report_free(tg_report* report);
TG_API size_t tg_report_size(const tg_report* report);
TG_API tg_status tg_report_check(const tg_report* report, size_t index, tg_check* out);
TG_API int tg_report_all_passed(const tg_report* report);
/* Columns suite, name, t, value, tolerance, passed. */
TG_API tg_status tg_report_format(const tg_report* report, tg_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TRANSGEO_H */
