#include "transgeo/transgeo.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "transgeo/error.hpp"
#include "transgeo/form.hpp"
#include "transgeo/group.hpp"
#include "transgeo/io.hpp"
#include "transgeo/metric.hpp"
#include "transgeo/quantity.hpp"
#include "transgeo/transition.hpp"
#include "transgeo/triangle.hpp"
#include "transgeo/verify.hpp"

using namespace transgeo;

static_assert(static_cast<int>(TG_ERR_UNKNOWN_QUANTITY) ==
              static_cast<int>(ErrorCode::UnknownQuantity));
static_assert(static_cast<int>(TG_ERR_INVALID_ARGUMENT) ==
              static_cast<int>(ErrorCode::InvalidArgument));

struct tg_point {
  ModelPoint p;
};
struct tg_line {
  Line l;
};
struct tg_triangle {
  Triangle tri;
};
struct tg_table {
  DataTable table;
};
struct tg_report {
  std::vector<Check> checks;
};

namespace {

thread_local std::string last_error;

tg_status set_error(tg_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
tg_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return TG_OK;
  } catch (const GeometryError& e) {
    return set_error(static_cast<tg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(TG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(TG_ERR_INTERNAL, e.what());
  }
}

template <class... P>
void require(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) fail(ErrorCode::InvalidArgument, "null pointer argument");
}

Vec3 vec(const double v[3]) { return {v[0], v[1], v[2]}; }

void put(const Vec3& v, double out[3]) {
  out[0] = v.x;
  out[1] = v.y;
  out[2] = v.z;
}

void put(const Mat3& m, double out[9]) {
  for (int i = 0; i < 9; ++i) out[i] = m.a[i];
}

Mat3 mat(const double m[9]) {
  Mat3 out;
  for (int i = 0; i < 9; ++i) out.a[i] = m[i];
  return out;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

QuantityConfig config(const tg_quantity_config* cfg) {
  QuantityConfig q;
  if (!cfg) return q;
  q.x = cfg->x;
  q.y = cfg->y;
  if (cfg->has_points) {
    q.p = vec(cfg->p);
    q.q = vec(cfg->q);
  }
  return q;
}

Evaluator callback(tg_eval_fn f, void* ctx) {
  return [f, ctx](double t) {
    double v = 0.0;
    if (f(t, ctx, &v) != 0) fail(ErrorCode::EvaluatorDomainError, "callback rejected t");
    return v;
  };
}

void put(const LimitEstimate& e, tg_limit* out) {
  out->value = e.value;
  out->error = e.error;
  out->order = e.order;
  out->points_used = e.points_used;
}

}  // namespace

extern "C" {

const char* tg_status_name(tg_status status) {
  if (status == TG_OK) return "Ok";
  if (status == TG_ERR_INTERNAL) return "Internal";
  if (status < TG_OK || status > TG_ERR_INTERNAL) return "Unknown";
  return error_name(static_cast<ErrorCode>(status)).data();
}

const char* tg_last_error(void) { return last_error.c_str(); }

void tg_string_free(char* s) { std::free(s); }

tg_status tg_quad_form(double t, const double v[3], double* out) {
  return guard([&] {
    require(v, out);
    *out = quad_form(Param(t), vec(v));
  });
}

tg_status tg_bilinear_form(double t, const double u[3], const double v[3], double* out) {
  return guard([&] {
    require(u, v, out);
    *out = bilinear_form(Param(t), vec(u), vec(v));
  });
}

tg_status tg_gen_cos(double t, double s, double* out) {
  return guard([&] {
    require(out);
    *out = gen_cos(Param(t), s);
  });
}

tg_status tg_gen_sin(double t, double s, double* out) {
  return guard([&] {
    require(out);
    *out = gen_sin(Param(t), s);
  });
}

tg_status tg_point_new(double t, const double v[3], tg_point** out) {
  return guard([&] {
    require(v, out);
    *out = new tg_point{normalize_point(Param(t), vec(v))};
  });
}

void tg_point_free(tg_point* p) { delete p; }

tg_status tg_point_coords(const tg_point* p, double out[3]) {
  return guard([&] {
    require(p, out);
    put(p->p.rep(), out);
  });
}

tg_status tg_point_param(const tg_point* p, double* t) {
  return guard([&] {
    require(p, t);
    *t = p->p.t();
  });
}

tg_status tg_tangent_metric(const tg_point* at, const double u[3], const double v[3],
                            double* out) {
  return guard([&] {
    require(at, u, v, out);
    *out = tangent_metric(at->p, vec(u), vec(v));
  });
}

tg_status tg_distance(const tg_point* a, const tg_point* b, double* out) {
  return guard([&] {
    require(a, b, out);
    *out = distance(a->p, b->p);
  });
}

tg_status tg_angular_distance(const tg_point* a, const tg_point* b, double* out) {
  return guard([&] {
    require(a, b, out);
    *out = angular_distance(a->p, b->p);
  });
}

tg_status tg_angle(const tg_point* vertex, const tg_point* p, const tg_point* q, double* out) {
  return guard([&] {
    require(vertex, p, q, out);
    *out = angle(vertex->p, p->p, q->p);
  });
}

tg_status tg_unit_tangent(const tg_point* from, const tg_point* to, double out[3]) {
  return guard([&] {
    require(from, to, out);
    put(unit_tangent_toward(from->p, to->p), out);
  });
}

tg_status tg_geodesic_point(const tg_point* start, const double dir[3], double s,
                            tg_point** out) {
  return guard([&] {
    require(start, dir, out);
    *out = new tg_point{geodesic_point(start->p, vec(dir), s)};
  });
}

tg_status tg_line_through(const tg_point* a, const tg_point* b, tg_line** out) {
  return guard([&] {
    require(a, b, out);
    *out = new tg_line{line_through(a->p, b->p)};
  });
}

tg_status tg_line_from_covector(double t, const double e[3], tg_line** out) {
  return guard([&] {
    require(e, out);
    *out = new tg_line{Line::from_covector(Param(t), vec(e))};
  });
}

void tg_line_free(tg_line* l) { delete l; }

tg_status tg_line_normal(const tg_line* l, double out[3]) {
  return guard([&] {
    require(l, out);
    put(l->l.normal(), out);
  });
}

tg_status tg_on_line(const tg_line* l, const tg_point* p, double tol, int* out) {
  return guard([&] {
    require(l, p, out);
    *out = on_line(l->l, p->p, tol) ? 1 : 0;
  });
}

tg_status tg_intersect(const tg_line* l1, const tg_line* l2, tg_point** out) {
  return guard([&] {
    require(l1, l2, out);
    *out = new tg_point{intersect(l1->l, l2->l)};
  });
}

tg_status tg_pole(const tg_line* l, tg_point** out) {
  return guard([&] {
    require(l, out);
    *out = new tg_point{pole(l->l)};
  });
}

tg_status tg_equator(const tg_point* p, tg_line** out) {
  return guard([&] {
    require(p, out);
    *out = new tg_line{equator(p->p)};
  });
}

tg_status tg_perpendicular(const tg_line* l1, const tg_line* l2, double tol, int* out) {
  return guard([&] {
    require(l1, l2, out);
    *out = perpendicular(l1->l, l2->l, tol) ? 1 : 0;
  });
}

tg_status tg_is_isometry(double t, const double m[9], double tol, int* out) {
  return guard([&] {
    require(m, out);
    *out = is_isometry(Param(t), mat(m), tol) ? 1 : 0;
  });
}

tg_status tg_involution(const tg_point* p, double out[9]) {
  return guard([&] {
    require(p, out);
    put(involution(p->p).matrix(), out);
  });
}

tg_status tg_stabilizer_rotation(const tg_point* p, double theta, double out[9]) {
  return guard([&] {
    require(p, out);
    put(stabilizer_rotation(p->p, theta).matrix(), out);
  });
}

tg_status tg_coherent_translation(double t, double d, double out[9]) {
  return guard([&] {
    require(out);
    put(coherent_translation(d, Param(t)).matrix(), out);
  });
}

tg_status tg_circle_orbit(const tg_point* center, const tg_point* through, size_t n,
                          double* out) {
  return guard([&] {
    require(center, through, out);
    const auto pts = circle_orbit(center->p, through->p, n);
    for (std::size_t i = 0; i < pts.size(); ++i) put(pts[i].rep(), out + 3 * i);
  });
}

tg_status tg_check_coherent_family(const double* ts, const double* ms, size_t n, double tol,
                                   tg_family_report* out) {
  return guard([&] {
    require(ts, ms, out);
    std::vector<FamilySample> samples;
    for (std::size_t i = 0; i < n; ++i) samples.push_back({ts[i], mat(ms + 9 * i)});
    const CoherentFamilyReport r = check_coherent_family(samples, tol);
    out->is_coherent = r.is_coherent ? 1 : 0;
    out->euclidean_class = static_cast<tg_euclidean_class>(r.euclidean_class);
    out->fit_residual = r.fit_residual;
    out->limit_shape_residual = r.limit_shape_residual;
    out->max_form_residual = 0.0;
    out->max_det_residual = 0.0;
    for (const SampleResidual& s : r.samples) {
      out->max_form_residual = std::max(out->max_form_residual, s.residual_qt);
      out->max_det_residual = std::max(out->max_det_residual, s.residual_det);
    }
    put(r.limit_matrix, out->limit_matrix);
  });
}

tg_status tg_line_axiom_check(const tg_point* const* points, size_t n, double tol,
                              tg_line_axiom_report* out) {
  return guard([&] {
    require(points, out);
    std::vector<ModelPoint> pts;
    for (std::size_t i = 0; i < n; ++i) {
      require(points[i]);
      pts.push_back(points[i]->p);
    }
    const LineAxiomReport r = line_axiom_check(pts, tol);
    out->max_deviation = r.max_deviation;
    out->control_deviation = r.control_deviation;
    out->certified = r.certified ? 1 : 0;
  });
}

tg_status tg_triangle_new(const tg_point* a, const tg_point* b, const tg_point* c,
                          tg_triangle** out) {
  return guard([&] {
    require(a, b, c, out);
    *out = new tg_triangle{Triangle::make(a->p, b->p, c->p)};
  });
}

tg_status tg_right_triangle(double t, double x, double y, tg_triangle** out) {
  return guard([&] {
    require(out);
    *out = new tg_triangle{build_right_triangle(Param(t), x, y)};
  });
}

tg_status tg_right_triangle_from_legs(double t, double a, double b, tg_triangle** out) {
  return guard([&] {
    require(out);
    *out = new tg_triangle{right_triangle_from_legs(Param(t), a, b)};
  });
}

void tg_triangle_free(tg_triangle* tri) { delete tri; }

tg_status tg_triangle_vertex(const tg_triangle* tri, int index, double out[3]) {
  return guard([&] {
    require(tri, out);
    if (index < 0 || index > 2) fail(ErrorCode::InvalidArgument, "vertex index must be 0, 1 or 2");
    put(tri->tri.vertices()[static_cast<std::size_t>(index)].rep(), out);
  });
}

tg_status tg_triangle_right_at_c(const tg_triangle* tri, tg_triangle** out) {
  return guard([&] {
    require(tri, out);
    *out = new tg_triangle{with_right_angle_at_c(tri->tri)};
  });
}

tg_status tg_triangle_measure(const tg_triangle* tri, tg_measurements* out) {
  return guard([&] {
    require(tri, out);
    const TriangleMeasurements m = measure(tri->tri);
    *out = {m.t, m.a, m.b, m.c, m.A, m.B, m.C, m.area};
  });
}

tg_status tg_pythagoras_check(const tg_triangle* tri, double* out) {
  return guard([&] {
    require(tri, out);
    *out = pythagoras_check(tri->tri);
  });
}

tg_status tg_right_triangle_table(const tg_triangle* tri, double out[6]) {
  return guard([&] {
    require(tri, out);
    const auto r = right_triangle_table_check(tri->tri);
    std::copy(r.begin(), r.end(), out);
  });
}

tg_status tg_sine_rule_ratios(const tg_triangle* tri, double out[3]) {
  return guard([&] {
    require(tri, out);
    const auto r = sine_rule_ratios(tri->tri);
    std::copy(r.begin(), r.end(), out);
  });
}

tg_status tg_bisector_spread(const tg_triangle* tri, double* out) {
  return guard([&] {
    require(tri, out);
    *out = angle_bisector_spread(tri->tri.vertices());
  });
}

tg_status tg_curvature_estimate(const tg_triangle* tri, double* out) {
  return guard([&] {
    require(tri, out);
    *out = curvature_estimate(tri->tri);
  });
}

tg_status tg_area_euler(double t, double a, double b, double c, double* out) {
  return guard([&] {
    require(out);
    *out = area_euler(Param(t), a, b, c);
  });
}

tg_status tg_measurements_json(const tg_measurements* m, char** out) {
  return guard([&] {
    require(m, out);
    const std::pair<const char*, double> fields[] = {{"a", m->a}, {"b", m->b}, {"c", m->c},
                                                     {"A", m->A}, {"B", m->B}, {"C", m->C},
                                                     {"area", m->area}, {"t", m->t}};
    std::string s = "{";
    for (const auto& [k, v] : fields) {
      if (s.size() > 1) s += ",";
      s += json_string(k) + ":" + format_number(v, true);
    }
    *out = dup(s + "}\n");
  });
}

size_t tg_default_grid(double* out, size_t cap) {
  const std::vector<double> g = default_grid();
  if (out)
    for (std::size_t i = 0; i < std::min(cap, g.size()); ++i) out[i] = g[i];
  return g.size();
}

tg_status tg_numeric_limit(tg_eval_fn f, void* ctx, int below, tg_limit* out) {
  return guard([&] {
    if (!f) fail(ErrorCode::InvalidArgument, "null evaluator");
    require(out);
    put(numeric_limit(callback(f, ctx), below ? Side::Below : Side::Above), out);
  });
}

tg_status tg_series_fit(tg_eval_fn f, void* ctx, int order, double* coefficients,
                        double* residual) {
  return guard([&] {
    if (!f) fail(ErrorCode::InvalidArgument, "null evaluator");
    require(coefficients);
    const SeriesEstimate e = series_fit(callback(f, ctx), order);
    std::copy(e.coefficients.begin(), e.coefficients.end(), coefficients);
    if (residual) *residual = e.residual;
  });
}

tg_status tg_quantity_eval(const char* name, const tg_quantity_config* cfg, double t,
                           double* out) {
  return guard([&] {
    require(name, out);
    *out = scalar_quantity(name, config(cfg))(t);
  });
}

tg_status tg_quantity_limit(const char* name, const tg_quantity_config* cfg, int below,
                            tg_limit* out) {
  return guard([&] {
    require(name, out);
    put(numeric_limit(scalar_quantity(name, config(cfg)), below ? Side::Below : Side::Above),
        out);
  });
}

tg_status tg_quantity_series_json(const char* name, const tg_quantity_config* cfg, int order,
                                  char** out) {
  return guard([&] {
    require(name, out);
    *out = dup(series_fit(scalar_quantity(name, config(cfg)), order).to_json());
  });
}

tg_status tg_sweep(const char* name, const tg_quantity_config* cfg, const double* grid,
                   size_t n, tg_table** out) {
  return guard([&] {
    require(name, grid, out);
    if (n == 0) fail(ErrorCode::InvalidArgument, "empty grid");
    *out = new tg_table{sweep_table(name, config(cfg), std::span<const double>(grid, n))};
  });
}

tg_status tg_geodesic_table(double t, const double p[3], const double q[3], int n,
                            tg_table** out) {
  return guard([&] {
    require(p, q, out);
    *out = new tg_table{geodesic_polyline(t, vec(p), vec(q), n)};
  });
}

void tg_table_free(tg_table* table) { delete table; }

size_t tg_table_rows(const tg_table* table) { return table ? table->table.rows.size() : 0; }

size_t tg_table_columns(const tg_table* table) {
  return table ? table->table.columns.size() : 0;
}

tg_status tg_table_value(const tg_table* table, size_t row, size_t col, double* out) {
  return guard([&] {
    require(table, out);
    const auto& rows = table->table.rows;
    if (row >= rows.size() || col >= rows[row].size())
      fail(ErrorCode::InvalidArgument, "table index out of range");
    *out = rows[row][col];
  });
}

tg_status tg_table_format(const tg_table* table, tg_format fmt, char** out) {
  return guard([&] {
    require(table, out);
    *out = dup(fmt == TG_FORMAT_CSV ? table->table.to_csv() : table->table.to_json());
  });
}

tg_status tg_pythagoras_transition(double x, double y, const double* grid, size_t n,
                                   tg_pythagoras_report* out) {
  return guard([&] {
    require(grid, out);
    const PythagorasTransitionReport r =
        pythagoras_transition_check(x, y, std::span<const double>(grid, n));
    *out = {r.x,
            r.y,
            r.max_identity_residual,
            r.leg_x_limit,
            r.leg_y_limit,
            r.hypotenuse_limit,
            r.leg_x_limit_below,
            r.leg_y_limit_below,
            r.hypotenuse_limit_below,
            r.relation_residual,
            r.euclidean_residual,
            r.naive_limit,
            r.rearrangement_order};
  });
}

tg_status tg_verify(const char* suite, const double* grid, size_t n, double tol,
                    tg_report** out) {
  return guard([&] {
    require(suite, grid, out);
    std::optional<double> override;
    if (tol >= 0.0) override = tol;
    *out = new tg_report{run_verification(suite, std::span<const double>(grid, n), override)};
  });
}

void tg_report_free(tg_report* report) { delete report; }

size_t tg_report_size(const tg_report* report) { return report ? report->checks.size() : 0; }

tg_status tg_report_check(const tg_report* report, size_t index, tg_check* out) {
  return guard([&] {
    require(report, out);
    if (index >= report->checks.size()) fail(ErrorCode::InvalidArgument, "check index out of range");
    const Check& c = report->checks[index];
    *out = {c.suite.c_str(), c.name.c_str(), c.t, c.value, c.tolerance, c.passed ? 1 : 0};
  });
}

int tg_report_all_passed(const tg_report* report) {
  if (!report) return 0;
  return std::all_of(report->checks.begin(), report->checks.end(),
                     [](const Check& c) { return c.passed; })
             ? 1
             : 0;
}

tg_status tg_report_format(const tg_report* report, tg_format fmt, char** out) {
  return guard([&] {
    require(report, out);
    std::string s;
    if (fmt == TG_FORMAT_CSV) {
      s = "suite,name,t,value,tolerance,passed\n";
      for (const Check& c : report->checks)
        s += c.suite + "," + c.name + "," + format_number(c.t) + "," + format_number(c.value) +
             "," + format_number(c.tolerance) + "," + (c.passed ? "1" : "0") + "\n";
    } else {
      s = "{\"passed\":" + std::string(tg_report_all_passed(report) ? "true" : "false") +
          ",\"checks\":[";
      bool first = true;
      for (const Check& c : report->checks) {
        s += first ? "" : ",";
        first = false;
        s += "{\"suite\":" + json_string(c.suite) + ",\"name\":" + json_string(c.name) +
             ",\"t\":" + format_number(c.t, true) + ",\"value\":" + format_number(c.value, true) +
             ",\"tolerance\":" + format_number(c.tolerance, true) +
             ",\"passed\":" + (c.passed ? "true" : "false") + "}";
      }
      s += "]}\n";
    }
    *out = dup(s);
  });
}

}  // extern "C"
