// transgeo: queries, sweeps and checks on the transitional geometries E_t.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <system_error>
#include <vector>

#include "transgeo/transgeo.h"

namespace {

struct Failure {
  int code;
};

void check(tg_status s) {
  if (s != TG_OK) {
    std::cerr << "error: " << tg_last_error() << "\n";
    throw Failure{1};
  }
}

[[noreturn]] void usage(const std::string& msg) {
  std::cerr << "error: InvalidArgument: " << msg << "\n";
  throw Failure{1};
}

double parse_real(const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) usage("not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Vec {
  double v[3];
};

Vec parse_vec(const std::string& text, const char* flag) {
  const std::vector<double> xs = parse_list(text);
  if (xs.size() != 3) usage(std::string(flag) + " expects x,y,z");
  return {{xs[0], xs[1], xs[2]}};
}

std::vector<double> parse_grid(const std::string& text) {
  if (text == "default") {
    std::vector<double> g(tg_default_grid(nullptr, 0));
    tg_default_grid(g.data(), g.size());
    return g;
  }
  return parse_list(text);
}

std::string num(double v) {
  // Same 17-digit rendering as the library tables.
  char buf[40];
  if (!std::isfinite(v)) return "null";
  v += 0.0;
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void emit(char* s) {
  std::fputs(s, stdout);
  tg_string_free(s);
}

struct Point {
  tg_point* p = nullptr;
  Point(double t, const Vec& v) { check(tg_point_new(t, v.v, &p)); }
  ~Point() { tg_point_free(p); }
  Point(const Point&) = delete;
  Point& operator=(const Point&) = delete;
};

struct Options {
  double t = 0.0;
  std::string p, q, r;
  double x = 1.0, y = 1.0;
  bool right = false;
  std::string format = "json";
  std::string grid = "default";
  std::string suite = "all";
  double tol = -1.0;
  std::string quantity = "distance";
  int order = 4;
  int n = 16;
  std::string kind = "involution";
  double theta = 0.0;
  double d = 0.0;
  std::string limit;
};

bool csv(const Options& o) { return o.format == "csv"; }

void print_scalar(const Options& o, const char* key, double value) {
  if (csv(o))
    std::cout << "t," << key << "\n" << num(o.t) << "," << num(value) << "\n";
  else
    std::cout << "{\"t\":" << num(o.t) << ",\"" << key << "\":" << num(value) << "}\n";
}

Vec need(const std::string& text, const char* flag) {
  if (text.empty()) usage(std::string(flag) + " is required");
  return parse_vec(text, flag);
}

tg_quantity_config quantity_config(const Options& o) {
  tg_quantity_config cfg{o.x, o.y, 0, {0, 0, 0}, {0, 0, 0}};
  if (!o.p.empty() || !o.q.empty()) {
    const Vec p = need(o.p, "--p");
    const Vec q = need(o.q, "--q");
    cfg.has_points = 1;
    for (int i = 0; i < 3; ++i) {
      cfg.p[i] = p.v[i];
      cfg.q[i] = q.v[i];
    }
  }
  return cfg;
}

int cmd_dist(const Options& o) {
  Point a(o.t, need(o.p, "--p"));
  Point b(o.t, need(o.q, "--q"));
  double d = 0.0;
  check(tg_distance(a.p, b.p, &d));
  print_scalar(o, "distance", d);
  return 0;
}

int cmd_angle(const Options& o) {
  Point v(o.t, need(o.p, "--p"));
  Point a(o.t, need(o.q, "--q"));
  Point b(o.t, need(o.r, "--r"));
  double ang = 0.0;
  check(tg_angle(v.p, a.p, b.p, &ang));
  print_scalar(o, "angle", ang);
  return 0;
}

int cmd_triangle(const Options& o) {
  tg_triangle* tri = nullptr;
  if (o.right) {
    tg_triangle* built = nullptr;
    check(tg_right_triangle(o.t, o.x, o.y, &built));
    const tg_status s = tg_triangle_right_at_c(built, &tri);
    tg_triangle_free(built);
    check(s);
  } else {
    Point a(o.t, need(o.p, "--p"));
    Point b(o.t, need(o.q, "--q"));
    Point c(o.t, need(o.r, "--r"));
    check(tg_triangle_new(a.p, b.p, c.p, &tri));
  }
  tg_measurements m{};
  const tg_status s = tg_triangle_measure(tri, &m);
  tg_triangle_free(tri);
  check(s);
  if (csv(o)) {
    std::cout << "a,b,c,A,B,C,area,t\n"
              << num(m.a) << "," << num(m.b) << "," << num(m.c) << "," << num(m.A) << ","
              << num(m.B) << "," << num(m.C) << "," << num(m.area) << "," << num(m.t) << "\n";
  } else {
    char* out = nullptr;
    check(tg_measurements_json(&m, &out));
    emit(out);
  }
  return 0;
}

int print_table(const Options& o, tg_table* table) {
  char* out = nullptr;
  const tg_status s = tg_table_format(table, csv(o) ? TG_FORMAT_CSV : TG_FORMAT_JSON, &out);
  tg_table_free(table);
  check(s);
  emit(out);
  return 0;
}

int cmd_geodesic(const Options& o) {
  const Vec p = need(o.p, "--p");
  const Vec q = need(o.q, "--q");
  tg_table* table = nullptr;
  check(tg_geodesic_table(o.t, p.v, q.v, o.n, &table));
  return print_table(o, table);
}

int cmd_sweep(const Options& o) {
  const tg_quantity_config cfg = quantity_config(o);
  const std::vector<double> grid = parse_grid(o.grid);
  tg_table* table = nullptr;
  check(tg_sweep(o.quantity.c_str(), &cfg, grid.data(), grid.size(), &table));
  return print_table(o, table);
}

int cmd_series(const Options& o) {
  const tg_quantity_config cfg = quantity_config(o);
  if (o.limit.empty()) {
    char* out = nullptr;
    check(tg_quantity_series_json(o.quantity.c_str(), &cfg, o.order, &out));
    emit(out);
    return 0;
  }
  if (o.limit != "above" && o.limit != "below") usage("--limit expects above or below");
  tg_limit lim{};
  check(tg_quantity_limit(o.quantity.c_str(), &cfg, o.limit == "below", &lim));
  if (csv(o))
    std::cout << "value,error,order,points\n"
              << num(lim.value) << "," << num(lim.error) << "," << num(lim.order) << ","
              << lim.points_used << "\n";
  else
    std::cout << "{\"value\":" << num(lim.value) << ",\"error\":" << num(lim.error)
              << ",\"order\":" << num(lim.order) << ",\"points\":" << lim.points_used << "}\n";
  return 0;
}

int cmd_verify(const Options& o) {
  const std::vector<double> grid = parse_grid(o.grid);
  tg_report* report = nullptr;
  check(tg_verify(o.suite.c_str(), grid.data(), grid.size(), o.tol, &report));
  const int passed = tg_report_all_passed(report);
  char* out = nullptr;
  const tg_status s = tg_report_format(report, csv(o) ? TG_FORMAT_CSV : TG_FORMAT_JSON, &out);
  tg_report_free(report);
  check(s);
  emit(out);
  return passed ? 0 : 2;
}

int cmd_isometry(const Options& o) {
  double m[9];
  if (o.kind == "translation") {
    check(tg_coherent_translation(o.t, o.d, m));
  } else {
    Point p(o.t, o.p.empty() ? Vec{{0.0, 0.0, 1.0}} : parse_vec(o.p, "--p"));
    if (o.kind == "involution")
      check(tg_involution(p.p, m));
    else if (o.kind == "rotation")
      check(tg_stabilizer_rotation(p.p, o.theta, m));
    else
      usage("--kind expects involution, rotation or translation");
  }
  std::string row;
  for (int i = 0; i < 9; ++i) row += (i ? "," : "") + num(m[i]);
  if (csv(o))
    std::cout << row << "\n";
  else
    std::cout << "{\"kind\":\"" << o.kind << "\",\"t\":" << num(o.t) << ",\"matrix\":[" << row
              << "]}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distances, triangles and t -> 0 transitions in the geometries E_t"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_t = [&](CLI::App* c) {
    c->add_option("--t", o.t, "parameter in [-1, 1]")->check(CLI::Range(-1.0, 1.0));
  };
  const auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };
  const auto add_grid = [&](CLI::App* c) {
    c->add_option("--grid,--t-grid", o.grid, "comma list of t values or \"default\" (41 points)")
        ->capture_default_str();
  };

  auto* dist = app.add_subcommand("dist", "distance between two rays");
  add_t(dist);
  dist->add_option("--p", o.p, "first ray x,y,z");
  dist->add_option("--q", o.q, "second ray x,y,z");
  add_format(dist);

  auto* ang = app.add_subcommand("angle", "angle at p between the arcs toward q and r");
  add_t(ang);
  ang->add_option("--p", o.p, "vertex ray x,y,z");
  ang->add_option("--q", o.q, "ray x,y,z");
  ang->add_option("--r", o.r, "ray x,y,z");
  add_format(ang);

  auto* tri = app.add_subcommand(
      "triangle", "measurements a,b,c,A,B,C,area,t of p,q,r, or of the right triangle\n"
                  "(0,0,1),(x,0,1),(0,y,1) relabeled so the right angle is C");
  add_t(tri);
  tri->add_option("--p", o.p, "vertex A ray x,y,z");
  tri->add_option("--q", o.q, "vertex B ray x,y,z");
  tri->add_option("--r", o.r, "vertex C ray x,y,z");
  tri->add_flag("--right", o.right, "use the right triangle built from --x, --y");
  tri->add_option("--x", o.x, "ray parameter of (x,0,1)");
  tri->add_option("--y", o.y, "ray parameter of (0,y,1)");
  add_format(tri);

  auto* geo = app.add_subcommand("geodesic", "polyline of the geodesic p -> q, columns s,x,y,z");
  add_t(geo);
  geo->add_option("--p", o.p, "start ray x,y,z");
  geo->add_option("--q", o.q, "end ray x,y,z");
  geo->add_option("--n", o.n, "number of segments")->capture_default_str();
  add_format(geo);

  auto* sw = app.add_subcommand(
      "sweep",
      "evaluate a quantity over a t-grid\n"
      "  distance, hypotenuse, angle, angle-b, area, pyth-residual, euler-expansion: columns t,value\n"
      "  table-residuals: columns t,r1..r6\n"
      "  surface-profile: columns t,x,z (y = 0 section of the model surface)");
  sw->add_option("--quantity", o.quantity, "quantity name")->capture_default_str();
  sw->add_option("--x", o.x, "ray parameter of (x,0,1)")->capture_default_str();
  sw->add_option("--y", o.y, "ray parameter of (0,y,1)")->capture_default_str();
  sw->add_option("--p", o.p, "first ray for distance");
  sw->add_option("--q", o.q, "second ray for distance");
  add_grid(sw);
  add_format(sw);

  auto* se = app.add_subcommand("series", "Taylor coefficients in t, or a one-sided limit");
  se->add_option("--quantity", o.quantity, "quantity name")->capture_default_str();
  se->add_option("--order", o.order, "polynomial degree, at most 4")->capture_default_str();
  se->add_option("--x", o.x, "ray parameter of (x,0,1)")->capture_default_str();
  se->add_option("--y", o.y, "ray parameter of (0,y,1)")->capture_default_str();
  se->add_option("--p", o.p, "first ray for distance");
  se->add_option("--q", o.q, "second ray for distance");
  se->add_option("--limit", o.limit, "above or below: print the t -> 0 limit instead");
  add_format(se);

  auto* ve = app.add_subcommand("verify", "run the invariant battery; exit 2 on any failure");
  ve->add_option("--suite", o.suite, "form, metric, group, trig, transition or all")
      ->capture_default_str();
  add_grid(ve);
  ve->add_option("--tol", o.tol, "replace every per-check tolerance");
  add_format(ve);

  auto* iso = app.add_subcommand("isometry", "isometry matrix, 9 reals in row-major order");
  add_t(iso);
  iso->add_option("--kind", o.kind, "involution, rotation or translation")->capture_default_str();
  iso->add_option("--p", o.p, "fixed point ray x,y,z (default 0,0,1)");
  iso->add_option("--theta", o.theta, "rotation angle");
  iso->add_option("--d", o.d, "translation length");
  add_format(iso);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*dist) return cmd_dist(o);
    if (*ang) return cmd_angle(o);
    if (*tri) return cmd_triangle(o);
    if (*geo) return cmd_geodesic(o);
    if (*sw) return cmd_sweep(o);
    if (*se) return cmd_series(o);
    if (*ve) return cmd_verify(o);
    if (*iso) return cmd_isometry(o);
  } catch (const Failure& f) {
    return f.code;
  }
  return 1;
}
