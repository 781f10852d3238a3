#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>

#include "orbiform/catalog.hpp"
#include "orbiform/curve.hpp"
#include "orbiform/error.hpp"
#include "orbiform/io.hpp"
#include "orbiform/packing.hpp"
#include "orbiform/surface.hpp"
#include "orbiform/verify.hpp"

namespace orbiform::cli {

namespace {

struct Options {
  std::string catalog;
  std::string coeffs;
  std::vector<std::string> params;
  std::string grid;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000000;
  std::string out;
  bool hue = false;
  std::string cells = "3x3";
  std::string radius;
  std::string suite;
};

struct Grid2 {
  std::size_t a = 0;
  std::size_t b = 0;
};

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || s[0] == '-') {
    fail(ErrorKind::invalid_argument, std::string("bad ") + what + " '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

// "N" or "NxM".
Grid2 parse_grid(const std::string& s, const char* what) {
  const auto x = s.find('x');
  if (x == std::string::npos) return {parse_count(s, what), 0};
  return {parse_count(s.substr(0, x), what), parse_count(s.substr(x + 1), what)};
}

ParamMap parse_params(const std::vector<std::string>& items) {
  ParamMap out;
  for (const std::string& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0) {
      fail(ErrorKind::invalid_argument, "--param expects name=value, got '" + it + "'");
    }
    const std::string key = it.substr(0, eq);
    const std::string val = it.substr(eq + 1);
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(val, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != val.size() || !std::isfinite(v)) {
      fail(ErrorKind::invalid_argument, "bad value for parameter '" + key + "'");
    }
    out[key] = v;
  }
  return out;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

void require_one_source(const Options& o) {
  if (o.catalog.empty() == o.coeffs.empty()) {
    fail(ErrorKind::invalid_argument, "give exactly one of --catalog NAME or --coeffs FILE");
  }
  if (!o.coeffs.empty() && !o.params.empty()) {
    fail(ErrorKind::invalid_argument, "--param applies to --catalog only");
  }
}

struct NamedCurve {
  std::string name;
  ParamMap params;
  SupportCurve curve;
};

NamedCurve load_curve(const Options& o) {
  require_one_source(o);
  if (!o.catalog.empty()) {
    CatalogEntry e = make_catalog_curve(o.catalog, parse_params(o.params));
    return {e.name, e.params, e.curve};
  }
  const TrigSeries1D s = series1d_from_json(read_json_file(o.coeffs));
  const SupportCurve c = s.mean_term() == 0.0 ? SupportCurve::zero_width(s) : SupportCurve::fourier(s);
  return {o.coeffs, {}, c};
}

struct NamedSurface {
  std::string name;
  SupportSurface surface;
};

NamedSurface load_surface(const Options& o) {
  require_one_source(o);
  if (!o.catalog.empty()) return {o.catalog, catalog_surface(o.catalog)};
  return {o.coeffs, SupportSurface(series2d_from_json(read_json_file(o.coeffs)))};
}

Json params_json(const ParamMap& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::size_t curve_grid(const Options& o, std::size_t fallback) {
  if (o.grid.empty()) return fallback;
  const Grid2 g = parse_grid(o.grid, "--grid");
  if (g.b != 0) fail(ErrorKind::invalid_argument, "curve commands take --grid N");
  return g.a;
}

SurfaceGrid surface_grid(const Options& o, SurfaceGrid fallback) {
  if (o.grid.empty()) return fallback;
  const Grid2 g = parse_grid(o.grid, "--grid");
  if (g.b == 0) fail(ErrorKind::invalid_argument, "surface commands take --grid NTxNU");
  return {g.a, g.b};
}

int curve_metrics(const Options& o, std::ostream& out) {
  const NamedCurve nc = load_curve(o);
  const CurveMetrics m = metrics(nc.curve);
  const MellishReport mel = check_mellish(nc.curve);
  Json j;
  j["name"] = nc.name;
  j["params"] = params_json(nc.params);
  j["kind"] = to_string(nc.curve.kind());
  j["zero_width"] = nc.curve.is_zero_width();
  j["convex"] = m.convex;
  j["mean_width"] = m.mean_width;
  j["perimeter"] = optional_number(m.perimeter);
  j["area"] = optional_number(m.area);
  j["rho_min"] = m.rho_min;
  j["rho_max"] = m.rho_max;
  j["degree"] = m.degree ? Json(*m.degree) : Json("unbounded");
  j["constant_width"] = mel.pass;
  j["mellish_violation"] = mel.max_violation;
  emit(o, dump_json(j) + "\n", out);
  return 0;
}

int curve_samples(const Options& o, std::ostream& out) {
  const NamedCurve nc = load_curve(o);
  emit(o, samples_csv(samples(nc.curve, curve_grid(o, 256))), out);
  return 0;
}

int curve_svg_cmd(const Options& o, std::ostream& out) {
  const NamedCurve nc = load_curve(o);
  CurveSvgOptions so;
  so.hue = o.hue;
  so.segments = curve_grid(o, o.hue ? 256 : 512);
  emit(o, curve_svg(nc.curve, so), out);
  return 0;
}

Json check_json(const std::string& name, bool pass, double value, double tol) {
  Json j;
  j["check"] = name;
  j["pass"] = pass;
  j["value"] = value;
  j["tolerance"] = tol;
  return j;
}

int curve_verify(const Options& o, std::ostream& out) {
  const NamedCurve nc = load_curve(o);
  const SupportCurve& c = nc.curve;
  const std::size_t grid = curve_grid(o, 0);
  Json checks = Json::array();
  bool all = true;
  auto add = [&](const std::string& n, bool pass, double v, double tol) {
    checks.push_back(check_json(n, pass, v, tol));
    all = all && pass;
  };
  const bool convex = !c.is_zero_width() && is_convex(c, grid);
  add("convex", convex, rho_extrema(c, grid).rho_min, 0.0);
  const MellishReport mel = check_mellish(c, grid, o.tol.value_or(1e-10));
  if (mel.constant_width_form) {
    add("mellish", mel.pass, mel.max_violation, o.tol.value_or(1e-10));
    const ChordReport ch = diameter_chord_check(c, grid == 0 ? 2048 : grid, o.tol.value_or(1e-9));
    add("diameter_chords", ch.pass, ch.max_violation, o.tol.value_or(1e-9));
  }
  if (convex) {
    const double tol = o.tol.value_or(1e-9);
    const double arc = arc_length_quadrature(c).value;
    const double barbier = std::abs(arc - std::numbers::pi * mean_width(c)) / arc;
    add("barbier", barbier <= tol, barbier, tol);
    const RhoBoundReport rb = rho_bound_check(c, grid, o.tol.value_or(kConvexTol));
    add("rho_bound", rb.pass, rb.rho_max, rb.bound);
  }
  Json j;
  j["name"] = nc.name;
  j["pass"] = all;
  j["checks"] = checks;
  emit(o, dump_json(j) + "\n", out);
  return all ? 0 : 2;
}

int surface_metrics(const Options& o, std::ostream& out) {
  const NamedSurface ns = load_surface(o);
  const SurfaceGrid quad = surface_grid(o, {256, 128});
  const SurfaceMetrics m = metrics(ns.surface, quad, {128, 64});
  const OppositeSumReport os = check_opposite_sum(ns.surface, {128, 64});
  const PoleReport pole = pole_check(ns.surface);
  Json j;
  j["name"] = ns.name;
  j["series"] = series2d_to_json(ns.surface.series());
  j["width"] = m.width;
  j["constant_width_form"] = is_constant_width_form(ns.surface.series());
  j["convex"] = m.convex;
  j["area"] = m.area;
  j["volume"] = m.volume;
  j["blaschke_residual"] = m.blaschke_residual;
  j["rho0_min"] = m.radii.rho0_min;
  j["rho0_max"] = m.radii.rho0_max;
  j["rho1_min"] = m.radii.rho1_min;
  j["rho1_max"] = m.radii.rho1_max;
  j["opposite_sum_violation"] = os.max_violation;
  j["pole_regular"] = pole.bounded;
  emit(o, dump_json(j) + "\n", out);
  return 0;
}

int surface_mesh(const Options& o, std::ostream& out) {
  const NamedSurface ns = load_surface(o);
  const SurfaceGrid g = surface_grid(o, {128, 64});
  if (!is_convex(ns.surface, g)) fail(ErrorKind::non_convex, "surface is not convex; no mesh written");
  const TriangleMesh mesh = export_mesh(ns.surface, g);
  emit(o, mesh_obj(mesh), out);
  if (!o.radius.empty()) {
    if (o.out.empty()) fail(ErrorKind::invalid_argument, "--radius needs --out for the sidecar file");
    const int which = o.radius == "rho0" ? 0 : 1;
    write_text_file(o.out + "." + o.radius + ".csv",
                    vertex_values_csv(mesh_vertex_radii(ns.surface, mesh, g, which), o.radius));
  }
  return 0;
}

int surface_verify(const Options& o, std::ostream& out) {
  const NamedSurface ns = load_surface(o);
  const SupportSurface& s = ns.surface;
  const SurfaceGrid g = surface_grid(o, {128, 64});
  Json checks = Json::array();
  bool all = true;
  auto add = [&](const std::string& n, bool pass, double v, double tol) {
    checks.push_back(check_json(n, pass, v, tol));
    all = all && pass;
  };
  add("constant_width_form", is_constant_width_form(s.series()), 0, 0);
  const WidthReport w = check_width(s, g, o.tol.value_or(1e-10));
  add("width_identity", w.pass, w.max_deviation, o.tol.value_or(1e-10));
  const OppositeSumReport os = check_opposite_sum(s, g, o.tol.value_or(1e-8));
  add("opposite_sum", os.max_violation <= o.tol.value_or(1e-8), os.max_violation, o.tol.value_or(1e-8));
  add("mean_radius_sum", os.mean_violation <= o.tol.value_or(1e-8), os.mean_violation, o.tol.value_or(1e-8));
  add("b_symmetry", os.b_symmetry <= 1e-9, os.b_symmetry, 1e-9);
  const PoleReport p = pole_check(s);
  add("pole_regularity", p.bounded, p.growth, 10.0);
  const bool convex = is_convex(s, g);
  add("convex", convex, radii_range(s, g).rho1_min, 0.0);
  if (convex) {
    const BlaschkeReport b = blaschke_check(s);
    add("blaschke", b.residual <= 1e-4, b.residual, 1e-4);
    const TriangleMesh mesh = export_mesh(s, g);
    add("mesh_watertight", mesh_non_manifold_edges(mesh) == 0,
        static_cast<double>(mesh_non_manifold_edges(mesh)), 0);
    const double dv = std::abs(mesh_volume(mesh) - b.volume) / b.volume;
    add("mesh_volume", dv <= 0.01, dv, 0.01);
  }
  Json j;
  j["name"] = ns.name;
  j["pass"] = all;
  j["checks"] = checks;
  emit(o, dump_json(j) + "\n", out);
  return all ? 0 : 2;
}

int packing_density(const Options& o, std::ostream& out) {
  const PackingLayout layout = build_layout();
  const PackingReport r = density_monte_carlo(layout, o.samples, o.seed);
  Json j;
  j["analytic_density"] = r.analytic_density;
  j["mc_density"] = r.mc_density;
  j["mc_stderr"] = r.mc_stderr;
  j["z_score"] = (r.mc_density - r.analytic_density) / r.mc_stderr;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["spacing"] = packing_spacing();
  Json refs = Json::object();
  for (const auto& [k, v] : reference_densities()) refs[k] = v;
  j["reference_densities"] = refs;
  emit(o, dump_json(j) + "\n", out);
  return 0;
}

int packing_svg_cmd(const Options& o, std::ostream& out) {
  const Grid2 g = parse_grid(o.cells, "--cells");
  emit(o, packing_svg(build_layout(), g.a, g.b == 0 ? g.a : g.b), out);
  return 0;
}

int packing_verify(const Options& o, std::ostream& out) {
  const PackingLayout layout = build_layout();
  Json checks = Json::array();
  bool all = true;
  auto add = [&](const std::string& n, bool pass, double v, double tol) {
    checks.push_back(check_json(n, pass, v, tol));
    all = all && pass;
  };
  const double d = std::abs(density_analytic() - layout_density(layout));
  add("density_consistency", d <= 1e-12, d, 1e-12);
  add("overlap_free", overlap_check(layout, std::max<std::uint64_t>(o.samples, 100000), o.seed), 0, 0);
  const PackingReport r = density_monte_carlo(layout, o.samples, o.seed);
  const double z = std::abs(r.mc_density - r.analytic_density) / r.mc_stderr;
  add("monte_carlo_z", z <= 5.0, z, 5.0);
  Json j;
  j["pass"] = all;
  j["checks"] = checks;
  emit(o, dump_json(j) + "\n", out);
  return all ? 0 : 2;
}

int catalog_list(const Options& o, std::ostream& out) {
  std::string text;
  for (const CurveFamily& f : curve_families()) {
    text += f.name + "  " + format_params(f.defaults) + "  [curve] " + f.validity_note + "\n";
  }
  for (const std::string& n : surface_catalog_names()) {
    text += n + "  -  [surface] " + surface_catalog_note(n) + "\n";
  }
  emit(o, text, out);
  return 0;
}

int verify_all(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<SuiteResult> results = run_suites(o.suite);
  if (results.empty()) fail(ErrorKind::invalid_argument, "no suite matches '" + o.suite + "'");
  for (const SuiteResult& r : results) {
    err << (r.passed() ? "PASS " : "FAIL ") << r.name << "\n";
    for (const Check& c : r.checks) {
      if (c.status != CheckStatus::pass) err << "  " << to_string(c.status) << " " << c.name << "\n";
    }
  }
  const Json report = suite_report(results);
  emit(o, dump_json(report) + "\n", out);
  return report["pass"].get<bool>() ? 0 : 2;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::io:
    case ErrorKind::non_convergent:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Support-function geometry: ovals, surfaces of constant width, packings", "orbiform"};
  app.require_subcommand(1);
  Options o;

  auto source = [&o](CLI::App* cmd) {
    cmd->add_option("--catalog", o.catalog, "catalog name (see `catalog list`)");
    cmd->add_option("--coeffs", o.coeffs, "JSON coefficient file");
  };
  auto common = [&o](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "output file (default stdout)");
  };

  int code = 0;
  std::function<int()> action;

  CLI::App* curve = app.add_subcommand("curve", "plane ovals given by support functions");
  curve->require_subcommand(1);
  struct CurveCmd {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
  };
  for (const CurveCmd& c : {CurveCmd{"metrics", "mean width, perimeter, area, curvature range", curve_metrics},
                            CurveCmd{"samples", "CSV of t,x,y,p,rho,width", curve_samples},
                            CurveCmd{"svg", "line drawing of the curve", curve_svg_cmd},
                            CurveCmd{"verify", "invariant checks for one curve", curve_verify}}) {
    CLI::App* sub = curve->add_subcommand(c.name, c.help);
    source(sub);
    common(sub);
    sub->add_option("--param", o.params, "catalog parameter name=value (repeatable)");
    sub->add_option("--grid", o.grid, "grid size N");
    if (std::string(c.name) == "verify") sub->add_option("--tol", o.tol, "tolerance override");
    if (std::string(c.name) == "svg") sub->add_flag("--hue", o.hue, "colour segments by radius of curvature");
    auto fn = c.fn;
    sub->callback([&, fn] { action = [&, fn] { return fn(o, out); }; });
  }

  CLI::App* surface = app.add_subcommand("surface", "surfaces of constant width");
  surface->require_subcommand(1);
  for (const CurveCmd& c : {CurveCmd{"metrics", "area, volume, radii, Blaschke residual", surface_metrics},
                            CurveCmd{"mesh", "OBJ triangle mesh", surface_mesh},
                            CurveCmd{"verify", "invariant checks for one surface", surface_verify}}) {
    CLI::App* sub = surface->add_subcommand(c.name, c.help);
    source(sub);
    common(sub);
    sub->add_option("--grid", o.grid, "grid NTxNU");
    if (std::string(c.name) == "verify") sub->add_option("--tol", o.tol, "tolerance override");
    if (std::string(c.name) == "mesh") {
      sub->add_option("--radius", o.radius, "write per-vertex rho0 or rho1 to <out>.<radius>.csv")
          ->check(CLI::IsMember({"rho0", "rho1"}));
    }
    auto fn = c.fn;
    sub->callback([&, fn] { action = [&, fn] { return fn(o, out); }; });
  }

  CLI::App* packing = app.add_subcommand("packing", "lattice packing of Reuleaux triangles");
  packing->require_subcommand(1);
  {
    CLI::App* d = packing->add_subcommand("density", "analytic and sampled density");
    d->add_option("--samples", o.samples, "Monte Carlo samples")->check(CLI::Range(10000ull, 1ull << 40));
    d->add_option("--seed", o.seed, "RNG seed");
    common(d);
    d->callback([&] { action = [&] { return packing_density(o, out); }; });
    CLI::App* s = packing->add_subcommand("svg", "drawing of K x L lattice cells");
    s->add_option("--cells", o.cells, "cells KxL");
    common(s);
    s->callback([&] { action = [&] { return packing_svg_cmd(o, out); }; });
    CLI::App* v = packing->add_subcommand("verify", "overlap and density checks");
    v->add_option("--samples", o.samples, "Monte Carlo samples")->check(CLI::Range(10000ull, 1ull << 40));
    v->add_option("--seed", o.seed, "RNG seed");
    common(v);
    v->callback([&] { action = [&] { return packing_verify(o, out); }; });
  }

  CLI::App* catalog = app.add_subcommand("catalog", "named curves and surfaces");
  catalog->require_subcommand(1);
  {
    CLI::App* l = catalog->add_subcommand("list", "one line per entry: name  params  note");
    common(l);
    l->callback([&] { action = [&] { return catalog_list(o, out); }; });
  }

  CLI::App* verify = app.add_subcommand("verify", "invariant suites");
  verify->require_subcommand(1);
  {
    CLI::App* a = verify->add_subcommand("all", "run every suite (JSON report on stdout)");
    a->add_option("--suite", o.suite, "restrict to suites of one module, e.g. surface");
    common(a);
    a->callback([&] { action = [&] { return verify_all(o, out, err); }; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }
  try {
    code = action ? action() : 2;
  } catch (const GeometryError& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return code;
}

}  // namespace orbiform::cli
