#include "orbiform/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "orbiform/catalog.hpp"
#include "orbiform/curve.hpp"
#include "orbiform/error.hpp"
#include "orbiform/kernels.hpp"
#include "orbiform/packing.hpp"

namespace orbiform {

namespace {

constexpr double kPi = std::numbers::pi;

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }

  void check(std::string name, bool ok, double value, double tol, std::string note = {}) {
    r_.checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, value, tol,
                         std::move(note)});
  }
  // value <= tol
  void at_most(std::string name, double value, double tol, std::string note = {}) {
    check(std::move(name), value <= tol, value, tol, std::move(note));
  }
  void known(std::string name, double value, double tol, std::string note) {
    r_.checks.push_back({std::move(name), CheckStatus::known_deviation, value, tol, std::move(note)});
  }
  SuiteResult done() { return std::move(r_); }

 private:
  SuiteResult r_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Convex catalog curves of the fourier kind plus the extra Weierstrass
// parameter sets used in the property checks.
std::vector<CatalogEntry> convex_catalog() {
  std::vector<CatalogEntry> out;
  for (auto& e : curve_catalog()) {
    if (e.curve.is_zero_width() || !is_convex(e.curve)) continue;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> constant_width_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& f : curve_families()) {
    if (f.constant_width) out.push_back(make_catalog_curve(f.name));
  }
  for (auto [a, b] : {std::pair{0.9, 3.0}, std::pair{0.99, 3.0}}) {
    out.push_back(make_catalog_curve("weierstrass", {{"a", a}, {"b", b}}));
  }
  out.push_back(make_catalog_curve("reuleaux_polygon", {{"q", 5.0}}));
  out.push_back(make_catalog_curve("rabinowitz", {{"a", 1.0 / 9.0}}));
  return out;
}

std::string label(const CatalogEntry& e) {
  return e.params.empty() ? e.name : e.name + "(" + format_params(e.params) + ")";
}

SuiteResult fourier_periodicity() {
  Recorder rec("fourier1d.periodicity");
  Rng rng(101);
  double worst = 0.0;
  for (int s = 0; s < 50; ++s) {
    const TrigSeries1D series = random_oval_series(rng, 12, s % 2 == 0);
    for (int k = 0; k < 20; ++k) {
      const double t = rng.uniform(-100.0, 100.0);
      const double v = eval(series, t);
      worst = std::max(worst, std::abs(v - eval(series, t + 2.0 * kPi)) / (1.0 + std::abs(v)));
    }
  }
  rec.at_most("p(t) = p(t + 2 pi), 50 random series x 20 angles", worst, 1e-12);
  return rec.done();
}

SuiteResult fourier_linearity() {
  Recorder rec("fourier1d.linearity");
  Rng rng(102);
  double worst = 0.0;
  for (int s = 0; s < 50; ++s) {
    const TrigSeries1D a = random_oval_series(rng, 12, false);
    const TrigSeries1D b = random_oval_series(rng, 12, true);
    const double alpha = rng.uniform(-3, 3), beta = rng.uniform(-3, 3);
    const TrigSeries1D c = alpha * a + beta * b;
    for (int k = 0; k < 20; ++k) {
      const double t = rng.uniform(0, 2 * kPi);
      const double lhs = eval(c, t);
      const double rhs = alpha * eval(a, t) + beta * eval(b, t);
      const double scale = std::abs(alpha * eval(a, t)) + std::abs(beta * eval(b, t)) + 1e-300;
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
  }
  rec.at_most("eval(alpha a + beta b) relative residual", worst, 1e-12);
  return rec.done();
}

// Series with harmonics of prescribed 2-adic valuation.
TrigSeries1D random_degree_series(Rng& rng, unsigned m) {
  if (m == 0) return TrigSeries1D(1.0);
  std::vector<Harmonic> h;
  const unsigned n = 1 + static_cast<unsigned>(rng.below(5));
  for (unsigned i = 0; i < n; ++i) {
    const unsigned v = static_cast<unsigned>(rng.below(m));
    const std::uint64_t k = (2 * rng.below(8) + 1) << v;
    h.push_back({k, rng.uniform(-0.01, 0.01), rng.uniform(-0.01, 0.01)});
  }
  if (m > 0) h.push_back({std::uint64_t{1} << (m - 1), 0.005, 0.0});
  return TrigSeries1D(1.0, std::move(h));
}

SuiteResult fourier_degree() {
  Recorder rec("fourier1d.degree_consistency");
  Rng rng(103);
  int mismatches = 0;
  for (int s = 0; s < 60; ++s) {
    const unsigned m = static_cast<unsigned>(s % 7);
    const TrigSeries1D series = random_degree_series(rng, m);
    const unsigned by_index = degree(series);
    const unsigned by_grid = degree_by_averaging(series, 1e-9, 1024);
    if (by_index != by_grid || by_index != m) ++mismatches;
  }
  rec.check("index degree == grid degree == construction degree (60 series)", mismatches == 0,
            mismatches, 0);
  rec.check("circle/rabinowitz/lozenge degrees 0/1/2",
            degree(circle(2).series()) == 0 && degree(rabinowitz(0.1).series()) == 1 &&
                degree(lozenge().series()) == 2,
            0, 0);
  return rec.done();
}

SuiteResult fourier_root_sum() {
  Recorder rec("fourier1d.root_of_unity_sum");
  Rng rng(104);
  double worst = 0.0;
  for (int s = 0; s < 30; ++s) {
    const unsigned m = 1 + static_cast<unsigned>(s % 6);
    const TrigSeries1D series = random_degree_series(rng, m);
    const std::size_t shifts = std::size_t{1} << m;
    for (std::size_t i = 0; i < 1024; ++i) {
      const double t = 2.0 * kPi * static_cast<double>(i) / 1024.0;
      double sum = 0.0;
      for (std::size_t k = 0; k < shifts; ++k) {
        sum += eval(series, t + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(shifts));
      }
      worst = std::max(worst, std::abs(sum - std::ldexp(2.0 * series.mean_term(), static_cast<int>(m) - 1)));
    }
  }
  rec.at_most("sum over 2^m shifts = 2^(m-1) * 2 a0 on 1024-point grids", worst, 1e-10);
  return rec.done();
}

SuiteResult fourier_derivative() {
  Recorder rec("fourier1d.derivative_fd");
  Rng rng(105);
  const double h = 1e-5;
  double worst = 0.0;
  for (int s = 0; s < 40; ++s) {
    const TrigSeries1D series = random_oval_series(rng, 12, s % 2 == 0);
    const TrigSeries1D d = derivative(series, 1);
    for (int k = 0; k < 25; ++k) {
      const double t = rng.uniform(0, 2 * kPi);
      const double fd = (eval(series, t + h) - eval(series, t - h)) / (2 * h);
      worst = std::max(worst, std::abs(eval(d, t) - fd));
    }
  }
  rec.at_most("p' vs central difference, h = 1e-5", worst, 1e-8);
  return rec.done();
}

SuiteResult kernel_equivalence() {
  Recorder rec("fourier1d.kernel_equivalence");
  if (!kernels::isa_supported(kernels::Isa::avx2)) {
    rec.check("AVX2 unavailable on this CPU; scalar path only", true, 0, 0);
    return rec.done();
  }
  Rng rng(106);
  std::size_t trig_diff = 0, cover_diff = 0;
  for (int s = 0; s < 20; ++s) {
    const std::size_t nh = 1 + rng.below(300);
    const std::size_t np = 1 + rng.below(3000);
    std::vector<double> cc(nh), sc(nh), c1(np), s1(np), a(np), b(np);
    for (std::size_t k = 0; k < nh; ++k) cc[k] = rng.uniform(-1, 1), sc[k] = rng.uniform(-1, 1);
    for (std::size_t i = 0; i < np; ++i) {
      const double t = rng.uniform(0, 2 * kPi);
      c1[i] = std::cos(t), s1[i] = std::sin(t);
    }
    kernels::scalar::trig_eval_dense(0.5, cc.data(), sc.data(), nh, c1.data(), s1.data(), a.data(), np);
    kernels::avx2::trig_eval_dense(0.5, cc.data(), sc.data(), nh, c1.data(), s1.data(), b.data(), np);
    for (std::size_t i = 0; i < np; ++i) trig_diff += a[i] != b[i];

    std::vector<kernels::DiskTriple> bodies(1 + rng.below(12));
    for (auto& d : bodies) {
      for (int j = 0; j < 3; ++j) d.x[j] = rng.uniform(-2, 2), d.y[j] = rng.uniform(-2, 2);
    }
    std::vector<double> px(np), py(np);
    for (std::size_t i = 0; i < np; ++i) px[i] = rng.uniform(-3, 3), py[i] = rng.uniform(-3, 3);
    std::vector<std::uint16_t> ca(np), cb(np);
    kernels::scalar::cover_counts(px.data(), py.data(), np, bodies.data(), bodies.size(), 4.0, ca.data());
    kernels::avx2::cover_counts(px.data(), py.data(), np, bodies.data(), bodies.size(), 4.0, cb.data());
    for (std::size_t i = 0; i < np; ++i) cover_diff += ca[i] != cb[i];
  }
  rec.check("trig_eval_dense scalar == avx2 bitwise", trig_diff == 0, static_cast<double>(trig_diff), 0);
  rec.check("cover_counts scalar == avx2", cover_diff == 0, static_cast<double>(cover_diff), 0);
  return rec.done();
}

SuiteResult curve_barbier() {
  Recorder rec("curve.barbier");
  for (const auto& e : convex_catalog()) {
    const QuadratureResult q = arc_length_quadrature(e.curve);
    rec.at_most(label(e) + ": |arc length - pi * mean width| / arc length",
                rel(q.value, kPi * mean_width(e.curve)), 1e-9);
  }
  const SupportCurve e = ellipse(2, 1);
  const double p = arc_length_quadrature(e).value;
  rec.at_most("ellipse(2,1): independent quadratures", rel(p, kPi * mean_width_quadrature(e).value), 1e-8);
  return rec.done();
}

SuiteResult curve_area() {
  Recorder rec("curve.area_agreement");
  for (const auto& e : convex_catalog()) {
    if (e.curve.kind() != CurveKind::fourier) continue;
    rec.at_most(label(e) + ": coefficient form vs quadrature",
                rel(area_coefficient_form(e.curve.series()), area_quadrature(e.curve).value), 1e-9);
  }
  const SupportCurve r = reuleaux_polygon_exact(3, 2);
  rec.at_most("reuleaux_polygon(3,2): quadrature vs (pi - sqrt3) w^2 / 2",
              rel(area_quadrature(r).value, 2.0 * (kPi - std::sqrt(3.0))), 1e-9);
  return rec.done();
}

SuiteResult curve_mellish_iff() {
  Recorder rec("curve.mellish_iff_constant_width");
  Rng rng(201);
  int disagreements = 0;
  for (int s = 0; s < 50; ++s) {
    const bool cw = s % 2 == 0;
    const SupportCurve c = SupportCurve::fourier(random_oval_series(rng, 12, cw));
    const MellishReport m = check_mellish(c, 1024);
    if (m.pass != is_constant_width_form(c.series()) || m.pass != cw) ++disagreements;
  }
  rec.check("check_mellish passes iff constant-width form (50 random series, N <= 12)",
            disagreements == 0, disagreements, 0);
  return rec.done();
}

SuiteResult curve_rho_sum() {
  Recorder rec("curve.rho_extrema_sum");
  for (const auto& e : constant_width_catalog()) {
    const RhoExtrema ex = rho_extrema(e.curve);
    const double w = check_mellish(e.curve).width;
    rec.at_most(label(e) + ": |rho_max + rho_min - w|", std::abs(ex.rho_max + ex.rho_min - w), 1e-6);
  }
  return rec.done();
}

SuiteResult curve_chords() {
  Recorder rec("curve.diameter_chords");
  for (const auto& e : constant_width_catalog()) {
    const ChordReport c = diameter_chord_check(e.curve);
    rec.at_most(label(e) + ": max | |P(t) - P(t+pi)| - w |", c.max_violation, 1e-9);
  }
  return rec.done();
}

SuiteResult curve_isoperimetric() {
  Recorder rec("curve.isoperimetric");
  for (const auto& e : convex_catalog()) {
    const double wbar = mean_width(e.curve);
    const double disk = kPi * wbar * wbar / 4.0;
    const double a = area(e.curve);
    bool has_high = e.curve.kind() != CurveKind::fourier;
    if (!has_high) {
      for (const auto& h : e.curve.series().terms()) has_high = has_high || h.k >= 2;
    }
    if (has_high) {
      rec.check(label(e) + ": area < area of disk of equal mean width", a < disk * (1 - 1e-12),
                (disk - a) / disk, 0);
    } else {
      rec.at_most(label(e) + ": equality without harmonics k >= 2", rel(a, disk), 1e-12);
    }
  }
  return rec.done();
}

SuiteResult curve_curvature_fd() {
  Recorder rec("curve.curvature_fd");
  std::vector<std::pair<std::string, SupportCurve>> curves = {
      {"circle", circle(2)}, {"lozenge", lozenge()}, {"rabinowitz(0.1)", rabinowitz(0.1)},
      {"ellipse(2,1)", ellipse(2, 1)}};
  Rng rng(202);
  for (int i = 0; i < 5; ++i) {
    curves.push_back({"random oval " + std::to_string(i),
                      SupportCurve::fourier(random_oval_series(rng, 8, i % 2 == 0))});
  }
  const double h = 1e-4;
  for (const auto& [name, c] : curves) {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double t = 2.0 * kPi * (k + 0.37) / 200.0;
      const double rho = radius_of_curvature(c, t);
      if (std::abs(rho) < 1e-3) continue;
      const Point2 a = point_at(c, t - h), b = point_at(c, t), d = point_at(c, t + h);
      const double x1 = (d.x - a.x) / (2 * h), y1 = (d.y - a.y) / (2 * h);
      const double x2 = (d.x - 2 * b.x + a.x) / (h * h), y2 = (d.y - 2 * b.y + a.y) / (h * h);
      const double fd = std::pow(x1 * x1 + y1 * y1, 1.5) / (x1 * y2 - y1 * x2);
      worst = std::max(worst, std::abs(fd - rho));
    }
    rec.at_most(name + ": rho vs parametric curvature by differences (h = 1e-4)", worst, 1e-5);
  }
  return rec.done();
}

SuiteResult curve_rho_bound() {
  Recorder rec("curve.rho_bound");
  for (const auto& e : curve_catalog()) {
    if (e.curve.is_zero_width()) continue;
    const RhoBoundReport r = rho_bound_check(e.curve);
    const std::string l = label(e);
    rec.at_most(l + ": |mean rho - mean width / 2|", std::abs(r.rho_mean - mean_width(e.curve) / 2), 1e-9);
    if (e.name == "reuleaux_series") {
      const char* why = "truncated Fourier series of a discontinuous rho overshoots (Gibbs)";
      rec.known(l + ": rho_max <= 2^(m-1) w", r.rho_max, r.bound, why);
      rec.known(l + ": rho >= 0", r.rho_min, 0, why);
    } else {
      rec.check(l + ": rho_max <= 2^(m-1) w", r.upper_ok, r.rho_max, r.bound);
      rec.check(l + ": rho >= 0", r.lower_ok, r.rho_min, 0);
    }
  }
  return rec.done();
}

SuiteResult catalog_convexity() {
  Recorder rec("catalog.convexity");
  for (const auto& e : curve_catalog()) {
    const bool convex = !e.curve.is_zero_width() && is_convex(e.curve);
    if (e.name == "zero_width") {
      rec.check("zero_width is flagged non-convex", !convex, 0, 0);
    } else if (e.name == "reuleaux_series") {
      rec.known(label(e) + " convex", rho_extrema(e.curve).rho_min, 0,
                "Gibbs overshoot of the truncated series; rho_min < 0");
    } else {
      rec.check(label(e) + " convex", convex, 0, 0);
    }
  }
  rec.check("rabinowitz(-1/8) convex at the threshold", is_convex(rabinowitz(-0.125)), 0, 0);
  return rec.done();
}

SuiteResult catalog_constant_width() {
  Recorder rec("catalog.constant_width_families");
  for (const auto& e : constant_width_catalog()) {
    const MellishReport m = check_mellish(e.curve);
    rec.at_most(label(e) + ": Mellish violation", m.max_violation, 1e-10);
  }
  return rec.done();
}

SuiteResult catalog_reuleaux_projection() {
  Recorder rec("catalog.reuleaux_projection");
  const SupportCurve exact = reuleaux_polygon_exact(3, 2);
  const SupportCurve series = reuleaux_triangle_series(200);
  double worst = std::abs(fourier_cos_coefficient(exact, 0) - series.series().mean_term());
  for (std::uint64_t k = 1; k <= 200; ++k) {
    worst = std::max(worst, std::abs(fourier_cos_coefficient(exact, k) - series.series().cos_coeff(k)));
    worst = std::max(worst, std::abs(fourier_sin_coefficient(exact, k) - series.series().sin_coeff(k)));
  }
  rec.at_most("series coefficients vs projection of the exact triangle (k <= 200)", worst, 1e-9);
  return rec.done();
}

SuiteResult catalog_fejer() {
  Recorder rec("catalog.fejer_nonnegative");
  double worst = 0.0;
  int count = 0;
  for (unsigned n = 3; n <= 64; ++n) {
    for (unsigned sigma = 2; sigma <= 8; ++sigma) {
      const SupportCurve c = fejer_oval(n, sigma);
      const GridSamples g = sample_grid(c, 8 * (n * sigma + 1));
      worst = std::min(worst, *std::min_element(g.rho.begin(), g.rho.end()));
      ++count;
    }
  }
  rec.check("min rho over " + std::to_string(count) + " ovals (3<=n<=64, 2<=sigma<=8)", worst >= -1e-9,
            worst, -1e-9);
  return rec.done();
}

SuiteResult catalog_rabinowitz_area() {
  Recorder rec("catalog.rabinowitz_area");
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = -0.125 + 0.25 * i / 19.0;
    const double expect = (1 - 4 * a * a) * kPi;
    worst = std::max(worst, std::abs(area_quadrature(rabinowitz(a)).value - expect));
    worst = std::max(worst, std::abs(area(rabinowitz(a)) - expect));
  }
  rec.at_most("area = (1 - 4a^2) pi for 20 values of a in [-1/8, 1/8]", worst, 1e-10);
  return rec.done();
}

SuiteResult catalog_rabinowitz_poly() {
  Recorder rec("catalog.rabinowitz_polynomial");
  for (double a : {0.0, 1.0 / 9.0, 0.125}) {
    const SupportCurve c = rabinowitz(a);
    double worst = 0.0;
    for (int i = 0; i < 256; ++i) {
      const Point2 p = point_at(c, 2.0 * kPi * i / 256.0);
      worst = std::max(worst, std::abs(rabinowitz_poly_residual(a, p.x, p.y)) /
                                  rabinowitz_poly_scale(a, p.x, p.y));
    }
    rec.at_most("a = " + std::to_string(a) + ": relative residual at 256 samples", worst, 1e-6);
  }
  return rec.done();
}

SuiteResult packing_density() {
  Recorder rec("packing.density_consistency");
  const PackingLayout layout = build_layout();
  rec.at_most("analytic density vs layout area ratio", std::abs(density_analytic() - layout_density(layout)),
              1e-12);
  const auto ref = reference_densities();
  // The hexagonal Reuleaux arrangement (0.77126) is less dense than square
  // circles (0.78540).
  const bool order = ref.at("hex_reuleaux") < ref.at("square_circle") &&
                     ref.at("square_circle") < ref.at("hex_circle") &&
                     ref.at("hex_circle") < ref.at("lattice_reuleaux");
  rec.check("pi/(3 sqrt3) + 1/6 < pi/4 < pi/(2 sqrt3) < analytic", order, 0, 0);
  return rec.done();
}

SuiteResult packing_mc() {
  Recorder rec("packing.monte_carlo");
  const PackingLayout layout = build_layout();
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PackingReport r = density_monte_carlo(layout, 1000000, seed);
    worst = std::max(worst, std::abs(r.mc_density - r.analytic_density) / r.mc_stderr);
  }
  rec.at_most("max |z| over seeds 1..10 at 1e6 samples", worst, 5.0);
  rec.check("no overlaps in 1e6 samples", overlap_check(layout, 1000000, 99), 0, 0);
  const AreaEstimate a = body_area_monte_carlo(2.0, 1000000, 5);
  rec.at_most("body area by sampling, |z|", std::abs(a.value - 2 * (kPi - std::sqrt(3.0))) / a.stderr_, 3.0);
  return rec.done();
}

SuiteResult packing_periodicity() {
  Recorder rec("packing.lattice_periodicity");
  const PackingLayout layout = build_layout();
  Rng rng(301);
  int mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const Vec2 p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const int c = coverage_count(layout, p);
    for (const Vec2& b : layout.lattice_basis) {
      mismatches += coverage_count(layout, {p.x + b.x, p.y + b.y}) != c;
    }
  }
  rec.check("coverage(pt) == coverage(pt + basis vector), 1e4 points", mismatches == 0, mismatches, 0);
  return rec.done();
}

SuiteResult surface_width() {
  Recorder rec("surface.width_identity");
  for (const auto& n : surface_catalog_names()) {
    rec.at_most(n + ": max |w(t,u) - 2| on 128x64", check_width(catalog_surface(n), {128, 64}).max_deviation,
                1e-10);
  }
  SupportSurface bad(catalog_surface("S1").series() + TrigSeries2D({{1, 1, TermKind::cc, 0.1}}));
  rec.check("injected cc_11 = 0.1 is detected", !check_width(bad, {64, 32}).pass &&
                                                     !is_constant_width_form(bad.series()),
            check_width(bad, {64, 32}).max_deviation, 1e-10);
  return rec.done();
}

SuiteResult surface_opposite_sum() {
  Recorder rec("surface.opposite_sum");
  for (const auto& n : surface_catalog_names()) {
    const OppositeSumReport r = check_opposite_sum(catalog_surface(n), {128, 64});
    rec.at_most(n + ": max |rho0(P) + rho1(Q) - 2|", r.max_violation, 1e-8);
    rec.at_most(n + ": max |rho_mean(P) + rho_mean(Q) - 2|", r.mean_violation, 1e-8);
  }
  return rec.done();
}

SuiteResult surface_ab_symmetry() {
  Recorder rec("surface.ab_symmetry");
  for (const auto& n : surface_catalog_names()) {
    const OppositeSumReport r = check_opposite_sum(catalog_surface(n), {128, 64});
    rec.at_most(n + ": max |B(P) - B(Q)|", r.b_symmetry, 1e-9);
    rec.at_most(n + ": max |A(P) + A(Q) - w|", r.mean_violation, 1e-9);
  }
  return rec.done();
}

SuiteResult surface_mean_converse() {
  Recorder rec("surface.mean_radius_converse");
  Rng rng(401);
  int missed = 0;
  double weakest = INFINITY;
  for (int s = 0; s < 30; ++s) {
    const SupportSurface bad(random_surface_series(rng, 5, false));
    const OppositeSumReport r = check_opposite_sum(bad, {64, 32});
    weakest = std::min(weakest, r.mean_violation);
    missed += r.mean_violation <= 1e-8;
  }
  rec.check("30 parity-violating series all break the mean-radius identity", missed == 0, weakest, 1e-8);
  return rec.done();
}

SuiteResult surface_revolution() {
  Recorder rec("surface.revolution_consistency");
  Rng rng(402);
  double worst = 0.0;
  for (int s = 0; s < 10; ++s) {
    std::vector<Term2D> terms{{0, 0, TermKind::cc, 1.0}};
    for (unsigned n = 1; n <= 6; ++n) {
      terms.push_back({0, n, TermKind::cc, rng.uniform(-0.01, 0.01)});
      terms.push_back({0, n, TermKind::cs, rng.uniform(-0.01, 0.01)});
    }
    const SupportSurface surf{TrigSeries2D(terms)};
    for (int j = 0; j < 64; ++j) {
      const double u = interior_u(static_cast<std::size_t>(j), 64);
      const double t = rng.uniform(0, 2 * kPi);
      const SurfaceJet jt = surf.jet(t, u);
      const double meridian = jt.p + jt.p02;
      const double parallel = jt.p + jt.p01 * std::cos(u) / std::sin(u);
      const PrincipalRadii r = principal_radii(surf, t, u);
      worst = std::max(worst, std::abs(std::max(meridian, parallel) - r.rho0));
      worst = std::max(worst, std::abs(std::min(meridian, parallel) - r.rho1));
    }
  }
  rec.at_most("general radii vs p + p'' and p + p' cot u", worst, 1e-9);
  return rec.done();
}

SuiteResult surface_parity() {
  Recorder rec("surface.derivative_parity");
  Rng rng(403);
  double worst = 0.0;
  for (int s = 0; s < 30; ++s) {
    const SupportSurface surf(random_surface_series(rng, 6, true));
    for (int k = 0; k < 50; ++k) {
      worst = std::max(worst, derivative_parity_violation(surf, rng.uniform(0, 2 * kPi), rng.uniform(0, kPi)));
    }
  }
  rec.at_most("jet relations at opposite points, 30 random series", worst, 1e-12);
  return rec.done();
}

SuiteResult surface_blaschke() {
  Recorder rec("surface.blaschke");
  for (const auto& n : surface_catalog_names()) {
    rec.at_most(n + ": relative residual at 256x128", blaschke_check(catalog_surface(n)).residual, 1e-4);
  }
  const MeissnerConstants m = meissner_reference();
  rec.at_most("Meissner constants (computed) obey the relation",
              std::abs(m.volume_coeff - (m.area_coeff / 2 - kPi / 3)), 1e-12);
  return rec.done();
}

SuiteResult surface_poles() {
  Recorder rec("surface.pole_regularity");
  for (const auto& n : surface_catalog_names()) {
    const PoleReport p = pole_check(catalog_surface(n));
    rec.check(n + ": |p_t / sin^2 u| bounded near the poles", p.bounded, p.growth, 10.0);
  }
  const PoleReport printed = pole_check(SupportSurface(s33_printed_expansion()));
  rec.check("sin(3t +- ku) expansion as printed is flagged irregular", !printed.bounded, printed.growth, 10.0);
  return rec.done();
}

SuiteResult surface_mesh() {
  Recorder rec("surface.mesh");
  for (const auto& n : surface_catalog_names()) {
    const SupportSurface s = catalog_surface(n);
    const TriangleMesh m = export_mesh(s, {128, 64});
    rec.check(n + ": watertight and consistently oriented", mesh_non_manifold_edges(m) == 0,
              static_cast<double>(mesh_non_manifold_edges(m)), 0);
    rec.at_most(n + ": mesh volume vs quadrature volume", rel(mesh_volume(m), volume(s)), 0.01);
  }
  rec.at_most("sphere mesh volume vs 4 pi / 3",
              rel(mesh_volume(export_mesh(catalog_surface("sphere"), {128, 64})), 4 * kPi / 3), 0.01);
  return rec.done();
}

SuiteResult surface_convexity() {
  Recorder rec("surface.convexity");
  for (const auto& n : surface_catalog_names()) {
    rec.check(n + " convex on 128x64", is_convex(catalog_surface(n)), radii_range(catalog_surface(n)).rho1_min,
              0);
  }
  const SupportSurface s10 = catalog_surface("S10");
  const SupportSurface loud(TrigSeries2D({{0, 0, TermKind::cc, 1.0}}) +
                            4.0 * (s10.series() + TrigSeries2D({{0, 0, TermKind::cc, -1.0}})));
  rec.check("S10 with amplitude x4 is not convex", !is_convex(loud), radii_range(loud).rho1_min, 0);
  return rec.done();
}

SuiteResult cli_catalog_names() {
  Recorder rec("cli.catalog_names");
  int bad = 0;
  for (const auto& f : curve_families()) {
    try {
      (void)metrics(make_catalog_curve(f.name).curve);
    } catch (const std::exception&) {
      ++bad;
    }
  }
  for (const auto& n : surface_catalog_names()) {
    try {
      (void)catalog_surface(n);
    } catch (const std::exception&) {
      ++bad;
    }
  }
  rec.check("every listed catalog name builds and reports metrics", bad == 0, bad, 0);
  return rec.done();
}

}  // namespace

TrigSeries1D random_oval_series(Rng& rng, unsigned n_max, bool constant_width) {
  if (n_max < 2) fail(ErrorKind::invalid_argument, "random series needs n_max >= 2");
  std::vector<Harmonic> h;
  // Sum over k of (k^2 - 1)|c_k| stays below 1/2, so rho = p + p'' > 0.
  const double budget = 0.5 / static_cast<double>(n_max);
  for (unsigned k = 1; k <= n_max; ++k) {
    if (constant_width && k % 2 == 0) continue;
    const double amp = budget / std::max(1.0, static_cast<double>(k * k) - 1.0);
    h.push_back({k, rng.uniform(-amp, amp) / 2, rng.uniform(-amp, amp) / 2});
  }
  if (!constant_width) {
    const unsigned k = 2 * (1 + static_cast<unsigned>(rng.below(n_max / 2)));
    h.push_back({k, std::max(1e-3, budget / (static_cast<double>(k * k) - 1.0) / 2), 0.0});
  }
  return TrigSeries1D(1.0, std::move(h));
}

TrigSeries2D random_surface_series(Rng& rng, unsigned max_index, bool constant_width) {
  std::vector<Term2D> terms{{0, 0, TermKind::cc, 1.0}};
  const int n_terms = 3 + static_cast<int>(rng.below(4));
  auto draw = [&](bool want_ok) {
    for (;;) {
      const auto kind = static_cast<TermKind>(rng.below(4));
      const unsigned m = static_cast<unsigned>(rng.below(max_index + 1));
      const unsigned n = static_cast<unsigned>(rng.below(max_index + 1));
      if ((kind == TermKind::sc || kind == TermKind::ss) && m == 0) continue;
      if ((kind == TermKind::cs || kind == TermKind::ss) && n == 0) continue;
      if (m == 0 && n == 0) continue;
      const bool even = (m + n) % 2 == 0;
      const bool cos_u = kind == TermKind::cc || kind == TermKind::sc;
      const bool ok = cos_u ? !even : even;
      if (ok != want_ok) continue;
      return Term2D{m, n, kind, 0.0};
    }
  };
  for (int i = 0; i < n_terms; ++i) {
    Term2D t = draw(true);
    t.coeff = rng.uniform(-0.02, 0.02);
    terms.push_back(t);
  }
  if (!constant_width) {
    Term2D t = draw(false);
    t.coeff = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(1e-3, 0.02);
    terms.push_back(t);
  }
  return TrigSeries2D(std::move(terms));
}

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::known_deviation: return "KNOWN";
  }
  return "?";
}

bool SuiteResult::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::fail; });
}

const std::vector<Suite>& verification_suites() {
  static const std::vector<Suite> suites = {
      {"fourier1d.periodicity", "p(t) = p(t + 2 pi)", fourier_periodicity},
      {"fourier1d.linearity", "evaluation is linear in the coefficients", fourier_linearity},
      {"fourier1d.degree_consistency", "index degree equals grid degree", fourier_degree},
      {"fourier1d.root_of_unity_sum", "2^m-shift sums are constant", fourier_root_sum},
      {"fourier1d.derivative_fd", "term-wise derivative vs differences", fourier_derivative},
      {"fourier1d.kernel_equivalence", "scalar and AVX2 kernels agree", kernel_equivalence},
      {"curve.barbier", "perimeter = pi * mean width", curve_barbier},
      {"curve.area_agreement", "coefficient area equals quadrature area", curve_area},
      {"curve.mellish_iff_constant_width", "Mellish holds iff odd harmonics only", curve_mellish_iff},
      {"curve.rho_extrema_sum", "rho_max + rho_min = w", curve_rho_sum},
      {"curve.diameter_chords", "opposite points are w apart", curve_chords},
      {"curve.isoperimetric", "area does not exceed the disk of equal mean width", curve_isoperimetric},
      {"curve.curvature_fd", "rho vs parametric curvature", curve_curvature_fd},
      {"curve.rho_bound", "0 <= rho <= 2^(m-1) w and mean rho = w / 2", curve_rho_bound},
      {"catalog.convexity", "catalog curves are convex", catalog_convexity},
      {"catalog.constant_width_families", "Mellish for constant-width families", catalog_constant_width},
      {"catalog.reuleaux_projection", "series matches the exact triangle", catalog_reuleaux_projection},
      {"catalog.fejer_nonnegative", "Fejer ovals have rho >= 0", catalog_fejer},
      {"catalog.rabinowitz_area", "area = (1 - 4a^2) pi", catalog_rabinowitz_area},
      {"catalog.rabinowitz_polynomial", "implicit polynomial vanishes on the curve", catalog_rabinowitz_poly},
      {"packing.density_consistency", "closed form vs layout", packing_density},
      {"packing.monte_carlo", "sampled density, overlap and body area", packing_mc},
      {"packing.lattice_periodicity", "coverage is lattice periodic", packing_periodicity},
      {"surface.width_identity", "p(t,u) + p(t+pi, pi-u) = 2", surface_width},
      {"surface.opposite_sum", "rho0(P) + rho1(Q) = w", surface_opposite_sum},
      {"surface.ab_symmetry", "B symmetric, A complementary", surface_ab_symmetry},
      {"surface.mean_radius_converse", "parity violations break the mean-radius identity",
       surface_mean_converse},
      {"surface.revolution_consistency", "radii of surfaces of revolution", surface_revolution},
      {"surface.derivative_parity", "jet relations at opposite points", surface_parity},
      {"surface.blaschke", "V = (w/2) A - (pi/3) w^3", surface_blaschke},
      {"surface.pole_regularity", "p_t / sin^2 u bounded", surface_poles},
      {"surface.mesh", "mesh closed, oriented, volume consistent", surface_mesh},
      {"surface.convexity", "catalog surfaces convex; scaled S10 not", surface_convexity},
      {"cli.catalog_names", "listed names are accepted", cli_catalog_names},
  };
  return suites;
}

std::vector<SuiteResult> run_suites(const std::string& module) {
  std::vector<SuiteResult> out;
  const std::string prefix = module.empty() ? "" : module + ".";
  for (const Suite& s : verification_suites()) {
    if (!prefix.empty() && s.name.rfind(prefix, 0) != 0) continue;
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
      r = s.run();
    } catch (const std::exception& e) {
      r.name = s.name;
      r.checks.push_back({"suite raised an exception", CheckStatus::fail, 0, 0, e.what()});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

Json suite_report(const std::vector<SuiteResult>& results) {
  Json suites = Json::array();
  bool all = true;
  for (const SuiteResult& r : results) {
    Json checks = Json::array();
    for (const Check& c : r.checks) {
      Json jc;
      jc["name"] = c.name;
      jc["status"] = to_string(c.status);
      jc["value"] = c.value;
      jc["tolerance"] = c.tolerance;
      if (!c.note.empty()) jc["note"] = c.note;
      checks.push_back(jc);
    }
    Json js;
    js["suite"] = r.name;
    js["pass"] = r.passed();
    js["checks"] = checks;
    suites.push_back(js);
    all = all && r.passed();
  }
  Json j;
  j["pass"] = all;
  j["suites"] = suites;
  return j;
}

}  // namespace orbiform
