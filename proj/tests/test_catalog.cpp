#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orbiform/catalog.hpp"
#include "orbiform/error.hpp"

using namespace orbiform;
using std::numbers::pi;

TEST_CASE("circle and lozenge") {
  CHECK(circle(2).series() == TrigSeries1D(1.0));
  CHECK(area(circle(2)) == doctest::Approx(pi));
  CHECK(degree(circle(2).series()) == 0);
  CHECK_THROWS_AS(circle(0), GeometryError);
  CHECK(degree(lozenge().series()) == 2);
  CHECK(lozenge().series().cos_coeff(2) == 1.0 / 3.0);
}

TEST_CASE("rabinowitz family") {
  for (double a : {-0.125, -0.05, 0.0, 1.0 / 9.0, 0.125})
    CHECK(area(rabinowitz(a)) == doctest::Approx((1 - 4 * a * a) * pi).epsilon(1e-14));
  CHECK(rabinowitz(0).series() == TrigSeries1D(1.0));
  try {
    rabinowitz(0.13);
    FAIL("expected non_convex");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::non_convex);
  }
}

TEST_CASE("rabinowitz implicit polynomial") {
  for (int i = 0; i < 16; ++i) {
    double t = 2 * pi * i / 16;
    CHECK(std::abs(rabinowitz_poly_residual(0, std::cos(t), std::sin(t))) < 1e-14);
  }
  CHECK(rabinowitz_poly_residual(0, 0, 0) == 0.0);
  for (double a : {1.0 / 9.0, 0.125}) {
    SupportCurve c = rabinowitz(a);
    double worst = 0;
    for (int i = 0; i < 256; ++i) {
      Point2 p = point_at(c, 2 * pi * i / 256);
      worst = std::max(worst, std::abs(rabinowitz_poly_residual(a, p.x, p.y)) /
                                  rabinowitz_poly_scale(a, p.x, p.y));
    }
    CHECK(worst < 1e-12);
  }
  // A point off the curve is not a root.
  CHECK(std::abs(rabinowitz_poly_residual(0.125, 0.5, 0.1)) > 1e-3);
}

TEST_CASE("reuleaux triangle series") {
  SupportCurve c = reuleaux_triangle_series(200);
  const TrigSeries1D& s = c.series();
  CHECK(s.cos_coeff(1) == doctest::Approx(1 - 2 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(s.cos_coeff(3) == doctest::Approx(1 / (2 * pi)).epsilon(1e-15));
  CHECK(s.cos_coeff(9) == doctest::Approx(-1 / (60 * pi)).epsilon(1e-15));
  CHECK(s.max_harmonic() == 3 * 399);
  CHECK(std::abs(area_coefficient_form(s) - 2 * (pi - std::sqrt(3.0))) < 1e-6);
  for (double t : {0.0, 0.1, 1.0, 2.5}) CHECK(width_at(reuleaux_triangle_series(3), t) == doctest::Approx(2.0));
  // The truncated series overshoots near the vertices (Gibbs): rho dips below 0.
  CHECK(rho_extrema(c).rho_min < 0);
}

TEST_CASE("exact reuleaux polygons") {
  SupportCurve r3 = reuleaux_polygon_exact(3, 2);
  CHECK(area(r3) == doctest::Approx(2 * (pi - std::sqrt(3.0))).epsilon(1e-12));
  // The q = 3 series is the Fourier projection of the exact triangle.
  SupportCurve series = reuleaux_triangle_series(200);
  for (std::uint64_t k : {1u, 3u, 9u, 15u, 21u})
    CHECK(fourier_cos_coefficient(r3, k) == doctest::Approx(series.series().cos_coeff(k)).epsilon(1e-10));

  SupportCurve r5 = reuleaux_polygon_exact(5, 2, ReuleauxAnchor::centroid);
  for (std::uint64_t k = 1; k <= 20; ++k) {
    double a = std::abs(fourier_cos_coefficient(r5, k));
    double b = std::abs(fourier_sin_coefficient(r5, k));
    bool allowed = k % 5 == 0 && (k / 5) % 2 == 1;
    if (allowed) {
      CHECK(a > 1e-4);
    } else {
      CHECK(a < 1e-12);
    }
    CHECK(b < 1e-12);
  }
  CHECK_THROWS_AS(reuleaux_polygon_exact(1, 2), GeometryError);
}

TEST_CASE("fejer ovals") {
  SupportCurve c = fejer_oval(32, 5);
  RhoExtrema e = rho_extrema(c);
  CHECK(e.rho_max == doctest::Approx(32.0).epsilon(1e-12));
  CHECK(e.rho_min >= -1e-12);
  RhoBoundReport r = rho_bound_check(c);
  CHECK(r.rho_mean == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(is_convex(fejer_oval(3, 2)));
  CHECK_THROWS_AS(fejer_oval(32, 1), GeometryError);
  CHECK_THROWS_AS(fejer_oval(2, 5), GeometryError);
}

TEST_CASE("weierstrass") {
  SupportCurve c = weierstrass_cw(0.9, 7);
  CHECK(is_constant_width_form(c.series()));
  for (double t : {0.0, 0.2, 3.0}) CHECK(width_at(c, t) == doctest::Approx(2.0).epsilon(1e-14));
  const double aK = std::pow(0.9, weierstrass_default_terms(0.9, 7));
  CHECK(radius_of_curvature(c, 0.0) == doctest::Approx(2.0 - aK).epsilon(1e-12));
  CHECK(radius_of_curvature(c, pi / 7) == doctest::Approx(aK).epsilon(1e-12));
  CHECK(weierstrass_scale(0.9, 7) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  // Even b: W dips to -cos(pi/(b+1)) * sum a^k, which fixes c = 2 for (1/2, 2).
  CHECK(weierstrass_scale(0.5, 2) == doctest::Approx(2.0).epsilon(1e-15));
  SupportCurve even = weierstrass_cw(0.5, 2, 25);
  CHECK_FALSE(check_mellish(even).pass);
  CHECK_THROWS_AS(weierstrass_cw(0.2, 3), GeometryError);
  CHECK_THROWS_AS(weierstrass_cw(0.9, 3, 2), GeometryError);
}

TEST_CASE("zero width curves") {
  TrigSeries1D z(0.0, {{3, 0.125, 0.0}});
  SupportCurve c = zero_width_curve(z);
  CHECK(c.is_zero_width());
  for (double t : {0.0, 1.0, 2.0}) CHECK(std::abs(width_at(c, t)) < 1e-15);
  CHECK(euler_lift(z, 2.0).series() == rabinowitz(0.125).series());
  CHECK_THROWS_AS(zero_width_curve(TrigSeries1D(0.0, {{2, 0.1, 0.0}})), GeometryError);
  CHECK_THROWS_AS(zero_width_curve(TrigSeries1D(0.5, {{3, 0.1, 0.0}})), GeometryError);
}

TEST_CASE("ellipse") {
  CHECK(perimeter(ellipse(1, 1)) == doctest::Approx(2 * pi).epsilon(1e-12));
  SupportCurve e = ellipse(2, 1);
  CHECK(perimeter(e) == doctest::Approx(pi * mean_width(e)).epsilon(1e-10));
  CHECK_THROWS_AS(ellipse(0, 1), GeometryError);
}

TEST_CASE("registry") {
  std::vector<CatalogEntry> all = curve_catalog();
  CHECK(all.size() == curve_families().size());
  for (const CatalogEntry& e : all) {
    CAPTURE(e.name);
    if (e.name == "zero_width" || e.name == "reuleaux_series") continue;
    CHECK(is_convex(e.curve));
  }
  CatalogEntry r = make_catalog_curve("rabinowitz", {{"a", 0.1}});
  CHECK(r.curve.series().cos_coeff(3) == 0.1);
  CHECK(r.params.at("a") == 0.1);
  CHECK_THROWS_AS(make_catalog_curve("nope"), GeometryError);
  CHECK_THROWS_AS(make_catalog_curve("circle", {{"radius", 1.0}}), GeometryError);
  CHECK_THROWS_AS(make_catalog_curve("fejer", {{"n", 3.5}}), GeometryError);
  CHECK(format_params({{"q", 3}, {"w", 2}}) == "q=3,w=2");
}
