#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orbiform/catalog.hpp"
#include "orbiform/curve.hpp"
#include "orbiform/error.hpp"
#include "orbiform/verify.hpp"

using namespace orbiform;
using std::numbers::pi;

namespace {
const double sqrt3 = std::sqrt(3.0);
// mpmath: 8 * ellipe(3/4)
const double kEllipse21Perimeter = 9.6884482205476762;

SupportCurve rab() { return SupportCurve::fourier(TrigSeries1D(1.0, {{3, 0.125, 0.0}})); }
SupportCurve loz() { return SupportCurve::fourier(TrigSeries1D(1.0, {{2, 1.0 / 3.0, 0.0}})); }
SupportCurve unit() { return SupportCurve::fourier(TrigSeries1D(1.0)); }

double min_over(const std::function<double(double)>& f, int n = 4096) {
  double m = INFINITY;
  for (int i = 0; i < n; ++i) m = std::min(m, f(2 * pi * i / n));
  return m;
}
}  // namespace

TEST_CASE("point_at") {
  Point2 p = point_at(unit(), 0.0);
  CHECK(p.x == 1.0);
  CHECK(p.y == 0.0);
  p = point_at(rab(), 0.0);
  CHECK(p.x == doctest::Approx(1.125));
  CHECK(p.y == doctest::Approx(0.0));
  // At t = pi/3: p = 7/8 and p' = 0 by hand.
  p = point_at(rab(), pi / 3);
  CHECK(p.x == doctest::Approx(7.0 / 16.0).epsilon(1e-14));
  CHECK(p.y == doctest::Approx(7.0 * sqrt3 / 16.0).epsilon(1e-14));
}

TEST_CASE("width") {
  auto w = [](double t) { return width_at(loz(), t); };
  CHECK(min_over(w) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(-min_over([&](double t) { return -w(t); }) == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  for (double t : {0.0, 0.3, 1.9, 4.4}) {
    CHECK(w(t) + w(t + pi / 2) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(width_at(rab(), t) == doctest::Approx(2.0).epsilon(1e-15));
  }
  CHECK(width_series(rab()) == TrigSeries1D(2.0));
  TrigSeries1D ws = width_series(loz());
  CHECK(ws.mean_term() == 2.0);
  CHECK(ws.cos_coeff(2) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(width_series(SupportCurve::zero_width(TrigSeries1D())) == TrigSeries1D());
  CHECK_THROWS_AS(width_series(SupportCurve::ellipse(2, 1)), GeometryError);
}

TEST_CASE("radius of curvature and convexity") {
  CHECK(radius_of_curvature(unit(), 1.3) == 1.0);
  CHECK(radius_of_curvature(rab(), 0.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(radius_of_curvature(rab(), pi / 3) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(is_convex(rab()));
  CHECK_FALSE(is_convex(SupportCurve::fourier(TrigSeries1D(1.0, {{3, 0.13, 0.0}}))));
  CHECK(is_convex(loz()));
  CHECK(is_convex(SupportCurve::ellipse(2, 1)));
  CHECK(is_convex(SupportCurve::reuleaux(5, 2)));
}

TEST_CASE("perimeter") {
  CHECK(perimeter(unit()) == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(perimeter(rab()) == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(perimeter(SupportCurve::ellipse(2, 1)) == doctest::Approx(kEllipse21Perimeter).epsilon(1e-12));
  CHECK(perimeter(SupportCurve::ellipse(1, 1)) == doctest::Approx(2 * pi).epsilon(1e-12));
  CHECK(perimeter(SupportCurve::reuleaux(3, 2)) == doctest::Approx(2 * pi).epsilon(1e-10));
  CHECK_THROWS_AS(perimeter(SupportCurve::fourier(TrigSeries1D(1.0, {{3, 0.2, 0.0}}))), GeometryError);
  // The quadrature path agrees with the closed form for series curves.
  CHECK(arc_length_quadrature(fejer_oval(32, 5)).value == doctest::Approx(2 * pi).epsilon(1e-10));
}

TEST_CASE("mean width") {
  CHECK(mean_width(rab()) == 2.0);
  CHECK(mean_width(SupportCurve::ellipse(2, 1)) == doctest::Approx(kEllipse21Perimeter / pi).epsilon(1e-10));
  CHECK(mean_width(SupportCurve::reuleaux(3, 2)) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("area") {
  CHECK(area(rab()) == doctest::Approx(15 * pi / 16).epsilon(1e-15));
  CHECK(area(SupportCurve::reuleaux(3, 2)) == doctest::Approx(2 * (pi - sqrt3)).epsilon(1e-12));
  CHECK(area(loz()) == doctest::Approx(5 * pi / 6).epsilon(1e-15));
  CHECK(area_quadrature(loz()).value == doctest::Approx(5 * pi / 6).epsilon(1e-12));
  CHECK(area(SupportCurve::ellipse(2, 1)) == doctest::Approx(2 * pi).epsilon(1e-12));
  CHECK(area(SupportCurve::reuleaux(3, 2, ReuleauxAnchor::centroid)) ==
        doctest::Approx(2 * (pi - sqrt3)).epsilon(1e-12));
}

TEST_CASE("rho extrema") {
  RhoExtrema e = rho_extrema(rab());
  CHECK(e.rho_min == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e.rho_max == doctest::Approx(2.0).epsilon(1e-12));
  // Truncated after K terms, rho runs from a^K to 2 - a^K.
  const double aK = std::pow(0.9, weierstrass_default_terms(0.9, 3));
  e = rho_extrema(weierstrass_cw(0.9, 3));
  CHECK(e.rho_min == doctest::Approx(aK).epsilon(1e-12));
  CHECK(e.rho_max == doctest::Approx(2.0 - aK).epsilon(1e-12));
  CHECK(e.rho_min + e.rho_max == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(e.t_max) < 1e-6);
  CHECK(e.t_min == doctest::Approx(pi / 3).epsilon(1e-6));
  e = rho_extrema(weierstrass_cw(0.5, 2, 25));
  CHECK(std::abs(e.rho_min) < 1e-6);
  CHECK(e.rho_max == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("mellish") {
  MellishReport m = check_mellish(rab());
  CHECK(m.pass);
  CHECK(m.max_violation < 1e-12);
  m = check_mellish(unit());
  CHECK(m.pass);
  CHECK(m.max_violation == 0.0);
  m = check_mellish(loz());
  CHECK_FALSE(m.pass);
  CHECK_FALSE(m.constant_width_form);
  // rho(t) + rho(t + pi) - 2 = -2 cos 2t for the lozenge.
  CHECK(m.max_violation == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("rho bound") {
  RhoBoundReport r = rho_bound_check(rab());
  CHECK(r.pass);
  CHECK(r.bound == 2.0);
  r = rho_bound_check(loz());
  CHECK(r.pass);
  CHECK(r.bound == 4.0);
  CHECK(r.rho_max == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.rho_min == doctest::Approx(0.0).epsilon(1e-12));
  r = rho_bound_check(unit());
  CHECK(r.rho_min == 1.0);
  CHECK(r.rho_max == 1.0);
  CHECK(r.rho_mean == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("diameter chords") {
  CHECK(diameter_chord_check(rab(), 2048, 1e-10).pass);
  ChordReport c = diameter_chord_check(unit());
  CHECK(c.pass);
  CHECK(c.max_violation < 1e-15);
  CHECK_FALSE(diameter_chord_check(loz()).pass);
}

TEST_CASE("euler lift") {
  TrigSeries1D z(0.0, {{3, 0.125, 0.0}});
  CHECK(euler_lift(z, 2.0).series() == rab().series());
  CHECK(euler_lift(TrigSeries1D(), 2.0).series() == TrigSeries1D(1.0));
  // rho = w/2 - cos 3t, so w must be at least 2.
  CHECK(minimum_lift_width(z) == doctest::Approx(2.0).epsilon(1e-9));
  try {
    euler_lift(z, 0.5);
    FAIL("expected non_convex");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::non_convex);
    CHECK(e.detail() == doctest::Approx(2.0).epsilon(1e-9));
  }
}

TEST_CASE("polar angle") {
  CHECK(polar_angle(unit(), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  Point2 p = point_at(loz(), pi / 4);
  CHECK(polar_angle(loz(), pi / 4) == doctest::Approx(std::atan2(p.y, p.x)).epsilon(1e-14));
  CHECK(polar_angle(rab(), 0.0) == 0.0);
}

TEST_CASE("metrics") {
  CurveMetrics m = metrics(unit());
  CHECK(m.mean_width == 2.0);
  CHECK(*m.perimeter == doctest::Approx(2 * pi));
  CHECK(*m.area == doctest::Approx(pi));
  CHECK(m.rho_min == 1.0);
  CHECK(m.rho_max == 1.0);
  CHECK(m.degree == 0u);
  CHECK(m.convex);

  m = metrics(rab());
  CHECK(*m.area == doctest::Approx(15 * pi / 16));
  CHECK(m.degree == 1u);
  m = metrics(loz());
  CHECK(*m.area == doctest::Approx(5 * pi / 6));
  CHECK(m.degree == 2u);
  CHECK(m.rho_max == doctest::Approx(2.0));

  m = metrics(SupportCurve::fourier(TrigSeries1D(1.0, {{3, 0.3, 0.0}})));
  CHECK_FALSE(m.convex);
  CHECK_FALSE(m.perimeter.has_value());
  CHECK_FALSE(m.area.has_value());
  CHECK(metrics(SupportCurve::reuleaux(3, 2)).degree == 1u);
  CHECK_FALSE(metrics(SupportCurve::ellipse(2, 1)).degree.has_value());
}

TEST_CASE("reuleaux polygon support") {
  SupportCurve r = SupportCurve::reuleaux(3, 2);
  for (int i = 0; i < 100; ++i) {
    double t = 2 * pi * (i + 0.37) / 100;
    CHECK(width_at(r, t) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(radius_of_curvature(r, t) + radius_of_curvature(r, t + pi) == doctest::Approx(2.0).epsilon(1e-12));
  }
  // Vertex 0 on the positive x-axis at distance w/sqrt3 from the centroid.
  SupportCurve rc = SupportCurve::reuleaux(3, 2, ReuleauxAnchor::centroid);
  CHECK(point_at(rc, 0.1).x == doctest::Approx(2 / sqrt3).epsilon(1e-13));
  CHECK(r.breakpoints().size() == 6);
  CHECK_THROWS_AS(SupportCurve::reuleaux(4, 2), GeometryError);
}

TEST_CASE("area paths agree on random ovals") {
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    SupportCurve c = SupportCurve::fourier(random_oval_series(rng, 12, i % 2 == 0));
    CHECK(area(c) == doctest::Approx(area_quadrature(c).value).epsilon(1e-11));
    CHECK(perimeter(c) == doctest::Approx(arc_length_quadrature(c).value).epsilon(1e-9));
  }
}
