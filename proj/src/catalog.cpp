#include "orbiform/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "orbiform/error.hpp"

namespace orbiform {

namespace {

constexpr double kPi = std::numbers::pi;

// Expanded form of the Rabinowitz polynomial: coefficient * a^i x^j y^k.
struct Monomial {
  int i, j, k;
  double coeff;
};

constexpr Monomial kRabinowitzMonomials[] = {
    {8, 0, 0, 729},
    {6, 2, 0, -972},
    {6, 0, 2, -972},
    {6, 0, 0, -2187},
    {5, 3, 0, -432},
    {5, 1, 2, 1296},
    {4, 4, 0, 270},
    {4, 2, 2, 540},
    {4, 2, 0, -243},
    {4, 0, 4, 270},
    {4, 0, 2, -243},
    {4, 0, 0, 2187},
    {3, 5, 0, 288},
    {3, 3, 2, -576},
    {3, 3, 0, -1080},
    {3, 1, 4, -864},
    {3, 1, 2, 3240},
    {2, 6, 0, 100},
    {2, 4, 2, -276},
    {2, 4, 0, -513},
    {2, 2, 4, 684},
    {2, 2, 2, -1026},
    {2, 2, 0, 1215},
    {2, 0, 6, 36},
    {2, 0, 4, -513},
    {2, 0, 2, 1215},
    {2, 0, 0, -729},
    {1, 7, 0, 16},
    {1, 5, 2, -16},
    {1, 5, 0, -72},
    {1, 3, 4, -80},
    {1, 3, 2, 144},
    {1, 3, 0, 54},
    {1, 1, 6, -48},
    {1, 1, 4, 216},
    {1, 1, 2, -162},
    {0, 8, 0, 1},
    {0, 6, 2, 4},
    {0, 6, 0, -1},
    {0, 4, 4, 6},
    {0, 4, 2, -3},
    {0, 2, 6, 4},
    {0, 2, 4, -3},
    {0, 0, 8, 1},
    {0, 0, 6, -1},
};

double ipow(double base, int e) {
  double r = 1.0;
  for (int n = 0; n < e; ++n) r *= base;
  return r;
}

unsigned as_count(const ParamMap& p, const std::string& key) {
  const double v = p.at(key);
  if (!(v >= 0) || v != std::floor(v) || v > 1e9) {
    fail(ErrorKind::invalid_argument, "parameter " + key + " must be a non-negative integer");
  }
  return static_cast<unsigned>(v);
}

double weierstrass_coeff(double a, unsigned b, unsigned k) {
  const double bk = std::pow(static_cast<double>(b), static_cast<double>(k));
  return std::pow(a, static_cast<double>(k)) / (bk * bk - 1.0);
}

}  // namespace

SupportCurve circle(double w) {
  if (!(w > 0) || !std::isfinite(w)) fail(ErrorKind::invalid_argument, "circle: width must be positive");
  return SupportCurve::fourier(TrigSeries1D(w / 2.0));
}

SupportCurve lozenge() { return SupportCurve::fourier(TrigSeries1D(1.0, {{2, 1.0 / 3.0, 0.0}})); }

SupportCurve rabinowitz(double a) {
  if (!std::isfinite(a) || std::abs(a) > 0.125) {
    fail(ErrorKind::non_convex, "rabinowitz: |a| must not exceed 1/8 (curve would not be convex)");
  }
  return SupportCurve::fourier(TrigSeries1D(1.0, {{3, a, 0.0}}));
}

double rabinowitz_poly_residual(double a, double x, double y) {
  const double x2 = x * x;
  const double y2 = y * y;
  const double r2 = x2 + y2;
  return -432 * ipow(a, 5) * (x * x2 - 3 * x * y2) - 243 * ipow(a, 6) * (4 * x2 + 4 * y2 + 9) +
         27 * ipow(a, 4) * (10 * x2 * x2 + x2 * (20 * y2 - 9) + 10 * y2 * y2 - 9 * y2 + 81) +
         72 * ipow(a, 3) * x * (4 * x2 * x2 - x2 * (8 * y2 + 15) - 12 * y2 * y2 + 45 * y2) +
         2 * a * x *
             (8 * ipow(x, 6) - 4 * x2 * x2 * (2 * y2 + 9) + x2 * (-40 * y2 * y2 + 72 * y2 + 27) -
              3 * y2 * (8 * y2 * y2 - 36 * y2 + 27)) +
         a * a *
             (100 * ipow(x, 6) - 3 * x2 * x2 * (92 * y2 + 171) + 9 * x2 * (76 * y2 * y2 - 114 * y2 + 135) +
              9 * (4 * ipow(y, 6) - 57 * y2 * y2 + 135 * y2 - 81)) +
         729 * ipow(a, 8) + (r2 - 1) * r2 * r2 * r2;
}

double rabinowitz_poly_scale(double a, double x, double y) {
  double m = 0.0;
  for (const auto& t : kRabinowitzMonomials) {
    m = std::max(m, std::abs(t.coeff * ipow(a, t.i) * ipow(x, t.j) * ipow(y, t.k)));
  }
  return m;
}

SupportCurve reuleaux_triangle_series(unsigned n_terms) {
  if (n_terms < 1) fail(ErrorKind::invalid_argument, "reuleaux_triangle_series: n_terms must be >= 1");
  std::vector<Harmonic> terms;
  terms.push_back({1, 1.0 - (2.0 / 3.0) * std::sqrt(3.0), 0.0});
  for (unsigned n = 0; n < n_terms; ++n) {
    const double nd = n;
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    const double c = sign / (kPi * (2 * nd + 1) * (3 * nd + 1) * (3 * nd + 2));
    terms.push_back({3 * (2 * std::uint64_t{n} + 1), c, 0.0});
  }
  return SupportCurve::fourier(TrigSeries1D(1.0, std::move(terms)));
}

SupportCurve reuleaux_polygon_exact(unsigned q, double w, ReuleauxAnchor anchor) {
  return SupportCurve::reuleaux(q, w, anchor);
}

SupportCurve fejer_oval(unsigned n, unsigned sigma) {
  if (n < 3) fail(ErrorKind::invalid_argument, "fejer_oval: n must be >= 3");
  if (sigma < 2) fail(ErrorKind::invalid_argument, "fejer_oval: sigma must be >= 2");
  std::vector<Harmonic> terms;
  for (unsigned k = 1; k < n; ++k) {
    const double sk = static_cast<double>(sigma) * k;
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    const double c = 2.0 * sign * (static_cast<double>(n - k) / n) / (1.0 - sk * sk);
    terms.push_back({std::uint64_t{sigma} * k, c, 0.0});
  }
  return SupportCurve::fourier(TrigSeries1D(1.0, std::move(terms)));
}

double weierstrass_scale(double a, unsigned b) {
  if (b % 2 == 1) return (1.0 - a) / a;
  return (1.0 - a) / (a * std::cos(kPi / (b + 1.0)));
}

unsigned weierstrass_default_terms(double a, unsigned b) {
  unsigned k = 1;
  while (weierstrass_coeff(a, b, k) >= 1e-14) ++k;
  return std::max(1u, k - 1);
}

SupportCurve weierstrass_cw(double a, unsigned b, unsigned n_terms) {
  if (!(a > 0 && a < 1)) fail(ErrorKind::invalid_argument, "weierstrass_cw: need 0 < a < 1");
  if (b < 2) fail(ErrorKind::invalid_argument, "weierstrass_cw: need integer b >= 2");
  if (a * b < 1.0) fail(ErrorKind::invalid_argument, "weierstrass_cw: need a*b >= 1");
  const unsigned k_max = n_terms == 0 ? weierstrass_default_terms(a, b) : n_terms;
  if (weierstrass_coeff(a, b, k_max + 1) >= 1e-12) {
    fail(ErrorKind::invalid_argument, "weierstrass_cw: n_terms too small (coefficient tail >= 1e-12)");
  }
  if (static_cast<double>(k_max) * std::log2(static_cast<double>(b)) >= 62.0) {
    fail(ErrorKind::invalid_argument, "weierstrass_cw: harmonic b^n_terms exceeds the representable range");
  }
  const double c = weierstrass_scale(a, b);
  std::vector<Harmonic> terms;
  std::uint64_t bk = 1;
  for (unsigned k = 1; k <= k_max; ++k) {
    bk *= b;
    const double bkd = static_cast<double>(bk);
    terms.push_back({bk, c * std::pow(a, static_cast<double>(k)) / (1.0 - bkd * bkd), 0.0});
  }
  return SupportCurve::fourier(TrigSeries1D(1.0, std::move(terms)));
}

SupportCurve zero_width_curve(TrigSeries1D series) { return SupportCurve::zero_width(std::move(series)); }

SupportCurve ellipse(double a, double b) { return SupportCurve::ellipse(a, b); }

const std::vector<CurveFamily>& curve_families() {
  static const std::vector<CurveFamily> families = {
      {"circle", {{"w", 2.0}}, "w > 0", true,
       [](const ParamMap& p) { return circle(p.at("w")); }},
      {"lozenge", {}, "degree 2; width varies in [4/3, 8/3]", false,
       [](const ParamMap&) { return lozenge(); }},
      {"rabinowitz", {{"a", 0.125}}, "convex iff |a| <= 1/8; boundary a=1/8 has rho=0 corners", true,
       [](const ParamMap& p) { return rabinowitz(p.at("a")); }},
      {"reuleaux_series", {{"n_terms", 200.0}},
       "truncated series; Gibbs overshoot makes rho dip below 0 near the vertices", true,
       [](const ParamMap& p) { return reuleaux_triangle_series(as_count(p, "n_terms")); }},
      {"reuleaux_polygon", {{"q", 3.0}, {"w", 2.0}}, "q odd >= 3, w > 0; exact piecewise support", true,
       [](const ParamMap& p) { return reuleaux_polygon_exact(as_count(p, "q"), p.at("w")); }},
      {"fejer", {{"n", 32.0}, {"sigma", 5.0}}, "n >= 3, sigma >= 2; rho_max = n", false,
       [](const ParamMap& p) { return fejer_oval(as_count(p, "n"), as_count(p, "sigma")); }},
      {"weierstrass", {{"a", 0.9}, {"b", 7.0}, {"n_terms", 0.0}},
       "0<a<1, ab>=1; constant width iff b odd; n_terms=0 truncates at coefficient 1e-14", true,
       [](const ParamMap& p) {
         return weierstrass_cw(p.at("a"), as_count(p, "b"), as_count(p, "n_terms"));
       }},
      {"zero_width", {{"a3", 0.125}}, "zero mean, odd harmonics; not convex (cusped)", false,
       [](const ParamMap& p) { return zero_width_curve(TrigSeries1D(0.0, {{3, p.at("a3"), 0.0}})); }},
      {"ellipse", {{"a", 2.0}, {"b", 1.0}}, "a, b > 0; support about the centre", false,
       [](const ParamMap& p) { return ellipse(p.at("a"), p.at("b")); }},
  };
  return families;
}

const CurveFamily& curve_family(const std::string& name) {
  for (const auto& f : curve_families()) {
    if (f.name == name) return f;
  }
  fail(ErrorKind::invalid_argument, "unknown curve catalog name: " + name);
}

CatalogEntry make_catalog_curve(const std::string& name, const ParamMap& overrides) {
  const CurveFamily& fam = curve_family(name);
  ParamMap params = fam.defaults;
  for (const auto& [key, value] : overrides) {
    if (!params.contains(key)) {
      fail(ErrorKind::invalid_argument, "unknown parameter '" + key + "' for " + name);
    }
    params[key] = value;
  }
  return {fam.name, params, fam.build(params), fam.validity_note};
}

std::vector<CatalogEntry> curve_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& f : curve_families()) out.push_back(make_catalog_curve(f.name));
  return out;
}

std::string format_params(const ParamMap& params) {
  if (params.empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ',';
    first = false;
    os << k << '=' << v;
  }
  return os.str();
}

}  // namespace orbiform
