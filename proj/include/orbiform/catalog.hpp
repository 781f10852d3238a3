#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "orbiform/curve.hpp"

namespace orbiform {

SupportCurve circle(double w);
SupportCurve lozenge();
// p = 1 + a cos 3t, |a| <= 1/8.
SupportCurve rabinowitz(double a);

// The degree-8 implicit polynomial of the Rabinowitz curve, and the largest
// magnitude among its monomials at (x, y) (a scale for relative residuals).
double rabinowitz_poly_residual(double a, double x, double y);
double rabinowitz_poly_scale(double a, double x, double y);

inline constexpr unsigned kReuleauxSeriesDefaultTerms = 200;
SupportCurve reuleaux_triangle_series(unsigned n_terms = kReuleauxSeriesDefaultTerms);
SupportCurve reuleaux_polygon_exact(unsigned q, double w,
                                    ReuleauxAnchor anchor = ReuleauxAnchor::diameter_midpoint);

// rho(t) is the Fejer kernel F_n evaluated at sigma*t (maximum n, mean 1).
SupportCurve fejer_oval(unsigned n, unsigned sigma);

// rho(t) = 1 + c W_{a,b}(t) truncated after n_terms (0 picks the smallest
// count whose next coefficient a^k/(b^{2k}-1) is below 1e-14).
SupportCurve weierstrass_cw(double a, unsigned b, unsigned n_terms = 0);
unsigned weierstrass_default_terms(double a, unsigned b);
double weierstrass_scale(double a, unsigned b);

SupportCurve zero_width_curve(TrigSeries1D series);
SupportCurve ellipse(double a, double b);

using ParamMap = std::map<std::string, double>;

struct CatalogEntry {
  std::string name;
  ParamMap params;
  SupportCurve curve;
  std::string validity_note;
};

// A named family with default parameters. build() receives the defaults
// merged with user overrides.
struct CurveFamily {
  std::string name;
  ParamMap defaults;
  std::string validity_note;
  bool constant_width;  // for the default parameters
  std::function<SupportCurve(const ParamMap&)> build;
};

const std::vector<CurveFamily>& curve_families();
const CurveFamily& curve_family(const std::string& name);

// Unknown names and unknown parameter keys are rejected.
CatalogEntry make_catalog_curve(const std::string& name, const ParamMap& overrides = {});

// Every family at its default parameters, in registry order.
std::vector<CatalogEntry> curve_catalog();

std::string format_params(const ParamMap& params);

}  // namespace orbiform
