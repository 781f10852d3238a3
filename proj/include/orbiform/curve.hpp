#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "orbiform/quadrature.hpp"
#include "orbiform/trig_series.hpp"

namespace orbiform {

enum class CurveKind { fourier, reuleaux_exact, ellipse };

// Where the origin sits inside an exact Reuleaux polygon (vertex 0 always
// lies on the positive x-axis).
enum class ReuleauxAnchor {
  diameter_midpoint,  // midpoint of the diameter through vertex 0; matches the q=3 series
  centroid,
};

struct ReuleauxParams {
  unsigned q = 3;
  double width = 2.0;
  ReuleauxAnchor anchor = ReuleauxAnchor::diameter_midpoint;
};

struct EllipseParams {
  double a = 1.0;
  double b = 1.0;
};

// p, p', p'' at one normal angle.
struct SupportJet {
  double p;
  double dp;
  double d2p;
};

struct Point2 {
  double x;
  double y;
};

// An oval given by its support function. Immutable; cheap to copy.
class SupportCurve {
 public:
  static SupportCurve fourier(TrigSeries1D series);
  // Mean zero and odd harmonics only; w(t) == 0.
  static SupportCurve zero_width(TrigSeries1D series);
  static SupportCurve reuleaux(unsigned q, double width,
                               ReuleauxAnchor anchor = ReuleauxAnchor::diameter_midpoint);
  static SupportCurve ellipse(double a, double b);

  CurveKind kind() const { return kind_; }
  bool is_zero_width() const { return zero_width_; }

  const TrigSeries1D& series() const;
  const TrigSeries1D& rho_series() const;
  const ReuleauxParams& reuleaux_params() const;
  const EllipseParams& ellipse_params() const;

  // At a Reuleaux joint the right-hand limits are returned.
  SupportJet jet(double t) const;
  SupportJet jet(GridAngle t) const;

  // Parameters in [0, 2 pi) where rho jumps; empty for smooth kinds.
  std::vector<double> breakpoints() const;

 private:
  struct FourierData;

  CurveKind kind_ = CurveKind::fourier;
  bool zero_width_ = false;
  std::shared_ptr<const FourierData> fourier_;
  ReuleauxParams reuleaux_{};
  EllipseParams ellipse_{};
};

const char* to_string(CurveKind kind) noexcept;

Point2 point_at(const SupportCurve& c, double t);
double width_at(const SupportCurve& c, double t);
TrigSeries1D width_series(const SupportCurve& c);
double radius_of_curvature(const SupportCurve& c, double t);

// Grid size used when callers pass grid_n = 0: a multiple of 8! at least
// 4(N+1), capped for very high harmonics.
std::size_t recommended_grid(const SupportCurve& c);

// Samples of a periodic grid, either aligned at 2 pi i/n or offset by half
// a step (used for piecewise curves so that no sample hits a joint).
struct GridSamples {
  std::vector<double> t;
  std::vector<double> p;
  std::vector<double> dp;
  std::vector<double> rho;
};
GridSamples sample_grid(const SupportCurve& c, std::size_t n, bool half_step = false);

inline constexpr double kConvexTol = 1e-9;

bool is_convex(const SupportCurve& c, std::size_t grid_n = 0, double tol = kConvexTol);

// Closed form (pi * mean width) for the fourier kind, quadrature otherwise.
// Throws non_convex.
double perimeter(const SupportCurve& c);
// Integral of sqrt(x'^2 + y'^2); no convexity gate.
QuadratureResult arc_length_quadrature(const SupportCurve& c);

double mean_width(const SupportCurve& c);
// (1/pi) * integral of p.
QuadratureResult mean_width_quadrature(const SupportCurve& c);

// Coefficient form for the fourier kind, quadrature otherwise. Throws non_convex.
double area(const SupportCurve& c);
double area_coefficient_form(const TrigSeries1D& s);
// (1/2) * integral of p^2 - p'^2; no convexity gate.
QuadratureResult area_quadrature(const SupportCurve& c);

// Fourier projection (1/pi) int p(t) cos(kt) dt and the sine analogue for
// k >= 1, (1/2pi) int p for k = 0.
double fourier_cos_coefficient(const SupportCurve& c, std::uint64_t k);
double fourier_sin_coefficient(const SupportCurve& c, std::uint64_t k);

struct RhoExtrema {
  double rho_min;
  double rho_max;
  double t_min;
  double t_max;
};
RhoExtrema rho_extrema(const SupportCurve& c, std::size_t grid_n = 0);

struct MellishReport {
  double width;
  double max_violation;
  bool constant_width_form;
  bool pass;
};
MellishReport check_mellish(const SupportCurve& c, std::size_t grid_n = 0, double tol = 1e-10);

struct RhoBoundReport {
  unsigned degree;
  double bound;  // 2^(m-1) * mean width
  double rho_min;
  double rho_max;
  double rho_mean;
  bool lower_ok;
  bool upper_ok;
  bool mean_ok;
  bool pass;
};
RhoBoundReport rho_bound_check(const SupportCurve& c, std::size_t grid_n = 0,
                               double tol = kConvexTol);

struct ChordReport {
  double width;
  double max_violation;
  bool pass;
};
ChordReport diameter_chord_check(const SupportCurve& c, std::size_t grid_n = 2048,
                                 double tol = 1e-9);

// Smallest w for which zero_width + w/2 is convex.
double minimum_lift_width(const TrigSeries1D& zero_width);
// Euler's evolvent construction; throws non_convex with the minimum width
// in GeometryError::detail().
SupportCurve euler_lift(const TrigSeries1D& zero_width, double w);

double polar_angle(const SupportCurve& c, double t);

// Degree of the support function; nullopt stands for "unbounded".
std::optional<unsigned> curve_degree(const SupportCurve& c, double tol = kDefaultClassifyTol);

struct CurveMetrics {
  double mean_width;
  std::optional<double> perimeter;  // absent when not convex
  std::optional<double> area;
  double rho_min;
  double rho_max;
  std::optional<unsigned> degree;  // absent means unbounded
  bool convex;
};
CurveMetrics metrics(const SupportCurve& c);

struct CurveSample {
  double t;
  double x;
  double y;
  double p;
  double rho;
  double width;
};
std::vector<CurveSample> samples(const SupportCurve& c, std::size_t n);

}  // namespace orbiform
