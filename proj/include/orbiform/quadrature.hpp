#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace orbiform {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule (Newton on the Legendre recurrence).
const GaussRule& gauss_legendre(std::size_t n);

// Integral of f over [a, b] with `panels` equal sub-intervals of an n-point
// Gauss-Legendre rule each.
double integrate_gauss(const std::function<double(double)>& f, double a, double b,
                       std::size_t n = 32, std::size_t panels = 1);

struct QuadratureResult {
  double value = 0.0;
  std::size_t points = 0;
  bool converged = false;
};

// Periodic trapezoid rule over [0, 2 pi). grid_sum(n, half_step) returns the
// plain sum of the integrand over the n-point grid (or its half-step shift);
// the grid doubles from n0 until the relative change is below rel_tol or
// n would exceed max_points.
QuadratureResult periodic_trapezoid(const std::function<double(std::size_t, bool)>& grid_sum,
                                    std::size_t n0, double rel_tol = 1e-10,
                                    std::size_t max_points = std::size_t{1} << 20);

struct Extremum {
  double t;
  double value;
};

// Golden-section search for a minimum of f on [a, b].
Extremum golden_minimize(const std::function<double(double)>& f, double a, double b,
                         double t_tol = 1e-12);

// Neumaier-compensated sum.
double compensated_sum(const std::vector<double>& xs);

}  // namespace orbiform
