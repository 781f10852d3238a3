#include "orbiform/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "orbiform/error.hpp"

namespace orbiform {

namespace {

GaussRule build_gauss(std::size_t n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_argument, "Gauss-Legendre rule needs n >= 1");
  static std::mutex mu;
  static std::map<std::size_t, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss(n)).first;
  return it->second;
}

double integrate_gauss(const std::function<double(double)>& f, double a, double b, std::size_t n,
                       std::size_t panels) {
  const GaussRule& rule = gauss_legendre(n);
  const double h = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    const double mid = lo + 0.5 * h;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    total += 0.5 * h * acc;
  }
  return total;
}

QuadratureResult periodic_trapezoid(const std::function<double(std::size_t, bool)>& grid_sum,
                                    std::size_t n0, double rel_tol, std::size_t max_points) {
  QuadratureResult r;
  std::size_t n = std::max<std::size_t>(n0, 4);
  // Doubling reuses the previous sum: the new points are the half-step grid.
  double sum = grid_sum(n, false);
  double prev = 2.0 * std::numbers::pi * sum / static_cast<double>(n);
  while (2 * n <= max_points) {
    sum += grid_sum(n, true);
    n *= 2;
    const double cur = 2.0 * std::numbers::pi * sum / static_cast<double>(n);
    const bool done = std::abs(cur - prev) <= rel_tol * std::abs(cur);
    prev = cur;
    if (done) {
      r.converged = true;
      break;
    }
  }
  r.value = prev;
  r.points = n;
  return r;
}

Extremum golden_minimize(const std::function<double(double)>& f, double a, double b, double t_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > t_tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
    if (x1 >= x2) break;
  }
  return f1 <= f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

double compensated_sum(const std::vector<double>& xs) {
  double sum = 0.0;
  double c = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      c += (sum - t) + x;
    } else {
      c += (x - t) + sum;
    }
    sum = t;
  }
  return sum + c;
}

}  // namespace orbiform
