#include "orbiform/curve.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "orbiform/error.hpp"

namespace orbiform {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 8! divides every default grid so that angles like pi/b and 2 pi/(b+1)
// are exact sample points for small b.
constexpr std::size_t kGridQuantum = 40320;
constexpr std::size_t kMaxDefaultGrid = 8 * kGridQuantum;

double circumradius(const ReuleauxParams& r) {
  return r.width / (2.0 * std::cos(kPi / (2.0 * r.q)));
}

// Offset along +x applied to the centroid-anchored polygon.
double anchor_shift(const ReuleauxParams& r) {
  return r.anchor == ReuleauxAnchor::diameter_midpoint ? r.width / 2.0 - circumradius(r) : 0.0;
}

SupportJet reuleaux_jet(const ReuleauxParams& r, double t) {
  const double q = static_cast<double>(r.q);
  const double R = circumradius(r);
  const double piece_len = kPi / q;
  double u = std::fmod(t + piece_len / 2.0, kTwoPi);
  if (u < 0) u += kTwoPi;
  auto piece = static_cast<long>(std::floor(u / piece_len));
  piece = std::clamp(piece, 0L, static_cast<long>(2 * r.q) - 1);
  SupportJet j{};
  if (piece % 2 == 0) {
    // Normal cone at a vertex: the support is that of a point.
    const double phi = static_cast<double>(piece) * piece_len;
    const double d = t - phi;
    j = {R * std::cos(d), -R * std::sin(d), -R * std::cos(d)};
  } else {
    // Arc of radius w centred at the opposite vertex.
    const double phi_c = static_cast<double>(piece) * piece_len - kPi;
    const double d = t - phi_c;
    j = {r.width + R * std::cos(d), -R * std::sin(d), -R * std::cos(d)};
  }
  const double s = anchor_shift(r);
  j.p += s * std::cos(t);
  j.dp -= s * std::sin(t);
  j.d2p -= s * std::cos(t);
  return j;
}

SupportJet ellipse_jet(const EllipseParams& e, double t) {
  const double a2 = e.a * e.a;
  const double b2 = e.b * e.b;
  const double c2 = std::cos(2.0 * t);
  const double s2 = std::sin(2.0 * t);
  const double g = 0.5 * (a2 + b2) + 0.5 * (a2 - b2) * c2;
  const double g1 = -(a2 - b2) * s2;
  const double g2 = -2.0 * (a2 - b2) * c2;
  const double p = std::sqrt(g);
  const double dp = g1 / (2.0 * p);
  const double d2p = g2 / (2.0 * p) - g1 * g1 / (4.0 * p * p * p);
  return {p, dp, d2p};
}

std::size_t round_up_grid(std::size_t n) {
  const std::size_t m = std::max<std::size_t>(n, 1);
  return std::min(kMaxDefaultGrid, ((m + kGridQuantum - 1) / kGridQuantum) * kGridQuantum);
}

std::size_t resolve_grid(const SupportCurve& c, std::size_t grid_n) {
  return grid_n == 0 ? recommended_grid(c) : grid_n;
}

// Integral over [0, 2 pi) of f for the non-fourier kinds: Gauss-Legendre on
// each smooth piece of a Reuleaux polygon, refined trapezoid for the ellipse.
QuadratureResult integrate_closed_form(const SupportCurve& c, const std::function<double(double)>& f,
                                       std::size_t panels_per_piece = 4) {
  if (c.kind() == CurveKind::reuleaux_exact) {
    auto bp = c.breakpoints();
    bp.push_back(bp.front() + kTwoPi);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
      total += integrate_gauss(f, bp[i], bp[i + 1], 24, panels_per_piece);
    }
    return {total, (bp.size() - 1) * panels_per_piece * 24, true};
  }
  auto grid_sum = [&](std::size_t n, bool half) {
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = f(grid_angle(i, n, half).radians());
    return compensated_sum(vals);
  };
  return periodic_trapezoid(grid_sum, 64);
}

// Starting size for fourier-kind trapezoid refinement: resolves the series
// when N is moderate, otherwise relies on the absence of aliasing.
std::size_t fourier_start_grid(const TrigSeries1D& s) {
  const std::uint64_t want = 2 * (s.max_harmonic() + 1);
  const std::uint64_t capped = std::min<std::uint64_t>(want, std::uint64_t{1} << 16);
  return std::max<std::size_t>(64, std::bit_ceil(capped));
}

double gcd_of_harmonics(const TrigSeries1D& s) {
  std::uint64_t g = 0;
  for (const auto& h : s.terms()) g = std::gcd(g, h.k);
  return static_cast<double>(g);
}

void require_convex(const SupportCurve& c, const char* what) {
  if (c.is_zero_width() || !is_convex(c)) {
    fail(ErrorKind::non_convex, std::string(what) + ": curve is not convex");
  }
}

}  // namespace

struct SupportCurve::FourierData {
  TrigSeries1D series;
  TrigSeries1D d1;
  TrigSeries1D d2;
  TrigSeries1D rho;
};

const char* to_string(CurveKind kind) noexcept {
  switch (kind) {
    case CurveKind::fourier: return "fourier";
    case CurveKind::reuleaux_exact: return "reuleaux_exact";
    case CurveKind::ellipse: return "ellipse";
  }
  return "unknown";
}

SupportCurve SupportCurve::fourier(TrigSeries1D series) {
  if (!(series.mean_term() > 0)) {
    fail(ErrorKind::invalid_argument, "fourier curve needs a positive mean term (use zero_width)");
  }
  SupportCurve c;
  c.kind_ = CurveKind::fourier;
  auto d2 = derivative(series, 2);
  auto rho = series + d2;
  auto d1 = derivative(series, 1);
  c.fourier_ = std::make_shared<const FourierData>(
      FourierData{std::move(series), std::move(d1), std::move(d2), std::move(rho)});
  return c;
}

SupportCurve SupportCurve::zero_width(TrigSeries1D series) {
  if (std::abs(series.mean_term()) > kDefaultClassifyTol) {
    fail(ErrorKind::invalid_argument, "zero-width curve needs a zero mean term");
  }
  if (!is_constant_width_form(series)) {
    fail(ErrorKind::invalid_argument, "zero-width curve admits odd harmonics only");
  }
  SupportCurve c;
  c.kind_ = CurveKind::fourier;
  c.zero_width_ = true;
  auto d2 = derivative(series, 2);
  auto rho = series + d2;
  auto d1 = derivative(series, 1);
  c.fourier_ = std::make_shared<const FourierData>(
      FourierData{std::move(series), std::move(d1), std::move(d2), std::move(rho)});
  return c;
}

SupportCurve SupportCurve::reuleaux(unsigned q, double width, ReuleauxAnchor anchor) {
  if (q < 3 || q % 2 == 0) fail(ErrorKind::invalid_argument, "Reuleaux polygon needs odd q >= 3");
  if (!(width > 0) || !std::isfinite(width)) {
    fail(ErrorKind::invalid_argument, "Reuleaux polygon needs width > 0");
  }
  SupportCurve c;
  c.kind_ = CurveKind::reuleaux_exact;
  c.reuleaux_ = {q, width, anchor};
  return c;
}

SupportCurve SupportCurve::ellipse(double a, double b) {
  if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b)) {
    fail(ErrorKind::invalid_argument, "ellipse needs positive finite semi-axes");
  }
  SupportCurve c;
  c.kind_ = CurveKind::ellipse;
  c.ellipse_ = {a, b};
  return c;
}

const TrigSeries1D& SupportCurve::series() const {
  if (kind_ != CurveKind::fourier) fail(ErrorKind::wrong_kind, "curve has no stored series");
  return fourier_->series;
}

const TrigSeries1D& SupportCurve::rho_series() const {
  if (kind_ != CurveKind::fourier) fail(ErrorKind::wrong_kind, "curve has no stored series");
  return fourier_->rho;
}

const ReuleauxParams& SupportCurve::reuleaux_params() const {
  if (kind_ != CurveKind::reuleaux_exact) fail(ErrorKind::wrong_kind, "not a Reuleaux polygon");
  return reuleaux_;
}

const EllipseParams& SupportCurve::ellipse_params() const {
  if (kind_ != CurveKind::ellipse) fail(ErrorKind::wrong_kind, "not an ellipse");
  return ellipse_;
}

SupportJet SupportCurve::jet(double t) const {
  switch (kind_) {
    case CurveKind::fourier:
      return {eval(fourier_->series, t), eval(fourier_->d1, t), eval(fourier_->d2, t)};
    case CurveKind::reuleaux_exact: return reuleaux_jet(reuleaux_, t);
    case CurveKind::ellipse: return ellipse_jet(ellipse_, t);
  }
  return {};
}

SupportJet SupportCurve::jet(GridAngle t) const {
  if (kind_ == CurveKind::fourier) {
    return {eval(fourier_->series, t), eval(fourier_->d1, t), eval(fourier_->d2, t)};
  }
  return jet(t.radians());
}

std::vector<double> SupportCurve::breakpoints() const {
  std::vector<double> out;
  if (kind_ != CurveKind::reuleaux_exact) return out;
  const double piece_len = kPi / reuleaux_.q;
  for (unsigned i = 0; i < 2 * reuleaux_.q; ++i) {
    out.push_back(piece_len / 2.0 + piece_len * i);
  }
  return out;
}

Point2 point_at(const SupportCurve& c, double t) {
  const SupportJet j = c.jet(t);
  const double ct = std::cos(t);
  const double st = std::sin(t);
  return {j.p * ct - j.dp * st, j.p * st + j.dp * ct};
}

double width_at(const SupportCurve& c, double t) { return c.jet(t).p + c.jet(t + kPi).p; }

TrigSeries1D width_series(const SupportCurve& c) {
  if (c.kind() != CurveKind::fourier) fail(ErrorKind::wrong_kind, "width_series needs a fourier curve");
  const TrigSeries1D& s = c.series();
  std::vector<Harmonic> even;
  for (const auto& h : s.terms()) {
    if (h.k % 2 == 0) even.push_back({h.k, 2.0 * h.a, 2.0 * h.b});
  }
  return TrigSeries1D(2.0 * s.mean_term(), std::move(even));
}

double radius_of_curvature(const SupportCurve& c, double t) {
  if (c.kind() == CurveKind::fourier) return eval(c.rho_series(), t);
  const SupportJet j = c.jet(t);
  return j.p + j.d2p;
}

std::size_t recommended_grid(const SupportCurve& c) {
  if (c.kind() != CurveKind::fourier) return kGridQuantum;
  const std::uint64_t n = c.series().max_harmonic();
  if (n >= kMaxDefaultGrid) return kMaxDefaultGrid;
  return round_up_grid(4 * (static_cast<std::size_t>(n) + 1));
}

GridSamples sample_grid(const SupportCurve& c, std::size_t n, bool half_step) {
  if (n == 0) fail(ErrorKind::invalid_argument, "grid must be non-empty");
  GridSamples g;
  g.t.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.t[i] = grid_angle(i, n, half_step).radians();
  if (c.kind() == CurveKind::fourier) {
    const TrigSeries1D d1 = derivative(c.series(), 1);
    g.p = eval_grid(c.series(), n, half_step);
    g.dp = eval_grid(d1, n, half_step);
    g.rho = eval_grid(c.rho_series(), n, half_step);
    return g;
  }
  g.p.resize(n);
  g.dp.resize(n);
  g.rho.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SupportJet j = c.jet(g.t[i]);
    g.p[i] = j.p;
    g.dp[i] = j.dp;
    g.rho[i] = j.p + j.d2p;
  }
  return g;
}

bool is_convex(const SupportCurve& c, std::size_t grid_n, double tol) {
  if (c.kind() != CurveKind::fourier) return true;
  const std::size_t n = resolve_grid(c, grid_n);
  const auto rho = eval_grid(c.rho_series(), n);
  return *std::min_element(rho.begin(), rho.end()) >= -tol;
}

double perimeter(const SupportCurve& c) {
  require_convex(c, "perimeter");
  if (c.kind() == CurveKind::fourier) return kPi * 2.0 * c.series().mean_term();
  return arc_length_quadrature(c).value;
}

QuadratureResult arc_length_quadrature(const SupportCurve& c) {
  auto speed = [](double rho, double t) { return std::hypot(-rho * std::sin(t), rho * std::cos(t)); };
  if (c.kind() == CurveKind::fourier) {
    const TrigSeries1D& rho_s = c.rho_series();
    auto grid_sum = [&](std::size_t n, bool half) {
      const auto rho = eval_grid(rho_s, n, half);
      std::vector<double> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = speed(rho[i], grid_angle(i, n, half).radians());
      return compensated_sum(v);
    };
    return periodic_trapezoid(grid_sum, fourier_start_grid(rho_s));
  }
  return integrate_closed_form(c, [&](double t) {
    const SupportJet j = c.jet(t);
    return speed(j.p + j.d2p, t);
  });
}

double mean_width(const SupportCurve& c) {
  if (c.kind() == CurveKind::fourier) return 2.0 * c.series().mean_term();
  return mean_width_quadrature(c).value;
}

QuadratureResult mean_width_quadrature(const SupportCurve& c) {
  QuadratureResult r;
  if (c.kind() == CurveKind::fourier) {
    const TrigSeries1D& s = c.series();
    auto grid_sum = [&](std::size_t n, bool half) { return compensated_sum(eval_grid(s, n, half)); };
    r = periodic_trapezoid(grid_sum, fourier_start_grid(s));
  } else {
    r = integrate_closed_form(c, [&](double t) { return c.jet(t).p; });
  }
  r.value /= kPi;
  return r;
}

double area_coefficient_form(const TrigSeries1D& s) {
  const double wbar = 2.0 * s.mean_term();
  double sum = 0.0;
  for (const auto& h : s.terms()) {
    if (h.k < 2) continue;
    const double k = static_cast<double>(h.k);
    sum += (k * k - 1.0) * (h.a * h.a + h.b * h.b);
  }
  return (kPi / 4.0) * (wbar * wbar - 2.0 * sum);
}

double area(const SupportCurve& c) {
  require_convex(c, "area");
  if (c.kind() == CurveKind::fourier) return area_coefficient_form(c.series());
  return area_quadrature(c).value;
}

QuadratureResult area_quadrature(const SupportCurve& c) {
  QuadratureResult r;
  if (c.kind() == CurveKind::fourier) {
    const TrigSeries1D& s = c.series();
    const TrigSeries1D d1 = derivative(s, 1);
    auto grid_sum = [&](std::size_t n, bool half) {
      const auto p = eval_grid(s, n, half);
      const auto dp = eval_grid(d1, n, half);
      std::vector<double> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = p[i] * p[i] - dp[i] * dp[i];
      return compensated_sum(v);
    };
    r = periodic_trapezoid(grid_sum, fourier_start_grid(s));
  } else {
    r = integrate_closed_form(c, [&](double t) {
      const SupportJet j = c.jet(t);
      return j.p * j.p - j.dp * j.dp;
    });
  }
  r.value *= 0.5;
  return r;
}

double fourier_cos_coefficient(const SupportCurve& c, std::uint64_t k) {
  if (c.kind() == CurveKind::fourier) return k == 0 ? c.series().mean_term() : c.series().cos_coeff(k);
  const double kd = static_cast<double>(k);
  const std::size_t panels = 4 + static_cast<std::size_t>(k / 4);
  const auto r = integrate_closed_form(
      c, [&](double t) { return c.jet(t).p * std::cos(kd * t); }, panels);
  return k == 0 ? r.value / kTwoPi : r.value / kPi;
}

double fourier_sin_coefficient(const SupportCurve& c, std::uint64_t k) {
  if (k == 0) return 0.0;
  if (c.kind() == CurveKind::fourier) return c.series().sin_coeff(k);
  const double kd = static_cast<double>(k);
  const std::size_t panels = 4 + static_cast<std::size_t>(k / 4);
  const auto r = integrate_closed_form(
      c, [&](double t) { return c.jet(t).p * std::sin(kd * t); }, panels);
  return r.value / kPi;
}

RhoExtrema rho_extrema(const SupportCurve& c, std::size_t grid_n) {
  const std::size_t n = resolve_grid(c, grid_n);
  const bool piecewise = c.kind() == CurveKind::reuleaux_exact;
  const GridSamples g = sample_grid(c, n, piecewise);

  RhoExtrema ex{g.rho[0], g.rho[0], g.t[0], g.t[0]};
  auto consider = [&ex](double t, double r) {
    if (r < ex.rho_min) ex = {r, ex.rho_max, t, ex.t_max};
    if (r > ex.rho_max) ex = {ex.rho_min, r, ex.t_min, t};
  };
  for (std::size_t i = 0; i < n; ++i) consider(g.t[i], g.rho[i]);
  if (piecewise) return ex;  // rho is piecewise constant

  std::function<double(double)> rho_at = [&c](double t) { return radius_of_curvature(c, t); };

  if (c.kind() == CurveKind::fourier) {
    // A cosine-only series with harmonics divisible by g is stationary at
    // every multiple of pi/g; those points are checked exactly.
    const TrigSeries1D& rs = c.rho_series();
    const bool cosine_only = std::all_of(rs.terms().begin(), rs.terms().end(),
                                         [](const Harmonic& h) { return h.b == 0.0; });
    const double gk = gcd_of_harmonics(rs);
    if (cosine_only && gk > 0 && gk <= (1 << 20)) {
      const auto den = static_cast<std::uint64_t>(2 * gk);
      for (std::uint64_t j = 0; j < den; ++j) {
        const GridAngle a{j, den};
        consider(a.radians(), eval(rs, a));
      }
    }
  }

  // Golden-section refinement around the best local extrema of the grid.
  const double h = kTwoPi / static_cast<double>(n);
  std::vector<std::size_t> mins, maxs;
  for (std::size_t i = 0; i < n; ++i) {
    const double l = g.rho[(i + n - 1) % n];
    const double r = g.rho[(i + 1) % n];
    if (g.rho[i] <= l && g.rho[i] <= r) mins.push_back(i);
    if (g.rho[i] >= l && g.rho[i] >= r) maxs.push_back(i);
  }
  constexpr std::size_t kRefine = 8;
  auto by_value = [&g](bool smallest) {
    return [&g, smallest](std::size_t a, std::size_t b) {
      return smallest ? g.rho[a] < g.rho[b] : g.rho[a] > g.rho[b];
    };
  };
  std::partial_sort(mins.begin(), mins.begin() + std::min(kRefine, mins.size()), mins.end(),
                    by_value(true));
  std::partial_sort(maxs.begin(), maxs.begin() + std::min(kRefine, maxs.size()), maxs.end(),
                    by_value(false));
  for (std::size_t r = 0; r < std::min(kRefine, mins.size()); ++r) {
    const double t0 = g.t[mins[r]];
    const Extremum e = golden_minimize(rho_at, t0 - h, t0 + h);
    consider(e.t, e.value);
  }
  auto neg = [&rho_at](double t) { return -rho_at(t); };
  for (std::size_t r = 0; r < std::min(kRefine, maxs.size()); ++r) {
    const double t0 = g.t[maxs[r]];
    const Extremum e = golden_minimize(neg, t0 - h, t0 + h);
    consider(e.t, -e.value);
  }
  auto wrap = [](double t) {
    double u = std::fmod(t, kTwoPi);
    return u < 0 ? u + kTwoPi : u;
  };
  ex.t_min = wrap(ex.t_min);
  ex.t_max = wrap(ex.t_max);
  return ex;
}

MellishReport check_mellish(const SupportCurve& c, std::size_t grid_n, double tol) {
  std::size_t n = resolve_grid(c, grid_n);
  if (n % 2 == 1) ++n;
  MellishReport rep{};
  switch (c.kind()) {
    case CurveKind::fourier:
      rep.width = 2.0 * c.series().mean_term();
      rep.constant_width_form = is_constant_width_form(c.series());
      break;
    case CurveKind::reuleaux_exact:
      rep.width = c.reuleaux_params().width;
      rep.constant_width_form = true;
      break;
    case CurveKind::ellipse:
      rep.width = mean_width(c);
      rep.constant_width_form = c.ellipse_params().a == c.ellipse_params().b;
      break;
  }
  const GridSamples g = sample_grid(c, n, c.kind() == CurveKind::reuleaux_exact);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(g.rho[i] + g.rho[(i + n / 2) % n] - rep.width));
  }
  rep.max_violation = worst;
  rep.pass = worst <= tol;
  return rep;
}

RhoBoundReport rho_bound_check(const SupportCurve& c, std::size_t grid_n, double tol) {
  const std::size_t n = resolve_grid(c, grid_n);
  RhoBoundReport rep{};
  const auto deg = curve_degree(c);
  const double wbar = mean_width(c);
  rep.degree = deg.value_or(0);
  if (deg) {
    rep.bound = *deg == 0 ? wbar / 2.0 : std::ldexp(wbar, static_cast<int>(*deg) - 1);
  } else {
    rep.bound = std::numeric_limits<double>::infinity();
  }
  const RhoExtrema ex = rho_extrema(c, n);
  rep.rho_min = ex.rho_min;
  rep.rho_max = ex.rho_max;
  const GridSamples g = sample_grid(c, n, c.kind() == CurveKind::reuleaux_exact);
  rep.rho_mean = compensated_sum(g.rho) / static_cast<double>(n);
  rep.lower_ok = rep.rho_min >= -tol;
  rep.upper_ok = rep.rho_max <= rep.bound + tol;
  rep.mean_ok = std::abs(rep.rho_mean - wbar / 2.0) <= tol;
  rep.pass = rep.lower_ok && rep.upper_ok && rep.mean_ok;
  return rep;
}

ChordReport diameter_chord_check(const SupportCurve& c, std::size_t grid_n, double tol) {
  std::size_t n = grid_n == 0 ? 2048 : grid_n;
  if (n % 2 == 1) ++n;
  ChordReport rep{};
  rep.width = c.kind() == CurveKind::reuleaux_exact ? c.reuleaux_params().width : mean_width(c);
  std::vector<Point2> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GridAngle a = grid_angle(i, n);
    const SupportJet j = c.jet(a);
    const double t = a.radians();
    pts[i] = {j.p * std::cos(t) - j.dp * std::sin(t), j.p * std::sin(t) + j.dp * std::cos(t)};
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + n / 2) % n];
    worst = std::max(worst, std::abs(std::hypot(a.x - b.x, a.y - b.y) - rep.width));
  }
  rep.max_violation = worst;
  rep.pass = worst <= tol;
  return rep;
}

double minimum_lift_width(const TrigSeries1D& zero_width) {
  if (!zero_width.has_harmonics()) return 0.0;
  const SupportCurve zw = SupportCurve::zero_width(zero_width);
  const RhoExtrema ex = rho_extrema(zw);
  return std::max(0.0, -2.0 * ex.rho_min);
}

SupportCurve euler_lift(const TrigSeries1D& zero_width, double w) {
  const SupportCurve zw = SupportCurve::zero_width(zero_width);  // validates the form
  (void)zw;
  if (!(w > 0)) fail(ErrorKind::invalid_argument, "euler_lift: width must be positive");
  SupportCurve lifted = SupportCurve::fourier(zero_width.with_mean(w / 2.0));
  if (!is_convex(lifted)) {
    const double w_min = minimum_lift_width(zero_width);
    fail(ErrorKind::non_convex,
         "euler_lift: width " + std::to_string(w) + " gives a non-convex curve; need w >= " +
             std::to_string(w_min),
         w_min);
  }
  return lifted;
}

double polar_angle(const SupportCurve& c, double t) {
  const SupportJet j = c.jet(t);
  if (j.p == 0.0) fail(ErrorKind::invalid_argument, "polar_angle: support function vanishes");
  return t + std::atan2(j.dp, j.p);
}

std::optional<unsigned> curve_degree(const SupportCurve& c, double tol) {
  switch (c.kind()) {
    case CurveKind::fourier: return degree(c.series(), tol);
    case CurveKind::reuleaux_exact: return 1u;  // odd harmonics only
    case CurveKind::ellipse: {
      const auto& e = c.ellipse_params();
      if (e.a == e.b) return 0u;
      return std::nullopt;  // sqrt of a cos 2t polynomial: every harmonic 2j appears
    }
  }
  return std::nullopt;
}

CurveMetrics metrics(const SupportCurve& c) {
  CurveMetrics m{};
  m.convex = !c.is_zero_width() && is_convex(c);
  m.mean_width = mean_width(c);
  if (m.convex) {
    if (c.kind() == CurveKind::fourier) {
      m.perimeter = kPi * m.mean_width;
      m.area = area_coefficient_form(c.series());
    } else {
      m.perimeter = arc_length_quadrature(c).value;
      m.area = area_quadrature(c).value;
    }
  }
  const RhoExtrema ex = rho_extrema(c);
  m.rho_min = ex.rho_min;
  m.rho_max = ex.rho_max;
  m.degree = curve_degree(c);
  return m;
}

std::vector<CurveSample> samples(const SupportCurve& c, std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_argument, "samples: n must be positive");
  std::vector<CurveSample> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GridAngle a = grid_angle(i, n);
    const double t = a.radians();
    const SupportJet j = c.jet(a);
    const SupportJet opp = c.jet(t + kPi);
    out[i] = {t,
              j.p * std::cos(t) - j.dp * std::sin(t),
              j.p * std::sin(t) + j.dp * std::cos(t),
              j.p,
              j.p + j.d2p,
              j.p + opp.p};
  }
  return out;
}

}  // namespace orbiform
