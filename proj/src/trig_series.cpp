#include "orbiform/trig_series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "orbiform/error.hpp"
#include "orbiform/kernels.hpp"

namespace orbiform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// 2*pi split for Cody-Waite reduction: kTwoPiHi is the double nearest 2*pi.
constexpr double kTwoPiHi = 6.283185307179586232;
constexpr double kTwoPiLo = 2.4492935982947064e-16;

// The recurrence kernel is used for series whose coefficient lists are
// dense enough to be worth materialising.
constexpr std::uint64_t kDenseKernelMaxHarmonic = 8192;

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) fail(ErrorKind::invalid_argument, std::string("non-finite ") + what);
}

// Angle congruent to k*t modulo 2*pi, accurate to a few ulps of the result
// even when k*t is large.
double reduce_product(std::uint64_t k, double t) {
  const double kd = static_cast<double>(k);
  const double p = kd * t;
  const double e = std::fma(kd, t, -p);
  const double q = std::nearbyint(p / kTwoPi);
  double r = std::fma(-q, kTwoPiHi, p);
  r -= q * kTwoPiLo;
  return r + e;
}

// Angle congruent to k * (2 pi num / den), in [-pi, pi].
double reduce_grid(std::uint64_t k, GridAngle t) {
  const auto den = static_cast<unsigned __int128>(t.den);
  auto r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(k) * t.num) % den);
  auto signed_r = static_cast<double>(r);
  if (2 * static_cast<unsigned __int128>(r) > den) signed_r -= static_cast<double>(t.den);
  return kTwoPi * (signed_r / static_cast<double>(t.den));
}

bool dense_kernel_applies(const TrigSeries1D& s) {
  const std::uint64_t n = s.max_harmonic();
  return n > 0 && n <= kDenseKernelMaxHarmonic && n <= 8 * s.terms().size() + 64;
}

unsigned two_adic_valuation(std::uint64_t k) { return static_cast<unsigned>(std::countr_zero(k)); }

bool significant(const Harmonic& h, double tol) { return std::abs(h.a) > tol || std::abs(h.b) > tol; }

// Sparse series on a grid: k * angle modulo 2 pi is tracked as an integer
// residue and looked up in a table of the den-th roots of unity.
void eval_grid_sparse(const TrigSeries1D& s, std::span<double> out, bool half_step) {
  const std::size_t n = out.size();
  const std::uint64_t den = half_step ? 2 * std::uint64_t{n} : n;
  const std::uint64_t stride = half_step ? 2 : 1;
  const std::uint64_t first = half_step ? 1 : 0;
  if (den > (std::uint64_t{1} << 23)) {
    for (std::size_t i = 0; i < n; ++i) out[i] = eval(s, grid_angle(i, n, half_step));
    return;
  }
  std::vector<double> cos_tab(den), sin_tab(den);
  for (std::uint64_t r = 0; r < den; ++r) {
    const double th = reduce_grid(1, GridAngle{r, den});
    cos_tab[r] = std::cos(th);
    sin_tab[r] = std::sin(th);
  }
  std::fill(out.begin(), out.end(), s.mean_term());
  for (const auto& h : s.terms()) {
    const std::uint64_t km = h.k % den;
    const std::uint64_t step = static_cast<std::uint64_t>((static_cast<unsigned __int128>(km) * stride) % den);
    std::uint64_t r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(km) * first) % den);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] += h.a * cos_tab[r] + h.b * sin_tab[r];
      r += step;
      if (r >= den) r -= den;
    }
  }
}

}  // namespace

double GridAngle::radians() const {
  return kTwoPi * (static_cast<double>(num % den) / static_cast<double>(den));
}

GridAngle grid_angle(std::size_t i, std::size_t n, bool half_step) {
  if (half_step) return GridAngle{2 * static_cast<std::uint64_t>(i) + 1, 2 * static_cast<std::uint64_t>(n)};
  return GridAngle{static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(n)};
}

TrigSeries1D::TrigSeries1D(double mean) : mean_(mean) { check_finite(mean, "mean term"); }

TrigSeries1D::TrigSeries1D(double mean, std::vector<Harmonic> terms) : mean_(mean) {
  check_finite(mean, "mean term");
  for (const auto& h : terms) {
    if (h.k == 0) fail(ErrorKind::invalid_argument, "harmonic index must be >= 1");
    check_finite(h.a, "cosine coefficient");
    check_finite(h.b, "sine coefficient");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Harmonic& x, const Harmonic& y) { return x.k < y.k; });
  for (const auto& h : terms) {
    if (!terms_.empty() && terms_.back().k == h.k) {
      terms_.back().a += h.a;
      terms_.back().b += h.b;
    } else {
      terms_.push_back(h);
    }
  }
  std::erase_if(terms_, [](const Harmonic& h) { return h.a == 0.0 && h.b == 0.0; });
}

TrigSeries1D TrigSeries1D::from_dense(double mean, std::span<const double> cos_coeffs,
                                      std::span<const double> sin_coeffs) {
  std::vector<Harmonic> terms;
  const std::size_t n = std::max(cos_coeffs.size(), sin_coeffs.size());
  terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < cos_coeffs.size() ? cos_coeffs[i] : 0.0;
    const double b = i < sin_coeffs.size() ? sin_coeffs[i] : 0.0;
    terms.push_back({i + 1, a, b});
  }
  return TrigSeries1D(mean, std::move(terms));
}

double TrigSeries1D::cos_coeff(std::uint64_t k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Harmonic& h, std::uint64_t key) { return h.k < key; });
  return (it != terms_.end() && it->k == k) ? it->a : 0.0;
}

double TrigSeries1D::sin_coeff(std::uint64_t k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Harmonic& h, std::uint64_t key) { return h.k < key; });
  return (it != terms_.end() && it->k == k) ? it->b : 0.0;
}

std::vector<double> TrigSeries1D::cos_coeffs() const {
  std::vector<double> out(max_harmonic(), 0.0);
  for (const auto& h : terms_) out[h.k - 1] = h.a;
  return out;
}

std::vector<double> TrigSeries1D::sin_coeffs() const {
  std::vector<double> out(max_harmonic(), 0.0);
  for (const auto& h : terms_) out[h.k - 1] = h.b;
  return out;
}

TrigSeries1D TrigSeries1D::with_mean(double mean) const {
  TrigSeries1D out = *this;
  check_finite(mean, "mean term");
  out.mean_ = mean;
  return out;
}

TrigSeries1D operator+(const TrigSeries1D& x, const TrigSeries1D& y) {
  std::vector<Harmonic> terms(x.terms_.begin(), x.terms_.end());
  terms.insert(terms.end(), y.terms_.begin(), y.terms_.end());
  return TrigSeries1D(x.mean_ + y.mean_, std::move(terms));
}

TrigSeries1D operator-(const TrigSeries1D& x, const TrigSeries1D& y) { return x + (-1.0) * y; }

TrigSeries1D operator*(double alpha, const TrigSeries1D& x) {
  std::vector<Harmonic> terms;
  terms.reserve(x.terms_.size());
  for (const auto& h : x.terms_) terms.push_back({h.k, alpha * h.a, alpha * h.b});
  return TrigSeries1D(alpha * x.mean_, std::move(terms));
}

double eval(const TrigSeries1D& s, double t) {
  double acc = s.mean_term();
  for (const auto& h : s.terms()) {
    const double th = h.k == 1 ? t : reduce_product(h.k, t);
    acc += h.a * std::cos(th) + h.b * std::sin(th);
  }
  return acc;
}

double eval(const TrigSeries1D& s, GridAngle t) {
  double acc = s.mean_term();
  for (const auto& h : s.terms()) {
    const double th = reduce_grid(h.k, t);
    acc += h.a * std::cos(th) + h.b * std::sin(th);
  }
  return acc;
}

void eval_grid(const TrigSeries1D& s, std::span<double> out, bool half_step) {
  const std::size_t n = out.size();
  if (n == 0) return;
  if (!dense_kernel_applies(s)) {
    eval_grid_sparse(s, out, half_step);
    return;
  }
  std::vector<double> c1(n), s1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double th = reduce_grid(1, grid_angle(i, n, half_step));
    c1[i] = std::cos(th);
    s1[i] = std::sin(th);
  }
  const auto a = s.cos_coeffs();
  const auto b = s.sin_coeffs();
  kernels::trig_eval_dense(s.mean_term(), a.data(), b.data(), a.size(), c1.data(), s1.data(),
                           out.data(), n);
}

std::vector<double> eval_grid(const TrigSeries1D& s, std::size_t n, bool half_step) {
  std::vector<double> out(n);
  eval_grid(s, out, half_step);
  return out;
}

TrigSeries1D derivative(const TrigSeries1D& s, int order) {
  if (order < 1 || order > 4) fail(ErrorKind::invalid_argument, "derivative order must be in 1..4");
  std::vector<Harmonic> terms(s.terms().begin(), s.terms().end());
  for (int d = 0; d < order; ++d) {
    for (auto& h : terms) {
      const double k = static_cast<double>(h.k);
      const double a = k * h.b;
      const double b = -k * h.a;
      h.a = a;
      h.b = b;
    }
  }
  return TrigSeries1D(0.0, std::move(terms));
}

double root_of_unity_average(const TrigSeries1D& s, unsigned m, double t) {
  if (m > 30) fail(ErrorKind::invalid_argument, "root_of_unity_average: m must be <= 30");
  if (m > 20) {
    // Same quantity via aliasing: only harmonics divisible by 2^m survive.
    const std::uint64_t step = std::uint64_t{1} << m;
    double acc = s.mean_term();
    for (const auto& h : s.terms()) {
      if (h.k % step != 0) continue;
      const double th = reduce_product(h.k, t);
      acc += h.a * std::cos(th) + h.b * std::sin(th);
    }
    return acc;
  }
  const std::size_t count = std::size_t{1} << m;
  double acc = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    acc += eval(s, t + kTwoPi * static_cast<double>(j) / static_cast<double>(count));
  }
  return acc / static_cast<double>(count);
}

unsigned degree(const TrigSeries1D& s, double tol) {
  if (!(tol > 0)) fail(ErrorKind::invalid_argument, "tolerance must be positive");
  unsigned m = 0;
  for (const auto& h : s.terms()) {
    if (significant(h, tol)) m = std::max(m, two_adic_valuation(h.k) + 1);
  }
  return m;
}

unsigned degree_by_averaging(const TrigSeries1D& s, double tol, std::size_t grid_n) {
  if (!(tol > 0)) fail(ErrorKind::invalid_argument, "tolerance must be positive");
  if (grid_n == 0) fail(ErrorKind::invalid_argument, "grid must be non-empty");
  for (unsigned m = 0; m <= 30; ++m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid_n && worst <= tol; ++i) {
      const double t = grid_angle(i, grid_n).radians();
      worst = std::max(worst, std::abs(root_of_unity_average(s, m, t) - s.mean_term()));
    }
    if (worst <= tol) return m;
  }
  fail(ErrorKind::non_convergent, "degree_by_averaging: no m <= 30 satisfies the tolerance");
}

std::optional<unsigned> purity_class(const TrigSeries1D& s, double tol) {
  if (!(tol > 0)) fail(ErrorKind::invalid_argument, "tolerance must be positive");
  std::optional<unsigned> m;
  for (const auto& h : s.terms()) {
    if (!significant(h, tol)) continue;
    const unsigned mk = two_adic_valuation(h.k) + 1;
    if (m && *m != mk) return std::nullopt;
    m = mk;
  }
  return m.value_or(0);
}

bool is_constant_width_form(const TrigSeries1D& s, double tol) {
  if (!(tol > 0)) fail(ErrorKind::invalid_argument, "tolerance must be positive");
  return std::none_of(s.terms().begin(), s.terms().end(),
                      [tol](const Harmonic& h) { return h.k % 2 == 0 && significant(h, tol); });
}

}  // namespace orbiform
