#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace orbiform {

// One harmonic: a*cos(k t) + b*sin(k t), k >= 1.
struct Harmonic {
  std::uint64_t k;
  double a;
  double b;

  bool operator==(const Harmonic&) const = default;
};

// The angle 2*pi*num/den, kept as a rational so that k*t can be reduced
// exactly for very large harmonic indices.
struct GridAngle {
  std::uint64_t num;
  std::uint64_t den;

  double radians() const;
};

// Sample i of an n-point periodic grid; the half-step phase puts the samples
// at 2*pi*(i + 1/2)/n.
GridAngle grid_angle(std::size_t i, std::size_t n, bool half_step = false);

// Finite trigonometric polynomial
//   mean + sum_k a_k cos(k t) + b_k sin(k t).
// Harmonics are stored sparsely, strictly increasing in k, without all-zero
// entries. Absent indices are zero, so the cos/sin lists are implicitly
// zero-padded to a common length max_harmonic().
class TrigSeries1D {
 public:
  TrigSeries1D() = default;
  explicit TrigSeries1D(double mean);
  TrigSeries1D(double mean, std::vector<Harmonic> terms);

  // cos_coeffs[k-1] and sin_coeffs[k-1] hold a_k and b_k.
  static TrigSeries1D from_dense(double mean, std::span<const double> cos_coeffs,
                                 std::span<const double> sin_coeffs);

  double mean_term() const { return mean_; }
  std::span<const Harmonic> terms() const { return terms_; }
  std::uint64_t max_harmonic() const { return terms_.empty() ? 0 : terms_.back().k; }
  bool has_harmonics() const { return !terms_.empty(); }

  double cos_coeff(std::uint64_t k) const;
  double sin_coeff(std::uint64_t k) const;

  // Dense copies of length max_harmonic().
  std::vector<double> cos_coeffs() const;
  std::vector<double> sin_coeffs() const;

  TrigSeries1D with_mean(double mean) const;

  friend TrigSeries1D operator+(const TrigSeries1D& x, const TrigSeries1D& y);
  friend TrigSeries1D operator-(const TrigSeries1D& x, const TrigSeries1D& y);
  friend TrigSeries1D operator*(double alpha, const TrigSeries1D& x);
  bool operator==(const TrigSeries1D&) const = default;

 private:
  double mean_ = 0.0;
  std::vector<Harmonic> terms_;
};

double eval(const TrigSeries1D& s, double t);
double eval(const TrigSeries1D& s, GridAngle t);

// out[i] = eval(s, grid_angle(i, out.size(), half_step)). Uses the SIMD
// recurrence kernel for moderately sized dense series and exact argument
// reduction otherwise.
void eval_grid(const TrigSeries1D& s, std::span<double> out, bool half_step = false);
std::vector<double> eval_grid(const TrigSeries1D& s, std::size_t n, bool half_step = false);

// Term-wise derivative; order in 1..4.
TrigSeries1D derivative(const TrigSeries1D& s, int order);

// (1/2^m) sum_{j<2^m} eval(s, t + 2 pi j / 2^m), m <= 30.
double root_of_unity_average(const TrigSeries1D& s, unsigned m, double t);

inline constexpr double kDefaultClassifyTol = 1e-9;

// Least m such that every harmonic with a coefficient above tol has 2-adic
// valuation below m.
unsigned degree(const TrigSeries1D& s, double tol = kDefaultClassifyTol);

// Least m such that the 2^m-shift average is within tol of the mean on a
// grid_n-point grid. Must agree with degree().
unsigned degree_by_averaging(const TrigSeries1D& s, double tol = kDefaultClassifyTol,
                             std::size_t grid_n = 1024);

// m if every significant harmonic is 2^(m-1) times an odd number (0 with no
// harmonics), nullopt for a mixed series.
std::optional<unsigned> purity_class(const TrigSeries1D& s, double tol = kDefaultClassifyTol);

// No significant even harmonic.
bool is_constant_width_form(const TrigSeries1D& s, double tol = kDefaultClassifyTol);

}  // namespace orbiform
