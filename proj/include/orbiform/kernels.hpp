#pragma once

// Data-parallel inner loops with a portable scalar reference and an AVX2
// variant chosen at runtime. Both variants perform the same floating point
// operations in the same order, so their results are bitwise identical.

#include <cstddef>
#include <cstdint>
#include <optional>

namespace orbiform::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;

// Best supported ISA, or the override installed with force_isa().
Isa active_isa() noexcept;
// Testing hook. Forcing an unsupported ISA falls back to scalar.
void force_isa(std::optional<Isa> isa) noexcept;

// out[i] = mean + sum_{k=1..n_harm} cos_c[k-1] cos(k t_i) + sin_c[k-1] sin(k t_i)
// where c1[i] = cos t_i and s1[i] = sin t_i. The powers are generated by the
// angle-addition recurrence, so accuracy degrades like k * eps.
void trig_eval_dense(double mean, const double* cos_c, const double* sin_c, std::size_t n_harm,
                     const double* c1, const double* s1, double* out, std::size_t n_pts);

// Three disk centres describing one Reuleaux triangle: a point is strictly
// inside the body when its squared distance to all three is below r2.
struct DiskTriple {
  double x[3];
  double y[3];
};

// counts[i] = number of bodies strictly containing (px[i], py[i]).
void cover_counts(const double* px, const double* py, std::size_t n, const DiskTriple* bodies,
                  std::size_t n_bodies, double r2, std::uint16_t* counts);

namespace scalar {
void trig_eval_dense(double mean, const double* cos_c, const double* sin_c, std::size_t n_harm,
                     const double* c1, const double* s1, double* out, std::size_t n_pts);
void cover_counts(const double* px, const double* py, std::size_t n, const DiskTriple* bodies,
                  std::size_t n_bodies, double r2, std::uint16_t* counts);
}  // namespace scalar

namespace avx2 {
void trig_eval_dense(double mean, const double* cos_c, const double* sin_c, std::size_t n_harm,
                     const double* c1, const double* s1, double* out, std::size_t n_pts);
void cover_counts(const double* px, const double* py, std::size_t n, const DiskTriple* bodies,
                  std::size_t n_bodies, double r2, std::uint16_t* counts);
}  // namespace avx2

}  // namespace orbiform::kernels
