#include <atomic>

#include "orbiform/kernels.hpp"

namespace orbiform::kernels {

namespace {

// -1: no override; otherwise the forced Isa value.
std::atomic<int> g_forced{-1};

Isa detect() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  if (isa == Isa::scalar) return true;
  return detect() == Isa::avx2;
}

Isa active_isa() noexcept {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) {
    const auto isa = static_cast<Isa>(forced);
    return isa_supported(isa) ? isa : Isa::scalar;
  }
  static const Isa best = detect();
  return best;
}

void force_isa(std::optional<Isa> isa) noexcept {
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void trig_eval_dense(double mean, const double* cos_c, const double* sin_c, std::size_t n_harm,
                     const double* c1, const double* s1, double* out, std::size_t n_pts) {
  if (active_isa() == Isa::avx2) {
    avx2::trig_eval_dense(mean, cos_c, sin_c, n_harm, c1, s1, out, n_pts);
  } else {
    scalar::trig_eval_dense(mean, cos_c, sin_c, n_harm, c1, s1, out, n_pts);
  }
}

void cover_counts(const double* px, const double* py, std::size_t n, const DiskTriple* bodies,
                  std::size_t n_bodies, double r2, std::uint16_t* counts) {
  if (active_isa() == Isa::avx2) {
    avx2::cover_counts(px, py, n, bodies, n_bodies, r2, counts);
  } else {
    scalar::cover_counts(px, py, n, bodies, n_bodies, r2, counts);
  }
}

}  // namespace orbiform::kernels
