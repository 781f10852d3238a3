#include "orbiform/kernels.hpp"

namespace orbiform::kernels::scalar {

void trig_eval_dense(double mean, const double* cos_c, const double* sin_c, std::size_t n_harm,
                     const double* c1, const double* s1, double* out, std::size_t n_pts) {
  for (std::size_t i = 0; i < n_pts; ++i) {
    const double cb = c1[i];
    const double sb = s1[i];
    double ck = cb;
    double sk = sb;
    double acc = mean;
    for (std::size_t k = 0; k < n_harm; ++k) {
      const double term = cos_c[k] * ck + sin_c[k] * sk;
      acc = acc + term;
      const double cn = ck * cb - sk * sb;
      const double sn = sk * cb + ck * sb;
      ck = cn;
      sk = sn;
    }
    out[i] = acc;
  }
}

void cover_counts(const double* px, const double* py, std::size_t n, const DiskTriple* bodies,
                  std::size_t n_bodies, double r2, std::uint16_t* counts) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint16_t c = 0;
    for (std::size_t b = 0; b < n_bodies; ++b) {
      bool inside = true;
      for (int v = 0; v < 3; ++v) {
        const double dx = px[i] - bodies[b].x[v];
        const double dy = py[i] - bodies[b].y[v];
        const double d2 = dx * dx + dy * dy;
        inside = inside && (d2 < r2);
      }
      c = static_cast<std::uint16_t>(c + (inside ? 1 : 0));
    }
    counts[i] = c;
  }
}

}  // namespace orbiform::kernels::scalar
