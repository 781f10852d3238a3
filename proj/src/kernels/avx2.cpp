#include "orbiform/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define ORBIFORM_HAVE_AVX2_KERNELS 1
#endif

namespace orbiform::kernels::avx2 {

#ifdef ORBIFORM_HAVE_AVX2_KERNELS

// Separate multiplies and adds only (no FMA) so every lane reproduces the
// scalar kernel bit for bit. Blocks of V vectors are interleaved to hide the
// latency of the rotation recurrence.
template <int V>
__attribute__((target("avx2"))) inline void trig_block(double mean, const double* cos_c,
                                                       const double* sin_c, std::size_t n_harm,
                                                       const double* c1, const double* s1,
                                                       double* out) {
  __m256d cb[V], sb[V], ck[V], sk[V], acc[V];
  for (int v = 0; v < V; ++v) {
    cb[v] = _mm256_loadu_pd(c1 + 4 * v);
    sb[v] = _mm256_loadu_pd(s1 + 4 * v);
    ck[v] = cb[v];
    sk[v] = sb[v];
    acc[v] = _mm256_set1_pd(mean);
  }
  for (std::size_t k = 0; k < n_harm; ++k) {
    const __m256d a = _mm256_set1_pd(cos_c[k]);
    const __m256d b = _mm256_set1_pd(sin_c[k]);
    for (int v = 0; v < V; ++v) {
      const __m256d term = _mm256_add_pd(_mm256_mul_pd(a, ck[v]), _mm256_mul_pd(b, sk[v]));
      acc[v] = _mm256_add_pd(acc[v], term);
      const __m256d cn = _mm256_sub_pd(_mm256_mul_pd(ck[v], cb[v]), _mm256_mul_pd(sk[v], sb[v]));
      const __m256d sn = _mm256_add_pd(_mm256_mul_pd(sk[v], cb[v]), _mm256_mul_pd(ck[v], sb[v]));
      ck[v] = cn;
      sk[v] = sn;
    }
  }
  for (int v = 0; v < V; ++v) _mm256_storeu_pd(out + 4 * v, acc[v]);
}

__attribute__((target("avx2"))) void trig_eval_dense(double mean, const double* cos_c,
                                                     const double* sin_c, std::size_t n_harm,
                                                     const double* c1, const double* s1,
                                                     double* out, std::size_t n_pts) {
  std::size_t i = 0;
  for (; i + 16 <= n_pts; i += 16) trig_block<4>(mean, cos_c, sin_c, n_harm, c1 + i, s1 + i, out + i);
  for (; i + 4 <= n_pts; i += 4) trig_block<1>(mean, cos_c, sin_c, n_harm, c1 + i, s1 + i, out + i);
  if (i < n_pts) {
    scalar::trig_eval_dense(mean, cos_c, sin_c, n_harm, c1 + i, s1 + i, out + i, n_pts - i);
  }
}

__attribute__((target("avx2"))) void cover_counts(const double* px, const double* py,
                                                  std::size_t n, const DiskTriple* bodies,
                                                  std::size_t n_bodies, double r2,
                                                  std::uint16_t* counts) {
  const __m256d vr2 = _mm256_set1_pd(r2);
  const __m256i one = _mm256_set1_epi64x(1);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(px + i);
    const __m256d y = _mm256_loadu_pd(py + i);
    __m256i c = _mm256_setzero_si256();
    for (std::size_t b = 0; b < n_bodies; ++b) {
      __m256d inside = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
      for (int v = 0; v < 3; ++v) {
        const __m256d dx = _mm256_sub_pd(x, _mm256_set1_pd(bodies[b].x[v]));
        const __m256d dy = _mm256_sub_pd(y, _mm256_set1_pd(bodies[b].y[v]));
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        inside = _mm256_and_pd(inside, _mm256_cmp_pd(d2, vr2, _CMP_LT_OQ));
      }
      c = _mm256_add_epi64(c, _mm256_and_si256(_mm256_castpd_si256(inside), one));
    }
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), c);
    for (int l = 0; l < 4; ++l) counts[i + l] = static_cast<std::uint16_t>(lanes[l]);
  }
  if (i < n) scalar::cover_counts(px + i, py + i, n - i, bodies, n_bodies, r2, counts + i);
}

#else

void trig_eval_dense(double mean, const double* cos_c, const double* sin_c, std::size_t n_harm,
                     const double* c1, const double* s1, double* out, std::size_t n_pts) {
  scalar::trig_eval_dense(mean, cos_c, sin_c, n_harm, c1, s1, out, n_pts);
}

void cover_counts(const double* px, const double* py, std::size_t n, const DiskTriple* bodies,
                  std::size_t n_bodies, double r2, std::uint16_t* counts) {
  scalar::cover_counts(px, py, n, bodies, n_bodies, r2, counts);
}

#endif

}  // namespace orbiform::kernels::avx2
