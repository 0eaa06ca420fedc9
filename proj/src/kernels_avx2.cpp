// Compiled with -mavx2 (no FMA). Operation order mirrors kernels_scalar.cpp.

#include "landau/kernels.hpp"
#include "landau/laguerre.hpp"

#include <immintrin.h>

#include <cassert>

namespace landau::kernels::avx2 {

void laguerre_batch(int n, double alpha, std::span<const double> x, std::span<double> out) {
  assert(out.size() >= x.size());
  const std::size_t count = x.size();
  std::size_t i = 0;
  if (n <= 0) {
    for (; i < count; ++i) out[i] = detail::laguerre_recurrence(n, alpha, x[i]);
    return;
  }
  const __m256d one_plus_alpha = _mm256_set1_pd(1.0 + alpha);
  for (; i + 4 <= count; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    __m256d prev = _mm256_set1_pd(1.0);
    __m256d cur = _mm256_sub_pd(one_plus_alpha, xv);
    for (int k = 1; k < n; ++k) {
      const __m256d c1 = _mm256_sub_pd(_mm256_set1_pd(2.0 * k + 1.0 + alpha), xv);
      const __m256d c2 = _mm256_set1_pd(k + alpha);
      const __m256d num = _mm256_sub_pd(_mm256_mul_pd(c1, cur), _mm256_mul_pd(c2, prev));
      const __m256d next = _mm256_div_pd(num, _mm256_set1_pd(k + 1.0));
      prev = cur;
      cur = next;
    }
    _mm256_storeu_pd(out.data() + i, cur);
  }
  for (; i < count; ++i) out[i] = detail::laguerre_recurrence(n, alpha, x[i]);
}

void velocity_stencil(std::span<const std::complex<double>> prev,
                      std::span<const std::complex<double>> next,
                      std::span<const std::complex<double>> center,
                      std::span<const double> potential, double two_h,
                      std::span<std::complex<double>> out) {
  const std::size_t count = out.size();
  assert(prev.size() >= count && next.size() >= count && center.size() >= count &&
         potential.size() >= count);

  // std::complex<double> is layout-compatible with double[2].
  const double* pp = reinterpret_cast<const double*>(prev.data());
  const double* np = reinterpret_cast<const double*>(next.data());
  const double* cp = reinterpret_cast<const double*>(center.data());
  double* op = reinterpret_cast<double*>(out.data());

  const __m256d step = _mm256_set1_pd(two_h);
  const __m256d negate_imag = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);

  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const __m256d p = _mm256_loadu_pd(pp + 2 * i);
    const __m256d q = _mm256_loadu_pd(np + 2 * i);
    const __m256d c = _mm256_loadu_pd(cp + 2 * i);
    const __m256d d = _mm256_div_pd(_mm256_sub_pd(q, p), step);
    // (d_re, d_im) -> (d_im, -d_re)
    const __m256d rot = _mm256_xor_pd(_mm256_permute_pd(d, 0b0101), negate_imag);
    const __m128d a2 = _mm_loadu_pd(potential.data() + i);
    const __m256d a = _mm256_permute4x64_pd(_mm256_castpd128_pd256(a2), 0b01010000);
    _mm256_storeu_pd(op + 2 * i, _mm256_add_pd(_mm256_mul_pd(a, c), rot));
  }
  if (i < count) {
    scalar::velocity_stencil(prev.subspan(i), next.subspan(i), center.subspan(i),
                             potential.subspan(i), two_h, out.subspan(i));
  }
}

}  // namespace landau::kernels::avx2
