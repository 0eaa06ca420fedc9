#include "landau/kernels.hpp"
#include "landau/laguerre.hpp"

#include <cassert>

namespace landau::kernels::scalar {

void laguerre_batch(int n, double alpha, std::span<const double> x, std::span<double> out) {
  assert(out.size() >= x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = detail::laguerre_recurrence(n, alpha, x[i]);
}

void velocity_stencil(std::span<const std::complex<double>> prev,
                      std::span<const std::complex<double>> next,
                      std::span<const std::complex<double>> center,
                      std::span<const double> potential, double two_h,
                      std::span<std::complex<double>> out) {
  const std::size_t count = out.size();
  assert(prev.size() >= count && next.size() >= count && center.size() >= count &&
         potential.size() >= count);
  for (std::size_t i = 0; i < count; ++i) {
    const double d_re = (next[i].real() - prev[i].real()) / two_h;
    const double d_im = (next[i].imag() - prev[i].imag()) / two_h;
    const double a = potential[i];
    // -i * (d_re + i d_im) = d_im - i d_re
    out[i] = {a * center[i].real() + d_im, a * center[i].imag() - d_re};
  }
}

}  // namespace landau::kernels::scalar
