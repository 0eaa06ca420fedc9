#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference variant and,
// where the build and CPU allow it, an AVX2 variant chosen at runtime. The
// variants perform the same IEEE operations in the same order, so their
// results are bitwise identical; tests/test_kernels.cpp holds them to that.

#include <complex>
#include <span>
#include <string_view>
#include <optional>

namespace landau::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);

/// Variant used by the dispatching entry points below. Defaults to the best
/// available ISA; the LANDAU_SIMD environment variable ("scalar", "avx2",
/// "auto") overrides the default on first use.
Isa active_isa();

/// Throws std::runtime_error if `isa` is not available.
void set_active_isa(Isa isa);

/// out[i] = L_n^alpha(x[i]) by the forward three-term recurrence.
void laguerre_batch(int n, double alpha, std::span<const double> x, std::span<double> out);

/// One row of a magnetic velocity component on a grid:
///   out[i] = -i * (next[i] - prev[i]) / two_h + potential[i] * center[i]
/// where prev/next are the stencil neighbours along the differentiated axis.
void velocity_stencil(std::span<const std::complex<double>> prev,
                      std::span<const std::complex<double>> next,
                      std::span<const std::complex<double>> center,
                      std::span<const double> potential, double two_h,
                      std::span<std::complex<double>> out);

namespace scalar {
void laguerre_batch(int n, double alpha, std::span<const double> x, std::span<double> out);
void velocity_stencil(std::span<const std::complex<double>> prev,
                      std::span<const std::complex<double>> next,
                      std::span<const std::complex<double>> center,
                      std::span<const double> potential, double two_h,
                      std::span<std::complex<double>> out);
}  // namespace scalar

#if defined(LANDAU_HAVE_AVX2)
namespace avx2 {
void laguerre_batch(int n, double alpha, std::span<const double> x, std::span<double> out);
void velocity_stencil(std::span<const std::complex<double>> prev,
                      std::span<const std::complex<double>> next,
                      std::span<const std::complex<double>> center,
                      std::span<const double> potential, double two_h,
                      std::span<std::complex<double>> out);
}  // namespace avx2
#endif

}  // namespace landau::kernels
