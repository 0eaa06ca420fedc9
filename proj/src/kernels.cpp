#include "landau/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace landau::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(LANDAU_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa default_isa() {
  if (const char* env = std::getenv("LANDAU_SIMD")) {
    if (auto isa = parse_isa(env); isa && isa_available(*isa)) return *isa;
  }
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{default_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "auto") return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  return std::nullopt;
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2();
  }
  return false;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa))
    throw std::runtime_error("kernel ISA '" + std::string(isa_name(isa)) + "' is not available");
  active().store(isa, std::memory_order_relaxed);
}

void laguerre_batch(int n, double alpha, std::span<const double> x, std::span<double> out) {
#if defined(LANDAU_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::laguerre_batch(n, alpha, x, out);
#endif
  scalar::laguerre_batch(n, alpha, x, out);
}

void velocity_stencil(std::span<const std::complex<double>> prev,
                      std::span<const std::complex<double>> next,
                      std::span<const std::complex<double>> center,
                      std::span<const double> potential, double two_h,
                      std::span<std::complex<double>> out) {
#if defined(LANDAU_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::velocity_stencil(prev, next, center, potential, two_h, out);
#endif
  scalar::velocity_stencil(prev, next, center, potential, two_h, out);
}

}  // namespace landau::kernels
