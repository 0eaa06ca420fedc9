#include "landau/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "landau/kernels.hpp"
#include "landau/laguerre.hpp"

namespace landau {

FieldConfig::FieldConfig(double B) : B_(B), sigma_(B / 2.0) {
  if (!std::isfinite(B) || B <= 0.0) throw std::invalid_argument("FieldConfig: B must be finite and > 0");
}

void require_valid(QuantumNumbers qn) {
  if (qn.n < 0) throw std::invalid_argument("QuantumNumbers: n must be >= 0");
}

double energy(QuantumNumbers qn, const FieldConfig& field) {
  require_valid(qn);
  // m/2 + (|m|+1)/2 = (m + |m| + 1)/2; the integer numerator makes the m <= 0
  // branch exactly B (n + 1/2).
  const int twice_shift = qn.m + qn.abs_m() + 1;
  return field.B() * (qn.n + twice_shift / 2.0);
}

SpectralParams spectral_params(QuantumNumbers qn, const FieldConfig& field) {
  SpectralParams p;
  p.beta = 2.0 * energy(qn, field);
  p.tau = p.beta - 2.0 * field.sigma() * qn.m;
  p.lambda = p.tau / (4.0 * field.sigma());
  return p;
}

LandauState::LandauState(QuantumNumbers qn, const FieldConfig& field) : qn_(qn), field_(field) {
  require_valid(qn);
  const double log_ratio = 0.5 * (log_gamma(qn.n + 1.0) - log_gamma(qn.n + qn.abs_m() + 1.0));
  norm_const_ = std::sqrt(2.0 * field.sigma()) * std::exp(log_ratio);
  log_norm_const_ = std::log(norm_const_);
}

double LandauState::envelope(double zeta) const {
  const int am = qn_.abs_m();
  if (am == 0) return norm_const_ * std::exp(-0.5 * zeta);
  if (zeta == 0.0) return 0.0;
  return std::exp(log_norm_const_ - 0.5 * zeta + 0.5 * am * std::log(zeta));
}

double LandauState::radial(double zeta) const {
  if (!(zeta >= 0.0)) throw std::domain_error("radial_value: zeta must be >= 0");
  return envelope(zeta) * detail::laguerre_recurrence(qn_.n, qn_.abs_m(), zeta);
}

void LandauState::radial_batch(std::span<const double> zeta, std::span<double> out) const {
  if (out.size() < zeta.size()) throw std::invalid_argument("radial_batch: output too small");
  for (double z : zeta)
    if (!(z >= 0.0)) throw std::domain_error("radial_batch: zeta must be >= 0");
  kernels::laguerre_batch(qn_.n, qn_.abs_m(), zeta, out);
  for (std::size_t i = 0; i < zeta.size(); ++i) out[i] = envelope(zeta[i]) * out[i];
}

double LandauState::radial_deriv(double zeta) const {
  if (!(zeta > 0.0) || !std::isfinite(zeta))
    throw std::domain_error("radial_deriv: zeta must be finite and > 0");
  const int am = qn_.abs_m();
  const double L = detail::laguerre_recurrence(qn_.n, am, zeta);
  const double dL = detail::laguerre_deriv_unchecked(qn_.n, am, zeta);
  return envelope(zeta) * (dL + L * (-0.5 + am / (2.0 * zeta)));
}

std::complex<double> LandauState::wavefunction(double rho, double phi) const {
  if (!(rho >= 0.0)) throw std::domain_error("wavefunction_value: rho must be >= 0");
  const double r = radial(field_.sigma() * rho * rho);
  return std::polar(r / std::sqrt(2.0 * std::numbers::pi), qn_.m * phi);
}

std::complex<double> overlap(const LandauState& a, const LandauState& b, const QuadratureRule& rule) {
  if (!(a.field() == b.field())) throw std::invalid_argument("overlap: states use different fields");
  if (a.qn().m != b.qn().m) return {0.0, 0.0};

  const int am = a.qn().abs_m();
  const double prefactor = a.norm_const() * b.norm_const() / (2.0 * a.field().sigma());
  const double power = am - rule.alpha();
  const int na = a.qn().n, nb = b.qn().n;
  const double value = integrate(rule, [&](double z) {
    const double extra = power == 0.0 ? 1.0 : std::pow(z, power);
    return extra * detail::laguerre_recurrence(na, am, z) * detail::laguerre_recurrence(nb, am, z);
  });
  return {prefactor * value, 0.0};
}

double ode_residual(QuantumNumbers qn, double zeta, double g, double dg, double d2g) {
  require_valid(qn);
  if (!(zeta > 0.0)) throw std::domain_error("ode_residual: zeta must be > 0");
  // lambda - (|m|+1)/2 = n for an eigenstate.
  return zeta * d2g + (1.0 + qn.abs_m() - zeta) * dg + qn.n * g;
}

double ode_residual(QuantumNumbers qn, double zeta) {
  require_valid(qn);
  if (!(zeta > 0.0)) throw std::domain_error("ode_residual: zeta must be > 0");
  const LaguerreIndex idx{qn.n, static_cast<double>(qn.abs_m())};
  return ode_residual(qn, zeta, laguerre_eval(idx, zeta), laguerre_deriv(idx, zeta),
                      laguerre_second_deriv(idx, zeta));
}

double ode_residual_scale(QuantumNumbers qn, double zeta) {
  const LaguerreIndex idx{qn.n, static_cast<double>(qn.abs_m())};
  return 1.0 + std::abs(laguerre_eval(idx, zeta)) + std::abs(laguerre_deriv(idx, zeta)) +
         std::abs(laguerre_second_deriv(idx, zeta));
}

}  // namespace landau
