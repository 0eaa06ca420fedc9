#pragma once

// Landau-level eigenstates of an electron in a uniform field B along z, in
// the symmetric gauge and atomic units (e = hbar = mu = 1).
//
//   psi_nm(rho, phi) = (2 pi)^{-1/2} R_nm(zeta) e^{i m phi},  zeta = sigma rho^2,
//   R_nm(zeta) = sqrt(2 sigma n! / (n+|m|)!) e^{-zeta/2} zeta^{|m|/2} L_n^{|m|}(zeta),
//   sigma = B/2.
//
// Inner products use the measure rho drho dphi = dzeta dphi / (2 sigma).

#include <complex>
#include <span>

#include "landau/quadrature.hpp"

namespace landau {

class FieldConfig {
 public:
  /// Throws std::invalid_argument unless B is finite and > 0.
  explicit FieldConfig(double B);
  double B() const { return B_; }
  double sigma() const { return sigma_; }
  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

 private:
  double B_;
  double sigma_;
};

/// Radial quantum number n >= 0 and azimuthal quantum number m.
struct QuantumNumbers {
  int n = 0;
  int m = 0;
  int abs_m() const { return m < 0 ? -m : m; }
  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Throws std::invalid_argument if n < 0.
void require_valid(QuantumNumbers qn);

struct SpectralParams {
  double beta = 0.0;    // 2E
  double tau = 0.0;     // beta - 2 sigma m
  double lambda = 0.0;  // tau / (4 sigma); lambda - (|m|+1)/2 = n
};

/// E = B (n + m/2 + (|m|+1)/2): B(n+1/2) for m <= 0, B(n+m+1/2) for m > 0.
double energy(QuantumNumbers qn, const FieldConfig& field);

SpectralParams spectral_params(QuantumNumbers qn, const FieldConfig& field);

class LandauState {
 public:
  LandauState(QuantumNumbers qn, const FieldConfig& field);

  const QuantumNumbers& qn() const { return qn_; }
  const FieldConfig& field() const { return field_; }
  double norm_const() const { return norm_const_; }
  double log_norm_const() const { return log_norm_const_; }

  /// R_nm(zeta), zeta >= 0.
  double radial(double zeta) const;

  /// R_nm at many points through the dispatched Laguerre kernel. Bitwise
  /// equal to calling radial() point by point.
  void radial_batch(std::span<const double> zeta, std::span<double> out) const;

  /// dR_nm/dzeta for zeta > 0.
  double radial_deriv(double zeta) const;

  /// psi_nm(rho, phi), rho >= 0.
  std::complex<double> wavefunction(double rho, double phi) const;

 private:
  // R / L_n^{|m|}: norm_const e^{-zeta/2} zeta^{|m|/2}
  double envelope(double zeta) const;

  QuantumNumbers qn_;
  FieldConfig field_;
  double log_norm_const_;
  double norm_const_;
};

inline double radial_value(const LandauState& state, double zeta) { return state.radial(zeta); }

inline std::complex<double> wavefunction_value(const LandauState& state, double rho, double phi) {
  return state.wavefunction(rho, phi);
}

/// <a|b> = delta_{m_a m_b} int R_a R_b dzeta / (2 sigma). The angular factor
/// is applied analytically. The rule's weight zeta^alpha e^{-zeta} is divided
/// out of the integrand, so the result is exact when rule.alpha() == |m| and
/// the order covers the polynomial degree. Throws std::invalid_argument when
/// the field configurations differ.
std::complex<double> overlap(const LandauState& a, const LandauState& b, const QuadratureRule& rule);

/// Residual of zeta G'' + (1+|m|-zeta) G' + (lambda - (|m|+1)/2) G for
/// G = L_n^{|m|}, zeta > 0.
double ode_residual(QuantumNumbers qn, double zeta);

/// Same operator applied to caller-supplied G, G', G''.
double ode_residual(QuantumNumbers qn, double zeta, double g, double dg, double d2g);

/// 1 + |G| + |G'| + |G''| for G = L_n^{|m|}: the scale ode_residual is judged against.
double ode_residual_scale(QuantumNumbers qn, double zeta);

}  // namespace landau
