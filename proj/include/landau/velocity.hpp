#pragma once

// Kinetic (velocity) operators of the electron on a uniform Cartesian grid.
//
// Symmetric gauge A = (-B y/2, B x/2), charge q = -1, mu = hbar = 1:
//   v_x = -i d/dx - B y / 2,   v_y = -i d/dy + B x / 2,
//   [v_x, v_y] = -i B,          H = (v_x^2 + v_y^2) / 2 = (B/2)(Q^2 + P^2)
// with Q = v_x / sqrt(B), P = v_y / sqrt(B), [Q, P] = i.
//
// Derivatives are second-order central differences. Each stencil application
// invalidates one more ring of grid points; GridField tracks how many rings
// are invalid and norms only run over the valid interior.

#include <complex>
#include <vector>

#include "landau/states.hpp"

namespace landau {

class CartesianGrid {
 public:
  /// Square [-L, L]^2 with N points per axis; N odd and >= 33, L > 0.
  CartesianGrid(double half_extent, int points_per_axis);

  double half_extent() const { return half_extent_; }
  int points() const { return points_; }
  double spacing() const { return spacing_; }
  /// Coordinate of index i; exactly 0 at the centre index.
  double coord(int i) const { return (i - (points_ - 1) / 2) * spacing_; }

 private:
  double half_extent_;
  int points_;
  double spacing_;
};

/// Smallest grid extent used by default for a state: 6 max(1, sqrt((2n+|m|+1)/sigma)).
double default_half_extent(QuantumNumbers qn, const FieldConfig& field);

class GridField {
 public:
  explicit GridField(const CartesianGrid& grid, int invalid_rings = 0);

  const CartesianGrid& grid() const { return grid_; }
  int invalid_rings() const { return invalid_rings_; }
  /// Row-major, index iy * N + ix.
  std::vector<std::complex<double>>& values() { return values_; }
  const std::vector<std::complex<double>>& values() const { return values_; }

  std::complex<double>& at(int ix, int iy) { return values_[static_cast<std::size_t>(iy) * grid_.points() + ix]; }
  const std::complex<double>& at(int ix, int iy) const {
    return values_[static_cast<std::size_t>(iy) * grid_.points() + ix];
  }
  bool is_valid(int ix, int iy) const;

  /// Pointwise linear combination a*f + b*g on the smaller common valid region.
  friend GridField combine(std::complex<double> a, const GridField& f, std::complex<double> b, const GridField& g);

 private:
  CartesianGrid grid_;
  int invalid_rings_;
  std::vector<std::complex<double>> values_;
};

enum class Axis { x, y };

/// values(ix, iy) = psi(rho, phi) with rho = hypot(x, y), phi = atan2(y, x).
GridField sample_state(const LandauState& state, const CartesianGrid& grid);

/// (-i d/d(axis) + A_axis) f.
GridField velocity_apply(Axis axis, const FieldConfig& field, const GridField& f);

/// (v_x^2 + v_y^2) f / 2.
GridField hamiltonian_apply(const FieldConfig& field, const GridField& f);

/// (B/2)(Q^2 + P^2) f, evaluated as (B/2) * ((v_x^2 + v_y^2) f / B).
GridField hamiltonian_apply_qp(const FieldConfig& field, const GridField& f);

/// max |[v_x, v_y] f + i B f| / max |f| over the valid interior.
double commutator_residual(const FieldConfig& field, const GridField& f);

/// max |[Q, P] f - i f| / max |f|; commutator_residual / B.
double qp_commutator_residual(const FieldConfig& field, const GridField& f);

/// sqrt(h^2 sum |f|^2) over the valid region, fixed row-major order.
double grid_norm(const GridField& f);

/// ||H f - E f|| / ||f|| on the region where H f is valid.
double eigen_residual(const FieldConfig& field, const GridField& f, double energy);

/// log2(coarse / fine) for residuals on grids whose spacing differs by 2.
double observed_order(double coarse_residual, double fine_residual);

}  // namespace landau
