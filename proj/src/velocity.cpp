#include "landau/velocity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "landau/kernels.hpp"

namespace landau {

CartesianGrid::CartesianGrid(double half_extent, int points_per_axis)
    : half_extent_(half_extent), points_(points_per_axis) {
  if (!std::isfinite(half_extent) || half_extent <= 0.0)
    throw std::invalid_argument("CartesianGrid: half extent must be finite and > 0");
  if (points_per_axis < 33 || points_per_axis % 2 == 0)
    throw std::invalid_argument("CartesianGrid: points per axis must be odd and >= 33");
  spacing_ = 2.0 * half_extent / (points_per_axis - 1);
}

double default_half_extent(QuantumNumbers qn, const FieldConfig& field) {
  const double turning = std::sqrt((2.0 * qn.n + qn.abs_m() + 1.0) / field.sigma());
  return 6.0 * std::max(1.0, turning);
}

GridField::GridField(const CartesianGrid& grid, int invalid_rings)
    : grid_(grid),
      invalid_rings_(invalid_rings),
      values_(static_cast<std::size_t>(grid.points()) * grid.points()) {}

bool GridField::is_valid(int ix, int iy) const {
  const int lo = invalid_rings_, hi = grid_.points() - 1 - invalid_rings_;
  return ix >= lo && ix <= hi && iy >= lo && iy <= hi;
}

GridField combine(std::complex<double> a, const GridField& f, std::complex<double> b, const GridField& g) {
  if (f.grid().points() != g.grid().points() || f.grid().spacing() != g.grid().spacing())
    throw std::invalid_argument("combine: fields live on different grids");
  GridField out(f.grid(), std::max(f.invalid_rings(), g.invalid_rings()));
  const int N = f.grid().points();
  for (int iy = 0; iy < N; ++iy)
    for (int ix = 0; ix < N; ++ix)
      if (out.is_valid(ix, iy)) out.at(ix, iy) = a * f.at(ix, iy) + b * g.at(ix, iy);
  return out;
}

GridField sample_state(const LandauState& state, const CartesianGrid& grid) {
  const int N = grid.points();
  const double sigma = state.field().sigma();
  const std::size_t total = static_cast<std::size_t>(N) * N;
  std::vector<double> zeta(total), phi(total), radial(total);
  for (int iy = 0; iy < N; ++iy) {
    const double y = grid.coord(iy);
    for (int ix = 0; ix < N; ++ix) {
      const double x = grid.coord(ix);
      const double rho = std::hypot(x, y);
      const std::size_t k = static_cast<std::size_t>(iy) * N + ix;
      zeta[k] = sigma * rho * rho;
      phi[k] = std::atan2(y, x);
    }
  }
  state.radial_batch(zeta, radial);

  GridField f(grid);
  const double root_two_pi = std::sqrt(2.0 * std::numbers::pi);
  const int m = state.qn().m;
  for (std::size_t k = 0; k < total; ++k) f.values()[k] = std::polar(radial[k] / root_two_pi, m * phi[k]);
  return f;
}

GridField velocity_apply(Axis axis, const FieldConfig& field, const GridField& f) {
  const CartesianGrid& grid = f.grid();
  const int N = grid.points();
  const int ring = f.invalid_rings() + 1;
  if (2 * ring >= N) throw std::invalid_argument("velocity_apply: no valid interior left");

  GridField out(grid, ring);
  const int lo = ring, hi = N - 1 - ring;
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  const double two_h = 2.0 * grid.spacing();
  const auto& in = f.values();
  std::vector<double> potential(count);

  if (axis == Axis::y) {
    for (int ix = lo; ix <= hi; ++ix) potential[ix - lo] = 0.5 * field.B() * grid.coord(ix);
  }
  for (int iy = lo; iy <= hi; ++iy) {
    const std::size_t row = static_cast<std::size_t>(iy) * N + lo;
    std::span<const std::complex<double>> center(in.data() + row, count);
    std::span<const std::complex<double>> prev, next;
    if (axis == Axis::x) {
      std::fill(potential.begin(), potential.end(), -0.5 * field.B() * grid.coord(iy));
      prev = {in.data() + row - 1, count};
      next = {in.data() + row + 1, count};
    } else {
      prev = {in.data() + row - N, count};
      next = {in.data() + row + N, count};
    }
    kernels::velocity_stencil(prev, next, center, potential, two_h,
                              std::span<std::complex<double>>(out.values().data() + row, count));
  }
  return out;
}

namespace {

GridField kinetic_sum(const FieldConfig& field, const GridField& f) {
  const GridField xx = velocity_apply(Axis::x, field, velocity_apply(Axis::x, field, f));
  const GridField yy = velocity_apply(Axis::y, field, velocity_apply(Axis::y, field, f));
  return combine(1.0, xx, 1.0, yy);
}

double max_abs(const GridField& f) {
  const int N = f.grid().points();
  double best = 0.0;
  for (int iy = 0; iy < N; ++iy)
    for (int ix = 0; ix < N; ++ix)
      if (f.is_valid(ix, iy)) best = std::max(best, std::abs(f.at(ix, iy)));
  return best;
}

// [v_x, v_y] f + i B f
GridField commutator_defect(const FieldConfig& field, const GridField& f) {
  const GridField xy = velocity_apply(Axis::x, field, velocity_apply(Axis::y, field, f));
  const GridField yx = velocity_apply(Axis::y, field, velocity_apply(Axis::x, field, f));
  const GridField comm = combine(1.0, xy, -1.0, yx);
  return combine(1.0, comm, {0.0, field.B()}, f);
}

}  // namespace

GridField hamiltonian_apply(const FieldConfig& field, const GridField& f) {
  return combine(0.5, kinetic_sum(field, f), 0.0, f);
}

GridField hamiltonian_apply_qp(const FieldConfig& field, const GridField& f) {
  GridField sum = kinetic_sum(field, f);
  const double half_b = 0.5 * field.B();
  for (auto& v : sum.values()) v = half_b * (v / field.B());
  return sum;
}

double commutator_residual(const FieldConfig& field, const GridField& f) {
  const double scale = max_abs(f);
  if (scale == 0.0) return 0.0;
  return max_abs(commutator_defect(field, f)) / scale;
}

double qp_commutator_residual(const FieldConfig& field, const GridField& f) {
  const double scale = max_abs(f);
  if (scale == 0.0) return 0.0;
  GridField defect = commutator_defect(field, f);
  for (auto& v : defect.values()) v /= field.B();
  return max_abs(defect) / scale;
}

double grid_norm(const GridField& f) {
  const int N = f.grid().points();
  double sum = 0.0;
  for (int iy = 0; iy < N; ++iy)
    for (int ix = 0; ix < N; ++ix)
      if (f.is_valid(ix, iy)) sum += std::norm(f.at(ix, iy));
  return std::sqrt(sum) * f.grid().spacing();
}

double eigen_residual(const FieldConfig& field, const GridField& f, double energy) {
  const GridField hf = hamiltonian_apply(field, f);
  const GridField defect = combine(1.0, hf, -energy, f);
  GridField restricted = combine(1.0, f, 0.0, hf);  // f on H f's valid region
  const double norm = grid_norm(restricted);
  if (norm == 0.0) return 0.0;
  return grid_norm(defect) / norm;
}

double observed_order(double coarse_residual, double fine_residual) {
  return std::log2(coarse_residual / fine_residual);
}

}  // namespace landau
