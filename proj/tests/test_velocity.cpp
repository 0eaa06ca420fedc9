#include "landau/velocity.hpp"

#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

using namespace landau;
using cplx = std::complex<double>;

namespace {

GridField fill(const CartesianGrid& g, auto&& fn) {
  GridField f(g);
  for (int iy = 0; iy < g.points(); ++iy)
    for (int ix = 0; ix < g.points(); ++ix) f.at(ix, iy) = fn(g.coord(ix), g.coord(iy));
  return f;
}

}  // namespace

TEST_CASE("CartesianGrid") {
  const CartesianGrid g(4.0, 33);
  CHECK(g.spacing() == 0.25);
  CHECK(g.coord(16) == 0.0);
  CHECK(g.coord(0) == -4.0);
  CHECK(g.coord(32) == 4.0);
  CHECK_THROWS_AS(CartesianGrid(4.0, 34), std::invalid_argument);
  CHECK_THROWS_AS(CartesianGrid(4.0, 31), std::invalid_argument);
  CHECK_THROWS_AS(CartesianGrid(0.0, 33), std::invalid_argument);
  CHECK(default_half_extent({0, 0}, FieldConfig(1.0)) == doctest::Approx(6.0 * std::sqrt(2.0)));
  CHECK(default_half_extent({0, 0}, FieldConfig(8.0)) == 6.0);
}

TEST_CASE("sample_state") {
  const CartesianGrid g(3.0, 41);
  const auto f = sample_state(LandauState({0, 0}, FieldConfig(2.0)), g);
  CHECK(f.at(20, 20).real() == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(std::abs(sample_state(LandauState({0, 1}, FieldConfig(1.0)), g).at(20, 20)) == 0.0);

  const auto p = sample_state(LandauState({2, 3}, FieldConfig(1.0)), g);
  const auto q = sample_state(LandauState({2, -3}, FieldConfig(1.0)), g);
  for (std::size_t i = 0; i < p.values().size(); ++i) CHECK(q.values()[i] == std::conj(p.values()[i]));

  const LandauState s({1, 2}, FieldConfig(1.5));
  const double x = g.coord(27), y = g.coord(9);
  const cplx ref = s.wavefunction(std::hypot(x, y), std::atan2(y, x));
  CHECK(sample_state(s, g).at(27, 9) == ref);
}

TEST_CASE("velocity_apply on simple fields") {
  const CartesianGrid g(2.0, 33);
  const auto one = fill(g, [](double, double) { return cplx(1.0); });
  const auto vx = velocity_apply(Axis::x, FieldConfig(1.0), one);
  CHECK(vx.invalid_rings() == 1);
  CHECK_FALSE(vx.is_valid(0, 5));
  CHECK(vx.is_valid(1, 1));
  for (int iy = 1; iy < 32; ++iy)
    for (int ix = 1; ix < 32; ++ix) CHECK(std::abs(vx.at(ix, iy) - cplx(-g.coord(iy) / 2)) <= 1e-15);

  const auto lin = fill(g, [](double x, double) { return cplx(x); });
  const auto vl = velocity_apply(Axis::x, FieldConfig(2.0), lin);
  for (int iy = 1; iy < 32; ++iy)
    for (int ix = 1; ix < 32; ++ix) {
      const cplx want(-g.coord(iy) * g.coord(ix), -1.0);
      CHECK(std::abs(vl.at(ix, iy) - want) <= 1e-14);
    }

  const auto linY = fill(g, [](double, double y) { return cplx(y); });
  const auto vy = velocity_apply(Axis::y, FieldConfig(2.0), linY);
  for (int iy = 1; iy < 32; ++iy)
    for (int ix = 1; ix < 32; ++ix) CHECK(std::abs(vy.at(ix, iy) - cplx(g.coord(ix) * g.coord(iy), -1.0)) <= 1e-14);
}

TEST_CASE("v_x of the ground state stays square-integrable") {
  const FieldConfig f(1.0);
  const LandauState s({0, 0}, f);
  const CartesianGrid g(default_half_extent({0, 0}, f), 129);
  const double n = grid_norm(velocity_apply(Axis::x, f, sample_state(s, g)));
  CHECK(std::isfinite(n));
  CHECK(n > 0.0);
}

TEST_CASE("commutator and eigen residuals converge at second order") {
  const FieldConfig f(1.0);
  for (QuantumNumbers qn : {QuantumNumbers{0, 0}, QuantumNumbers{1, 2}}) {
    const LandauState s(qn, f);
    const CartesianGrid coarse(10.0, 129), fine(10.0, 257);
    const auto fc = sample_state(s, coarse);
    const auto ff = sample_state(s, fine);
    const double rc = commutator_residual(f, fc), rf = commutator_residual(f, ff);
    CHECK(rc / rf == doctest::Approx(4.0).epsilon(0.25));
    CHECK(std::abs(observed_order(rc, rf) - 2.0) <= 0.3);

    const double e = energy(qn, f);
    const double ec = eigen_residual(f, fc, e), ef = eigen_residual(f, ff, e);
    CHECK(std::abs(observed_order(ec, ef) - 2.0) <= 0.3);
    // The wrong eigenvalue leaves an O(1) residual.
    CHECK(eigen_residual(f, ff, e + 1.0) > 0.5);
  }
  const double e12 = energy({1, 2}, f);
  CHECK(e12 == 3.5);
  CHECK(energy({0, 0}, f) == 0.5);
}

TEST_CASE("Gaussian refinement behaves the same") {
  const FieldConfig f(1.0);
  auto gauss = [](double x, double y) { return cplx(std::exp(-(x * x + y * y) / 2)); };
  const double rc = commutator_residual(f, fill(CartesianGrid(10.0, 129), gauss));
  const double rf = commutator_residual(f, fill(CartesianGrid(10.0, 257), gauss));
  CHECK(std::abs(observed_order(rc, rf) - 2.0) <= 0.3);
}

TEST_CASE("Q/P rescaling") {
  const CartesianGrid g(8.0, 65);
  for (double B : {1.0, 4.0, 0.5}) {
    const FieldConfig f(B);
    const auto psi = sample_state(LandauState({0, 0}, f), g);
    CHECK(qp_commutator_residual(f, psi) == commutator_residual(f, psi) / B);
    const auto h1 = hamiltonian_apply(f, psi);
    const auto h2 = hamiltonian_apply_qp(f, psi);
    REQUIRE(h1.invalid_rings() == h2.invalid_rings());
    for (std::size_t i = 0; i < h1.values().size(); ++i) CHECK(h1.values()[i] == h2.values()[i]);
  }
}

TEST_CASE("hamiltonian is linear") {
  const FieldConfig f(1.0);
  const CartesianGrid g(7.0, 65);
  const auto a = sample_state(LandauState({0, 0}, f), g);
  const auto b = sample_state(LandauState({2, -1}, f), g);
  const cplx ca(0.3, -1.1), cb(-2.0, 0.25);
  const auto lhs = hamiltonian_apply(f, combine(ca, a, cb, b));
  const auto rhs = combine(ca, hamiltonian_apply(f, a), cb, hamiltonian_apply(f, b));
  CHECK(lhs.invalid_rings() == 2);
  double worst = 0.0, scale = 0.0;
  for (int iy = 0; iy < 65; ++iy)
    for (int ix = 0; ix < 65; ++ix) {
      if (!lhs.is_valid(ix, iy)) continue;
      worst = std::max(worst, std::abs(lhs.at(ix, iy) - rhs.at(ix, iy)));
      scale = std::max(scale, std::abs(rhs.at(ix, iy)));
    }
  CHECK(worst <= 1e-13 * scale);
}

TEST_CASE("grid norm converges to one") {
  for (double B : {0.5, 2.0}) {
    const FieldConfig f(B);
    for (QuantumNumbers qn : {QuantumNumbers{0, 0}, QuantumNumbers{3, -2}}) {
      const CartesianGrid g(default_half_extent(qn, f), 257);
      CHECK(grid_norm(sample_state(LandauState(qn, f), g)) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("observed_order") {
  CHECK(observed_order(4.0, 1.0) == 2.0);
  CHECK(observed_order(8.0, 1.0) == 3.0);
}
