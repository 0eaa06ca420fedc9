#include "landau/ladder.hpp"

#include "landau/quadrature.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace landau;

TEST_CASE("coefficients") {
  CHECK(raise_coefficient({0, 0}) == doctest::Approx(1.4142135624));
  CHECK(raise_coefficient({1, 2}) == std::sqrt(40.0));
  CHECK(raise_coefficient({1, 2}) == doctest::Approx(6.3245553203));
  CHECK(raise_coefficient({0, 5}) == std::sqrt(42.0));
  CHECK(lower_coefficient({0, 7}) == 0.0);
  CHECK(lower_coefficient({0, 0}) == 0.0);
  CHECK(lower_coefficient({1, 1}) == std::sqrt(2.0));
  CHECK(lower_coefficient({2, 3}) == std::sqrt(40.0));
  CHECK(ladder_coefficient({2, 3}, LadderDirection::lower) == lower_coefficient({2, 3}));
  CHECK(ladder_coefficient({2, 3}, LadderDirection::raise) == raise_coefficient({2, 3}));
}

TEST_CASE("raise coefficient increases in n") {
  for (int m = 0; m <= 20; ++m)
    for (int n = 0; n < 50; ++n) CHECK(raise_coefficient({n + 1, m}) > raise_coefficient({n, m}));
}

TEST_CASE("targets, names and domain") {
  CHECK(ladder_target({2, 3}, LadderDirection::raise) == QuantumNumbers{3, 4});
  CHECK(ladder_target({2, 3}, LadderDirection::lower) == QuantumNumbers{1, 2});
  CHECK(in_validated_domain({0, 0}, LadderDirection::raise));
  CHECK_FALSE(in_validated_domain({0, -1}, LadderDirection::raise));
  CHECK(in_validated_domain({3, 1}, LadderDirection::lower));
  CHECK_FALSE(in_validated_domain({3, 0}, LadderDirection::lower));
  CHECK(in_validated_domain({0, 0}, LadderDirection::lower));
  CHECK(in_validated_domain({0, -4}, LadderDirection::lower));
  CHECK(parse_direction("raise") == LadderDirection::raise);
  CHECK(parse_direction(direction_name(LadderDirection::lower)) == LadderDirection::lower);
  CHECK(parse_mode("fd") == LadderMode::finite_difference);
  CHECK(parse_mode(mode_name(LadderMode::analytic)) == LadderMode::analytic);
  CHECK_FALSE(parse_mode("exact").has_value());
}

TEST_CASE("worked applications") {
  const FieldConfig b2(2.0);
  const double one = 1.0;
  const auto up = apply_ladder(LandauState({0, 0}, b2), LadderDirection::raise, {&one, 1});
  CHECK(up.samples[0].value == doctest::Approx(std::sqrt(2.0) * std::exp(-0.5)).epsilon(1e-14));
  CHECK(up.samples[0].value == doctest::Approx(0.8577638850));
  CHECK(up.samples[0].value == doctest::Approx(std::sqrt(2.0) * LandauState({1, 1}, b2).radial(1.0)).epsilon(1e-14));
  CHECK(up.target == QuantumNumbers{1, 1});

  const LandauState s11({1, 1}, b2);
  const LandauState s00({0, 0}, b2);
  for (double z : {0.2, 1.0, 2.0, 7.5}) {
    const auto down = apply_ladder(s11, LadderDirection::lower, {&z, 1});
    CHECK(down.samples[0].value == doctest::Approx(2.0 * std::exp(-z / 2)).epsilon(1e-13));
    CHECK(down.samples[0].value == doctest::Approx(std::sqrt(2.0) * s00.radial(z)).epsilon(1e-13));
  }

  const double three = 3.0;
  const LandauState s04({0, 4}, FieldConfig(1.0));
  const auto zero = apply_ladder(s04, LadderDirection::lower, {&three, 1});
  CHECK(std::abs(zero.samples[0].value) <= 1e-12 * s04.norm_const());
  CHECK(zero.coefficient == 0.0);
}

TEST_CASE("apply_ladder: domain errors") {
  const LandauState s({1, 1}, FieldConfig(1.0));
  const std::vector<double> bad{1.0, 0.0};
  CHECK_THROWS_AS(apply_ladder(s, LadderDirection::raise, bad), std::domain_error);
  const std::vector<double> tiny{1e-13};
  CHECK_THROWS_AS(apply_ladder(s, LadderDirection::raise, tiny), std::domain_error);
  CHECK_NOTHROW(apply_ladder(s, LadderDirection::raise, tiny, LadderMode::finite_difference));
  CHECK_THROWS_AS(verify_ladder({1, -1}, FieldConfig(1.0), LadderDirection::raise, build_rule(1.0, 20)),
                  std::invalid_argument);
}

TEST_CASE("expanded operator matches the factored oracle and the coefficient claim") {
  // Library D R vs the 50-digit factored operator on the closed-form state,
  // and the oracle's own D R vs c R_target.
  for (double B : {0.5, 2.0}) {
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= 6; ++m) {
        for (bool raise : {true, false}) {
          if (!raise && m == 0 && n > 0) continue;
          const QuantumNumbers qn{n, m};
          const auto dir = raise ? LadderDirection::raise : LadderDirection::lower;
          const LandauState s(qn, FieldConfig(B));
          const auto tgt = ladder_target(qn, dir);
          const double c = ladder_coefficient(qn, dir);
          for (double z : {0.31, 1.77, 4.6, 9.2, 21.0}) {
            const double pole = raise ? n + 1.0 : double(n);
            if (std::abs(z - pole) < 0.05) continue;
            const oracle::big ref = oracle::ladder_factored(n, m, raise, B, z);
            const oracle::big claim =
                tgt.n < 0 ? oracle::big(0) : oracle::ladder_coefficient(n, m, raise) * oracle::radial(tgt.n, tgt.m, B, z);
            const double scale = s.norm_const() * (1 + c);
            CHECK(oracle::to_double(abs(ref - claim)) <= 1e-40 * scale);
            CHECK(c == doctest::Approx(oracle::to_double(oracle::ladder_coefficient(n, m, raise))).epsilon(1e-15));
            const auto app = apply_ladder(s, dir, {&z, 1});
            CHECK(std::abs(app.samples[0].value - oracle::to_double(ref)) <= 1e-12 * scale);
          }
        }
      }
    }
  }
}

TEST_CASE("expanded and factored forms agree away from the pole") {
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= 8; ++m) {
      const LandauState s({n, m}, FieldConfig(1.0));
      for (auto dir : {LadderDirection::raise, LadderDirection::lower}) {
        const double pole = dir == LadderDirection::raise ? n + 1.0 : double(n);
        double worst = 0.0, scale = 0.0;
        for (int i = 1; i <= 400; ++i) {
          const double z = 0.1 * i;
          if (std::abs(z - pole) <= 1e-3) {
            CHECK_THROWS_AS(ladder_action_factored({n, m}, dir, z, s.radial(z), s.radial_deriv(z)), std::domain_error);
            continue;
          }
          const double e = ladder_action({n, m}, dir, z, s.radial(z), s.radial_deriv(z));
          const double f = ladder_action_factored({n, m}, dir, z, s.radial(z), s.radial_deriv(z));
          worst = std::max(worst, std::abs(e - f));
          scale = std::max(scale, std::abs(e));
        }
        CHECK(worst <= 1e-10 * std::max(scale, s.norm_const()));
      }
    }
  }
}

TEST_CASE("verify_ladder over the validated domain") {
  for (double B : {0.5, 1.0, 2.0}) {
    for (int n = 0; n <= 8; ++n) {
      for (int m = 0; m <= 8; ++m) {
        // Rule weighted by the target's |m| so the overlap integrand is polynomial.
        const int order = default_order(n + 1, m + 1);
        const auto up = verify_ladder({n, m}, FieldConfig(B), LadderDirection::raise, build_rule(m + 1, order));
        CHECK(up.pointwise_deviation <= 1e-8);
        CHECK(up.overlap_deviation <= 1e-8);
        if (m >= 1) {
          const auto down =
              verify_ladder({n, m}, FieldConfig(B), LadderDirection::lower, build_rule(m - 1, order));
          CHECK(down.pointwise_deviation <= 1e-8);
          CHECK(down.overlap_deviation <= 1e-8);
        }
      }
    }
  }
  const auto r = verify_ladder({0, 0}, FieldConfig(1.0), LadderDirection::raise, build_rule(0.0, 20));
  CHECK(r.pointwise_deviation <= 1e-10);
  const auto l = verify_ladder({1, 1}, FieldConfig(1.0), LadderDirection::lower, build_rule(0.0, 20));
  CHECK(l.overlap_deviation <= 1e-10);
  CHECK(l.coefficient == std::sqrt(2.0));
}

TEST_CASE("annihilation for every m") {
  for (double B : {0.5, 1.0, 2.0}) {
    for (int m = -8; m <= 8; ++m) {
      const auto rule = build_rule(std::abs(m), 40);
      const auto c = verify_ladder({0, m}, FieldConfig(B), LadderDirection::lower, rule);
      CHECK(c.coefficient == 0.0);
      CHECK(c.max_sample_over_norm <= 1e-10);
    }
  }
}

TEST_CASE("analytic and finite-difference modes agree") {
  for (int n = 0; n <= 5; ++n) {
    for (int m = 0; m <= 5; ++m) {
      const LandauState s({n, m}, FieldConfig(1.0));
      const auto rule = build_rule(m, 30);
      for (auto dir : {LadderDirection::raise, LadderDirection::lower}) {
        const auto a = apply_ladder(s, dir, rule.nodes(), LadderMode::analytic);
        const auto f = apply_ladder(s, dir, rule.nodes(), LadderMode::finite_difference);
        double worst = 0.0;
        for (std::size_t k = 0; k < a.samples.size(); ++k)
          worst = std::max(worst, std::abs(a.samples[k].value - f.samples[k].value));
        CHECK(worst <= 1e-5 * s.norm_const());
      }
    }
  }
}

TEST_CASE("raise then lower returns the scaled source") {
  // L- L+ psi_nm = c_up(n, m) c_down(n+1, m+1) psi_nm, with the raised
  // profile differentiated by a five-point stencil.
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) {
      const QuantumNumbers qn{n, m};
      const LandauState src(qn, FieldConfig(1.0));
      const auto mid = ladder_target(qn, LadderDirection::raise);
      const double c = raise_coefficient(qn) * lower_coefficient(mid);
      auto up = [&](double z) {
        return ladder_action(qn, LadderDirection::raise, z, src.radial(z), src.radial_deriv(z));
      };
      double worst = 0.0, scale = 0.0;
      for (int k = 1; k <= 60; ++k) {
        const double z = 0.25 * k + 0.013;
        const double h = 1e-3 * std::max(1.0, z);
        const double d = (up(z - 2 * h) - 8 * up(z - h) + 8 * up(z + h) - up(z + 2 * h)) / (12 * h);
        const double twice = ladder_action(mid, LadderDirection::lower, z, up(z), d);
        worst = std::max(worst, std::abs(twice - c * src.radial(z)));
        scale = std::max(scale, std::abs(c * src.radial(z)));
      }
      CHECK(worst <= 1e-8 * scale);
    }
  }
}
