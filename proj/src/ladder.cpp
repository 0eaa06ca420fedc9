#include "landau/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace landau {

std::string_view direction_name(LadderDirection dir) {
  return dir == LadderDirection::raise ? "raise" : "lower";
}

std::optional<LadderDirection> parse_direction(std::string_view name) {
  if (name == "raise") return LadderDirection::raise;
  if (name == "lower") return LadderDirection::lower;
  return std::nullopt;
}

std::string_view mode_name(LadderMode mode) {
  return mode == LadderMode::analytic ? "analytic" : "fd";
}

std::optional<LadderMode> parse_mode(std::string_view name) {
  if (name == "analytic") return LadderMode::analytic;
  if (name == "fd" || name == "finite-difference") return LadderMode::finite_difference;
  return std::nullopt;
}

double raise_coefficient(QuantumNumbers qn) {
  require_valid(qn);
  const double n = qn.n, am = qn.abs_m();
  return std::sqrt((n + 1.0) * (n + am + 1.0) * (n + am + 2.0));
}

double lower_coefficient(QuantumNumbers qn) {
  require_valid(qn);
  if (qn.n == 0) return 0.0;
  const double n = qn.n, am = qn.abs_m();
  return std::sqrt(n * (n + am) * (n + am - 1.0));
}

double ladder_coefficient(QuantumNumbers qn, LadderDirection dir) {
  return dir == LadderDirection::raise ? raise_coefficient(qn) : lower_coefficient(qn);
}

QuantumNumbers ladder_target(QuantumNumbers qn, LadderDirection dir) {
  return dir == LadderDirection::raise ? QuantumNumbers{qn.n + 1, qn.m + 1}
                                       : QuantumNumbers{qn.n - 1, qn.m - 1};
}

bool in_validated_domain(QuantumNumbers qn, LadderDirection dir) {
  if (qn.n < 0) return false;
  if (dir == LadderDirection::raise) return qn.m >= 0;
  return qn.m >= 1 || qn.n == 0;
}

double ladder_action(QuantumNumbers qn, LadderDirection dir, double zeta, double value, double derivative) {
  const double n = qn.n, am = qn.abs_m();
  const double root = std::sqrt(zeta);
  if (dir == LadderDirection::raise) {
    const double pre = (n + 1.0 - zeta) * root;
    return -pre * derivative + pre * (0.5 - (n + 0.5 * am + 1.0) / zeta) * value +
           (n + 1.0) * (n + am + 1.0) * value / root;
  }
  const double pre = (n - zeta) * root;
  return pre * derivative - pre * (-0.5 + am / (2.0 * zeta)) * value + n * (am + zeta) * value / root;
}

double ladder_action_factored(QuantumNumbers qn, LadderDirection dir, double zeta, double value,
                              double derivative) {
  const double n = qn.n, am = qn.abs_m();
  const double root = std::sqrt(zeta);
  if (dir == LadderDirection::raise) {
    const double gap = n + 1.0 - zeta;
    if (std::abs(gap) <= 1e-3) throw std::domain_error("ladder_action_factored: zeta too close to n+1");
    const double bracket = 0.5 - (n + 0.5 * am + 1.0) / zeta + (n + 1.0) * (n + am + 1.0) / (zeta * gap);
    return gap * root * (-derivative + bracket * value);
  }
  const double gap = n - zeta;
  if (std::abs(gap) <= 1e-3) throw std::domain_error("ladder_action_factored: zeta too close to n");
  const double bracket = -0.5 + am / (2.0 * zeta) - n * (am + zeta) / (zeta * gap);
  return gap * root * (derivative - bracket * value);
}

double ladder_fd_step(double zeta) { return std::min(1e-6 * std::max(1.0, zeta), 0.5 * zeta); }

LadderApplication apply_ladder(const LandauState& state, LadderDirection dir, std::span<const double> zetas,
                               LadderMode mode) {
  LadderApplication app;
  app.source = state.qn();
  app.target = ladder_target(state.qn(), dir);
  app.coefficient = ladder_coefficient(state.qn(), dir);
  app.samples.reserve(zetas.size());
  for (double z : zetas) {
    if (!(z > 0.0) || !std::isfinite(z)) throw std::domain_error("apply_ladder: zeta must be finite and > 0");
    double derivative;
    if (mode == LadderMode::analytic) {
      if (z < 1e-12) throw std::domain_error("apply_ladder: analytic mode needs zeta >= 1e-12");
      derivative = state.radial_deriv(z);
    } else {
      const double h = ladder_fd_step(z);
      derivative = (state.radial(z + h) - state.radial(z - h)) / (2.0 * h);
    }
    app.samples.push_back({z, ladder_action(state.qn(), dir, z, state.radial(z), derivative)});
  }
  return app;
}

LadderCheck measure_ladder(QuantumNumbers qn, const FieldConfig& field, LadderDirection dir,
                           const QuadratureRule& rule) {
  require_valid(qn);
  const LandauState source(qn, field);
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  const auto app = apply_ladder(source, dir, nodes, LadderMode::analytic);

  LadderCheck check;
  check.source = qn;
  check.target = app.target;
  check.coefficient = app.coefficient;

  double max_sample = 0.0;
  for (const auto& s : app.samples) max_sample = std::max(max_sample, std::abs(s.value));
  check.max_sample_over_norm = max_sample / source.norm_const();

  if (app.target.n < 0) {
    // Nothing to compare against: the image must vanish.
    check.pointwise_deviation = check.max_sample_over_norm;
    check.overlap_coefficient = 0.0;
    check.overlap_deviation = 0.0;
    return check;
  }

  const LandauState target(app.target, field);
  std::vector<double> expected(nodes.size());
  double scale = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    expected[k] = app.coefficient * target.radial(nodes[k]);
    scale = std::max(scale, std::abs(expected[k]));
  }
  if (app.coefficient == 0.0 || scale == 0.0) scale = source.norm_const();

  double worst = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    worst = std::max(worst, std::abs(app.samples[k].value - expected[k]));
  check.pointwise_deviation = worst / scale;

  // <psi_t | L psi_s> = int R_t (D R_s) dzeta / (2 sigma); the rule's weight
  // is divided out half on each factor.
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (weights[k] == 0.0) continue;
    const double z = nodes[k];
    const double unweight = std::exp(0.5 * z) * std::pow(z, -0.5 * rule.alpha());
    sum += weights[k] * (target.radial(z) * unweight) * (app.samples[k].value * unweight);
  }
  check.overlap_coefficient = sum / (2.0 * field.sigma());
  check.overlap_deviation = std::abs(check.overlap_coefficient - app.coefficient);
  return check;
}

LadderCheck verify_ladder(QuantumNumbers qn, const FieldConfig& field, LadderDirection dir,
                          const QuadratureRule& rule) {
  if (!in_validated_domain(qn, dir))
    throw std::invalid_argument("verify_ladder: (n, m) outside the validated domain for this direction");
  return measure_ladder(qn, field, dir, rule);
}

}  // namespace landau
