#pragma once

// All-variable ladder operators for the Landau states.
//
// L+ maps psi_{n,m} to sqrt((n+1)(n+|m|+1)(n+|m|+2)) psi_{n+1,m+1} and
// L- maps psi_{n,m} to sqrt(n(n+|m|)(n+|m|-1)) psi_{n-1,m-1}. Both act as
// e^{+-i phi} times a first-order operator in zeta whose coefficients depend
// on the source (n, m). Written in zeta, with the (n+1-zeta) and (n-zeta)
// prefactors cancelled against their denominators:
//
//   D+ R = -(n+1-z) sqrt(z) R' + (n+1-z) sqrt(z) (1/2 - (n+|m|/2+1)/z) R
//          + (n+1)(n+|m|+1) R / sqrt(z)
//   D- R =  (n-z) sqrt(z) R' - (n-z) sqrt(z) (-1/2 + |m|/(2z)) R
//          + n (|m|+z) R / sqrt(z)
//
// The phase factor only shifts m and is tracked as bookkeeping.
//
// The coefficient identities hold for m >= 0 (raise) and m >= 1 (lower),
// where |m +- 1| = |m| +- 1; lowering any n = 0 state gives zero.

#include <span>
#include <string_view>
#include <optional>
#include <vector>

#include "landau/quadrature.hpp"
#include "landau/states.hpp"

namespace landau {

enum class LadderDirection { raise, lower };
enum class LadderMode { analytic, finite_difference };

std::string_view direction_name(LadderDirection dir);
std::optional<LadderDirection> parse_direction(std::string_view name);
std::string_view mode_name(LadderMode mode);
std::optional<LadderMode> parse_mode(std::string_view name);

double raise_coefficient(QuantumNumbers qn);

/// Exactly 0 for n = 0 (including n = m = 0, where the radicand would be -0).
double lower_coefficient(QuantumNumbers qn);

double ladder_coefficient(QuantumNumbers qn, LadderDirection dir);

/// (n+1, m+1) or (n-1, m-1).
QuantumNumbers ladder_target(QuantumNumbers qn, LadderDirection dir);

/// raise: m >= 0. lower: m >= 1, or n = 0 for any m (annihilation).
bool in_validated_domain(QuantumNumbers qn, LadderDirection dir);

/// The radial operator D+- for source indices `qn`, given R and dR/dzeta at
/// zeta > 0.
double ladder_action(QuantumNumbers qn, LadderDirection dir, double zeta, double value, double derivative);

/// The operator in its factored form, with the (n+1-zeta) and (n-zeta)
/// prefactors left outside the bracket. Throws std::domain_error within
/// 1e-3 of zeta = n+1 (raise) or zeta = n (lower), where the bracket is 0/0.
double ladder_action_factored(QuantumNumbers qn, LadderDirection dir, double zeta, double value,
                              double derivative);

struct LadderSample {
  double zeta = 0.0;
  double value = 0.0;
};

struct LadderApplication {
  QuantumNumbers source;
  QuantumNumbers target;
  double coefficient = 0.0;
  std::vector<LadderSample> samples;
};

/// Central-difference step used by LadderMode::finite_difference.
double ladder_fd_step(double zeta);

/// (D+- R_source)(zeta) at each point, including the source normalization.
/// Throws std::domain_error for zeta <= 0, or zeta < 1e-12 in analytic mode.
LadderApplication apply_ladder(const LandauState& state, LadderDirection dir,
                               std::span<const double> zetas, LadderMode mode = LadderMode::analytic);

struct LadderCheck {
  QuantumNumbers source;
  QuantumNumbers target;
  double coefficient = 0.0;
  /// max_k |D R(z_k) - c R_target(z_k)| / S over the rule's nodes, where S is
  /// max_k |c R_target(z_k)|, or the source norm_const when c = 0.
  double pointwise_deviation = 0.0;
  /// <psi_target | L psi_source> computed by quadrature.
  double overlap_coefficient = 0.0;
  double overlap_deviation = 0.0;
  /// max_k |D R(z_k)| / norm_const; meaningful for annihilation.
  double max_sample_over_norm = 0.0;
};

/// Measures the coefficient identity for any (n, m), without the domain check.
LadderCheck measure_ladder(QuantumNumbers qn, const FieldConfig& field, LadderDirection dir,
                           const QuadratureRule& rule);

/// As measure_ladder, but throws std::invalid_argument outside the validated domain.
LadderCheck verify_ladder(QuantumNumbers qn, const FieldConfig& field, LadderDirection dir,
                          const QuadratureRule& rule);

}  // namespace landau
