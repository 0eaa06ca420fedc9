#pragma once

// Verification suites behind `landau verify`. Every suite emits one
// VerificationRecord per check; records come back in canonical order no
// matter how many worker threads ran the checks.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "landau/report.hpp"

namespace landau {

enum class Suite { laguerre, quadrature, states, ladder, velocity, all };

std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

struct VerifyOptions {
  std::vector<double> fields{0.5, 1.0, 2.0};
  /// Unset means the per-suite default: laguerre 20, states 10, ladder 8.
  std::optional<int> n_max;
  /// Unset means the per-suite default: laguerre (alpha) 20, states 10, ladder 8.
  std::optional<int> m_max;
  /// Identity samples per identity in the laguerre suite.
  int identity_samples = 10000;
  /// Coarse grid for the velocity suite; the fine grid has 2N-1 points.
  int grid_points = 129;
  /// Unset means the per-state default extent.
  std::optional<double> grid_half_extent;
  /// Keys "suite.check" (see default_tolerances()).
  std::map<std::string, double> tolerance_overrides;
  int threads = 1;
  /// Measure runtime_ms. Off by default so reports are byte-reproducible.
  bool timing = false;
};

/// Default tolerance for every "suite.check" key.
const std::map<std::string, double>& default_tolerances();

/// Throws std::invalid_argument for unknown tolerance keys or bad options.
void validate(const VerifyOptions& options);

std::vector<VerificationRecord> run_suite(Suite suite, const VerifyOptions& options);

/// True if no record failed.
bool all_passed(const std::vector<VerificationRecord>& records);

}  // namespace landau
