#include "landau/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "landau/ladder.hpp"
#include "landau/laguerre.hpp"
#include "landau/quadrature.hpp"
#include "landau/states.hpp"
#include "landau/velocity.hpp"

namespace landau {

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::laguerre: return "laguerre";
    case Suite::quadrature: return "quadrature";
    case Suite::states: return "states";
    case Suite::ladder: return "ladder";
    case Suite::velocity: return "velocity";
    case Suite::all: return "all";
  }
  return "all";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::laguerre, Suite::quadrature, Suite::states, Suite::ladder, Suite::velocity, Suite::all})
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> table = {
      {"laguerre.closed-form", 1e-10},
      {"laguerre.derivative-fd", 1e-6},
      {"laguerre.identity", 1e-10},
      {"quadrature.exactness", 1e-11},
      {"quadrature.weight-sum", 1e-12},
      {"quadrature.positivity", 0.0},
      {"quadrature.interlacing", 0.0},
      {"states.energy-branches", 0.0},
      {"states.level-spacing", 0.0},
      {"states.spectral-params", 1e-12},
      {"states.orthonormality", 1e-10},
      {"states.cross-m", 0.0},
      {"states.ode-residual", 1e-9},
      {"states.ode-detects-perturbation", 1.0},
      {"ladder.pointwise", 1e-8},
      {"ladder.overlap", 1e-8},
      {"ladder.annihilation", 1e-10},
      {"ladder.mode-agreement", 1e-5},
      {"ladder.round-trip", 1e-8},
      {"ladder.factored-form", 1e-10},
      {"ladder.coefficient-monotonic", 0.0},
      {"velocity.commutator-order", 0.3},
      {"velocity.eigen-order", 0.3},
      {"velocity.commutator-h2", 16.0},
      {"velocity.eigen-h2", 16.0},
      {"velocity.qp-commutator", 1e-14},
      {"velocity.qp-hamiltonian", 1e-14},
      {"velocity.grid-norm", 1e-6},
      {"velocity.linearity", 1e-12},
  };
  return table;
}

void validate(const VerifyOptions& options) {
  for (const auto& [key, value] : options.tolerance_overrides) {
    if (!default_tolerances().contains(key)) throw std::invalid_argument("unknown tolerance key '" + key + "'");
    if (!(value >= 0.0)) throw std::invalid_argument("tolerance '" + key + "' must be >= 0");
  }
  for (double B : options.fields)
    if (!std::isfinite(B) || B <= 0.0) throw std::invalid_argument("field strengths must be finite and > 0");
  if (options.fields.empty()) throw std::invalid_argument("at least one field strength is required");
  if (options.n_max && (*options.n_max < 0 || *options.n_max > 50))
    throw std::invalid_argument("n-max must be in [0, 50]");
  if (options.m_max && (*options.m_max < 0 || *options.m_max > 50))
    throw std::invalid_argument("m-max must be in [0, 50]");
  if (options.grid_points < 33 || options.grid_points % 2 == 0)
    throw std::invalid_argument("grid-N must be odd and >= 33");
  if (options.grid_half_extent && !(*options.grid_half_extent > 0.0))
    throw std::invalid_argument("grid-L must be > 0");
  if (options.threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (options.identity_samples < 1) throw std::invalid_argument("identity samples must be >= 1");
}

bool all_passed(const std::vector<VerificationRecord>& records) {
  return std::none_of(records.begin(), records.end(), [](const auto& r) { return r.status == Status::fail; });
}

namespace {

using Task = std::function<std::vector<VerificationRecord>()>;

class Checks {
 public:
  explicit Checks(const VerifyOptions& options) : options_(options) {}

  double tol(const std::string& key) const {
    if (auto it = options_.tolerance_overrides.find(key); it != options_.tolerance_overrides.end()) return it->second;
    return default_tolerances().at(key);
  }

  VerificationRecord record(const std::string& suite, const std::string& check, ParamMap params, double err,
                            const std::string& tol_key) const {
    return make_record(suite, check, std::move(params), err, tol(tol_key));
  }

  const VerifyOptions& options() const { return options_; }

 private:
  VerifyOptions options_;
};

// ---------------------------------------------------------------- laguerre

// Explicit sum_k (-1)^k C(n+a, n-k) x^k / k! in 50-digit arithmetic;
// independent of the recurrence. Long double is not enough here: the terms
// cancel by up to ~1e6 for n, alpha <= 15 and x <= 50.
double laguerre_closed_form(int n, int alpha, double x) {
  using big = boost::multiprecision::cpp_bin_float_50;
  big sum = 0;
  big coeff = 1;  // C(n+a, n-k) / k!, starting from k = 0
  for (int j = 0; j < n; ++j) coeff = coeff * (alpha + n - j) / (j + 1);
  big power = 1;
  const big bx = x;
  for (int k = 0; k <= n; ++k) {
    sum += (k % 2 ? -coeff : coeff) * power;
    coeff = coeff * (n - k) / (big(alpha + k + 1) * (k + 1));
    power *= bx;
  }
  return static_cast<double>(sum);
}

std::vector<Task> laguerre_tasks(const Checks& checks) {
  const int n_max = checks.options().n_max.value_or(20);
  const int a_max = checks.options().m_max.value_or(20);
  const int samples = checks.options().identity_samples;
  std::vector<Task> tasks;

  tasks.push_back([&checks] {
    std::mt19937_64 rng(20170938);
    std::uniform_int_distribution<int> deg(0, 15);
    std::uniform_real_distribution<double> xs(0.0, 50.0);
    double worst = 0.0;
    for (int s = 0; s < 2000; ++s) {
      const int n = deg(rng), a = deg(rng);
      double x = xs(rng);
      if (x == 0.0) x = 50.0;
      const double got = laguerre_eval({n, double(a)}, x);
      const double ref = laguerre_closed_form(n, a, x);
      worst = std::max(worst, std::abs(got - ref) / std::abs(ref));
    }
    return std::vector{checks.record("laguerre", "closed-form", {{"samples", 2000LL}}, worst, "laguerre.closed-form")};
  });

  tasks.push_back([&checks, n_max, a_max] {
    std::mt19937_64 rng(160978);
    std::uniform_int_distribution<int> deg(0, n_max), ord(0, a_max);
    std::uniform_real_distribution<double> xs(0.1, 50.0);
    const double h = 1e-5;
    double worst = 0.0;
    for (int s = 0; s < 2000; ++s) {
      const LaguerreIndex idx{deg(rng), double(ord(rng))};
      const double x = xs(rng);
      const double d = laguerre_deriv(idx, x);
      const double fd = (laguerre_eval(idx, x + h) - laguerre_eval(idx, x - h)) / (2.0 * h);
      worst = std::max(worst, std::abs(d - fd) / (1.0 + std::abs(laguerre_eval(idx, x)) + std::abs(d)));
    }
    return std::vector{checks.record("laguerre", "derivative-fd", {{"samples", 2000LL}, {"step", h}}, worst,
                                     "laguerre.derivative-fd")};
  });

  for (auto id : kAllIdentities) {
    if (id == LaguerreIdentity::order_raise_printed) continue;  // known to be false; see README
    tasks.push_back([&checks, id, n_max, a_max, samples] {
      std::mt19937_64 rng(1000 + static_cast<int>(id));
      std::uniform_int_distribution<int> deg(0, n_max), ord(0, a_max);
      std::uniform_real_distribution<double> xs(0.1, 60.0);
      double worst = 0.0;
      for (int s = 0; s < samples; ++s) {
        LaguerreIndex idx{deg(rng), double(ord(rng))};
        double x = xs(rng);
        while (!identity_in_domain(id, idx, x)) x = xs(rng);
        const auto sides = identity_sides(id, idx, x);
        worst = std::max(worst, std::abs(sides.lhs - sides.rhs) / (1.0 + std::abs(sides.lhs)));
      }
      ParamMap p{{"identity", std::string(identity_name(id))},
                 {"samples", (long long)samples},
                 {"n_max", (long long)n_max},
                 {"alpha_max", (long long)a_max}};
      return std::vector{checks.record("laguerre", "identity", std::move(p), worst, "laguerre.identity")};
    });
  }
  return tasks;
}

// -------------------------------------------------------------- quadrature

// (a + j)! / a! * a! = Gamma(a + j + 1) for integer a, as an exact-ish product.
long double factorial_ld(int k) {
  long double f = 1.0L;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::vector<Task> quadrature_tasks(const Checks& checks) {
  std::vector<Task> tasks;
  for (int alpha = 0; alpha <= 12; ++alpha) {
    tasks.push_back([&checks, alpha] {
      std::vector<VerificationRecord> out;
      for (int K : {2, 4, 8, 16, 32}) {
        const QuadratureRule rule(alpha, K);
        ParamMap p{{"alpha", (long long)alpha}, {"order", (long long)K}};

        double worst = 0.0;
        for (int j = 0; j <= 2 * K - 1; ++j) {
          const double q = integrate(rule, [j](double x) { return std::pow(x, j); });
          const long double exact = factorial_ld(alpha + j);
          worst = std::max(worst, double(std::fabs(q - exact) / exact));
        }
        out.push_back(checks.record("quadrature", "exactness", p, worst, "quadrature.exactness"));

        long double total = 0.0L;
        for (double w : rule.weights()) total += w;
        const long double gamma = factorial_ld(alpha);
        out.push_back(checks.record("quadrature", "weight-sum", p, double(std::fabs(total - gamma) / gamma),
                                    "quadrature.weight-sum"));

        double bad = 0.0;
        const auto x = rule.nodes();
        const auto w = rule.weights();
        for (int k = 0; k < K; ++k) {
          if (!(w[k] > 0.0) || !(x[k] > 0.0)) bad += 1.0;
          if (k > 0 && !(x[k] > x[k - 1])) bad += 1.0;
        }
        out.push_back(checks.record("quadrature", "positivity", p, bad, "quadrature.positivity"));

        const QuadratureRule next(alpha, K + 1);
        const auto y = next.nodes();
        double violations = 0.0;
        for (int k = 0; k < K; ++k)
          if (!(y[k] < x[k] && x[k] < y[k + 1])) violations += 1.0;
        out.push_back(checks.record("quadrature", "interlacing", p, violations, "quadrature.interlacing"));
      }
      return out;
    });
  }
  return tasks;
}

// ------------------------------------------------------------------ states

std::vector<Task> states_tasks(const Checks& checks) {
  const int n_max = checks.options().n_max.value_or(10);
  const int m_max = checks.options().m_max.value_or(10);
  std::vector<Task> tasks;

  for (double B : checks.options().fields) {
    tasks.push_back([&checks, B, n_max, m_max] {
      const FieldConfig field(B);
      double branch = 0.0, spacing = 0.0, params = 0.0;
      for (int n = 0; n <= n_max; ++n) {
        for (int m = -m_max; m <= m_max; ++m) {
          const QuantumNumbers qn{n, m};
          const double e = energy(qn, field);
          const double expected = m <= 0 ? B * (n + 0.5) : B * (n + m + 0.5);
          branch = std::max(branch, std::abs(e - expected));
          if (m <= 0) spacing = std::max(spacing, std::abs((energy({n + 1, m}, field) - e) - B));
          const auto sp = spectral_params(qn, field);
          params = std::max(params, std::abs(sp.lambda - (qn.abs_m() + 1) / 2.0 - n) / (1.0 + sp.lambda));
        }
      }
      ParamMap p{{"B", B}, {"n_max", (long long)n_max}, {"m_max", (long long)m_max}};
      return std::vector{checks.record("states", "energy-branches", p, branch, "states.energy-branches"),
                         checks.record("states", "level-spacing", p, spacing, "states.level-spacing"),
                         checks.record("states", "spectral-params", p, params, "states.spectral-params")};
    });

    for (int m = -m_max; m <= m_max; ++m) {
      tasks.push_back([&checks, B, m, n_max, m_max] {
        const FieldConfig field(B);
        const QuadratureRule rule(std::abs(m), default_order(n_max, m_max));
        std::vector<LandauState> states;
        for (int n = 0; n <= n_max; ++n) states.emplace_back(QuantumNumbers{n, m}, field);
        double worst = 0.0;
        for (int a = 0; a <= n_max; ++a)
          for (int b = a; b <= n_max; ++b) {
            const double ov = overlap(states[a], states[b], rule).real();
            worst = std::max(worst, std::abs(ov - (a == b ? 1.0 : 0.0)));
          }
        ParamMap p{{"B", B}, {"m", (long long)m}, {"n_max", (long long)n_max}, {"order", (long long)rule.order()}};
        return std::vector{checks.record("states", "orthonormality", std::move(p), worst, "states.orthonormality")};
      });
    }

    tasks.push_back([&checks, B, n_max, m_max] {
      const FieldConfig field(B);
      const QuadratureRule rule(0.0, default_order(n_max, m_max));
      double worst = 0.0;
      for (int m = -m_max; m <= m_max; ++m)
        for (int m2 = -m_max; m2 <= m_max; ++m2) {
          if (m == m2) continue;
          const LandauState a({0, m}, field), b({n_max, m2}, field);
          worst = std::max(worst, std::abs(overlap(a, b, rule)));
        }
      ParamMap p{{"B", B}, {"m_max", (long long)m_max}};
      return std::vector{checks.record("states", "cross-m", std::move(p), worst, "states.cross-m")};
    });
  }

  for (int am = 0; am <= m_max; ++am) {
    tasks.push_back([&checks, am, n_max, m_max] {
      const QuadratureRule rule(am, default_order(n_max, m_max));
      double worst = 0.0;
      for (int n = 0; n <= n_max; ++n)
        for (double z : rule.nodes()) {
          const QuantumNumbers qn{n, am};
          worst = std::max(worst, std::abs(ode_residual(qn, z)) / ode_residual_scale(qn, z));
        }
      ParamMap p{{"abs_m", (long long)am}, {"n_max", (long long)n_max}, {"order", (long long)rule.order()}};
      return std::vector{checks.record("states", "ode-residual", std::move(p), worst, "states.ode-residual")};
    });
  }

  tasks.push_back([&checks] {
    // G = L_1 + eps * zeta must not pass as a solution.
    const double eps = 1e-3, z = 1.0;
    const QuantumNumbers qn{1, 0};
    const LaguerreIndex idx{1, 0.0};
    const double g = laguerre_eval(idx, z) + eps * z;
    const double dg = laguerre_deriv(idx, z) + eps;
    const double res = std::abs(ode_residual(qn, z, g, dg, laguerre_second_deriv(idx, z)));
    ParamMap p{{"epsilon", eps}, {"zeta", z}, {"detection_threshold", 1e-4}};
    return std::vector{
        checks.record("states", "ode-detects-perturbation", std::move(p), 1e-4 / res, "states.ode-detects-perturbation")};
  });
  return tasks;
}

// ------------------------------------------------------------------ ladder

std::vector<Task> ladder_tasks(const Checks& checks) {
  const int n_max = checks.options().n_max.value_or(8);
  const int m_max = checks.options().m_max.value_or(8);
  std::vector<Task> tasks;

  for (double B : checks.options().fields) {
    for (auto dir : {LadderDirection::raise, LadderDirection::lower}) {
      for (int m = -m_max; m <= m_max; ++m) {
        tasks.push_back([&checks, B, dir, m, n_max, m_max] {
          const FieldConfig field(B);
          std::vector<VerificationRecord> out;
          for (int n = 0; n <= n_max; ++n) {
            const QuantumNumbers qn{n, m};
            const auto target = ladder_target(qn, dir);
            const QuadratureRule rule(target.n >= 0 ? target.abs_m() : qn.abs_m(), default_order(n_max + 1, m_max + 1));
            const auto check = measure_ladder(qn, field, dir, rule);
            const bool validated = in_validated_domain(qn, dir);
            ParamMap p{{"B", B}, {"direction", std::string(direction_name(dir))}, {"n", (long long)n},
                       {"m", (long long)m}, {"order", (long long)rule.order()}};
            if (target.n < 0) {
              auto r = checks.record("ladder", "annihilation", p, check.max_sample_over_norm, "ladder.annihilation");
              if (!validated) r.status = Status::skipped;
              out.push_back(std::move(r));
              continue;
            }
            auto pw = checks.record("ladder", "pointwise", p, check.pointwise_deviation, "ladder.pointwise");
            auto ov = checks.record("ladder", "overlap", p, check.overlap_deviation, "ladder.overlap");
            if (!validated) pw.status = ov.status = Status::skipped;
            out.push_back(std::move(pw));
            out.push_back(std::move(ov));
          }
          return out;
        });
      }

      tasks.push_back([&checks, B, dir, n_max, m_max] {
        // Analytic vs central-difference R' on a fixed zeta set.
        const FieldConfig field(B);
        std::vector<double> zetas;
        for (int k = 1; k <= 40; ++k) zetas.push_back(0.25 * k);
        double worst = 0.0;
        for (int n = 0; n <= n_max; ++n)
          for (int m = 0; m <= m_max; ++m) {
            const QuantumNumbers qn{n, m};
            if (!in_validated_domain(qn, dir)) continue;
            const LandauState state(qn, field);
            const auto a = apply_ladder(state, dir, zetas, LadderMode::analytic);
            const auto f = apply_ladder(state, dir, zetas, LadderMode::finite_difference);
            double scale = 0.0, diff = 0.0;
            for (std::size_t k = 0; k < zetas.size(); ++k) {
              scale = std::max(scale, std::abs(a.samples[k].value));
              diff = std::max(diff, std::abs(a.samples[k].value - f.samples[k].value));
            }
            worst = std::max(worst, diff / std::max(scale, state.norm_const()));
          }
        ParamMap p{{"B", B}, {"direction", std::string(direction_name(dir))}, {"n_max", (long long)n_max},
                   {"m_max", (long long)m_max}};
        return std::vector{checks.record("ladder", "mode-agreement", std::move(p), worst, "ladder.mode-agreement")};
      });
    }

    tasks.push_back([&checks, B, n_max, m_max] {
      // Raise, then lower the raised profile through a central difference of
      // the sampled image; compare with the product of coefficients.
      const FieldConfig field(B);
      double worst_trip = 0.0, worst_factored = 0.0;
      for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= m_max; ++m) {
          const QuantumNumbers qn{n, m};
          const LandauState state(qn, field);
          const auto raised_qn = ladder_target(qn, LadderDirection::raise);
          const double product = raise_coefficient(qn) * lower_coefficient(raised_qn);
          auto raised = [&](double z) {
            return ladder_action(qn, LadderDirection::raise, z, state.radial(z), state.radial_deriv(z));
          };
          double scale = 0.0, diff = 0.0, f_scale = 0.0, f_diff = 0.0;
          for (int k = 1; k <= 40; ++k) {
            const double z = 0.3 * k + 0.01;
            const double h = ladder_fd_step(z);
            const double d = (raised(z + h) - raised(z - h)) / (2.0 * h);
            const double back = ladder_action(raised_qn, LadderDirection::lower, z, raised(z), d);
            const double expected = product * state.radial(z);
            scale = std::max(scale, std::abs(expected));
            diff = std::max(diff, std::abs(back - expected));

            for (auto dir : {LadderDirection::raise, LadderDirection::lower}) {
              const double gap = dir == LadderDirection::raise ? n + 1.0 - z : n - z;
              if (std::abs(gap) <= 1e-3) continue;
              const double R = state.radial(z), dR = state.radial_deriv(z);
              const double expanded = ladder_action(qn, dir, z, R, dR);
              const double factored = ladder_action_factored(qn, dir, z, R, dR);
              f_scale = std::max(f_scale, std::abs(expanded));
              f_diff = std::max(f_diff, std::abs(expanded - factored));
            }
          }
          worst_trip = std::max(worst_trip, diff / scale);
          worst_factored = std::max(worst_factored, f_diff / f_scale);
        }
      ParamMap p{{"B", B}, {"n_max", (long long)n_max}, {"m_max", (long long)m_max}};
      return std::vector{checks.record("ladder", "round-trip", p, worst_trip, "ladder.round-trip"),
                         checks.record("ladder", "factored-form", p, worst_factored, "ladder.factored-form")};
    });
  }

  tasks.push_back([&checks, n_max, m_max] {
    double violations = 0.0;
    for (int m = 0; m <= m_max; ++m)
      for (int n = 0; n < n_max; ++n)
        if (!(raise_coefficient({n + 1, m}) > raise_coefficient({n, m}))) violations += 1.0;
    ParamMap p{{"n_max", (long long)n_max}, {"m_max", (long long)m_max}};
    return std::vector{checks.record("ladder", "coefficient-monotonic", std::move(p), violations,
                                     "ladder.coefficient-monotonic")};
  });
  return tasks;
}

// ---------------------------------------------------------------- velocity

std::vector<Task> velocity_tasks(const Checks& checks) {
  std::vector<Task> tasks;
  const QuantumNumbers probes[] = {{0, 0}, {1, 2}};
  for (double B : checks.options().fields) {
    for (const auto qn : probes) {
      tasks.push_back([&checks, B, qn] {
        const FieldConfig field(B);
        const LandauState state(qn, field);
        const double L = checks.options().grid_half_extent.value_or(default_half_extent(qn, field));
        const int coarse_n = checks.options().grid_points;
        const int fine_n = 2 * coarse_n - 1;
        const CartesianGrid coarse(L, coarse_n), fine(L, fine_n);
        const GridField fc = sample_state(state, coarse);
        const GridField ff = sample_state(state, fine);
        const double E = energy(qn, field);

        const double comm_c = commutator_residual(field, fc);
        const double comm_f = commutator_residual(field, ff);
        const double eig_c = eigen_residual(field, fc, E);
        const double eig_f = eigen_residual(field, ff, E);
        // Residuals divided by (sigma h)^2: the dimensionless error constant.
        const double sh = field.sigma() * fine.spacing();

        ParamMap p{{"B", B}, {"n", (long long)qn.n}, {"m", (long long)qn.m}, {"L", L},
                   {"N_coarse", (long long)coarse_n}, {"N_fine", (long long)fine_n}};
        std::vector<VerificationRecord> out;
        out.push_back(checks.record("velocity", "commutator-order", p, std::abs(observed_order(comm_c, comm_f) - 2.0),
                                    "velocity.commutator-order"));
        out.push_back(checks.record("velocity", "eigen-order", p, std::abs(observed_order(eig_c, eig_f) - 2.0),
                                    "velocity.eigen-order"));
        out.push_back(checks.record("velocity", "commutator-h2", p, comm_f / (sh * sh), "velocity.commutator-h2"));
        out.push_back(checks.record("velocity", "eigen-h2", p, eig_f / (sh * sh), "velocity.eigen-h2"));

        const double qp = qp_commutator_residual(field, ff);
        out.push_back(checks.record("velocity", "qp-commutator", p, std::abs(qp * B - comm_f) / comm_f,
                                    "velocity.qp-commutator"));

        const GridField H = hamiltonian_apply(field, ff);
        const GridField Hqp = hamiltonian_apply_qp(field, ff);
        out.push_back(checks.record("velocity", "qp-hamiltonian", p, grid_norm(combine(1.0, Hqp, -1.0, H)) / grid_norm(H),
                                    "velocity.qp-hamiltonian"));

        out.push_back(checks.record("velocity", "grid-norm", p, std::abs(grid_norm(ff) - 1.0), "velocity.grid-norm"));

        // H(a f + b g) = a H f + b H g with g a second state on the same grid.
        const GridField g = sample_state(LandauState({qn.n + 1, qn.m - 1}, field), fine);
        const std::complex<double> a{0.75, -0.5}, b{-1.25, 2.0};
        const GridField lhs = hamiltonian_apply(field, combine(a, ff, b, g));
        const GridField rhs = combine(a, H, b, hamiltonian_apply(field, g));
        out.push_back(checks.record("velocity", "linearity", p, grid_norm(combine(1.0, lhs, -1.0, rhs)) / grid_norm(rhs),
                                    "velocity.linearity"));
        return out;
      });
    }
  }
  return tasks;
}

std::vector<VerificationRecord> run_tasks(const std::vector<Task>& tasks, const VerifyOptions& options) {
  std::vector<std::vector<VerificationRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      results[i] = tasks[i]();
      if (options.timing) {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        for (auto& r : results[i]) r.runtime_ms = ms;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<VerificationRecord> records;
  for (auto& r : results) records.insert(records.end(), r.begin(), r.end());
  sort_canonical(records);
  return records;
}

}  // namespace

std::vector<VerificationRecord> run_suite(Suite suite, const VerifyOptions& options) {
  validate(options);
  const Checks checks(options);
  std::vector<Task> tasks;
  auto add = [&](std::vector<Task> more) {
    for (auto& t : more) tasks.push_back(std::move(t));
  };
  if (suite == Suite::laguerre || suite == Suite::all) add(laguerre_tasks(checks));
  if (suite == Suite::quadrature || suite == Suite::all) add(quadrature_tasks(checks));
  if (suite == Suite::states || suite == Suite::all) add(states_tasks(checks));
  if (suite == Suite::ladder || suite == Suite::all) add(ladder_tasks(checks));
  if (suite == Suite::velocity || suite == Suite::all) add(velocity_tasks(checks));
  return run_tasks(tasks, options);
}

}  // namespace landau
