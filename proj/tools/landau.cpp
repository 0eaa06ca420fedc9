// landau: spectrum tables, state evaluation, ladder application and the
// verification suites.
//
// Exit codes: 0 success, 1 a check or tolerance failed, 2 invalid input.

#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "landau/kernels.hpp"
#include "landau/ladder.hpp"
#include "landau/quadrature.hpp"
#include "landau/report.hpp"
#include "landau/states.hpp"
#include "landau/velocity.hpp"
#include "landau/verify.hpp"

namespace {

using namespace landau;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text) { std::fwrite(text.data(), 1, text.size(), stdout); }

OutputFormat format_of(const std::string& name) {
  auto f = parse_format(name);
  if (!f) throw UsageError("unknown format '" + name + "'");
  return *f;
}

// One table row, rendered as CSV or as a JSON object keyed by column.
class Table {
 public:
  Table(std::vector<std::string> columns, OutputFormat format) : columns_(std::move(columns)), format_(format) {
    if (format_ == OutputFormat::csv) {
      std::string header;
      for (const auto& c : columns_) header += (header.empty() ? "" : ",") + c;
      out_ += header + '\n';
    }
  }

  void row(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (format_ == OutputFormat::csv) {
        line += (i ? "," : "") + cells[i];
      } else {
        line += (i ? "," : "{") + json_quote(columns_[i]) + ":" + cells[i];
      }
    }
    if (format_ == OutputFormat::json) line += "}";
    out_ += line + '\n';
  }

  const std::string& text() const { return out_; }

 private:
  std::vector<std::string> columns_;
  OutputFormat format_;
  std::string out_;
};

std::string num(double v) {
  // JSON has no literal for non-finite numbers.
  return std::isfinite(v) ? format_double(v) : "null";
}
std::string num(long long v) { return std::to_string(v); }

FieldConfig single_field(const std::vector<double>& fields) {
  if (fields.size() != 1) throw UsageError("exactly one --field/-B value is required");
  return FieldConfig(fields.front());
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::vector<double> fields;
  std::optional<int> n;
  int n_max = 0;
  std::optional<int> m;
  int m_min = 0;
  int m_max = 0;
  std::string format = "csv";
};

int cmd_spectrum(const SpectrumArgs& a) {
  if (a.fields.empty()) throw UsageError("--field/-B is required");
  const int n_lo = a.n.value_or(0);
  const int n_hi = a.n.value_or(a.n_max);
  const int m_lo = a.m.value_or(a.m_min);
  const int m_hi = a.m.value_or(a.m_max);
  if (n_lo < 0 || n_hi > 50) throw UsageError("n must be in [0, 50]");

  Table table({"B", "n", "m", "energy"}, format_of(a.format));
  for (double B : a.fields) {
    const FieldConfig field(B);
    for (int n = n_lo; n <= n_hi; ++n)
      for (int m = m_lo; m <= m_hi; ++m)
        table.row({num(B), num((long long)n), num((long long)m), num(energy({n, m}, field))});
  }
  emit(table.text());
  return 0;
}

// -------------------------------------------------------------------- eval

struct EvalArgs {
  std::vector<double> fields;
  int n = 0;
  int m = 0;
  std::vector<double> zeta;
  std::vector<double> rho;
  std::vector<double> phi;
  std::optional<double> grid_L;
  std::optional<int> grid_N;
  std::string format = "csv";
};

int cmd_eval(const EvalArgs& a) {
  if (a.n < 0) throw UsageError("--n must be >= 0");
  const FieldConfig field = single_field(a.fields);
  const LandauState state({a.n, a.m}, field);
  const OutputFormat format = format_of(a.format);
  const int modes = int(!a.zeta.empty()) + int(!a.rho.empty()) + int(a.grid_L.has_value() || a.grid_N.has_value());
  if (modes != 1) throw UsageError("choose exactly one of --zeta, --rho/--phi, or --grid-L/--grid-N");

  if (!a.zeta.empty()) {
    Table table({"zeta", "R"}, format);
    for (double z : a.zeta) {
      if (!(z >= 0.0)) throw UsageError("zeta values must be >= 0");
      table.row({num(z), num(state.radial(z))});
    }
    emit(table.text());
    return 0;
  }

  if (!a.rho.empty()) {
    std::vector<double> phi = a.phi;
    if (phi.empty()) phi.assign(a.rho.size(), 0.0);
    if (phi.size() == 1) phi.assign(a.rho.size(), phi.front());
    if (phi.size() != a.rho.size()) throw UsageError("--phi needs one value or one per --rho value");
    Table table({"rho", "phi", "re", "im"}, format);
    for (std::size_t i = 0; i < a.rho.size(); ++i) {
      if (!(a.rho[i] >= 0.0)) throw UsageError("rho values must be >= 0");
      const auto psi = state.wavefunction(a.rho[i], phi[i]);
      table.row({num(a.rho[i]), num(phi[i]), num(psi.real()), num(psi.imag())});
    }
    emit(table.text());
    return 0;
  }

  const CartesianGrid grid(a.grid_L.value_or(default_half_extent(state.qn(), field)), a.grid_N.value_or(33));
  const GridField f = sample_state(state, grid);
  Table table({"x", "y", "re", "im"}, format);
  for (int iy = 0; iy < grid.points(); ++iy)
    for (int ix = 0; ix < grid.points(); ++ix) {
      const auto v = f.at(ix, iy);
      table.row({num(grid.coord(ix)), num(grid.coord(iy)), num(v.real()), num(v.imag())});
    }
  emit(table.text());
  return 0;
}

// ------------------------------------------------------------------ ladder

struct LadderArgs {
  std::vector<double> fields;
  int n = 0;
  int m = 0;
  std::string direction = "raise";
  std::string mode = "analytic";
  std::vector<double> zeta;
  double tol = 1e-8;
  std::string format = "csv";
};

int cmd_ladder(const LadderArgs& a) {
  if (a.n < 0) throw UsageError("--n must be >= 0");
  const auto dir = parse_direction(a.direction);
  if (!dir) throw UsageError("--direction must be raise or lower");
  const auto mode = parse_mode(a.mode);
  if (!mode) throw UsageError("--mode must be analytic or fd");
  const QuantumNumbers qn{a.n, a.m};
  if (!in_validated_domain(qn, *dir))
    throw UsageError("(n, m) is outside the validated domain: raise needs m >= 0, lower needs m >= 1, or n = 0 for any m");
  const FieldConfig field = single_field(a.fields);
  const LandauState state(qn, field);
  const QuantumNumbers target_qn = ladder_target(qn, *dir);

  std::vector<double> zetas = a.zeta;
  if (zetas.empty()) {
    const int order = default_order(qn.n + 1, qn.abs_m() + 1);
    const QuadratureRule rule(target_qn.n >= 0 ? target_qn.abs_m() : qn.abs_m(), order);
    zetas.assign(rule.nodes().begin(), rule.nodes().end());
  }
  for (double z : zetas)
    if (!(z > 0.0)) throw UsageError("zeta values must be > 0");

  const auto app = apply_ladder(state, *dir, zetas, *mode);
  std::vector<double> target(zetas.size(), 0.0);
  double scale = 0.0;
  if (target_qn.n >= 0) {
    const LandauState t(target_qn, field);
    for (std::size_t k = 0; k < zetas.size(); ++k) {
      target[k] = t.radial(zetas[k]);
      scale = std::max(scale, std::abs(app.coefficient * target[k]));
    }
  }
  if (app.coefficient == 0.0 || scale == 0.0) scale = state.norm_const();

  Table table({"zeta", "value", "coefficient", "target_value", "deviation"}, format_of(a.format));
  bool ok = true;
  for (std::size_t k = 0; k < zetas.size(); ++k) {
    const double dev = std::abs(app.samples[k].value - app.coefficient * target[k]) / scale;
    ok = ok && dev <= a.tol;
    table.row({num(zetas[k]), num(app.samples[k].value), num(app.coefficient), num(target[k]), num(dev)});
  }
  emit(table.text());
  return ok ? 0 : kExitFail;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite = "all";
  std::vector<double> fields;
  std::optional<int> n_max;
  std::optional<int> m_max;
  std::optional<double> grid_L;
  std::optional<int> grid_N;
  std::vector<std::string> tol;
  int threads = 1;
  bool timing = false;
  std::string format = "json";
};

int cmd_verify(const VerifyArgs& a) {
  const auto suite = parse_suite(a.suite);
  if (!suite) throw UsageError("unknown suite '" + a.suite + "'");
  VerifyOptions options;
  if (!a.fields.empty()) options.fields = a.fields;
  options.n_max = a.n_max;
  options.m_max = a.m_max;
  options.grid_half_extent = a.grid_L;
  if (a.grid_N) options.grid_points = *a.grid_N;
  options.threads = a.threads;
  options.timing = a.timing;
  for (const auto& kv : a.tol) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects key=value, got '" + kv + "'");
    try {
      options.tolerance_overrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad tolerance value in '" + kv + "'");
    }
  }
  try {
    validate(options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const OutputFormat format = format_of(a.format);
  const auto records = run_suite(*suite, options);
  emit(render(records, format));
  return all_passed(records) ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau levels in a uniform magnetic field: spectrum, states, ladder operators, verification"};
  app.require_subcommand(1);

  std::string simd = "auto";
  app.add_option("--simd", simd, "Kernel variant: auto, scalar or avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "Energy table E(n, m)");
  sp->add_option("-B,--field", spectrum.fields, "Field strength B > 0 (repeatable)")->required();
  sp->add_option("--n", spectrum.n, "Single radial quantum number");
  sp->add_option("--n-max", spectrum.n_max, "Largest n (from 0)");
  sp->add_option("--m", spectrum.m, "Single azimuthal quantum number");
  sp->add_option("--m-min", spectrum.m_min, "Smallest m");
  sp->add_option("--m-max", spectrum.m_max, "Largest m");
  sp->add_option("--format", spectrum.format, "csv or json");

  EvalArgs eval;
  auto* ev = app.add_subcommand("eval", "Evaluate psi_nm or its radial factor");
  ev->add_option("-B,--field", eval.fields, "Field strength B > 0")->required();
  ev->add_option("--n", eval.n, "Radial quantum number")->required();
  ev->add_option("--m", eval.m, "Azimuthal quantum number")->required();
  ev->add_option("--zeta", eval.zeta, "Comma-separated zeta values; prints R(zeta)")->delimiter(',');
  ev->add_option("--rho", eval.rho, "Comma-separated rho values; prints psi(rho, phi)")->delimiter(',');
  ev->add_option("--phi", eval.phi, "Comma-separated phi values (one, or one per rho)")->delimiter(',');
  ev->add_option("--grid-L", eval.grid_L, "Grid half extent");
  ev->add_option("--grid-N", eval.grid_N, "Grid points per axis (odd, >= 33)");
  ev->add_option("--format", eval.format, "csv or json");

  LadderArgs ladder;
  auto* ld = app.add_subcommand("ladder", "Apply L+ or L- to psi_nm and compare with the target state");
  ld->add_option("-B,--field", ladder.fields, "Field strength B > 0")->required();
  ld->add_option("--n", ladder.n, "Radial quantum number")->required();
  ld->add_option("--m", ladder.m, "Azimuthal quantum number")->required();
  ld->add_option("--direction", ladder.direction, "raise or lower");
  ld->add_option("--mode", ladder.mode, "analytic or fd");
  ld->add_option("--zeta", ladder.zeta, "Comma-separated zeta > 0 (default: quadrature nodes)")->delimiter(',');
  ld->add_option("--tol", ladder.tol, "Pointwise deviation tolerance");
  ld->add_option("--format", ladder.format, "csv or json");

  VerifyArgs verify;
  auto* vf = app.add_subcommand("verify", "Run verification suites and emit one record per check");
  vf->add_option("--suite", verify.suite, "laguerre, quadrature, states, ladder, velocity or all");
  vf->add_option("-B,--field", verify.fields, "Field strengths (repeatable; default 0.5 1 2)");
  vf->add_option("--n-max", verify.n_max, "Largest radial quantum number");
  vf->add_option("--m-max", verify.m_max, "Largest |m| (laguerre: largest alpha)");
  vf->add_option("--grid-L", verify.grid_L, "Velocity grid half extent (default per state)");
  vf->add_option("--grid-N", verify.grid_N, "Coarse velocity grid points; the fine grid uses 2N-1");
  vf->add_option("--tol", verify.tol, "Tolerance override key=value, e.g. ladder.pointwise=1e-9 (repeatable)");
  vf->add_option("--threads", verify.threads, "Worker threads");
  vf->add_flag("--timing", verify.timing, "Record runtime_ms (makes output run-dependent)");
  vf->add_option("--format", verify.format, "json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (auto isa = kernels::parse_isa(simd)) {
      kernels::set_active_isa(*isa);
    }
    if (*sp) return cmd_spectrum(spectrum);
    if (*ev) return cmd_eval(eval);
    if (*ld) return cmd_ladder(ladder);
    if (*vf) return cmd_verify(verify);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitUsage;
}
