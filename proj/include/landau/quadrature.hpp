#pragma once

// Generalized Gauss-Laguerre quadrature for integrals of f(x) x^alpha e^{-x}
// over (0, inf).

#include <cmath>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace landau {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

class QuadratureRule {
 public:
  /// Golub-Welsch construction. Nodes are the eigenvalues of the Jacobi
  /// matrix (diag 2k+alpha+1, off-diag sqrt(k(k+alpha))), polished by Newton
  /// steps on L_K^alpha. Weights are Gamma(alpha+1) times the squared first
  /// component of each normalized eigenvector, evaluated through the
  /// orthonormal recurrence in log scale so small weights keep full relative
  /// precision. Requires 1 <= order <= 512, finite alpha >= 0.
  ///
  /// Beyond roughly order 180 the trailing weights underflow to 0 in double.
  QuadratureRule(double alpha, int order);

  double alpha() const { return alpha_; }
  int order() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

 private:
  double alpha_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

inline QuadratureRule build_rule(double alpha, int order) { return QuadratureRule(alpha, order); }

/// Order that makes every Landau-state inner product with n <= n_max,
/// |m| <= m_abs_max exact: 2 (n_max + m_abs_max) + 16.
inline int default_order(int n_max, int m_abs_max) { return 2 * (n_max + m_abs_max) + 16; }

/// sum_k w_k f(x_k), in node order. Throws std::domain_error if f is not
/// finite at a node.
template <class F>
auto integrate(const QuadratureRule& rule, F&& f) {
  using Result = std::decay_t<std::invoke_result_t<F&, double>>;
  Result sum{};
  const auto x = rule.nodes();
  const auto w = rule.weights();
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Result v = f(x[k]);
    bool finite;
    if constexpr (std::is_arithmetic_v<Result>) {
      finite = std::isfinite(v);
    } else {
      finite = std::isfinite(v.real()) && std::isfinite(v.imag());
    }
    if (!finite) throw std::domain_error("integrate: integrand is not finite at a quadrature node");
    sum += w[k] * v;
  }
  return sum;
}

}  // namespace landau
