#include "landau/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace landau {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be > 0");
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);  // reentrant; std::lgamma writes the global signgam
#else
  return std::lgamma(x);
#endif
}

namespace {

constexpr int kMaxOrder = 512;
constexpr int kIterationsPerEigenvalue = 60;

// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
// off-diagonal `e` (e[i] couples i and i+1; e.back() is scratch). Implicit
// QL with Wilkinson-style shifts; `d` is overwritten with the eigenvalues.
void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > kIterationsPerEigenvalue)
        throw std::runtime_error("QuadratureRule: tridiagonal QL iteration did not converge");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

struct OrthonormalEval {
  double p_order = 0.0;      // p_K(x), scaled by exp(-log_scale)
  double dp_order = 0.0;     // p_K'(x), same scaling
  double log_christoffel = 0.0;  // ln sum_{j<K} p_j(x)^2, unscaled
};

// Orthonormal Laguerre recurrence
//   b_{j+1} p_{j+1} = (x - a_j) p_j - b_j p_{j-1},  a_j = 2j+alpha+1,
//   b_j = sqrt(j (j+alpha)),  p_0 = Gamma(alpha+1)^{-1/2}
// carried with a running log scale so large x neither overflows nor
// underflows.
OrthonormalEval orthonormal_eval(int order, double alpha, double x) {
  double prev = 0.0, cur = 1.0, dprev = 0.0, dcur = 0.0;
  double log_scale = -0.5 * log_gamma(alpha + 1.0);
  double sum = 1.0;
  double log_sum = 2.0 * log_scale;
  for (int j = 0; j < order; ++j) {
    const double a = 2.0 * j + alpha + 1.0;
    const double b = std::sqrt(j * (j + alpha));
    const double b_next = std::sqrt((j + 1.0) * (j + 1.0 + alpha));
    const double next = ((x - a) * cur - b * prev) / b_next;
    const double dnext = ((x - a) * dcur + cur - b * dprev) / b_next;
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
    if (j + 1 < order) sum += cur * cur * std::exp(2.0 * log_scale - log_sum);

    const double big = std::max(std::abs(cur), std::abs(prev));
    if (big > 1e100 || (big < 1e-100 && big > 0.0)) {
      prev /= big;
      cur /= big;
      dprev /= big;
      dcur /= big;
      log_scale += std::log(big);
    }
    if (sum > 1e100) {
      log_sum += std::log(sum);
      sum = 1.0;
    }
  }
  return {cur, dcur, std::log(sum) + log_sum};
}

}  // namespace

QuadratureRule::QuadratureRule(double alpha, int order) : alpha_(alpha) {
  if (order < 1 || order > kMaxOrder)
    throw std::invalid_argument("QuadratureRule: order must be in [1, 512]");
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw std::invalid_argument("QuadratureRule: alpha must be finite and >= 0");

  std::vector<double> diag(order), off(order, 0.0);
  for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < order; ++k) off[k - 1] = std::sqrt(k * (k + alpha));
  tridiagonal_eigenvalues(diag, off);
  std::sort(diag.begin(), diag.end());

  nodes_.resize(order);
  weights_.resize(order);
  for (int k = 0; k < order; ++k) {
    double x = diag[k];
    for (int it = 0; it < 3; ++it) {
      const auto ev = orthonormal_eval(order, alpha, x);
      if (ev.dp_order == 0.0) break;
      const double step = ev.p_order / ev.dp_order;
      if (!(std::abs(step) <= 1e-6 * (1.0 + x))) break;  // already converged or diverging
      x -= step;
      if (std::abs(step) <= 1e-17 * x) break;
    }
    nodes_[k] = x;
    weights_[k] = std::exp(-orthonormal_eval(order, alpha, x).log_christoffel);
  }
}

}  // namespace landau
