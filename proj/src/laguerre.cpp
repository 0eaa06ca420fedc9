#include "landau/laguerre.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace landau {

namespace {

void check_index(LaguerreIndex idx) {
  if (idx.n < 0) throw std::invalid_argument("laguerre: degree n must be >= 0");
  if (!(idx.alpha >= 0.0) || !std::isfinite(idx.alpha))
    throw std::invalid_argument("laguerre: order alpha must be finite and >= 0");
}

void check_positive(double x, const char* what) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error(std::string(what) + ": argument must be finite and > 0");
}

using detail::laguerre_recurrence;

// d/dx L_n^a = -L_{n-1}^{a+1}
double derivative_by_order_shift(int n, double a, double x) {
  return -laguerre_recurrence(n - 1, a + 1.0, x);
}

}  // namespace

double laguerre_eval(LaguerreIndex idx, double x) {
  check_index(idx);
  if (!std::isfinite(x) || x < 0.0)
    throw std::domain_error("laguerre_eval: argument must be finite and >= 0");
  return laguerre_recurrence(idx.n, idx.alpha, x);
}

double laguerre_deriv(LaguerreIndex idx, double x) {
  check_index(idx);
  check_positive(x, "laguerre_deriv");
  return detail::laguerre_deriv_unchecked(idx.n, idx.alpha, x);
}

double laguerre_second_deriv(LaguerreIndex idx, double x) {
  check_index(idx);
  check_positive(x, "laguerre_second_deriv");
  const int n = idx.n;
  if (n <= 1) return 0.0;
  // Differentiating x L' = n L_n - (n+a) L_{n-1} once more.
  const double d_n = detail::laguerre_deriv_unchecked(n, idx.alpha, x);
  const double d_nm1 = detail::laguerre_deriv_unchecked(n - 1, idx.alpha, x);
  return ((n - 1) * d_n - (n + idx.alpha) * d_nm1) / x;
}

std::string_view identity_name(LaguerreIdentity which) {
  switch (which) {
    case LaguerreIdentity::derivative: return "derivative";
    case LaguerreIdentity::order_raise: return "order-raise";
    case LaguerreIdentity::order_raise_printed: return "order-raise-printed";
    case LaguerreIdentity::three_term: return "three-term";
    case LaguerreIdentity::derivative_raised: return "derivative-raised";
    case LaguerreIdentity::order_lower: return "order-lower";
    case LaguerreIdentity::three_term_shifted: return "three-term-shifted";
    case LaguerreIdentity::derivative_lowered: return "derivative-lowered";
  }
  return "unknown";
}

std::optional<LaguerreIdentity> parse_identity(std::string_view name) {
  for (auto id : kAllIdentities)
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

bool identity_in_domain(LaguerreIdentity which, LaguerreIndex idx, double x) {
  if (!std::isfinite(x) || x <= 0.0) return false;
  switch (which) {
    case LaguerreIdentity::derivative_raised:
      return std::abs(x - (idx.n + 1.0)) > kIdentityExclusion;
    case LaguerreIdentity::derivative_lowered:
      return std::abs(x - idx.n) > kIdentityExclusion;
    default:
      return true;
  }
}

IdentitySides identity_sides(LaguerreIdentity which, LaguerreIndex idx, double x) {
  check_index(idx);
  if (!identity_in_domain(which, idx, x))
    throw std::domain_error("identity_residual: x outside the identity's valid domain");

  const int n = idx.n;
  const double a = idx.alpha;
  auto L = [x](int k, double order) { return laguerre_recurrence(k, order, x); };

  switch (which) {
    case LaguerreIdentity::derivative:
      return {derivative_by_order_shift(n, a, x), (n * L(n, a) - (n + a) * L(n - 1, a)) / x};

    case LaguerreIdentity::order_raise:
      return {x * L(n, a + 1.0), (n + a) * L(n - 1, a) - (n - x) * L(n, a)};

    case LaguerreIdentity::order_raise_printed:
      return {x * L(n, a + 1.0), (n + a) * L(n - 1, a) - (n + a + 1.0 - x) * L(n, a)};

    case LaguerreIdentity::three_term:
      return {(n + 1.0) * L(n + 1, a), (2.0 * n + a + 1.0 - x) * L(n, a) - (n + a) * L(n - 1, a)};

    case LaguerreIdentity::derivative_raised: {
      const double rhs = (2.0 + a + 2.0 * n - x) / (1.0 + n - x) * L(n, a) -
                         (n + 1.0) / (n + 1.0 - x) * L(n + 1, a + 1.0);
      return {derivative_by_order_shift(n, a, x), rhs};
    }

    case LaguerreIdentity::order_lower:
      return {L(n, a - 1.0), L(n, a) - L(n - 1, a)};

    case LaguerreIdentity::three_term_shifted:
      return {n * L(n, a), (2.0 * n + a - 1.0 - x) * L(n - 1, a) - (n + a - 1.0) * L(n - 2, a)};

    case LaguerreIdentity::derivative_lowered: {
      // The printed form divides by (n+a-1) inside the bracket and multiplies
      // by it outside; the product is taken first so n+a = 1 stays finite.
      const double rhs = ((n + a - 1.0) * (n + a) / x * L(n - 1, a - 1.0) - n * (a + x) / x * L(n, a)) /
                         (n - x);
      return {derivative_by_order_shift(n, a, x), rhs};
    }
  }
  throw std::invalid_argument("identity_residual: unknown identity");
}

double identity_residual(LaguerreIdentity which, LaguerreIndex idx, double x) {
  const auto sides = identity_sides(which, idx, x);
  return std::abs(sides.lhs - sides.rhs);
}

}  // namespace landau
