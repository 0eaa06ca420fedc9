#pragma once

// Associated Laguerre polynomials L_n^alpha(x) and residual checks for the
// recurrence identities the ladder construction is built on.

#include <string_view>
#include <optional>

namespace landau {

/// Degree n and order alpha of an associated Laguerre polynomial.
/// Public entry points require n >= 0 and alpha >= 0.
struct LaguerreIndex {
  int n = 0;
  double alpha = 0.0;
};

/// L_n^alpha(x) by the forward three-term recurrence seeded with
/// L_0 = 1, L_1 = 1 + alpha - x. Throws std::domain_error for x < 0 or
/// non-finite x, std::invalid_argument for a bad index.
double laguerre_eval(LaguerreIndex idx, double x);

/// d/dx L_n^alpha(x) = (n L_n^alpha - (n + alpha) L_{n-1}^alpha) / x, x > 0.
double laguerre_deriv(LaguerreIndex idx, double x);

/// Second derivative from applying the derivative identity twice, x > 0.
double laguerre_second_deriv(LaguerreIndex idx, double x);

/// Recurrence identities checked by identity_residual().
enum class LaguerreIdentity {
  derivative,          // L' = (n L_n - (n+a) L_{n-1}) / x
  order_raise,         // x L_n^{a+1} = (n+a) L_{n-1}^a - (n - x) L_n^a
  order_raise_printed, // same with (n+a+1-x) in place of (n-x); false in general
  three_term,          // (n+1) L_{n+1} - (2n+a+1-x) L_n + (n+a) L_{n-1} = 0
  derivative_raised,   // L' via L_n^a and L_{n+1}^{a+1}, singular at x = n+1
  order_lower,         // L_n^{a-1} = L_n^a - L_{n-1}^a
  three_term_shifted,  // n L_n = (2n+a-1-x) L_{n-1} - (n+a-1) L_{n-2}
  derivative_lowered,  // L' via L_{n-1}^{a-1} and L_n^a, singular at x = n
};

inline constexpr LaguerreIdentity kAllIdentities[] = {
    LaguerreIdentity::derivative,        LaguerreIdentity::order_raise,
    LaguerreIdentity::order_raise_printed, LaguerreIdentity::three_term,
    LaguerreIdentity::derivative_raised, LaguerreIdentity::order_lower,
    LaguerreIdentity::three_term_shifted, LaguerreIdentity::derivative_lowered,
};

std::string_view identity_name(LaguerreIdentity which);
std::optional<LaguerreIdentity> parse_identity(std::string_view name);

/// Half-width of the window excluded around the 0/0 points of the
/// derivative_raised (x = n+1) and derivative_lowered (x = n) identities.
inline constexpr double kIdentityExclusion = 1e-3;

/// True when (idx, x) lies outside every singular window of `which` and x > 0.
bool identity_in_domain(LaguerreIdentity which, LaguerreIndex idx, double x);

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Both sides of the identity. Derivative left-hand sides use
/// d/dx L_n^a = -L_{n-1}^{a+1}, which is independent of laguerre_deriv.
IdentitySides identity_sides(LaguerreIdentity which, LaguerreIndex idx, double x);

/// |LHS - RHS|. Throws std::domain_error inside an exclusion window or for x <= 0.
double identity_residual(LaguerreIdentity which, LaguerreIndex idx, double x);

namespace detail {

/// Unchecked recurrence. Accepts any alpha > -1 - n style order and returns
/// 0 for n < 0, which is the convention the identities rely on.
inline double laguerre_recurrence(int n, double alpha, double x) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Derivative identity without argument checks (x != 0).
inline double laguerre_deriv_unchecked(int n, double alpha, double x) {
  if (n <= 0) return 0.0;
  return (n * laguerre_recurrence(n, alpha, x) - (n + alpha) * laguerre_recurrence(n - 1, alpha, x)) / x;
}

}  // namespace detail

}  // namespace landau
