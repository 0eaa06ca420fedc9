#pragma once

// 50-digit reference values. Nothing here calls into the library, so test
// failures point at the library and not at a shared helper.

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdlib>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

// Coefficients of L_n^a(x) = sum_k c_k x^k, c_k = (-1)^k C(n+a, n-k) / k!.
// Built factor by factor so negative integer orders (a = -1) work too.
template <class Fn>
inline void for_each_coefficient(int n, const big& alpha, Fn&& fn) {
  big kfact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) kfact *= k;
    big binom = 1;
    for (int j = 1; j <= n - k; ++j) binom = binom * (alpha + k + j) / j;
    const big c = binom / kfact;
    fn(k, k % 2 ? big(-c) : c);
  }
}

/// Closed-form L_n^a(x); 0 for n < 0.
inline big laguerre(int n, const big& alpha, const big& x) {
  big sum = 0;
  if (n < 0) return sum;
  for_each_coefficient(n, alpha, [&](int k, const big& c) { sum += c * pow(x, k); });
  return sum;
}

/// Term-by-term derivative of the closed form, order d in {1, 2}.
inline big laguerre_derivative(int n, const big& alpha, const big& x, int d) {
  big sum = 0;
  if (n < 0) return sum;
  for_each_coefficient(n, alpha, [&](int k, const big& c) {
    if (k < d) return;
    big falling = k;
    if (d == 2) falling *= (k - 1);
    sum += c * falling * pow(x, k - d);
  });
  return sum;
}

inline big factorial_ratio(int n, int am) {
  // n! / (n+am)!
  big r = 1;
  for (int j = n + 1; j <= n + am; ++j) r /= j;
  return r;
}

/// R_nm(zeta) for field B.
inline big radial(int n, int m, const big& B, const big& zeta) {
  const int am = std::abs(m);
  const big sigma = B / 2;
  return sqrt(2 * sigma * factorial_ratio(n, am)) * exp(-zeta / 2) * pow(zeta, big(am) / 2) *
         laguerre(n, big(am), zeta);
}

/// dR_nm/dzeta by the product rule on the closed form.
inline big radial_derivative(int n, int m, const big& B, const big& zeta) {
  const int am = std::abs(m);
  const big sigma = B / 2;
  const big norm = sqrt(2 * sigma * factorial_ratio(n, am));
  const big env = exp(-zeta / 2) * pow(zeta, big(am) / 2);
  const big denv = env * (big(-1) / 2 + big(am) / (2 * zeta));
  return norm * (denv * laguerre(n, big(am), zeta) + env * laguerre_derivative(n, big(am), zeta, 1));
}

/// The ladder operators in their factored form, with the (n+1-z) and (n-z)
/// prefactors outside the bracket. Valid away from z = n+1 (raise) and z = n (lower).
inline big ladder_factored(int n, int m, bool raise, const big& B, const big& zeta) {
  const big am = std::abs(m);
  const big R = radial(n, m, B, zeta);
  const big dR = radial_derivative(n, m, B, zeta);
  const big root = sqrt(zeta);
  if (raise) {
    const big gap = n + 1 - zeta;
    const big bracket = big(1) / 2 - (n + am / 2 + 1) / zeta + (n + 1) * (n + am + 1) / (zeta * gap);
    return gap * root * (-dR + bracket * R);
  }
  const big gap = n - zeta;
  const big bracket = big(-1) / 2 + am / (2 * zeta) - n * (am + zeta) / (zeta * gap);
  return gap * root * (dR - bracket * R);
}

/// sqrt((n+1)(n+|m|+1)(n+|m|+2)) or sqrt(n(n+|m|)(n+|m|-1)); 0 for n = 0 lowering.
inline big ladder_coefficient(int n, int m, bool raise) {
  const big am = std::abs(m);
  if (raise) return sqrt(big(n + 1) * (n + am + 1) * (n + am + 2));
  if (n == 0) return 0;
  return sqrt(big(n) * (n + am) * (n + am - 1));
}

inline big gamma(const big& x) { return boost::math::tgamma(x); }

/// int_0^inf x^j x^alpha e^{-x} dx
inline big moment(int j, const big& alpha) { return gamma(alpha + j + 1); }

/// Newton-polished root of L_K^alpha near `guess`.
inline big laguerre_root(int K, const big& alpha, double guess) {
  big x = guess;
  for (int it = 0; it < 40; ++it) {
    const big step = laguerre(K, alpha, x) / laguerre_derivative(K, alpha, x, 1);
    x -= step;
    if (abs(step) < 1e-45 * (1 + abs(x))) break;
  }
  return x;
}

/// Gauss weight at root x of L_K^alpha:
/// Gamma(K+alpha+1) x / (K! (K+1)^2 L_{K+1}^alpha(x)^2).
inline big gauss_weight(int K, const big& alpha, const big& x) {
  big kfact = 1;
  for (int j = 2; j <= K; ++j) kfact *= j;
  const big next = laguerre(K + 1, alpha, x);
  return gamma(alpha + K + 1) * x / (kfact * big(K + 1) * big(K + 1) * next * next);
}

inline double to_double(const big& v) { return static_cast<double>(v); }

}  // namespace oracle
