#pragma once

#include <complex>

namespace ncbs {

/// Laguerre polynomial L_n(x), ascending three-term recurrence.
double laguerre(int n, double x);

/// Legendre polynomial P_n(x) via Bonnet's recurrence. Valid for |x| > 1 too,
/// which is where the squeezed-state normalizations evaluate it (x = cosh r).
double legendre(int n, double x);

/// log(n!). Throws std::domain_error for n < 0.
double log_factorial(int n);

/// Binomial coefficient as a double.
///
/// Exact for n <= 60 (integer arithmetic); for larger n it is computed from
/// log-gamma differences so that n up to a few thousand does not overflow.
/// Throws std::domain_error unless 0 <= k <= n.
double binomial(int n, int k);

/// log of binomial(n, k).
double log_binomial(int n, int k);

/// Two-variable (Kampe de Feriet) Hermite polynomial
///
///   H_n(b, a) = d^n/dt^n exp(a t^2 + b t) |_{t=0}
///             = n! sum_j a^j b^(n-2j) / (j! (n-2j)!),
///
/// computed with H_{n+1} = b H_n + 2 n a H_{n-1}. Every parametric
/// derivative of a Gaussian generating function in this library reduces to
/// products of these.
std::complex<double> kdf_hermite(int n, std::complex<double> b, double a);

}  // namespace ncbs
