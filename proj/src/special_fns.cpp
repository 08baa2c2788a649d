#include "ncbs/special_fns.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncbs {

double laguerre(int n, double x)
{
  if (n < 0) throw std::domain_error("laguerre: negative order");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double legendre(int n, double x)
{
  if (n < 0) throw std::domain_error("legendre: negative order");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int l = 1; l < n; ++l) {
    const double next = ((2.0 * l + 1.0) * x * cur - l * prev) / (l + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_factorial(int n)
{
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

namespace {

void check_binomial_args(int n, int k)
{
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  }
}

}  // namespace

double log_binomial(int n, int k)
{
  check_binomial_args(n, k);
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double binomial(int n, int k)
{
  check_binomial_args(n, k);
  if (n <= 60) {
    // C(60,30) * 60 < 2^64, so the running product never overflows and every
    // intermediate division is exact.
    const int kk = k < n - k ? k : n - k;
    std::uint64_t c = 1;
    for (int i = 0; i < kk; ++i) {
      c = c * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    }
    return static_cast<double>(c);
  }
  return std::exp(log_binomial(n, k));
}

std::complex<double> kdf_hermite(int n, std::complex<double> b, double a)
{
  if (n < 0) throw std::domain_error("kdf_hermite: negative order");
  if (n == 0) return 1.0;
  std::complex<double> prev = 1.0;
  std::complex<double> cur = b;
  for (int k = 1; k < n; ++k) {
    const std::complex<double> next = b * cur + 2.0 * k * a * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace ncbs
