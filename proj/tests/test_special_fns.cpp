#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include "doctest.h"
#include "ncbs/special_fns.hpp"

using namespace ncbs;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

TEST_SUITE("special_fns")
{
  TEST_CASE("laguerre low orders")
  {
    CHECK(laguerre(0, 3.7) == 1.0);
    CHECK(laguerre(1, 2.0) == doctest::Approx(-1.0));
  }

  TEST_CASE("laguerre L5(1.3) against an exact rational sum")
  {
    // L_n(x) = sum_k (-1)^k C(n,k) x^k / k!, with x = 13/10 kept exact.
    const cpp_rational x(13, 10);
    cpp_rational sum = 0;
    cpp_rational xk = 1;
    cpp_int kfact = 1;
    for (int k = 0; k <= 5; ++k) {
      if (k > 0) {
        xk *= x;
        kfact *= k;
      }
      cpp_int c = 1;
      for (int j = 0; j < k; ++j) c = c * (5 - j) / (j + 1);
      const cpp_rational term = cpp_rational(c) * xk / cpp_rational(kfact);
      sum += (k % 2 == 0) ? term : cpp_rational(-term);
    }
    CHECK(laguerre(5, 1.3) == doctest::Approx(static_cast<double>(sum)).epsilon(1e-14));
  }

  TEST_CASE("laguerre three-term recurrence on random arguments")
  {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> nd(1, 49);
    std::uniform_real_distribution<double> xd(-50.0, 50.0);
    for (int i = 0; i < 200; ++i) {
      const int n = nd(rng);
      const double x = xd(rng);
      const double lhs = (n + 1) * laguerre(n + 1, x);
      const double rhs = (2 * n + 1 - x) * laguerre(n, x) - n * laguerre(n - 1, x);
      const double scale = std::max({std::abs(lhs), std::abs((2 * n + 1 - x) * laguerre(n, x)), 1.0});
      CHECK(std::abs(lhs - rhs) / scale < 1e-10);
    }
  }

  TEST_CASE("legendre values and recurrence")
  {
    CHECK(legendre(0, 1.54) == 1.0);
    CHECK(legendre(2, 1.0) == doctest::Approx(1.0));
    CHECK(legendre(2, 2.0) == doctest::Approx(5.5));
    for (int n = 0; n <= 50; ++n) CHECK(legendre(n, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (int n = 1; n < 30; ++n) {
      const double x = 1.3;
      const double lhs = (n + 1) * legendre(n + 1, x);
      const double rhs = (2 * n + 1) * x * legendre(n, x) - n * legendre(n - 1, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }

  TEST_CASE("binomial small values, symmetry, row sums")
  {
    CHECK(binomial(4, 2) == 6.0);
    CHECK(binomial(0, 0) == 1.0);
    for (int n = 0; n <= 60; ++n) {
      double row = 0.0;
      for (int k = 0; k <= n; ++k) {
        CHECK(binomial(n, k) == binomial(n, n - k));
        row += binomial(n, k);
      }
      CHECK(row == doctest::Approx(std::ldexp(1.0, n)).epsilon(1e-10));
    }
  }

  TEST_CASE("binomial(200, 100) against exact integers")
  {
    cpp_int c = 1;
    for (int j = 0; j < 100; ++j) c = c * (200 - j) / (j + 1);
    const double exact = static_cast<double>(c);
    CHECK(std::abs(binomial(200, 100) - exact) / exact < 1e-12);
    for (const int n : {120, 250, 300}) {
      cpp_int e = 1;
      const int k = n / 3;
      for (int j = 0; j < k; ++j) e = e * (n - j) / (j + 1);
      CHECK(std::abs(binomial(n, k) / static_cast<double>(e) - 1.0) < 1e-12);
    }
  }

  TEST_CASE("domain errors")
  {
    CHECK_THROWS_AS(binomial(3, 4), std::domain_error);
    CHECK_THROWS_AS(binomial(3, -1), std::domain_error);
    CHECK_THROWS_AS(log_factorial(-1), std::domain_error);
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)));
  }

  TEST_CASE("two-variable Hermite against its explicit sum")
  {
    const std::complex<double> b(0.7, -1.2);
    const double a = -0.35;
    for (int n = 0; n <= 8; ++n) {
      std::complex<double> s = 0.0;
      for (int j = 0; 2 * j <= n; ++j) {
        s += std::pow(a, j) * std::pow(b, n - 2 * j) / (std::tgamma(j + 1.0) * std::tgamma(n - 2.0 * j + 1.0));
      }
      s *= std::tgamma(n + 1.0);
      CHECK(std::abs(kdf_hermite(n, b, a) - s) < 1e-12 * std::max(1.0, std::abs(s)));
    }
  }
}
