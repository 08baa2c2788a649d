#include <cmath>

#include "doctest.h"
#include "ncbs/hs_distance.hpp"

using namespace ncbs;

namespace {

// Largest x e^{−x} over x = |β|² ≥ 0 by a 1D scan plus golden-section polish.
double single_photon_distance_scan()
{
  auto f = [](double x) { return x * std::exp(-x); };
  double best = 0.0;
  for (int i = 0; i <= 4000; ++i) best = std::max(best, f(i * 1e-3));
  double a = 0.5, b = 1.5;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 100; ++it) {
    const double c = b - g * (b - a);
    const double d = a + g * (b - a);
    if (f(c) > f(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  best = std::max(best, f(0.5 * (a + b)));
  return std::sqrt(2.0) * std::sqrt(1.0 - best);
}

}  // namespace

TEST_SUITE("hs_distance")
{
  TEST_CASE("coherent and number states")
  {
    const auto vac = hs_distance_numeric(number_state(0, 8));
    CHECK(vac.best_value < 1e-6);
    CHECK(std::abs(vac.best_beta) < 1e-4);
    CHECK(vac.converged);

    const double ref = single_photon_distance_scan();
    CHECK(ref == doctest::Approx(std::sqrt(2.0 * (1.0 - std::exp(-1.0)))).epsilon(1e-12));
    const auto one = hs_distance_numeric(number_state(1, 8));
    CHECK(std::abs(one.best_value - ref) < 1e-6);
    CHECK(std::abs(std::abs(one.best_beta) - 1.0) < 1e-4);
    CHECK(std::abs(hs_distance_pasvs_closed(1, 0.0).value - ref) < 1e-9);
  }

  TEST_CASE("PASVS closed form against the optimizer")
  {
    for (const double r : {0.0, 0.5, 1.2}) {
      for (int m = 1; m <= 5; ++m) {
        const double closed = hs_distance_pasvs_closed(m, r).value;
        CHECK(std::abs(closed - hs_distance_numeric(pasvs(m, r)).best_value) < 1e-6);
      }
    }
    const double m3 = 3.0;
    CHECK(hs_distance_pasvs_closed(3, 0.0).value ==
          doctest::Approx(std::sqrt(2.0) * std::sqrt(1.0 - std::pow(m3, 3) * std::exp(-3.0) / 6.0)));
    CHECK(hs_distance_pasvs_closed(2, 0.5).method == Method::CorrectedClosedForm);
    CHECK_THROWS_AS(hs_distance_pasvs_closed(0, 0.5), std::domain_error);
  }

  TEST_CASE("SNS distance")
  {
    for (const double r : {0.3, 0.9}) {
      // Squeezed vacuum: a 2D scan confirms the optimum sits at β = 0.
      double scan = 0.0;
      for (int i = -40; i <= 40; ++i) {
        for (int j = -40; j <= 40; ++j) scan = std::max(scan, sns_overlap_reduced(0, r, cplx(0.05 * i, 0.05 * j)));
      }
      CHECK(scan == doctest::Approx(1.0 / std::cosh(r)).epsilon(1e-12));
      const auto rep = hs_distance_sns(0, r);
      CHECK(rep.best_value == doctest::Approx(std::sqrt(2.0) * std::sqrt(1.0 - 1.0 / std::cosh(r))).epsilon(1e-8));
    }
    for (int m = 1; m <= 4; ++m) {
      const double lim = std::sqrt(2.0) * std::sqrt(1.0 - std::pow(m, m) * std::exp(-m) / std::tgamma(m + 1.0));
      // The optimum moves linearly in r, so the limit is approached at O(r).
      CHECK(std::abs(hs_distance_sns(m, 1e-4).best_value - lim) < 1e-4);
      CHECK(hs_distance_sns(m, 1e-4).best_value <= lim + 1e-12);
      CHECK(std::abs(hs_distance_sns(m, 0.7).best_value - hs_distance_numeric(sns(m, 0.7)).best_value) < 1e-6);
    }
  }

  TEST_CASE("reduced SNS overlap matches the Fock-space fidelity; printed form does not")
  {
    const FockState s = sns(2, 0.5);
    bool printed_negative = false;
    for (const cplx b : {cplx(0.0), cplx(0.8, 0.1), cplx(-1.3, 0.6), cplx(0.2, -1.9)}) {
      CHECK(std::abs(sns_overlap_reduced(2, 0.5, b) - std::norm(coherent_overlap(s, b))) < 1e-12);
    }
    for (int i = 0; i < 50; ++i) printed_negative = printed_negative || sns_overlap_printed(2, 0.5, cplx(0.1 * i, 0.0)) < 0.0;
    CHECK(printed_negative);
  }

  TEST_CASE("optimizer is deterministic and bounded")
  {
    const auto a = hs_distance_sns(3, 0.8);
    const auto b = hs_distance_sns(3, 0.8);
    CHECK(a.best_value == b.best_value);
    CHECK(a.best_beta == b.best_beta);
    CHECK(a.iterations == b.iterations);
    CHECK(a.best_value >= 0.0);
    CHECK(a.best_value <= std::sqrt(2.0));
    CHECK(a.converged_starts >= 1);
    CHECK(a.starts >= 5);
  }
}
