#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ncbs/phase_space.hpp"

using namespace ncbs;

namespace {

// ∫ f d²α/π by the midpoint rule on a square of half-width `half`.
double riemann(const PhaseFunction& f, double half, double h)
{
  const int n = static_cast<int>(std::round(2.0 * half / h));
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s += f(cplx(-half + (i + 0.5) * h, -half + (j + 0.5) * h));
  }
  return s * h * h / std::numbers::pi;
}

// Gaussian smoothing of the Wigner function: R(z, η) for η > 1/2.
double smoothed_wigner(const PhaseFunction& w, cplx z, double eta)
{
  const double s = eta - 0.5;
  const double half = 7.0 * std::sqrt(s);
  const double h = half / 120.0;
  return riemann([&](cplx d) { return std::exp(-std::norm(d) / s) * w(z + d); }, half, h) / s;
}

}  // namespace

TEST_SUITE("phase_space")
{
  TEST_CASE("grid parsing and sampling")
  {
    const PhaseGrid g = parse_grid("-1:1:3,0:2:5");
    CHECK(g.n1 == 3);
    CHECK(g.n2 == 5);
    CHECK(g.x2(4) == doctest::Approx(2.0));
    CHECK_THROWS_AS(parse_grid("1:1:3,0:1:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1:1,0:1:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:x:3,0:1:3"), std::invalid_argument);

    const auto f = [](cplx a) { return a.real() - 2.0 * a.imag(); };
    const auto s1 = sample_field(f, g, 1);
    const auto s4 = sample_field(f, g, 4);
    CHECK(s1.values == s4.values);
    CHECK(s1.at(2, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  }

  TEST_CASE("Wigner closed-form values")
  {
    CHECK(wigner_sns_closed(0, 0.0, 0.0) == doctest::Approx(2.0));
    CHECK(wigner_sns_closed(1, 0.0, 0.0) == doctest::Approx(-2.0));
    CHECK(wigner_numeric(number_state(0, 4), 0.0) == doctest::Approx(2.0));
    CHECK(wigner_numeric(number_state(1, 4), 0.0) == doctest::Approx(-2.0));
    const cplx a(0.4, -0.3);
    for (int m = 0; m <= 4; ++m) {
      CHECK(wigner_pasvs_closed(m, 0.0, a) == doctest::Approx(wigner_sns_closed(m, 0.0, a)).epsilon(1e-12));
    }
    CHECK(wigner_pasvs_closed(0, 0.7, a) > 0.0);
  }

  TEST_CASE("Wigner closed forms against displaced parity")
  {
    const PhaseGrid g{-3.0, 3.0, 13, -3.0, 3.0, 13};
    const CutoffPolicy tight{1e-24, 4096};
    const FockState s = sns(3, 0.6, tight);
    const FockState p = pasvs(2, 0.5, tight);
    for (std::size_t i = 0; i < g.n1; ++i) {
      for (std::size_t j = 0; j < g.n2; ++j) {
        const cplx a = g.point(i, j);
        CHECK(std::abs(wigner_sns_closed(3, 0.6, a) - wigner_numeric(s, a)) < 1e-8);
        CHECK(std::abs(wigner_pasvs_closed(2, 0.5, a) - wigner_numeric(p, a)) < 1e-8);
      }
    }
  }

  TEST_CASE("Wigner normalization and negativity")
  {
    for (const StateFamily sf : {StateFamily{Family::PASVS, 3, 0.9}, StateFamily{Family::SNS, 2, 1.1}}) {
      CHECK(std::abs(integrate_polar(wigner_closed_evaluator(sf)).integral - 1.0) < 1e-6);
    }
    const auto w1 = wigner_closed_evaluator({Family::Number, 1, 0.0});
    const auto d1 = wigner_negativity(w1);
    CHECK(d1.converged);
    CHECK(std::abs(d1.value - (2.0 * std::exp(-0.5) - 1.0)) < 1e-9);
    const double dense = 0.5 * (riemann([&](cplx a) { return std::abs(w1(a)); }, 6.0, 0.004) - 1.0);
    CHECK(std::abs(d1.value - dense) < 1e-6);

    CHECK(wigner_negativity(wigner_closed_evaluator({Family::SqueezedVacuum, 0, 0.8})).value < 1e-9);
    const double ref = wigner_negativity(wigner_closed_evaluator({Family::Number, 3, 0.0})).value;
    CHECK(std::abs(wigner_negativity(wigner_closed_evaluator({Family::SNS, 3, 1.0})).value - ref) < 1e-6);
  }

  TEST_CASE("Q function")
  {
    const FockState vac = number_state(0, 4);
    const cplx b(0.7, 0.2);
    CHECK(q_function(vac, b) == doctest::Approx(std::exp(-std::norm(b))));
    const FockState p = pasvs(3, 0.6);
    const auto q = q_contour_grid(p, PhaseGrid{-5, 5, 31, -5, 5, 31});
    for (const double v : q.values) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    CHECK(std::abs(integrate_polar([&](cplx z) { return q_function(p, z); }).integral - 1.0) < 1e-6);
  }

  TEST_CASE("R function limits")
  {
    for (const Family fam : {Family::PASVS, Family::SNS}) {
      const int m = 2;
      const double r = 0.7;
      const RFunction rf(fam, m, r);
      const auto w = wigner_closed_evaluator({fam, m, r});
      const FockState s = make_state({fam, m, r});
      for (const cplx z : {cplx(0.0), cplx(0.5, -0.4), cplx(-1.2, 0.9)}) {
        CHECK(rf(z, 0.5) == doctest::Approx(w(z)).epsilon(1e-10));
        CHECK(std::abs(rf(z, 1.0) - q_function(s, z)) < 1e-12);
        CHECK(std::abs(rf(z, 0.75) - r_function_numeric(s, z, 0.75)) < 1e-9);
      }
    }
    const RFunction g(Family::PASVS, 0, 0.8);
    const double tau = std::tanh(0.8);
    CHECK_FALSE(g.regular(0.9 * tau / (1.0 + tau)));
    CHECK(g.regular(1.1 * tau / (1.0 + tau)));
    CHECK_THROWS_AS(g(0.0, 0.3), ConvergenceDomainError);
    CHECK(g(cplx(0.3, 0.3), 0.45) > 0.0);
  }

  TEST_CASE("R(z, 0.9) against Gaussian smoothing of the Wigner function")
  {
    const int m = 2;
    const double r = 0.5;
    const double eta = 0.9;
    const auto w = wigner_closed_evaluator({Family::PASVS, m, r});
    const RFunction rf(Family::PASVS, m, r);
    for (const cplx z : {cplx(0.0), cplx(0.3, 0.0), cplx(0.0, 0.8), cplx(1.0, -0.6), cplx(-1.7, 0.2)}) {
      const double conv = smoothed_wigner(w, z, eta);
      const double closed = rf(z, eta);
      CHECK(std::abs(conv - closed) < 1e-5);
      CHECK((conv < 0.0) == (closed < 0.0));
    }
  }

  TEST_CASE("nonclassical depth")
  {
    const auto rep = nonclassical_depth(Family::PASVS, 2, 0.5);
    CHECK(rep.depth == 1.0);
    for (const auto& p : rep.probes) {
      if (p.eta < 1.0) CHECK_FALSE(p.washed_out);
    }
    // Gaussian case: the depth is 1/2 − min(V_X, V_P).
    for (const double r : {0.2, 0.9}) {
      const FockState s = squeezed_vacuum(r);
      const double vmin = std::min(quadrature_variance(s, Quadrature::X), quadrature_variance(s, Quadrature::P));
      const auto g = nonclassical_depth(Family::SqueezedVacuum, 0, r);
      CHECK(std::abs(g.depth - (0.5 - vmin)) < 2e-6);
    }
    CHECK(nonclassical_depth(Family::Number, 0, 0.0).depth < 1e-5);
  }
}
