#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>

#include "doctest.h"
#include "ncbs/fock_state.hpp"
#include "ncbs/special_fns.hpp"

using namespace ncbs;

namespace {

// exp(r/2 (a†² − a²)) on a dim-level truncation, applied to |n⟩.
Eigen::VectorXd squeeze_expm(double r, int n, int dim)
{
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  const Eigen::MatrixXd ad = a.transpose();
  const Eigen::MatrixXd gen = 0.5 * r * (ad * ad - a * a);
  const Eigen::MatrixXd s = gen.exp();
  return s.col(n);
}

double max_abs_diff_up_to_sign(const FockState& s, const Eigen::VectorXd& ref, int upto)
{
  double plus = 0.0, minus = 0.0;
  for (int k = 0; k < upto; ++k) {
    plus = std::max(plus, std::abs(s[static_cast<std::size_t>(k)].real() - ref(k)));
    minus = std::max(minus, std::abs(s[static_cast<std::size_t>(k)].real() + ref(k)));
  }
  return std::min(plus, minus);
}

}  // namespace

TEST_SUITE("fock_core")
{
  TEST_CASE("number states")
  {
    const FockState vac = number_state(0, 10);
    CHECK(vac[0] == cplx(1.0));
    CHECK(vac.cutoff() == 10);
    const FockState three = number_state(3, 10);
    CHECK(three[3] == cplx(1.0));
    CHECK(three.mean_photon_number() == doctest::Approx(3.0));
    CHECK_THROWS_AS(number_state(5, 4), std::invalid_argument);
  }

  TEST_CASE("squeezed vacuum series")
  {
    const FockState v = squeezed_vacuum(0.0);
    CHECK(v[0] == cplx(1.0));
    const FockState s = squeezed_vacuum(0.5);
    CHECK(s[1] == cplx(0.0));
    CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.tail_bound() < 1e-12);
    CHECK(s.parity() == 0);
    CHECK((s[2] / s[0]).real() == doctest::Approx(std::sqrt(2.0) * std::tanh(0.5) / 2.0).epsilon(1e-13));
    CHECK(max_abs_diff_up_to_sign(s, squeeze_expm(0.5, 0, 60), 20) < 1e-9);
  }

  TEST_CASE("squeezed number state against the matrix exponential")
  {
    const FockState s = sns(2, 0.4);
    CHECK(max_abs_diff_up_to_sign(s, squeeze_expm(0.4, 2, 100), 40) < 1e-9);
    const FockState s3 = sns(3, 0.9);
    CHECK(max_abs_diff_up_to_sign(s3, squeeze_expm(0.9, 3, 140), 40) < 1e-9);
    CHECK(s3.parity() == 1);
  }

  TEST_CASE("sns limits")
  {
    const FockState s = sns(4, 0.0);
    CHECK(std::abs(s[4]) == doctest::Approx(1.0));
    const FockState z = sns(0, 0.7);
    const FockState v = squeezed_vacuum(0.7);
    for (std::size_t k = 0; k < std::min(z.size(), v.size()); ++k) CHECK(std::abs(z[k] - v[k]) < 1e-13);
  }

  TEST_CASE("apply_creation")
  {
    const FockState one = apply_creation(number_state(0, 4), 1);
    CHECK(std::abs(one[1]) == doctest::Approx(1.0));
    const FockState five = apply_creation(number_state(2, 4), 3);
    CHECK(std::abs(five[5]) == doctest::Approx(1.0));
    CHECK(five.cutoff() == 7);

    const FockState lifted = apply_creation(squeezed_vacuum(0.3), 2);
    const FockState p = pasvs(2, 0.3);
    for (std::size_t k = 0; k < std::min(lifted.size(), p.size()); ++k) CHECK(std::abs(lifted[k] - p[k]) < 1e-12);
    CHECK_THROWS_AS(apply_creation(number_state(0, 10), 5, 12), TruncationError);
  }

  TEST_CASE("pasvs identities")
  {
    for (const double r : {0.1, 0.5, 1.0, 1.5}) {
      const FockState p0 = pasvs(0, r);
      const FockState v = squeezed_vacuum(r);
      for (std::size_t k = 0; k < std::min(p0.size(), v.size()); ++k) CHECK(std::abs(p0[k] - v[k]) < 1e-13);

      const FockState p1 = pasvs(1, r);
      const FockState s1 = sns(1, r);
      for (std::size_t k = 0; k < std::min(p1.size(), s1.size()); ++k) {
        CHECK(std::abs(std::abs(p1[k]) - std::abs(s1[k])) < 1e-12);
      }
      for (int m = 0; m <= 5; ++m) {
        CHECK(pasvs(m, r).parity() == m % 2);
        CHECK(sns(m, r).parity() == m % 2);
        CHECK(pasvs(m, r).norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(sns(m, r).norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("norm of a†^m S|0> equals m! mu^m P_m(mu)")
  {
    for (int m = 0; m <= 5; ++m) {
      for (const double r : {0.2, 0.7, 1.3}) {
        CHECK(pasvs_norm_series(m, r) == doctest::Approx(pasvs_norm_closed(m, r)).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("coherent overlaps")
  {
    const cplx beta(0.6, -0.8);
    CHECK(std::abs(coherent_overlap(number_state(0, 5), beta) - std::exp(-std::norm(beta) / 2.0)) < 1e-15);
    CHECK(std::abs(coherent_overlap(number_state(1, 5), beta) - std::conj(beta) * std::exp(-std::norm(beta) / 2.0)) <
          1e-15);

    // |⟨β|ψ⟩| = |β|^m e^{−|β|²/2 + τ Re β²/2} / sqrt(μ N_m), N_m = m! μ^m P_m(μ).
    for (int m = 1; m <= 4; ++m) {
      const double r = 0.6;
      const FockState p = pasvs(m, r);
      for (const cplx b : {cplx(0.3, 0.2), cplx(-1.1, 0.4), cplx(2.0, -1.5)}) {
        const double expected = std::pow(std::abs(b), m) *
                                std::exp(-std::norm(b) / 2.0 + std::tanh(r) * std::real(b * b) / 2.0) /
                                std::sqrt(std::cosh(r) * std::tgamma(m + 1.0) * std::pow(std::cosh(r), m) *
                                          legendre(m, std::cosh(r)));
        CHECK(std::abs(std::abs(coherent_overlap(p, b)) - expected) < 1e-9);
      }
    }
  }

  TEST_CASE("quadrature variances")
  {
    const FockState vac = number_state(0, 4);
    CHECK(quadrature_variance(vac, Quadrature::X) == doctest::Approx(0.5));
    CHECK(quadrature_variance(vac, Quadrature::P) == doctest::Approx(0.5));
    const FockState one = number_state(1, 4);
    CHECK(quadrature_variance(one, Quadrature::X) == doctest::Approx(1.5));
    CHECK(quadrature_variance(one, Quadrature::P) == doctest::Approx(1.5));
    for (const double r : {0.3, 0.8, 1.4}) {
      const FockState s = squeezed_vacuum(r);
      const double vx = quadrature_variance(s, Quadrature::X);
      const double vp = quadrature_variance(s, Quadrature::P);
      CHECK(std::abs(vx * vp - 0.25) < 1e-10);
      CHECK(std::min(vx, vp) == doctest::Approx(std::exp(-2.0 * r) / 2.0).epsilon(1e-10));
    }
  }

  TEST_CASE("cutoff policy")
  {
    CHECK(initial_cutoff(0, 0.0) == 32);
    CHECK(initial_cutoff(3, 1.0) == 3 + 8 * 8);
    const FockState s = pasvs(3, 1.5);
    CHECK(s.tail_bound() < 1e-12);
    CHECK_THROWS_AS(pasvs(3, 1.5, CutoffPolicy{1e-12, 64}), TruncationError);
    CHECK(parse_family("PASVS") == Family::PASVS);
    CHECK(parse_family("svs") == Family::SqueezedVacuum);
    CHECK_THROWS_AS(parse_family("cat"), std::invalid_argument);
  }
}
