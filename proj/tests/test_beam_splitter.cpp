#include <cmath>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "ncbs/beam_splitter.hpp"
#include "ncbs/special_fns.hpp"

using namespace ncbs;

TEST_SUITE("beam_splitter")
{
  TEST_CASE("split of low number states")
  {
    const auto one = split_with_vacuum(number_state(1, 3));
    CHECK(std::abs(one.m(1, 0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(one.m(0, 1)) == doctest::Approx(1.0 / std::sqrt(2.0)));

    const auto vac = split_with_vacuum(number_state(0, 3));
    CHECK(std::abs(vac.m(0, 0)) == doctest::Approx(1.0));
    CHECK(entanglement_entropy(vac).value == doctest::Approx(0.0));

    const int m = 6;
    const auto six = split_with_vacuum(number_state(m, m));
    for (int k = 0; k <= m; ++k) {
      CHECK(std::norm(six.m(m - k, k)) == doctest::Approx(binomial(m, k) / std::ldexp(1.0, m)));
    }
  }

  TEST_CASE("entropy examples")
  {
    const double ln2 = std::numbers::ln2;
    CHECK(ebs(number_state(1, 2)).value == doctest::Approx(ln2).epsilon(1e-12));
    CHECK(ebs(number_state(2, 2)).value == doctest::Approx(1.5 * ln2).epsilon(1e-12));
    const auto res = ebs(pasvs(3, 0.8));
    CHECK(std::accumulate(res.schmidt.begin(), res.schmidt.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-10));
    for (const double p : res.schmidt) CHECK(p >= 0.0);
    CHECK(std::is_sorted(res.schmidt.rbegin(), res.schmidt.rend()));
  }

  TEST_CASE("closed form for number states")
  {
    CHECK(ebs_number_closed(0) == 0.0);
    CHECK(ebs_number_closed(1) == doctest::Approx(std::numbers::ln2));
    CHECK(std::abs(ebs_number_closed(20) - ebs(number_state(20, 20)).value) < 1e-10);
    for (int m = 0; m <= 5; ++m) CHECK(std::abs(ebs(sns(m, 0.0)).value - ebs_number_closed(m)) < 1e-10);
  }

  TEST_CASE("unitarity of the splitter")
  {
    for (const auto& s : {sns(3, 0.7), pasvs(4, 1.1), squeezed_vacuum(0.9)}) {
      CHECK(split_with_vacuum(s).m.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  TEST_CASE("explicit partial traces agree with the Schmidt spectrum")
  {
    for (const auto& s : {number_state(5, 12), sns_fixed(2, 0.3, 12), FockState::from_amplitudes({0.5, 0.1, -0.4, 0.3, 0.6, cplx(0.0, 0.2)})}) {
      const auto two = split_with_vacuum(s);
      const double svd = entanglement_entropy(two).value;
      CHECK(entropy_from_density(reduced_density_a(two)) == doctest::Approx(svd).epsilon(1e-10));
      CHECK(entropy_from_density(reduced_density_b(two)) == doctest::Approx(svd).epsilon(1e-10));
    }
  }

  TEST_CASE("sign convention does not change the entropy")
  {
    for (const auto& s : {pasvs(2, 0.6), sns(3, 1.0), FockState::from_amplitudes({0.3, 0.5, 0.2, -0.7, 0.1})}) {
      CHECK(entanglement_entropy(split_with_vacuum(s, SplitSign::Unsigned)).value ==
            doctest::Approx(entanglement_entropy(split_with_vacuum(s, SplitSign::ModeTransform)).value).epsilon(1e-12));
    }
  }

  TEST_CASE("printed squeezed-vacuum formula")
  {
    CHECK(ebs_svs_closed(0.0).value == 0.0);
    CHECK(ebs_svs_closed(1e-8).value < 1e-3);
    CHECK(ebs_svs_closed(0.8).method == Method::PrintedClosedForm);
    for (const double r : {0.05, 0.3, 0.8, 1.5}) CHECK(ebs_svs_closed_slope(r) > 0.0);
  }
}
