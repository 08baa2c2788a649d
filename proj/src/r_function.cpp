#include <cmath>
#include <stdexcept>

#include "ncbs/displacement.hpp"
#include "ncbs/phase_space.hpp"
#include "ncbs/special_fns.hpp"

namespace ncbs {

RFunction::RFunction(Family family, int m, double r) : family_(family), m_(m), r_(r)
{
  if (m < 0 || !(r >= 0.0)) throw std::invalid_argument("RFunction: need m >= 0 and r >= 0");
  // Number states are SNS at r = 0, the squeezed vacuum is PASVS at m = 0.
  if (family_ == Family::Number) {
    family_ = Family::SNS;
    r_ = 0.0;
  } else if (family_ == Family::SqueezedVacuum) {
    family_ = Family::PASVS;
    m_ = 0;
  }
  mu_ = std::cosh(r_);
  tau_ = std::tanh(r_);
  log_norm_ = family_ == Family::PASVS ? std::log(pasvs_norm_series(m_, r_)) : log_factorial(m_);
}

bool RFunction::regular(double eta) const
{
  const double eps = 1.0 - eta;
  return eta > 0.0 && eta <= 1.0 && eta * eta - tau_ * tau_ * eps * eps > 0.0;
}

RSample RFunction::sample(cplx z, double eta) const
{
  if (!regular(eta)) {
    throw ConvergenceDomainError("R(z, eta) does not exist: eta^2 - tau^2 (1-eta)^2 <= 0 or eta outside (0, 1]");
  }
  const double eps = 1.0 - eta;
  const double delta = eta * eta - tau_ * tau_ * eps * eps;
  double A = tau_ * eps * eps / (2.0 * delta);
  cplx B = (eta * z - tau_ * eps * std::conj(z)) / delta;
  double D = eta * eps / delta;
  if (family_ == Family::SNS) {
    A = A / (mu_ * mu_) - tau_ / 2.0;
    B /= mu_;
    D /= mu_ * mu_;
  }

  // e^{|z|²/(1−η)} W0 folded into one exponent, finite at η = 1.
  const double expo = (-(eta + tau_ * tau_ * eps) * std::norm(z) + tau_ * std::real(z * z)) / delta;
  const double pref = std::exp(expo - std::log(mu_) - log_norm_ - 0.5 * std::log(delta));

  double sum = 0.0;
  double abs_sum = 0.0;
  double pw = 1.0;  // (−D)^s / s!
  for (int s = 0; s <= m_; ++s) {
    const double c = std::exp(log_factorial(m_) - log_factorial(m_ - s));
    const double term = pw * c * c * std::norm(kdf_hermite(m_ - s, B, A));
    sum += term;
    abs_sum += std::abs(term);
    pw *= -D / (s + 1);
  }
  return {pref * sum, pref * abs_sum};
}

double r_function_pasvs(cplx z, double eta, int m, double r)
{
  return RFunction(Family::PASVS, m, r)(z, eta);
}

double r_function_sns(cplx z, double eta, int m, double r)
{
  return RFunction(Family::SNS, m, r)(z, eta);
}

double r_function_numeric(const FockState& state, cplx z, double eta)
{
  if (!(eta >= 0.5 && eta <= 1.0)) throw std::domain_error("r_function_numeric: needs 1/2 <= eta <= 1");
  return displaced_weighted_sum(state, z, -(1.0 - eta) / eta) / eta;
}

}  // namespace ncbs
