#include "ncbs/hs_distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ncbs/format.hpp"
#include "ncbs/phase_space.hpp"
#include "ncbs/special_fns.hpp"

namespace ncbs {

namespace {

double distance_from_fidelity(double f)
{
  return std::sqrt(2.0) * std::sqrt(std::max(0.0, 1.0 - f));
}

struct Seed {
  double f;
  int i, j;
};

}  // namespace

MeasureResult OptimizerReport::as_measure(Method method) const
{
  MeasureResult res;
  res.value = best_value;
  res.method = method;
  res.converged = converged;
  res.meta = "beta_re=" + format_number(best_beta.real()) + ";beta_im=" + format_number(best_beta.imag()) +
             ";fidelity=" + format_number(best_fidelity) + ";starts=" + std::to_string(starts) +
             ";converged_starts=" + std::to_string(converged_starts);
  return res;
}

double search_extent(double mean_photons)
{
  return 2.0 * std::sqrt(std::max(0.0, mean_photons)) + 3.0;
}

OptimizerReport maximize_fidelity(const FidelityFunction& fidelity, double extent, const OptimizerOptions& opts)
{
  if (!(opts.grid_step > 0.0) || !(extent > 0.0)) throw std::invalid_argument("maximize_fidelity: bad grid");
  const int n = static_cast<int>(std::ceil(extent / opts.grid_step));
  auto beta_at = [&](int i, int j) { return alpha_from_quadratures(i * opts.grid_step, j * opts.grid_step); };

  std::vector<Seed> nodes;
  nodes.reserve(static_cast<std::size_t>((2 * n + 1) * (2 * n + 1)));
  Seed best_x1{-1.0, 0, 0}, best_x2{-1.0, 0, 0};
  for (int j = -n; j <= n; ++j) {
    for (int i = -n; i <= n; ++i) {
      const Seed s{fidelity(beta_at(i, j)), i, j};
      nodes.push_back(s);
      if (j == 0 && s.f > best_x1.f) best_x1 = s;
      if (i == 0 && s.f > best_x2.f) best_x2 = s;
    }
  }
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(std::max(opts.seeds, 1)), nodes.size());
  std::partial_sort(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(k), nodes.end(),
                    [](const Seed& a, const Seed& b) {
                      if (a.f != b.f) return a.f > b.f;
                      return a.j != b.j ? a.j < b.j : a.i < b.i;
                    });
  std::vector<Seed> starts(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(k));
  if (opts.axis_seeds) {
    for (const Seed& s : {best_x1, best_x2}) {
      const bool dup = std::any_of(starts.begin(), starts.end(), [&](const Seed& o) { return o.i == s.i && o.j == s.j; });
      if (!dup) starts.push_back(s);
    }
  }

  OptimizerReport rep;
  rep.best_fidelity = -std::numeric_limits<double>::infinity();
  auto objective = [&](const std::array<double, 2>& x) { return -fidelity(alpha_from_quadratures(x[0], x[1])); };
  for (const Seed& s : starts) {
    const auto res = nelder_mead<2>(objective, {s.i * opts.grid_step, s.j * opts.grid_step}, opts.simplex);
    ++rep.starts;
    rep.iterations.push_back(res.iterations);
    if (res.converged) ++rep.converged_starts;
    if (-res.f > rep.best_fidelity) {
      rep.best_fidelity = -res.f;
      rep.best_beta = alpha_from_quadratures(res.x[0], res.x[1]);
    }
  }
  rep.converged = rep.converged_starts > 0;
  rep.best_value = distance_from_fidelity(rep.best_fidelity);
  return rep;
}

OptimizerReport hs_distance_numeric(const FockState& state, const OptimizerOptions& opts)
{
  return maximize_fidelity([&state](cplx b) { return q_function(state, b); },
                           search_extent(state.mean_photon_number()), opts);
}

MeasureResult hs_distance_pasvs_closed(int m, double r)
{
  if (m < 1) throw std::domain_error("hs_distance_pasvs_closed: needs m >= 1");
  const double tau = std::tanh(r);
  const double logf = m * std::log(static_cast<double>(m)) - m - m * std::log1p(-tau) - std::log(std::cosh(r)) -
                      std::log(pasvs_norm_series(m, r));
  MeasureResult res;
  res.value = distance_from_fidelity(std::exp(logf));
  res.method = Method::CorrectedClosedForm;
  res.meta = "fidelity=" + format_number(std::exp(logf));
  return res;
}

MeasureResult hs_distance_pasvs_printed(int m, double r)
{
  if (m < 1) throw std::domain_error("hs_distance_pasvs_printed: needs m >= 1");
  const double tau = std::tanh(r);
  const double f = std::exp(m * std::log(static_cast<double>(m)) - m - m * std::log1p(-tau)) / pasvs_norm_closed(m, r);
  MeasureResult res;
  res.method = Method::PrintedClosedForm;
  res.meta = "fidelity=" + format_number(f);
  if (f > 1.0) {
    res.value = std::numeric_limits<double>::quiet_NaN();
    res.converged = false;
  } else {
    res.value = distance_from_fidelity(f);
  }
  return res;
}

double sns_overlap_reduced(int m, double r, cplx beta)
{
  const double mu = std::cosh(r);
  const double tau = std::tanh(r);
  const double expo = -std::norm(beta) + tau * std::real(beta * beta) - std::log(mu) - log_factorial(m);
  return std::exp(expo) * std::norm(kdf_hermite(m, std::conj(beta) / mu, -tau / 2.0));
}

double sns_overlap_printed(int m, double r, cplx beta)
{
  const double mu = std::cosh(r);
  const double nu = std::sinh(r);
  const double tau = std::tanh(r);
  return std::pow(tau, m) * std::exp(-std::norm(beta) + tau * std::real(beta * beta)) *
         laguerre(m, std::norm(beta) / (2.0 * mu * nu)) / (mu * std::pow(2.0, m));
}

OptimizerReport hs_distance_sns(int m, double r, const OptimizerOptions& opts)
{
  if (m < 0 || !(r >= 0.0)) throw std::invalid_argument("hs_distance_sns: need m >= 0 and r >= 0");
  constexpr double kMinSqueeze = 1e-3;
  if (r <= kMinSqueeze) return hs_distance_numeric(sns(m, r), opts);
  const double mu = std::cosh(r);
  const double nu = std::sinh(r);
  const double mean = mu * mu * m + nu * nu * (m + 1);
  return maximize_fidelity([m, r](cplx b) { return sns_overlap_reduced(m, r, b); }, search_extent(mean), opts);
}

}  // namespace ncbs
