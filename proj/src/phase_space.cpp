#include "ncbs/phase_space.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string_view>

#include "ncbs/displacement.hpp"
#include "ncbs/format.hpp"
#include "ncbs/parallel.hpp"
#include "ncbs/special_fns.hpp"

namespace ncbs {

void PhaseGrid::validate() const
{
  if (n1 < 2 || n2 < 2) throw std::invalid_argument("grid needs at least 2 nodes per axis");
  if (!(x1_max > x1_min) || !(x2_max > x2_min)) throw std::invalid_argument("grid bounds must satisfy max > min");
}

double PhaseGrid::x1(std::size_t i1) const
{
  return x1_min + (x1_max - x1_min) * static_cast<double>(i1) / static_cast<double>(n1 - 1);
}

double PhaseGrid::x2(std::size_t i2) const
{
  return x2_min + (x2_max - x2_min) * static_cast<double>(i2) / static_cast<double>(n2 - 1);
}

cplx PhaseGrid::point(std::size_t i1, std::size_t i2) const
{
  return alpha_from_quadratures(x1(i1), x2(i2));
}

namespace {

double parse_double(std::string_view s)
{
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number in grid spec: '" + std::string(s) + "'");
  }
  return v;
}

void parse_axis(std::string_view s, double& lo, double& hi, std::size_t& n)
{
  const auto c1 = s.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : s.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw std::invalid_argument("grid axis must be min:max:n");
  lo = parse_double(s.substr(0, c1));
  hi = parse_double(s.substr(c1 + 1, c2 - c1 - 1));
  const auto ns = s.substr(c2 + 1);
  const auto [ptr, ec] = std::from_chars(ns.data(), ns.data() + ns.size(), n);
  if (ec != std::errc{} || ptr != ns.data() + ns.size()) throw std::invalid_argument("bad node count in grid spec");
}

}  // namespace

PhaseGrid parse_grid(const std::string& spec)
{
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("grid spec must be x1min:x1max:n1,x2min:x2max:n2");
  PhaseGrid g;
  const std::string_view sv(spec);
  parse_axis(sv.substr(0, comma), g.x1_min, g.x1_max, g.n1);
  parse_axis(sv.substr(comma + 1), g.x2_min, g.x2_max, g.n2);
  g.validate();
  return g;
}

cplx alpha_from_quadratures(double x1, double x2)
{
  return cplx(x1, x2) / std::sqrt(2.0);
}

FieldSample sample_field(const PhaseFunction& f, const PhaseGrid& grid, unsigned threads)
{
  grid.validate();
  FieldSample out{grid, std::vector<double>(grid.n1 * grid.n2)};
  parallel_for(grid.n2, threads, [&](std::size_t i2) {
    for (std::size_t i1 = 0; i1 < grid.n1; ++i1) out.values[i2 * grid.n1 + i1] = f(grid.point(i1, i2));
  });
  return out;
}

// ---- Wigner ------------------------------------------------------------------

double wigner_sns_closed(int m, double r, cplx alpha)
{
  const cplx beta = std::cosh(r) * alpha - std::sinh(r) * std::conj(alpha);
  const double b2 = std::norm(beta);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return 2.0 * sign * std::exp(-2.0 * b2) * laguerre(m, 4.0 * b2);
}

namespace {

double pasvs_wigner(int m, double r, double norm, cplx alpha)
{
  const double mu = std::cosh(r);
  const double nu = std::sinh(r);
  const cplx beta = mu * alpha - nu * std::conj(alpha);
  const double a = 0.5 * mu * nu;
  const cplx b = 2.0 * mu * beta;
  double sum = 0.0;
  double pw = 1.0;  // (−μ²)^s / s!
  for (int s = 0; s <= m; ++s) {
    const double ratio = std::exp(log_factorial(m) - log_factorial(m - s));
    sum += pw * ratio * ratio * std::norm(kdf_hermite(m - s, b, a));
    pw *= -mu * mu / (s + 1);
  }
  return 2.0 / norm * std::exp(-2.0 * std::norm(beta)) * sum;
}

}  // namespace

double wigner_pasvs_closed(int m, double r, cplx alpha)
{
  return pasvs_wigner(m, r, pasvs_norm_series(m, r), alpha);
}

double wigner_pasvs_printed(int m, double r, cplx alpha)
{
  if (!(r > 0.0)) throw std::domain_error("wigner_pasvs_printed: needs r > 0");
  const double mu = std::cosh(r);
  const double nu = std::sinh(r);
  const double tau = std::tanh(r);
  const cplx beta = mu * alpha - nu * std::conj(alpha);
  const double b2 = std::norm(beta);
  double sum = 0.0;
  for (int k = 0; k <= m; ++k) {
    sum += std::exp(log_factorial(m) - log_factorial(k) - log_factorial(m - k)) * std::pow(tau / 2.0, -k) *
           laguerre(m - k, 2.0 * b2 / tau);
  }
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double pref = 2.0 * sign * std::exp(log_factorial(m)) * std::exp(-2.0 * b2) * std::pow(mu * nu / 2.0, m) /
                      pasvs_norm_closed(m, r);
  return pref * sum;
}

double wigner_numeric(const FockState& state, cplx alpha)
{
  return 2.0 * displaced_weighted_sum(state, alpha, -1.0);
}

PhaseFunction wigner_closed_evaluator(const StateFamily& family)
{
  switch (family.kind) {
    case Family::Number:
      return [m = family.m](cplx a) { return wigner_sns_closed(m, 0.0, a); };
    case Family::SqueezedVacuum:
      return [r = family.r](cplx a) { return wigner_sns_closed(0, r, a); };
    case Family::SNS:
      return [m = family.m, r = family.r](cplx a) { return wigner_sns_closed(m, r, a); };
    case Family::PASVS:
      return [m = family.m, r = family.r, norm = pasvs_norm_series(family.m, family.r)](cplx a) {
        return pasvs_wigner(m, r, norm, a);
      };
  }
  throw std::invalid_argument("wigner_closed: unknown family");
}

double wigner_closed(const StateFamily& family, cplx alpha)
{
  return wigner_closed_evaluator(family)(alpha);
}

MeasureResult wigner_negativity(const PhaseFunction& wigner, const PolarQuadratureOptions& opts)
{
  const PolarIntegral q = integrate_polar(wigner, opts);
  MeasureResult res;
  res.value = std::max(0.0, 0.5 * (q.abs_integral - 1.0));
  res.method = Method::NumericOracle;
  res.error_estimate = q.error;
  res.converged = q.converged;
  res.meta = "integral=" + format_number(q.integral) + ";radius=" + format_number(q.radius) +
             ";evals=" + std::to_string(q.evaluations);
  return res;
}

// ---- Q -----------------------------------------------------------------------

double q_function(const FockState& state, cplx beta)
{
  return std::norm(coherent_overlap(state, beta));
}

FieldSample q_contour_grid(const FockState& state, const PhaseGrid& grid, unsigned threads)
{
  return sample_field([&state](cplx b) { return q_function(state, b); }, grid, threads);
}

}  // namespace ncbs
