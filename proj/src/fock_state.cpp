#include "ncbs/fock_state.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "ncbs/special_fns.hpp"

namespace ncbs {

std::string_view to_string(Family f)
{
  switch (f) {
    case Family::Number: return "number";
    case Family::SqueezedVacuum: return "svs";
    case Family::SNS: return "sns";
    case Family::PASVS: return "pasvs";
  }
  return "?";
}

Family parse_family(std::string_view s)
{
  std::string low(s);
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (low == "number" || low == "fock") return Family::Number;
  if (low == "svs" || low == "squeezed" || low == "squeezedvacuum") return Family::SqueezedVacuum;
  if (low == "sns") return Family::SNS;
  if (low == "pasvs") return Family::PASVS;
  throw std::invalid_argument("unknown state family '" + std::string(s) + "'");
}

FockState FockState::from_amplitudes(std::vector<cplx> amps)
{
  if (amps.empty()) throw std::invalid_argument("FockState: empty amplitude vector");
  double norm2 = 0.0;
  for (const auto& a : amps) norm2 += std::norm(a);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw std::invalid_argument("FockState: amplitudes have zero or non-finite norm");
  }
  // The phase reference is the first amplitude above rounding level, so a
  // cancellation residue never decides the global sign.
  std::size_t ref = 0;
  while (ref + 1 < amps.size() && std::norm(amps[ref]) <= 1e-24 * norm2) ++ref;
  const cplx phase = amps[ref] != 0.0 ? std::conj(amps[ref]) / std::abs(amps[ref]) : cplx(1.0);
  const cplx scale = phase / std::sqrt(norm2);
  for (auto& a : amps) a *= scale;
  amps[ref] = cplx(std::abs(amps[ref]), 0.0);
  return FockState(std::move(amps));
}

double FockState::tail_bound() const noexcept
{
  const std::size_t n = amps_.size();
  double t = std::norm(amps_[n - 1]);
  if (n >= 2) t += std::norm(amps_[n - 2]);
  return t;
}

double FockState::norm_squared() const noexcept
{
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

double FockState::mean_photon_number() const noexcept
{
  double s = 0.0;
  for (std::size_t n = 0; n < amps_.size(); ++n) s += static_cast<double>(n) * std::norm(amps_[n]);
  return s;
}

int FockState::parity() const noexcept
{
  bool even = false;
  bool odd = false;
  for (std::size_t n = 0; n < amps_.size(); ++n) {
    if (amps_[n] != 0.0) (n % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

FockState number_state(int m, std::size_t cutoff)
{
  if (m < 0) throw std::invalid_argument("number_state: negative photon number");
  if (static_cast<std::size_t>(m) > cutoff) {
    throw std::invalid_argument("number_state: cutoff " + std::to_string(cutoff) +
                                " below photon number " + std::to_string(m));
  }
  std::vector<cplx> amps(cutoff + 1, 0.0);
  amps[static_cast<std::size_t>(m)] = 1.0;
  return FockState::from_amplitudes(std::move(amps));
}

std::size_t initial_cutoff(int m, double r)
{
  const double growth = std::ceil(std::exp(2.0 * r));
  const double n0 = static_cast<double>(m) + 8.0 * growth;
  return std::max<std::size_t>(32, static_cast<std::size_t>(n0));
}

namespace {

void check_params(int m, double r, const char* who)
{
  if (m < 0) throw std::invalid_argument(std::string(who) + ": m must be >= 0");
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument(std::string(who) + ": r must be finite and >= 0");
  }
}

// Unnormalized a†^m S(r)|0⟩ series on levels 0..cutoff, up to the overall
// constant 1/sqrt(μ). Log-magnitudes are shifted by their maximum before
// exponentiation.
std::vector<cplx> pasvs_series(int m, double r, std::size_t cutoff)
{
  std::vector<cplx> amps(cutoff + 1, 0.0);
  if (static_cast<std::size_t>(m) > cutoff) {
    throw std::invalid_argument("pasvs: cutoff below photon-addition number");
  }
  if (r == 0.0) {
    amps[static_cast<std::size_t>(m)] = 1.0;
    return amps;
  }
  const double log_half_tau = std::log(std::tanh(r) / 2.0);
  std::vector<double> logs;
  for (std::size_t n = static_cast<std::size_t>(m), k = 0; n <= cutoff; n += 2, ++k) {
    logs.push_back(0.5 * log_factorial(static_cast<int>(n)) - log_factorial(static_cast<int>(k)) +
                   static_cast<double>(k) * log_half_tau);
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  for (std::size_t k = 0; k < logs.size(); ++k) {
    amps[static_cast<std::size_t>(m) + 2 * k] = std::exp(logs[k] - top);
  }
  return amps;
}

// (μa† − νa)^m applied to the squeezed-vacuum series. Working on cutoff + m
// keeps levels 0..cutoff+1 exact after m steps.
std::vector<cplx> sns_series(int m, double r, std::size_t cutoff)
{
  const std::size_t work = cutoff + static_cast<std::size_t>(m);
  std::vector<cplx> v = pasvs_series(0, r, work);
  const double mu = std::cosh(r);
  const double nu = std::sinh(r);
  std::vector<cplx> next(v.size());
  for (int step = 0; step < m; ++step) {
    for (std::size_t n = 0; n <= work; ++n) {
      cplx acc = 0.0;
      if (n >= 1) acc += mu * std::sqrt(static_cast<double>(n)) * v[n - 1];
      if (n + 1 <= work) acc -= nu * std::sqrt(static_cast<double>(n + 1)) * v[n + 1];
      next[n] = acc;
    }
    std::swap(v, next);
    // Rescale to keep magnitudes O(1); normalization is global anyway.
    double mx = 0.0;
    for (const auto& a : v) mx = std::max(mx, std::abs(a));
    if (mx > 0.0) {
      for (auto& a : v) a /= mx;
    }
  }
  v.resize(cutoff + 1);
  return v;
}

template <typename Build>
FockState grow_until_converged(int m, double r, const CutoffPolicy& policy, Build build,
                               const char* who)
{
  std::size_t n = std::min(initial_cutoff(m, r), policy.max_cutoff);
  double tail = std::numeric_limits<double>::infinity();
  while (true) {
    FockState s = FockState::from_amplitudes(build(n));
    tail = s.tail_bound();
    if (tail <= policy.tail_eps) return s;
    if (n >= policy.max_cutoff) break;
    n = std::min(2 * n, policy.max_cutoff);
  }
  throw TruncationError(std::string(who) + ": tail bound not met at cutoff cap " +
                            std::to_string(policy.max_cutoff) + " (tail " + std::to_string(tail) + ")",
                        tail);
}

}  // namespace

FockState squeezed_vacuum(double r, const CutoffPolicy& policy)
{
  return pasvs(0, r, policy);
}

FockState squeezed_vacuum_fixed(double r, std::size_t cutoff)
{
  check_params(0, r, "squeezed_vacuum");
  return FockState::from_amplitudes(pasvs_series(0, r, cutoff));
}

FockState apply_creation(const FockState& state, int m, std::size_t max_cutoff)
{
  if (m < 0) throw std::invalid_argument("apply_creation: negative power");
  const std::size_t n_old = state.cutoff();
  const std::size_t n_new = n_old + static_cast<std::size_t>(m);
  if (n_new > max_cutoff) {
    throw TruncationError("apply_creation: no headroom for a†^" + std::to_string(m) +
                              " above cutoff " + std::to_string(n_old),
                          state.tail_bound());
  }
  std::vector<cplx> out(n_new + 1, 0.0);
  for (std::size_t n = 0; n <= n_old; ++n) {
    // sqrt((n+m)!/n!) in log form.
    const double lg = 0.5 * (log_factorial(static_cast<int>(n) + m) - log_factorial(static_cast<int>(n)));
    out[n + static_cast<std::size_t>(m)] = state[n] * std::exp(lg);
  }
  return FockState::from_amplitudes(std::move(out));
}

FockState pasvs(int m, double r, const CutoffPolicy& policy)
{
  check_params(m, r, "pasvs");
  if (r == 0.0) return number_state(m, std::max<std::size_t>(static_cast<std::size_t>(m), 32));
  return grow_until_converged(
      m, r, policy, [&](std::size_t n) { return pasvs_series(m, r, n); }, "pasvs");
}

FockState sns(int m, double r, const CutoffPolicy& policy)
{
  check_params(m, r, "sns");
  if (r == 0.0) return number_state(m, std::max<std::size_t>(static_cast<std::size_t>(m), 32));
  return grow_until_converged(
      m, r, policy, [&](std::size_t n) { return sns_series(m, r, n); }, "sns");
}

FockState sns_fixed(int m, double r, std::size_t cutoff)
{
  check_params(m, r, "sns");
  return FockState::from_amplitudes(sns_series(m, r, cutoff));
}

FockState make_state(const StateFamily& family, const CutoffPolicy& policy)
{
  switch (family.kind) {
    case Family::Number:
      return number_state(family.m, std::max<std::size_t>(static_cast<std::size_t>(family.m), 32));
    case Family::SqueezedVacuum: return squeezed_vacuum(family.r, policy);
    case Family::SNS: return sns(family.m, family.r, policy);
    case Family::PASVS: return pasvs(family.m, family.r, policy);
  }
  throw std::invalid_argument("make_state: unknown family");
}

double pasvs_norm_series(int m, double r)
{
  check_params(m, r, "pasvs_norm_series");
  const double tau = std::tanh(r);
  const double mu = std::cosh(r);
  if (tau == 0.0) return std::exp(log_factorial(m));
  // Σ_k (2k+m)!/(k!)² (τ/2)^{2k} / μ; terms decay geometrically in τ².
  const double log_q = 2.0 * std::log(tau / 2.0);
  double sum = 0.0;
  double largest = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double term =
        std::exp(log_factorial(2 * k + m) - 2.0 * log_factorial(k) + static_cast<double>(k) * log_q);
    sum += term;
    largest = std::max(largest, term);
    if (term < 1e-18 * sum && term < largest) break;
  }
  return sum / mu;
}

double pasvs_norm_closed(int m, double r)
{
  const double mu = std::cosh(r);
  return std::exp(log_factorial(m)) * std::pow(mu, m) * legendre(m, mu);
}

cplx coherent_overlap(const FockState& state, cplx beta)
{
  const double mod = std::abs(beta);
  const auto amps = state.amps();
  if (mod == 0.0) return amps[0];
  const double log_mod = std::log(mod);
  const double arg_conj = -std::arg(beta);
  const double half_mod2 = 0.5 * mod * mod;
  cplx sum = 0.0;
  for (std::size_t n = 0; n < amps.size(); ++n) {
    if (amps[n] == 0.0) continue;
    const double nn = static_cast<double>(n);
    const double lg = nn * log_mod - 0.5 * log_factorial(static_cast<int>(n)) - half_mod2;
    sum += amps[n] * std::polar(std::exp(lg), nn * arg_conj);
  }
  return sum;
}

double quadrature_variance(const FockState& state, Quadrature which)
{
  const auto c = state.amps();
  const std::size_t n = c.size();
  cplx a1 = 0.0;  // ⟨a⟩
  cplx a2 = 0.0;  // ⟨a²⟩
  double nbar = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k);
    nbar += kk * std::norm(c[k]);
    if (k + 1 < n) a1 += std::sqrt(kk + 1.0) * std::conj(c[k]) * c[k + 1];
    if (k + 2 < n) a2 += std::sqrt((kk + 1.0) * (kk + 2.0)) * std::conj(c[k]) * c[k + 2];
  }
  if (which == Quadrature::X) {
    const double mean = std::sqrt(2.0) * a1.real();
    const double second = (2.0 * a2.real() + 2.0 * nbar + 1.0) / 2.0;
    return second - mean * mean;
  }
  const double mean = std::sqrt(2.0) * a1.imag();
  const double second = (-2.0 * a2.real() + 2.0 * nbar + 1.0) / 2.0;
  return second - mean * mean;
}

}  // namespace ncbs
