#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncbs {

using cplx = std::complex<double>;

/// Thrown when a constructor cannot reach the requested tail bound before
/// hitting the hard cutoff cap, or when an operation runs out of headroom.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double achieved_tail)
      : std::runtime_error(what), achieved_tail_(achieved_tail)
  {
  }
  double achieved_tail() const noexcept { return achieved_tail_; }

 private:
  double achieved_tail_;
};

/// Adaptive cutoff control for the squeezed families.
///
/// The start cutoff is max(32, m + 8 ceil(e^{2r})); it is doubled until the
/// probability in the last two Fock levels is below `tail_eps`, and the
/// construction fails past `max_cutoff`.
struct CutoffPolicy {
  double tail_eps = 1e-12;
  std::size_t max_cutoff = 4096;
};

enum class Family { Number, SqueezedVacuum, SNS, PASVS };

std::string_view to_string(Family f);
/// Accepts "number", "svs"/"squeezed", "sns", "pasvs" (case-insensitive).
Family parse_family(std::string_view s);

/// Single-mode state family with its two parameters. r is the squeezing
/// strength of S(r) = exp(r/2 (a†² − a²)), m the photon number / addition
/// count.
struct StateFamily {
  Family kind = Family::Number;
  int m = 0;
  double r = 0.0;
};

/// Normalized pure state over Fock levels 0..cutoff.
///
/// Immutable once built; every factory renormalizes numerically and fixes
/// the global phase so that the first nonzero amplitude is real positive.
class FockState {
 public:
  /// Takes ownership of raw amplitudes, renormalizes and fixes the phase.
  /// Throws std::invalid_argument on an empty or zero vector.
  static FockState from_amplitudes(std::vector<cplx> amps);

  std::size_t cutoff() const noexcept { return amps_.size() - 1; }
  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const cplx> amps() const noexcept { return amps_; }
  cplx operator[](std::size_t n) const noexcept { return amps_[n]; }

  /// |amps[N]|² + |amps[N−1]|².
  double tail_bound() const noexcept;
  double norm_squared() const noexcept;
  double mean_photon_number() const noexcept;

  /// 0 (even), 1 (odd) or -1 if the state has support on both parities.
  int parity() const noexcept;

 private:
  explicit FockState(std::vector<cplx> amps) : amps_(std::move(amps)) {}
  std::vector<cplx> amps_;
};

FockState number_state(int m, std::size_t cutoff);

/// S(r)|0⟩: amps[2k] ∝ sqrt((2k)!)/k! (τ/2)^k, τ = tanh r.
FockState squeezed_vacuum(double r, const CutoffPolicy& policy = {});
/// Same series on a caller-fixed cutoff (no tail check).
FockState squeezed_vacuum_fixed(double r, std::size_t cutoff);

/// a†^m applied to `state`, renormalized. The result lives on cutoff N + m;
/// throws TruncationError if that exceeds `max_cutoff`.
FockState apply_creation(const FockState& state, int m, std::size_t max_cutoff = 4096);

/// Photon-added squeezed vacuum a†^m S(r)|0⟩ / sqrt(N_m), built from the
/// series amps[2k+m] ∝ sqrt((2k+m)!)/k! (τ/2)^k.
FockState pasvs(int m, double r, const CutoffPolicy& policy = {});

/// Squeezed number state S(r)|m⟩, built as (μa† − νa)^m S(r)|0⟩ using
/// S a† S† = μa† − νa.
FockState sns(int m, double r, const CutoffPolicy& policy = {});
FockState sns_fixed(int m, double r, std::size_t cutoff);

/// Any family member; Number ignores r, SqueezedVacuum ignores m.
FockState make_state(const StateFamily& family, const CutoffPolicy& policy = {});

/// Start cutoff of the doubling policy.
std::size_t initial_cutoff(int m, double r);

/// N_m = ||a†^m S(r)|0⟩||², summed numerically from the Fock series.
double pasvs_norm_series(int m, double r);
/// m! μ^m P_m(μ), the printed closed form for the same quantity.
double pasvs_norm_closed(int m, double r);

/// ⟨β|ψ⟩ = e^{−|β|²/2} Σ_n amps[n] β*^n / sqrt(n!), with each term formed in
/// log-magnitude so large |β| and large n do not overflow.
cplx coherent_overlap(const FockState& state, cplx beta);

enum class Quadrature { X, P };

/// Variance of X = (a† + a)/√2 or P = i(a† − a)/√2. Vacuum gives 1/2.
double quadrature_variance(const FockState& state, Quadrature which);

}  // namespace ncbs
