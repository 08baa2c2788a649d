#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncbs/fock_state.hpp"
#include "ncbs/measure.hpp"
#include "ncbs/quadrature.hpp"

namespace ncbs {

// Phase-space conventions: α (or β, z) is the complex amplitude, the
// quadratures are X1 = (α+α*)/√2 and X2 = (α−α*)/(i√2), and every
// distribution is normalized as ∫ F d²α/π = 1 (vacuum Wigner peak = 2).

/// Rectangular grid in (X1, X2).
struct PhaseGrid {
  double x1_min = -4.0, x1_max = 4.0;
  std::size_t n1 = 41;
  double x2_min = -4.0, x2_max = 4.0;
  std::size_t n2 = 41;

  /// Throws std::invalid_argument unless n1, n2 >= 2 and max > min.
  void validate() const;
  double x1(std::size_t i1) const;
  double x2(std::size_t i2) const;
  /// α at node (i1, i2).
  cplx point(std::size_t i1, std::size_t i2) const;
};

/// Parses "x1min:x1max:n1,x2min:x2max:n2".
PhaseGrid parse_grid(const std::string& spec);

cplx alpha_from_quadratures(double x1, double x2);

/// Values on a grid, row-major with X2 as the outer index:
/// values[i2 * n1 + i1].
struct FieldSample {
  PhaseGrid grid;
  std::vector<double> values;
  double at(std::size_t i1, std::size_t i2) const { return values[i2 * grid.n1 + i1]; }
};

/// Evaluates `f` on every node. Each node is written independently, so the
/// result does not depend on `threads`.
FieldSample sample_field(const PhaseFunction& f, const PhaseGrid& grid, unsigned threads = 1);

// ---- Wigner functions -----------------------------------------------------

/// 2(−1)^m e^{−2|β|²} L_m(4|β|²), β = μα − να*.
double wigner_sns_closed(int m, double r, cplx alpha);

/// PASVS Wigner function from the Gaussian parametric-derivative form
///   (2/N_m) e^{−2|β|²} ∂_p^m ∂_q^m exp(μν/2 (p²+q²) − μ² pq + 2μ(qβ + pβ*))|_0,
/// β = μα − να*, which expands to
///   (2/N_m) e^{−2|β|²} Σ_s (−μ²)^s/s! (m!/(m−s)!)² |H_{m−s}(2μβ, μν/2)|².
/// N_m is the numerically summed norm of a†^m S(r)|0⟩, so the function
/// integrates to one. Reduces to the number-state form at r = 0.
double wigner_pasvs_closed(int m, double r, cplx alpha);

/// The printed single-sum PASVS expression, evaluated verbatim with the
/// printed N_m = m! μ^m P_m(μ). Audit only: it does not match the state.
/// Requires r > 0.
double wigner_pasvs_printed(int m, double r, cplx alpha);

/// Displaced-parity oracle W(α) = 2 Σ_k (−1)^k |⟨k|D(−α)|ψ⟩|².
double wigner_numeric(const FockState& state, cplx alpha);

/// Closed-form Wigner function for a family member (Number, SVS, SNS, PASVS).
double wigner_closed(const StateFamily& family, cplx alpha);
/// Same, with family constants (the PASVS norm) computed once up front.
PhaseFunction wigner_closed_evaluator(const StateFamily& family);

/// δ = (∫|W| d²α/π − 1)/2 by polar quadrature. `value` is δ,
/// `error_estimate` the quadrature error, `meta` carries ∫W and the radius.
MeasureResult wigner_negativity(const PhaseFunction& wigner, const PolarQuadratureOptions& opts = {});

// ---- Husimi Q --------------------------------------------------------------

/// Q(β) = |⟨β|ψ⟩|².
double q_function(const FockState& state, cplx beta);
FieldSample q_contour_grid(const FockState& state, const PhaseGrid& grid, unsigned threads = 1);

// ---- η-smoothed P distribution R(z, η) --------------------------------------

/// Value of R(z, η) together with the magnitude of the sum it came from.
/// `scale` = prefactor × Σ |terms|, so value/scale measures the sign
/// relative to the size of the contributions that produced it.
struct RSample {
  double value = 0.0;
  double scale = 0.0;
  double ratio() const { return scale > 0.0 ? value / scale : 0.0; }
};

/// Closed-form R(z, η) for PASVS or SNS (m ≥ 0, r ≥ 0).
///
/// With Δ = η² − τ²(1−η)², A1 = τ(1−η)²/(2Δ), B1 = (ηz − τ(1−η)z*)/Δ,
/// D1 = η(1−η)/Δ and A2 = A1/μ² − τ/2, B2 = B1/μ, D2 = D1/μ²,
///   R = e^{|z|²/(1−η)} W0 / (μ c √Δ) Σ_s (−1)^s D^s/s! (m!/(m−s)!)² |H_{m−s}(B, A)|²
/// with c = N_m (PASVS) or m! (SNS). The Gaussian integral behind it exists
/// only when Δ > 0; otherwise this throws ConvergenceDomainError.
class RFunction {
 public:
  RFunction(Family family, int m, double r);

  /// True when η² − τ²(1−η)² > 0 and 0 < η ≤ 1.
  bool regular(double eta) const;
  RSample sample(cplx z, double eta) const;
  double operator()(cplx z, double eta) const { return sample(z, eta).value; }

  Family family() const { return family_; }
  int m() const { return m_; }
  double r() const { return r_; }

 private:
  Family family_;
  int m_;
  double r_, mu_, tau_;
  double log_norm_;  // log of N_m (PASVS) or m! (SNS)
};

class ConvergenceDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

double r_function_pasvs(cplx z, double eta, int m, double r);
double r_function_sns(cplx z, double eta, int m, double r);

/// Fock-space route to the same distribution for η ≥ 1/2:
///   R(z, η) = (1/η) Σ_k (−(1−η)/η)^k |⟨k|D(−z)|ψ⟩|².
/// η = 1/2 is the Wigner function, η = 1 the Q function.
double r_function_numeric(const FockState& state, cplx z, double eta);

// ---- nonclassical depth --------------------------------------------------------

struct DepthSearchOptions {
  double tol_neg = 1e-10;     ///< relative negativity threshold on value/scale
  int bisection_steps = 20;
  double envelope_eps = 1e-12;
  double base_spacing = 0.25;
  int refinements = 2;        ///< grid halvings after the base pass
  int local_seeds = 6;        ///< lowest nodes refined by simplex search
};

struct DepthProbe {
  double eta = 0.0;
  bool regular = true;    ///< Gaussian-integral convergence condition
  double min_ratio = 0.0; ///< most negative value/scale found
  cplx argmin;
  bool washed_out = false;
};

struct DepthReport {
  double depth = 1.0;
  std::vector<DepthProbe> probes;
  MeasureResult as_measure() const;
};

/// Smallest η in the search interval for which R(·, η) is regular and
/// nonnegative; 1 when every tested η < 1 still shows negativity.
///
/// The interval is (1/2, 1] when m ≥ 1 (the Wigner function is already
/// negative) and (0, 1] for the Gaussian m = 0 case. Negativity is searched
/// on an expanding grid refined `refinements` times, then from the lowest
/// nodes and from the zeros of Q (where negativity appears first as η → 1)
/// with a local simplex search.
DepthReport nonclassical_depth(Family family, int m, double r, const DepthSearchOptions& opts = {});

}  // namespace ncbs
