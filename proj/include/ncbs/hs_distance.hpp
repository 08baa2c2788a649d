#pragma once

#include <functional>
#include <vector>

#include "ncbs/fock_state.hpp"
#include "ncbs/measure.hpp"
#include "ncbs/optimize.hpp"

namespace ncbs {

/// Multi-start maximization of a coherent-state fidelity F(β).
///
/// A square grid of `grid_step` in (X1, X2) covers |X1|, |X2| ≤ extent;
/// the `seeds` best nodes, plus the best node on each quadrature axis, start
/// a simplex refinement. Everything is deterministic.
struct OptimizerOptions {
  double grid_step = 0.25;
  int seeds = 5;
  bool axis_seeds = true;
  SimplexOptions simplex{4000, 1e-11, 1e-15, 0.05};
};

struct OptimizerReport {
  cplx best_beta;
  double best_value = 0.0;     ///< d = √2 (1 − F)^{1/2}
  double best_fidelity = 0.0;  ///< F at best_beta
  int starts = 0;
  int converged_starts = 0;
  std::vector<int> iterations;  ///< per start
  bool converged = false;       ///< at least one start converged

  MeasureResult as_measure(Method method) const;
};

using FidelityFunction = std::function<double(cplx)>;

/// Maximizes F over β with grid half-width `extent` in quadrature units.
OptimizerReport maximize_fidelity(const FidelityFunction& fidelity, double extent, const OptimizerOptions& opts = {});

/// Grid half-width 2 sqrt(n̄) + 3.
double search_extent(double mean_photons);

/// d_NC = inf √2 (1 − |⟨β|ψ⟩|²)^{1/2} with F from the Fock amplitudes.
OptimizerReport hs_distance_numeric(const FockState& state, const OptimizerOptions& opts = {});

/// √2 [1 − m^m e^{−m} / ((1−τ)^m μ N_m)]^{1/2}, the PASVS fidelity maximum
/// sitting on the real axis at |β|² = m/(1−τ). m ≥ 1; throws std::domain_error
/// for m = 0.
MeasureResult hs_distance_pasvs_closed(int m, double r);

/// Same without the 1/μ factor, as printed. `value` is NaN (and
/// `converged` false) when the printed fidelity exceeds one.
MeasureResult hs_distance_pasvs_printed(int m, double r);

/// |⟨β|S(r)|m⟩|² = e^{−|β|² + τ Re β²} |H_m(β*/μ, −τ/2)|² / (μ m!).
double sns_overlap_reduced(int m, double r, cplx beta);

/// τ^m e^{−|β|² + τ Re β²} L_m(|β|²/(2μν)) / (μ 2^m), as printed.
/// Not a fidelity (it changes sign); kept for the audit.
double sns_overlap_printed(int m, double r, cplx beta);

/// SNS distance by optimizing sns_overlap_reduced for r > 1e−3, and the
/// Fock-space fidelity of S(r)|m⟩ below that.
OptimizerReport hs_distance_sns(int m, double r, const OptimizerOptions& opts = {});

}  // namespace ncbs
