#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ncbs/fock_state.hpp"
#include "ncbs/measure.hpp"

namespace ncbs {

/// Sign carried by the |j, k⟩ output component.
enum class SplitSign {
  ModeTransform,  ///< (−1)^k, from a_in = (a_out − b_out)/√2
  Unsigned,       ///< all +1; differs by a local unitary on mode B
};

/// Joint output amplitudes M(j, k) of |j⟩_A ⊗ |k⟩_B for a 50:50 splitter
/// with vacuum in the second input port.
struct TwoModeAmplitudes {
  Eigen::MatrixXcd m;
};

struct EntanglementResult {
  double value = 0.0;           ///< von Neumann entropy in nats
  std::vector<double> schmidt;  ///< reduced-state eigenvalues, descending
  Method method = Method::NumericOracle;
};

/// M(j, k) = amps[j+k] 2^{−(j+k)/2} sqrt(C(j+k, k)) s(k).
TwoModeAmplitudes split_with_vacuum(const FockState& state,
                                    SplitSign sign = SplitSign::ModeTransform);

/// Entropy of the squared singular values of M. Eigenvalues below 1e−14
/// are dropped. Matrices that split into two parity blocks are decomposed
/// block by block. Throws std::runtime_error if the SVD fails.
EntanglementResult entanglement_entropy(const TwoModeAmplitudes& two_mode);

EntanglementResult ebs(const FockState& state);

/// −Σ_k p_k ln p_k with p_k = C(m,k)/2^m.
double ebs_number_closed(int m);

/// Squeezed-vacuum entropy formula as printed,
///   ((e^{r/2}+1)/2) ln((e^{r/2}+1)/2) − ((e^{r/2}−1)/2) ln((e^{r/2}−1)/2).
/// r = 0 returns the limit 0. It does not agree with the Fock-space value;
/// see the self-test audit.
MeasureResult ebs_svs_closed(double r);

/// Slope of ebs_svs_closed as printed: −(e^{r/2}/4) ln((1−e^{−r/2})/(1+e^{−r/2})).
double ebs_svs_closed_slope(double r);

/// Reduced density matrix of mode A (tests and small-N checks only).
Eigen::MatrixXcd reduced_density_a(const TwoModeAmplitudes& two_mode);
Eigen::MatrixXcd reduced_density_b(const TwoModeAmplitudes& two_mode);

/// Entropy −Σ λ ln λ of a Hermitian density matrix via eigendecomposition.
double entropy_from_density(const Eigen::MatrixXcd& rho);

}  // namespace ncbs
