#pragma once

#include <vector>

#include "ncbs/fock_state.hpp"

namespace ncbs {

/// Amplitudes ⟨k|D(α)|ψ⟩ for k = 0..rows−1.
///
/// Matrix elements come from the closed form
///   ⟨n+d|D(α)|n⟩ = (α/|α|)^d f_n^{(d)},  f_n^{(d)} = sqrt(n!/(n+d)!) x^{d/2} e^{−x/2} L_n^{(d)}(x),
/// x = |α|², generated along each diagonal by the normalized Laguerre
/// recurrence in n with a running log-scale. This stays accurate for cutoffs
/// in the hundreds, where the two-index recurrence blows up.
std::vector<cplx> displaced_amplitudes(const FockState& state, cplx alpha, std::size_t rows);

/// Row count that captures the displaced state for a given shift: grows
/// with (sqrt(N) + |α|)².
std::size_t displaced_rows(const FockState& state, cplx alpha);

/// Σ_k w^k |⟨k|D(−α)|ψ⟩|², the displaced-parity-type sums behind the
/// s-ordered quasi-distributions. `rows` = 0 picks displaced_rows().
/// Throws TruncationError when the displaced norm leaks more than 1e−12.
double displaced_weighted_sum(const FockState& state, cplx alpha, double w, std::size_t rows = 0);

}  // namespace ncbs
