#include "ncbs/displacement.hpp"

#include <cmath>

#include "ncbs/special_fns.hpp"

namespace ncbs {

namespace {

// Walks f_n^{(d)}(x) for n = 0, 1, ... with a separate log-scale so neither
// the tiny start values nor intermediate growth leave double range.
class DiagonalWalker {
 public:
  DiagonalWalker(int d, double x) : d_(d), x_(x)
  {
    if (x == 0.0) {
      cur_ = d == 0 ? 1.0 : 0.0;
      log_scale_ = 0.0;
    } else {
      cur_ = 1.0;
      log_scale_ = -0.5 * log_factorial(d) + 0.5 * d * std::log(x) - 0.5 * x;
    }
    prev_ = 0.0;
  }

  double value() const { return cur_ == 0.0 ? 0.0 : cur_ * std::exp(log_scale_); }

  void advance()
  {
    const double dd = d_;
    double next;
    if (n_ == 0) {
      next = cur_ * (1.0 + dd - x_) / std::sqrt(dd + 1.0);
    } else {
      const double n = n_;
      next = ((2.0 * n + dd + 1.0 - x_) * cur_ * std::sqrt((n + 1.0) / (n + dd + 1.0)) -
              (n + dd) * prev_ * std::sqrt(n * (n + 1.0) / ((n + dd) * (n + dd + 1.0)))) /
             (n + 1.0);
    }
    prev_ = cur_;
    cur_ = next;
    ++n_;
    const double mag = std::abs(cur_);
    if (mag > 1e100 || (mag < 1e-100 && mag > 0.0)) {
      const double shift = std::log(mag);
      cur_ /= mag;
      prev_ /= mag;
      log_scale_ += shift;
    }
  }

 private:
  int d_;
  double x_;
  int n_ = 0;
  double cur_;
  double prev_;
  double log_scale_;
};

}  // namespace

std::size_t displaced_rows(const FockState& state, cplx alpha)
{
  const double reach = std::sqrt(static_cast<double>(state.cutoff())) + std::abs(alpha);
  return static_cast<std::size_t>(std::ceil(reach * reach + 12.0 * reach + 24.0));
}

std::vector<cplx> displaced_amplitudes(const FockState& state, cplx alpha, std::size_t rows)
{
  const auto amps = state.amps();
  const std::size_t cols = amps.size();
  std::vector<cplx> out(rows, 0.0);
  const double x = std::norm(alpha);
  const double mod = std::abs(alpha);
  const cplx up = mod > 0.0 ? alpha / mod : 1.0;                // phase for rows below the diagonal
  const cplx down = mod > 0.0 ? -std::conj(alpha) / mod : 1.0;  // and above it

  // Lower triangle incl. diagonal: row j = n + d.
  cplx ph = 1.0;
  for (std::size_t d = 0; d < rows; ++d) {
    if (d > 0) ph *= up;
    if (x == 0.0 && d > 0) break;
    DiagonalWalker walk(static_cast<int>(d), x);
    for (std::size_t n = 0; n < cols && n + d < rows; ++n) {
      if (n > 0) walk.advance();
      if (amps[n] != 0.0) out[n + d] += ph * walk.value() * amps[n];
    }
  }
  // Strict upper triangle: row j, column n = j + d.
  ph = 1.0;
  for (std::size_t d = 1; d < cols && x > 0.0; ++d) {
    ph *= down;
    DiagonalWalker walk(static_cast<int>(d), x);
    for (std::size_t j = 0; j + d < cols && j < rows; ++j) {
      if (j > 0) walk.advance();
      const cplx a = amps[j + d];
      if (a != 0.0) out[j] += ph * walk.value() * a;
    }
  }
  return out;
}

double displaced_weighted_sum(const FockState& state, cplx alpha, double w, std::size_t rows)
{
  if (rows == 0) rows = displaced_rows(state, alpha);
  const auto v = displaced_amplitudes(state, -alpha, rows);
  double norm = 0.0;
  double sum = 0.0;
  double wk = 1.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double p = std::norm(v[k]);
    norm += p;
    sum += wk * p;
    wk *= w;
  }
  if (std::abs(1.0 - norm) > 1e-12 * static_cast<double>(v.size())) {
    throw TruncationError("displaced state leaks norm (1 - ||D psi||^2 = " +
                              std::to_string(1.0 - norm) + ")",
                          1.0 - norm);
  }
  return sum;
}

}  // namespace ncbs
