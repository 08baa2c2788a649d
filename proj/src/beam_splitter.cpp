#include "ncbs/beam_splitter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ncbs/special_fns.hpp"

namespace ncbs {

namespace {

constexpr double kDropEigenvalue = 1e-14;

template <typename Matrix>
void append_squared_singular_values(const Matrix& block, std::vector<double>& out)
{
  if (block.rows() == 0 || block.cols() == 0) return;
  Eigen::BDCSVD<Matrix> svd(block);
  if (svd.info() != Eigen::Success) {
    throw std::runtime_error("entanglement_entropy: SVD did not converge");
  }
  const auto& s = svd.singularValues();
  for (Eigen::Index i = 0; i < s.size(); ++i) out.push_back(s[i] * s[i]);
}

// Rows/columns of one parity block of M: rows j ≡ row_parity, columns
// k ≡ col_parity (mod 2).
template <typename Matrix>
Matrix parity_block(const Matrix& m, int row_parity, int col_parity)
{
  const Eigen::Index rows = (m.rows() - row_parity + 1) / 2;
  const Eigen::Index cols = (m.cols() - col_parity + 1) / 2;
  Matrix b(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) b(i, j) = m(2 * i + row_parity, 2 * j + col_parity);
  }
  return b;
}

// Parity p if every entry with (j + k) ≢ p vanishes, else -1.
int anti_diagonal_parity(const Eigen::MatrixXcd& m)
{
  bool even = false;
  bool odd = false;
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (m(j, k) != 0.0) ((j + k) % 2 == 0 ? even : odd) = true;
    }
  }
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

template <typename Matrix>
std::vector<double> squared_singular_values(const Matrix& m, int parity)
{
  std::vector<double> lambdas;
  if (parity < 0) {
    append_squared_singular_values(m, lambdas);
  } else {
    append_squared_singular_values(parity_block(m, 0, parity), lambdas);
    append_squared_singular_values(parity_block(m, 1, 1 - parity), lambdas);
  }
  return lambdas;
}

}  // namespace

TwoModeAmplitudes split_with_vacuum(const FockState& state, SplitSign sign)
{
  const auto n_max = static_cast<Eigen::Index>(state.cutoff());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
  double norm2 = 0.0;
  for (Eigen::Index n = 0; n <= n_max; ++n) {
    const cplx a = state[static_cast<std::size_t>(n)];
    if (a == 0.0) continue;
    const double log_pow = -0.5 * static_cast<double>(n) * std::log(2.0);
    for (Eigen::Index k = 0; k <= n; ++k) {
      const double w = std::exp(log_pow + 0.5 * log_binomial(static_cast<int>(n), static_cast<int>(k)));
      const double s = (sign == SplitSign::ModeTransform && (k % 2 == 1)) ? -1.0 : 1.0;
      m(n - k, k) = a * (w * s);
      norm2 += std::norm(m(n - k, k));
    }
  }
  if (norm2 > 0.0) m /= std::sqrt(norm2);
  return TwoModeAmplitudes{std::move(m)};
}

EntanglementResult entanglement_entropy(const TwoModeAmplitudes& two_mode)
{
  const Eigen::MatrixXcd& m = two_mode.m;
  const int parity = anti_diagonal_parity(m);
  const bool real = m.imag().cwiseAbs().maxCoeff() == 0.0;

  std::vector<double> lambdas = real ? squared_singular_values(Eigen::MatrixXd(m.real()), parity)
                                     : squared_singular_values(m, parity);
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());

  EntanglementResult out;
  out.method = Method::NumericOracle;
  for (double l : lambdas) {
    if (l < kDropEigenvalue) break;
    out.schmidt.push_back(l);
  }
  // Sum from the smallest weight up.
  double e = 0.0;
  for (auto it = out.schmidt.rbegin(); it != out.schmidt.rend(); ++it) e -= *it * std::log(*it);
  out.value = std::max(0.0, e);
  return out;
}

EntanglementResult ebs(const FockState& state)
{
  return entanglement_entropy(split_with_vacuum(state));
}

double ebs_number_closed(int m)
{
  if (m < 0) throw std::domain_error("ebs_number_closed: m must be >= 0");
  const double log2m = static_cast<double>(m) * std::log(2.0);
  double e = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double lp = log_binomial(m, k) - log2m;
    e -= std::exp(lp) * lp;
  }
  return e;
}

MeasureResult ebs_svs_closed(double r)
{
  if (r < 0.0) throw std::domain_error("ebs_svs_closed: r must be >= 0");
  MeasureResult res;
  res.method = Method::PrintedClosedForm;
  if (r == 0.0) {
    res.value = 0.0;
    return res;
  }
  const double g = std::exp(r / 2.0);
  const double p = (g + 1.0) / 2.0;
  const double q = (g - 1.0) / 2.0;
  res.value = p * std::log(p) - q * std::log(q);
  return res;
}

double ebs_svs_closed_slope(double r)
{
  const double e = std::exp(-r / 2.0);
  return -(std::exp(r / 2.0) / 4.0) * std::log((1.0 - e) / (1.0 + e));
}

Eigen::MatrixXcd reduced_density_a(const TwoModeAmplitudes& two_mode)
{
  return two_mode.m * two_mode.m.adjoint();
}

Eigen::MatrixXcd reduced_density_b(const TwoModeAmplitudes& two_mode)
{
  return (two_mode.m.adjoint() * two_mode.m).transpose();
}

double entropy_from_density(const Eigen::MatrixXcd& rho)
{
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("entropy_from_density: eigensolver failed");
  double e = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()[i];
    if (l > kDropEigenvalue) e -= l * std::log(l);
  }
  return e;
}

}  // namespace ncbs
