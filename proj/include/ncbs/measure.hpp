#pragma once

#include <string>
#include <string_view>

namespace ncbs {

/// How a value was obtained.
enum class Method {
  ClosedForm,           ///< analytic expression evaluated directly
  CorrectedClosedForm,  ///< analytic expression with a normalization fix
  PrintedClosedForm,    ///< expression evaluated verbatim as printed
  NumericOracle,        ///< Fock-space / quadrature / optimizer computation
};

std::string_view to_string(Method m);

/// A scalar measure together with its provenance and convergence data.
struct MeasureResult {
  double value = 0.0;
  Method method = Method::NumericOracle;
  double error_estimate = 0.0;
  bool converged = true;
  /// Free-form "key=value;key=value" convergence metadata.
  std::string meta;
};

}  // namespace ncbs
