#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "ncbs/fock_state.hpp"
#include "ncbs/phase_space.hpp"

namespace ncbs {

/// Shortest general-format rendering with `significant` digits, '.' decimal
/// separator regardless of locale. NaN prints as "nan".
std::string format_number(double v, int significant = 12);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

/// State dump: header `n,re,im,prob`, one row per Fock level.
void write_state_csv(std::ostream& os, const FockState& state);

/// Contour grid block: `# family=.. m=.. r=.. field=.. eta=..`, then
/// `x1,x2,value` rows in grid order (X2 outer).
struct FieldHeader {
  std::string family;
  int m = 0;
  double r = 0.0;
  std::string field;  ///< W, Q or R
  double eta = 0.0;
};
void write_field_csv(std::ostream& os, const FieldHeader& header, const FieldSample& sample);

}  // namespace ncbs
