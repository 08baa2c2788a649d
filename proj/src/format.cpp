#include "ncbs/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "ncbs/measure.hpp"

namespace ncbs {

std::string_view to_string(Method m)
{
  switch (m) {
    case Method::ClosedForm:
      return "closed-form";
    case Method::CorrectedClosedForm:
      return "corrected-closed-form";
    case Method::PrintedClosedForm:
      return "printed-closed-form";
    case Method::NumericOracle:
      return "numeric-oracle";
  }
  return "unknown";
}

std::string format_number(double v, int significant)
{
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds −0
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, significant);
  return std::string(buf.data(), res.ptr);
}

std::string csv_field(std::string_view s)
{
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_state_csv(std::ostream& os, const FockState& state)
{
  os << "n,re,im,prob\n";
  for (std::size_t n = 0; n < state.size(); ++n) {
    const cplx a = state[n];
    os << n << ',' << format_number(a.real()) << ',' << format_number(a.imag()) << ',' << format_number(std::norm(a))
       << '\n';
  }
}

void write_field_csv(std::ostream& os, const FieldHeader& h, const FieldSample& sample)
{
  os << "# family=" << h.family << " m=" << h.m << " r=" << format_number(h.r) << " field=" << h.field
     << " eta=" << format_number(h.eta) << '\n';
  os << "x1,x2,value\n";
  const auto& g = sample.grid;
  for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
    for (std::size_t i1 = 0; i1 < g.n1; ++i1) {
      os << format_number(g.x1(i1)) << ',' << format_number(g.x2(i2)) << ',' << format_number(sample.at(i1, i2))
         << '\n';
    }
  }
}

}  // namespace ncbs
