#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ncbs/fock_state.hpp"
#include "ncbs/format.hpp"
#include "ncbs/measure.hpp"
#include "ncbs/phase_space.hpp"

namespace ncbs {

enum class Measure {
  Ebs,         ///< beam-splitter entanglement (closed form for number states)
  EbsPrinted,  ///< printed squeezed-vacuum entropy formula
  Delta,       ///< Wigner negativity
  Dnc,         ///< Hilbert–Schmidt distance to the nearest coherent state
  NcDepth,     ///< nonclassical depth
};

std::string_view to_string(Measure m);
Measure parse_measure(std::string_view s);

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(std::string_view s);

struct SweepConfig {
  Family family = Family::PASVS;
  std::vector<int> ms{1};
  double r_min = 0.0, r_max = 1.5, r_step = 0.05;
  std::vector<Measure> measures{Measure::Ebs};
  CutoffPolicy cutoff;
  OutputFormat format = OutputFormat::Csv;
  unsigned threads = 0;  ///< 0 = all hardware threads

  /// Throws std::invalid_argument on an empty m list or measure list, a
  /// negative m, r_min < 0, r_max < r_min or r_step <= 0.
  void validate() const;
  /// r_min, r_min + step, ... up to r_max (inclusive within step/1000),
  /// each formed as r_min + i·step so the grid is reproducible.
  std::vector<double> r_values() const;
};

struct SweepRow {
  Family family = Family::Number;
  int m = 0;
  double r = 0.0;
  Measure measure = Measure::Ebs;
  MeasureResult result;
  bool ok = true;  ///< false when the point threw
};

/// A named field grid (contour data) attached to a figure.
struct FieldBlock {
  FieldHeader header;
  FieldSample sample;
};

struct FigureDataset {
  std::string id;       ///< empty for plain sweeps
  std::string comment;  ///< one-line provenance of the grid choices
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::vector<FieldBlock> fields;

  /// Rows whose point failed or did not converge.
  std::size_t failures() const;
};

/// Evaluates one (family, m, r, measure) point. Exceptions propagate.
MeasureResult evaluate_point(Family family, int m, double r, Measure measure, const CutoffPolicy& cutoff);

/// Rows ordered by (m, r, measure) in config order, independent of
/// `config.threads`. Per-point exceptions become rows with ok = false and
/// the message in meta.
FigureDataset run_sweep(const SweepConfig& config);

/// Canonical figure presets: 1a 1b 2a 2b 3 4a 4b 5 6. `grid` overrides the
/// contour grid of 5 and 6. Throws std::invalid_argument on an unknown id.
FigureDataset figure(const std::string& id, unsigned threads = 0, const std::optional<PhaseGrid>& grid = {});

/// CSV: optional `# ...` comment line, header
/// `family,m,r,measure,value,method,status,meta`, one line per row; field
/// blocks follow as `# family=...` headed `x1,x2,value` tables separated by
/// blank lines.
void write_csv(std::ostream& os, const FigureDataset& data);
/// `{schema_version:1, config:{...}, rows:[...], fields:[...]}`.
void write_json(std::ostream& os, const FigureDataset& data);
void write_dataset(std::ostream& os, const FigureDataset& data, OutputFormat format);

}  // namespace ncbs
