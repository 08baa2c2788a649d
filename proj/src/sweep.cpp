#include "ncbs/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "ncbs/beam_splitter.hpp"
#include "ncbs/format.hpp"
#include "ncbs/hs_distance.hpp"
#include "ncbs/parallel.hpp"

namespace ncbs {

namespace {

std::string lower(std::string_view s)
{
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view status_of(const SweepRow& row)
{
  if (!row.ok) return "error";
  return row.result.converged ? "ok" : "unconverged";
}

std::string state_meta(const FockState& s)
{
  return "cutoff=" + std::to_string(s.cutoff()) + ";tail=" + format_number(s.tail_bound(), 3);
}

}  // namespace

std::string_view to_string(Measure m)
{
  switch (m) {
    case Measure::Ebs:
      return "ebs";
    case Measure::EbsPrinted:
      return "ebs_printed";
    case Measure::Delta:
      return "delta";
    case Measure::Dnc:
      return "dnc";
    case Measure::NcDepth:
      return "ncdepth";
  }
  return "unknown";
}

Measure parse_measure(std::string_view s)
{
  const std::string k = lower(s);
  if (k == "ebs") return Measure::Ebs;
  if (k == "ebs_printed") return Measure::EbsPrinted;
  if (k == "delta") return Measure::Delta;
  if (k == "dnc") return Measure::Dnc;
  if (k == "ncdepth") return Measure::NcDepth;
  throw std::invalid_argument("unknown measure '" + std::string(s) + "'");
}

OutputFormat parse_format(std::string_view s)
{
  const std::string k = lower(s);
  if (k == "csv") return OutputFormat::Csv;
  if (k == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (csv or json)");
}

void SweepConfig::validate() const
{
  if (ms.empty()) throw std::invalid_argument("sweep: empty m list");
  if (std::any_of(ms.begin(), ms.end(), [](int m) { return m < 0; })) throw std::invalid_argument("sweep: m must be >= 0");
  if (measures.empty()) throw std::invalid_argument("sweep: no measures");
  if (!(r_min >= 0.0) || !(r_max >= r_min)) throw std::invalid_argument("sweep: need 0 <= r_min <= r_max");
  if (!(r_step > 0.0)) throw std::invalid_argument("sweep: r step must be > 0");
}

std::vector<double> SweepConfig::r_values() const
{
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double r = r_min + i * r_step;
    if (r > r_max + 1e-3 * r_step) break;
    out.push_back(r);
  }
  return out;
}

std::size_t FigureDataset::failures() const
{
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.ok || !r.result.converged; }));
}

MeasureResult evaluate_point(Family family, int m, double r, Measure measure, const CutoffPolicy& cutoff)
{
  const StateFamily sf{family, m, r};
  switch (measure) {
    case Measure::Ebs: {
      if (family == Family::Number) return {ebs_number_closed(m), Method::ClosedForm, 0.0, true, ""};
      const FockState s = make_state(sf, cutoff);
      return {ebs(s).value, Method::NumericOracle, 0.0, true, state_meta(s)};
    }
    case Measure::EbsPrinted:
      if (family != Family::SqueezedVacuum) throw std::invalid_argument("ebs_printed is defined for the squeezed vacuum only");
      return ebs_svs_closed(r);
    case Measure::Delta:
      return wigner_negativity(wigner_closed_evaluator(sf));
    case Measure::Dnc:
      if (family == Family::PASVS && m >= 1) return hs_distance_pasvs_closed(m, r);
      if (family == Family::SNS) return hs_distance_sns(m, r).as_measure(Method::NumericOracle);
      return hs_distance_numeric(make_state(sf, cutoff)).as_measure(Method::NumericOracle);
    case Measure::NcDepth:
      return nonclassical_depth(family, m, r).as_measure();
  }
  throw std::invalid_argument("unknown measure");
}

FigureDataset run_sweep(const SweepConfig& config)
{
  config.validate();
  const auto rs = config.r_values();
  FigureDataset data;
  data.config = config;
  for (const int m : config.ms) {
    for (const double r : rs) {
      for (const Measure meas : config.measures) {
        SweepRow row;
        row.family = config.family;
        row.m = m;
        row.r = r;
        row.measure = meas;
        data.rows.push_back(row);
      }
    }
  }
  parallel_for(data.rows.size(), config.threads, [&](std::size_t i) {
    SweepRow& row = data.rows[i];
    try {
      row.result = evaluate_point(row.family, row.m, row.r, row.measure, config.cutoff);
    } catch (const std::exception& e) {
      row.ok = false;
      row.result = MeasureResult{};
      row.result.value = std::nan("");
      row.result.converged = false;
      row.result.meta = std::string("error=") + e.what();
    }
  });
  return data;
}

void write_csv(std::ostream& os, const FigureDataset& data)
{
  if (!data.comment.empty()) os << "# " << data.comment << '\n';
  if (!data.rows.empty() || data.fields.empty()) {
    os << "family,m,r,measure,value,method,status,meta\n";
    for (const auto& row : data.rows) {
      os << to_string(row.family) << ',' << row.m << ',' << format_number(row.r) << ',' << to_string(row.measure) << ','
         << format_number(row.result.value) << ',' << to_string(row.result.method) << ',' << status_of(row) << ','
         << csv_field(row.result.meta) << '\n';
    }
  }
  bool first = data.rows.empty();
  for (const auto& block : data.fields) {
    if (!first) os << "\n\n";
    first = false;
    write_field_csv(os, block.header, block.sample);
  }
}

void write_json(std::ostream& os, const FigureDataset& data)
{
  using nlohmann::ordered_json;
  const SweepConfig& c = data.config;
  ordered_json config;
  if (!data.id.empty()) config["figure"] = data.id;
  config["family"] = to_string(c.family);
  config["m"] = c.ms;
  config["r"] = {{"min", c.r_min}, {"max", c.r_max}, {"step", c.r_step}};
  ordered_json measures = ordered_json::array();
  for (const auto m : c.measures) measures.push_back(to_string(m));
  config["measures"] = measures;
  config["cutoff_eps"] = c.cutoff.tail_eps;
  if (!data.comment.empty()) config["comment"] = data.comment;

  ordered_json rows = ordered_json::array();
  for (const auto& row : data.rows) {
    ordered_json j;
    j["family"] = to_string(row.family);
    j["m"] = row.m;
    j["r"] = row.r;
    j["measure"] = to_string(row.measure);
    j["value"] = row.result.value;
    j["method"] = to_string(row.result.method);
    j["status"] = status_of(row);
    j["meta"] = row.result.meta;
    rows.push_back(std::move(j));
  }

  ordered_json fields = ordered_json::array();
  for (const auto& b : data.fields) {
    const auto& g = b.sample.grid;
    ordered_json j;
    j["family"] = b.header.family;
    j["m"] = b.header.m;
    j["r"] = b.header.r;
    j["field"] = b.header.field;
    j["eta"] = b.header.eta;
    j["grid"] = {{"x1_min", g.x1_min}, {"x1_max", g.x1_max}, {"n1", g.n1},
                 {"x2_min", g.x2_min}, {"x2_max", g.x2_max}, {"n2", g.n2}};
    j["values"] = b.sample.values;
    fields.push_back(std::move(j));
  }

  ordered_json doc;
  doc["schema_version"] = 1;
  doc["config"] = config;
  doc["rows"] = rows;
  if (!data.fields.empty()) doc["fields"] = fields;
  os << doc.dump(2) << '\n';
}

void write_dataset(std::ostream& os, const FigureDataset& data, OutputFormat format)
{
  if (format == OutputFormat::Json) {
    write_json(os, data);
  } else {
    write_csv(os, data);
  }
}

}  // namespace ncbs
