// Command-line front end: single-point measures, phase-space grids, sweeps,
// figure datasets and the self-test.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncbs/format.hpp"
#include "ncbs/phase_space.hpp"
#include "ncbs/selftest.hpp"
#include "ncbs/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kBadArgs = 1;
constexpr int kSelftestFailed = 2;
constexpr int kPointFailures = 3;

struct Options {
  std::string family = "pasvs";
  int m = 1;
  double r = 0.5;
  std::string r_range = "0:1.5:0.05";
  std::vector<int> ms{1};
  std::vector<std::string> measures{"ebs"};
  double cutoff_eps = 1e-12;
  std::string grid = "-4:4:41,-4:4:41";
  double eta = 0.5;
  std::string format = "csv";
  std::string out;
  unsigned threads = 0;
  bool numeric = false;
  std::string figure_id;
};

// Writes through a buffer so a failed run never leaves a half-written file.
void emit(const Options& o, const std::string& text)
{
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file '" + o.out + "'");
  f << text;
}

ncbs::CutoffPolicy policy(const Options& o)
{
  if (!(o.cutoff_eps > 0.0)) throw std::invalid_argument("--cutoff-eps must be > 0");
  return ncbs::CutoffPolicy{o.cutoff_eps, 4096};
}

ncbs::SweepConfig single_point(const Options& o, ncbs::Measure measure)
{
  ncbs::SweepConfig c;
  c.family = ncbs::parse_family(o.family);
  c.ms = {o.m};
  c.r_min = c.r_max = o.r;
  c.r_step = 1.0;
  c.measures = {measure};
  c.cutoff = policy(o);
  c.format = ncbs::parse_format(o.format);
  c.threads = o.threads;
  return c;
}

ncbs::SweepConfig sweep_config(const Options& o)
{
  ncbs::SweepConfig c;
  c.family = ncbs::parse_family(o.family);
  c.ms = o.ms;
  std::istringstream rs(o.r_range);
  char c1 = 0, c2 = 0;
  if (!(rs >> c.r_min >> c1 >> c.r_max >> c2 >> c.r_step) || c1 != ':' || c2 != ':' || !rs.eof()) {
    throw std::invalid_argument("--r must be min:max:step for sweeps");
  }
  c.measures.clear();
  for (const auto& m : o.measures) c.measures.push_back(ncbs::parse_measure(m));
  c.cutoff = policy(o);
  c.format = ncbs::parse_format(o.format);
  c.threads = o.threads;
  c.validate();
  return c;
}

int write_dataset(const Options& o, const ncbs::FigureDataset& data)
{
  std::ostringstream os;
  ncbs::write_dataset(os, data, ncbs::parse_format(o.format));
  emit(o, os.str());
  return data.failures() == 0 ? kOk : kPointFailures;
}

int run_state(const Options& o)
{
  const ncbs::StateFamily sf{ncbs::parse_family(o.family), o.m, o.r};
  const ncbs::FockState s = ncbs::make_state(sf, policy(o));
  std::ostringstream os;
  if (ncbs::parse_format(o.format) == ncbs::OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["config"] = {{"family", ncbs::to_string(sf.kind)}, {"m", sf.m}, {"r", sf.r}, {"cutoff_eps", o.cutoff_eps}};
    j["cutoff"] = s.cutoff();
    j["tail"] = s.tail_bound();
    nlohmann::ordered_json amps = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < s.size(); ++n) {
      amps.push_back({{"n", n}, {"re", s[n].real()}, {"im", s[n].imag()}, {"prob", std::norm(s[n])}});
    }
    j["amplitudes"] = amps;
    os << j.dump(2) << '\n';
  } else {
    ncbs::write_state_csv(os, s);
  }
  emit(o, os.str());
  return kOk;
}

int run_field(const Options& o, const std::string& field)
{
  const ncbs::Family fam = ncbs::parse_family(o.family);
  const ncbs::StateFamily sf{fam, o.m, o.r};
  const ncbs::PhaseGrid grid = ncbs::parse_grid(o.grid);
  ncbs::FieldSample sample;
  double eta = o.eta;
  if (field == "Q") {
    eta = 1.0;
    sample = ncbs::q_contour_grid(ncbs::make_state(sf, policy(o)), grid, o.threads);
  } else if (field == "W") {
    eta = 0.5;
    if (o.numeric) {
      const ncbs::FockState s = ncbs::make_state(sf, policy(o));
      sample = ncbs::sample_field([&s](ncbs::cplx a) { return ncbs::wigner_numeric(s, a); }, grid, o.threads);
    } else {
      sample = ncbs::sample_field(ncbs::wigner_closed_evaluator(sf), grid, o.threads);
    }
  } else {
    if (o.numeric) {
      const ncbs::FockState s = ncbs::make_state(sf, policy(o));
      sample = ncbs::sample_field([&](ncbs::cplx z) { return ncbs::r_function_numeric(s, z, eta); }, grid, o.threads);
    } else {
      const ncbs::RFunction rf(fam, o.m, o.r);
      if (!rf.regular(eta)) throw std::invalid_argument("R(z, eta) does not exist at this eta for this state");
      sample = ncbs::sample_field([&](ncbs::cplx z) { return rf(z, eta); }, grid, o.threads);
    }
  }
  ncbs::FigureDataset data;
  data.fields.push_back({ncbs::FieldHeader{std::string(ncbs::to_string(fam)), o.m, o.r, field, eta}, sample});
  data.config.family = fam;
  data.config.ms = {o.m};
  data.config.r_min = data.config.r_max = o.r;
  data.config.measures.clear();
  return write_dataset(o, data);
}

void add_state_flags(CLI::App* sub, Options& o)
{
  sub->add_option("--family", o.family, "number | svs | sns | pasvs")->capture_default_str();
  sub->add_option("--m", o.m, "photon number / additions")->check(CLI::NonNegativeNumber)->capture_default_str();
  sub->add_option("--r", o.r, "squeezing strength")->check(CLI::NonNegativeNumber)->capture_default_str();
  sub->add_option("--cutoff-eps", o.cutoff_eps, "tail probability bound of the Fock truncation")->capture_default_str();
}

void add_output_flags(CLI::App* sub, Options& o)
{
  sub->add_option("--format", o.format, "csv | json")->capture_default_str();
  sub->add_option("--out", o.out, "output file (default stdout)");
  sub->add_option("--threads", o.threads, "worker threads, 0 = all")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Nonclassical single-mode states: beam-splitter entanglement and nonclassicality measures"};
  app.require_subcommand(1);
  Options o;

  auto* state = app.add_subcommand("state", "dump Fock amplitudes (n,re,im,prob)");
  add_state_flags(state, o);
  add_output_flags(state, o);

  struct PointCmd {
    const char* name;
    const char* help;
    ncbs::Measure measure;
    CLI::App* sub = nullptr;
  };
  PointCmd points[] = {{"ebs", "beam-splitter output entanglement (nats)", ncbs::Measure::Ebs},
                       {"negativity", "Wigner negativity delta", ncbs::Measure::Delta},
                       {"ncdepth", "nonclassical depth", ncbs::Measure::NcDepth},
                       {"hsdist", "Hilbert-Schmidt distance to the nearest coherent state", ncbs::Measure::Dnc}};
  for (auto& p : points) {
    p.sub = app.add_subcommand(p.name, p.help);
    add_state_flags(p.sub, o);
    add_output_flags(p.sub, o);
  }

  auto* wigner = app.add_subcommand("wigner", "Wigner function on a grid");
  auto* qgrid = app.add_subcommand("qgrid", "Husimi Q function on a grid");
  auto* rfunc = app.add_subcommand("rfunc", "R(z, eta) on a grid");
  for (auto* sub : {wigner, qgrid, rfunc}) {
    add_state_flags(sub, o);
    add_output_flags(sub, o);
    sub->add_option("--grid", o.grid, "x1min:x1max:n1,x2min:x2max:n2")->capture_default_str();
  }
  wigner->add_flag("--numeric", o.numeric, "displaced-parity evaluation instead of the closed form");
  rfunc->add_flag("--numeric", o.numeric, "Fock-space evaluation (eta >= 1/2)");
  rfunc->add_option("--eta", o.eta, "smoothing parameter in (0, 1]")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "evaluate measures over an (m, r) grid");
  sweep->add_option("--family", o.family, "number | svs | sns | pasvs")->capture_default_str();
  sweep->add_option("--m", o.ms, "comma-separated m values")->delimiter(',')->capture_default_str();
  sweep->add_option("--r", o.r_range, "min:max:step")->capture_default_str();
  sweep->add_option("--measures", o.measures, "ebs, ebs_printed, delta, dnc, ncdepth")->delimiter(',')->capture_default_str();
  sweep->add_option("--cutoff-eps", o.cutoff_eps, "tail probability bound of the Fock truncation")->capture_default_str();
  add_output_flags(sweep, o);

  auto* fig = app.add_subcommand("figure", "canonical figure dataset");
  fig->add_option("id", o.figure_id, "1a 1b 2a 2b 3 4a 4b 5 6")->required();
  fig->add_option("--grid", o.grid, "contour grid for figures 5 and 6");
  add_output_flags(fig, o);

  auto* selftest = app.add_subcommand("selftest", "audits and acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    if (*state) return run_state(o);
    for (const auto& p : points) {
      if (*p.sub) return write_dataset(o, ncbs::run_sweep(single_point(o, p.measure)));
    }
    if (*wigner) return run_field(o, "W");
    if (*qgrid) return run_field(o, "Q");
    if (*rfunc) return run_field(o, "R");
    if (*sweep) return write_dataset(o, ncbs::run_sweep(sweep_config(o)));
    if (*fig) {
      std::optional<ncbs::PhaseGrid> grid;
      if (fig->count("--grid") > 0) grid = ncbs::parse_grid(o.grid);
      return write_dataset(o, ncbs::figure(o.figure_id, o.threads, grid));
    }
    if (*selftest) return ncbs::run_selftest(std::cout) == 0 ? kOk : kSelftestFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPointFailures;
  }
  return kBadArgs;
}
