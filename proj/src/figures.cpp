#include <stdexcept>

#include "ncbs/format.hpp"
#include "ncbs/parallel.hpp"
#include "ncbs/sweep.hpp"

namespace ncbs {

namespace {

constexpr const char* kRGrid = "r=0:1.5:0.05";

SweepConfig preset(Family family, std::vector<int> ms, std::vector<Measure> measures, unsigned threads)
{
  SweepConfig c;
  c.family = family;
  c.ms = std::move(ms);
  c.measures = std::move(measures);
  c.threads = threads;
  return c;
}

FigureDataset run_preset(const std::string& id, const SweepConfig& c, const std::string& what)
{
  FigureDataset d = run_sweep(c);
  d.id = id;
  d.comment = "figure=" + id + " " + what;
  return d;
}

FigureDataset q_contours(const std::string& id, Family family, unsigned threads, const PhaseGrid& grid)
{
  static constexpr double kRs[] = {0.2, 0.6, 1.0, 1.4};
  FigureDataset d;
  d.id = id;
  d.config = preset(family, {1, 2, 3, 4, 5}, {}, threads);
  d.config.r_min = kRs[0];
  d.config.r_max = kRs[3];
  d.config.r_step = 0.4;
  d.comment = "figure=" + id + " field=Q m=1..5 r=0.2,0.6,1.0,1.4 grid=" + format_number(grid.x1_min) + ":" +
              format_number(grid.x1_max) + ":" + std::to_string(grid.n1) + "," + format_number(grid.x2_min) + ":" +
              format_number(grid.x2_max) + ":" + std::to_string(grid.n2);
  for (const int m : d.config.ms) {
    for (const double r : kRs) {
      d.fields.push_back({FieldHeader{std::string(to_string(family)), m, r, "Q", 1.0}, FieldSample{grid, {}}});
    }
  }
  parallel_for(d.fields.size(), threads, [&](std::size_t i) {
    FieldBlock& b = d.fields[i];
    const FockState s = make_state({family, b.header.m, b.header.r});
    b.sample = q_contour_grid(s, grid, 1);
  });
  return d;
}

}  // namespace

FigureDataset figure(const std::string& id, unsigned threads, const std::optional<PhaseGrid>& grid)
{
  const std::vector<int> m15{1, 2, 3, 4, 5};
  if (id == "1a") {
    SweepConfig c = preset(Family::Number, {0, 1, 2, 3, 4, 5}, {Measure::Ebs}, threads);
    c.r_max = 0.0;
    return run_preset(id, c, "E_BS of number states m=0..5");
  }
  if (id == "1b") {
    return run_preset(id, preset(Family::SqueezedVacuum, {0}, {Measure::EbsPrinted, Measure::Ebs}, threads),
                      "E_BS of the squeezed vacuum, printed formula and Fock-space value " + std::string(kRGrid));
  }
  if (id == "2a") return run_preset(id, preset(Family::PASVS, m15, {Measure::Ebs}, threads), "PASVS E_BS " + std::string(kRGrid));
  if (id == "2b") return run_preset(id, preset(Family::SNS, m15, {Measure::Ebs}, threads), "SNS E_BS " + std::string(kRGrid));
  if (id == "3") {
    return run_preset(id, preset(Family::PASVS, m15, {Measure::Delta}, threads),
                      "PASVS Wigner negativity " + std::string(kRGrid));
  }
  if (id == "4a") return run_preset(id, preset(Family::PASVS, m15, {Measure::Dnc}, threads), "PASVS d_NC " + std::string(kRGrid));
  if (id == "4b") return run_preset(id, preset(Family::SNS, m15, {Measure::Dnc}, threads), "SNS d_NC " + std::string(kRGrid));
  const PhaseGrid g = grid.value_or(PhaseGrid{-5.0, 5.0, 101, -5.0, 5.0, 101});
  if (id == "5") return q_contours(id, Family::PASVS, threads, g);
  if (id == "6") return q_contours(id, Family::SNS, threads, g);
  throw std::invalid_argument("unknown figure id '" + id + "' (1a 1b 2a 2b 3 4a 4b 5 6)");
}

}  // namespace ncbs
