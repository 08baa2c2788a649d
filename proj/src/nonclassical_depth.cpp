#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncbs/format.hpp"
#include "ncbs/optimize.hpp"
#include "ncbs/phase_space.hpp"

namespace ncbs {

namespace {

using Point = std::array<double, 2>;

cplx to_z(const Point& p) { return {p[0], p[1]}; }

struct Node {
  double value;
  cplx z;
};

class DepthSearch {
 public:
  DepthSearch(Family family, int m, double r, const DepthSearchOptions& opts)
      : rf_(family, m, r), opts_(opts)
  {
    find_q_zeros();
  }

  DepthProbe probe(double eta) const
  {
    DepthProbe p;
    p.eta = eta;
    p.regular = rf_.regular(eta);
    if (!p.regular) return p;

    auto ratio = [&](const Point& x) { return rf_.sample(to_z(x), eta).ratio(); };
    auto consider = [&](double v, cplx z) {
      if (v < p.min_ratio) {
        p.min_ratio = v;
        p.argmin = z;
      }
    };

    const double half = extent(eta);
    const double h = opts_.base_spacing / std::pow(2.0, opts_.refinements);
    const int n = static_cast<int>(std::ceil(half / h));
    std::vector<Node> lowest;
    for (int i = -n; i <= n; ++i) {
      for (int j = -n; j <= n; ++j) {
        const cplx z(i * h, j * h);
        const double v = rf_.sample(z, eta).ratio();
        consider(v, z);
        keep_lowest(lowest, {v, z});
      }
    }

    // Negativity close to η = 1 is confined to shrinking patches around the
    // zeros of Q, of width ~ sqrt(1 − η).
    const double w = std::sqrt(1.0 - eta);
    for (const cplx z0 : q_zeros_) {
      if (p.min_ratio < -opts_.tol_neg) break;
      Node best{ratio({z0.real(), z0.imag()}), z0};
      for (const double f : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
        for (int k = 0; k < 16; ++k) {
          const cplx z = z0 + std::polar(f * w, 2.0 * std::numbers::pi * k / 16.0);
          const double v = ratio({z.real(), z.imag()});
          if (v < best.value) best = {v, z};
        }
      }
      consider(best.value, best.z);
      keep_lowest(lowest, best);
    }

    SimplexOptions so;
    so.max_iter = 600;
    for (const Node& s : lowest) {
      if (p.min_ratio < -opts_.tol_neg) break;
      so.initial_step = std::max(0.5 * w, 1e-4);
      const auto res = nelder_mead<2>(ratio, Point{s.z.real(), s.z.imag()}, so);
      consider(res.f, to_z(res.x));
    }
    p.washed_out = p.min_ratio >= -opts_.tol_neg;
    return p;
  }

 private:
  void keep_lowest(std::vector<Node>& lowest, Node n) const
  {
    const auto cap = static_cast<std::size_t>(std::max(opts_.local_seeds, 0));
    if (cap == 0) return;
    if (lowest.size() < cap) {
      lowest.push_back(n);
    } else if (n.value < lowest.back().value) {
      lowest.back() = n;
    } else {
      return;
    }
    std::sort(lowest.begin(), lowest.end(), [](const Node& a, const Node& b) { return a.value < b.value; });
  }

  // Half-width of the square beyond which the |terms| envelope of R drops
  // below envelope_eps on a probe ring.
  double extent(double eta) const
  {
    constexpr int kAngles = 64;
    for (double rho = 2.0; rho < 40.0; rho += 0.5) {
      double peak = 0.0;
      for (int k = 0; k < kAngles; ++k) {
        peak = std::max(peak, rf_.sample(std::polar(rho, 2.0 * std::numbers::pi * k / kAngles), eta).scale);
      }
      if (peak < opts_.envelope_eps) return rho;
    }
    return 40.0;
  }

  // Zeros of Q (R at η = 1): interior local minima of a coarse grid that are
  // small compared to the peak, polished by simplex search.
  void find_q_zeros()
  {
    const double h = opts_.base_spacing / 2.0;
    const double half = extent(1.0);
    const int n = static_cast<int>(std::ceil(half / h));
    const int side = 2 * n + 1;
    std::vector<double> q(static_cast<std::size_t>(side * side));
    double peak = 0.0;
    for (int i = 0; i < side; ++i) {
      for (int j = 0; j < side; ++j) {
        const double v = rf_(cplx((i - n) * h, (j - n) * h), 1.0);
        q[static_cast<std::size_t>(i * side + j)] = v;
        peak = std::max(peak, v);
      }
    }
    auto at = [&](int i, int j) { return q[static_cast<std::size_t>(i * side + j)]; };
    SimplexOptions so;
    so.initial_step = h;
    so.max_iter = 2000;
    so.f_tol = 0.0;
    so.x_tol = 1e-12;
    auto qf = [&](const Point& x) { return rf_(to_z(x), 1.0); };
    for (int i = 1; i + 1 < side; ++i) {
      for (int j = 1; j + 1 < side; ++j) {
        const double v = at(i, j);
        if (v > 1e-2 * peak) continue;
        bool is_min = true;
        for (int di = -1; di <= 1 && is_min; ++di) {
          for (int dj = -1; dj <= 1; ++dj) {
            if ((di != 0 || dj != 0) && at(i + di, j + dj) < v) {
              is_min = false;
              break;
            }
          }
        }
        if (!is_min) continue;
        const auto res = nelder_mead<2>(qf, Point{(i - n) * h, (j - n) * h}, so);
        if (res.f > 1e-12 * peak) continue;
        const cplx z = to_z(res.x);
        const bool dup = std::any_of(q_zeros_.begin(), q_zeros_.end(),
                                     [&](cplx o) { return std::abs(o - z) < 1e-6; });
        if (!dup) q_zeros_.push_back(z);
      }
    }
  }

  RFunction rf_;
  DepthSearchOptions opts_;
  std::vector<cplx> q_zeros_;
};

}  // namespace

MeasureResult DepthReport::as_measure() const
{
  MeasureResult res;
  res.value = depth;
  res.method = Method::CorrectedClosedForm;
  res.converged = true;
  double highest_negative = 0.0;
  for (const auto& p : probes) {
    if (!p.washed_out && p.eta > highest_negative) highest_negative = p.eta;
  }
  res.error_estimate = probes.empty() ? 0.0 : depth - highest_negative;
  res.meta = "probes=" + std::to_string(probes.size()) + ";highest_failing_eta=" + format_number(highest_negative);
  return res;
}

DepthReport nonclassical_depth(Family family, int m, double r, const DepthSearchOptions& opts)
{
  if (opts.bisection_steps < 1) throw std::invalid_argument("nonclassical_depth: need at least one bisection step");
  DepthSearch search(family, m, r, opts);
  const bool gaussian = family == Family::SqueezedVacuum || m == 0;
  double lo = gaussian ? 0.0 : 0.5;
  double hi = 1.0;
  DepthReport report;
  report.probes.push_back(search.probe(1.0));
  if (!report.probes.back().washed_out) {
    report.depth = 1.0;
    return report;
  }
  for (int step = 0; step < opts.bisection_steps; ++step) {
    const double mid = 0.5 * (lo + hi);
    report.probes.push_back(search.probe(mid));
    if (report.probes.back().washed_out) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  report.depth = hi;
  return report;
}

}  // namespace ncbs
