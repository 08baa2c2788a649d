#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace ncbs {

struct SimplexOptions {
  int max_iter = 4000;
  double x_tol = 1e-10;
  double f_tol = 1e-15;
  double initial_step = 0.1;
};

template <std::size_t N>
struct SimplexResult {
  std::array<double, N> x{};
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Nelder–Mead minimization with the standard coefficients (1, 2, ½, ½).
/// Deterministic: the start simplex is `start` plus `initial_step` along each
/// axis. Converged when both the simplex diameter and the spread of function
/// values drop below the tolerances.
template <std::size_t N, typename F>
SimplexResult<N> nelder_mead(F&& f, const std::array<double, N>& start, const SimplexOptions& opts = {})
{
  using Point = std::array<double, N>;
  std::array<Point, N + 1> p{};
  std::array<double, N + 1> v{};
  p[0] = start;
  for (std::size_t i = 0; i < N; ++i) {
    p[i + 1] = start;
    p[i + 1][i] += opts.initial_step;
  }
  for (std::size_t i = 0; i <= N; ++i) v[i] = f(p[i]);

  std::array<std::size_t, N + 1> order{};
  SimplexResult<N> res;
  for (int it = 0; it < opts.max_iter; ++it) {
    for (std::size_t i = 0; i <= N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    const std::size_t best = order[0];
    const std::size_t worst = order[N];
    const std::size_t second = order[N - 1];

    double diam = 0.0;
    for (std::size_t i = 0; i <= N; ++i) {
      for (std::size_t k = 0; k < N; ++k) diam = std::max(diam, std::abs(p[i][k] - p[best][k]));
    }
    if (diam < opts.x_tol && std::abs(v[worst] - v[best]) <= opts.f_tol * (1.0 + std::abs(v[best]))) {
      res.converged = true;
      res.iterations = it;
      break;
    }
    res.iterations = it + 1;

    Point centroid{};
    for (std::size_t i = 0; i <= N; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < N; ++k) centroid[k] += p[i][k] / static_cast<double>(N);
    }
    auto along = [&](double t) {
      Point q;
      for (std::size_t k = 0; k < N; ++k) q[k] = centroid[k] + t * (p[worst][k] - centroid[k]);
      return q;
    };

    const Point xr = along(-1.0);
    const double fr = f(xr);
    if (fr < v[best]) {
      const Point xe = along(-2.0);
      const double fe = f(xe);
      if (fe < fr) {
        p[worst] = xe, v[worst] = fe;
      } else {
        p[worst] = xr, v[worst] = fr;
      }
      continue;
    }
    if (fr < v[second]) {
      p[worst] = xr, v[worst] = fr;
      continue;
    }
    const bool outside = fr < v[worst];
    const Point xc = along(outside ? -0.5 : 0.5);
    const double fc = f(xc);
    if (fc < (outside ? fr : v[worst])) {
      p[worst] = xc, v[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= N; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < N; ++k) p[i][k] = p[best][k] + 0.5 * (p[i][k] - p[best][k]);
      v[i] = f(p[i]);
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i <= N; ++i) {
    if (v[i] < v[best]) best = i;
  }
  res.x = p[best];
  res.f = v[best];
  return res;
}

}  // namespace ncbs
