#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace ncbs {

using PhaseFunction = std::function<double(std::complex<double>)>;

struct GaussLegendreRule {
  std::vector<double> nodes;    ///< on [−1, 1]
  std::vector<double> weights;
};

/// n-point Gauss–Legendre rule (Newton iteration on P_n).
GaussLegendreRule gauss_legendre(int n);

/// Options for integrating over the phase plane in polar coordinates.
///
/// The angular rule starts as `angular_panels` panels of a
/// `angular_order`-point Gauss–Legendre rule (64 nodes by default); a panel
/// is bisected while it disagrees with its two halves by more than the
/// tolerance. Along each ray, adaptive Simpson panels run out to the radius
/// beyond which |f| ρ² stays below `envelope_eps`.
struct PolarQuadratureOptions {
  int angular_order = 16;
  int angular_panels = 4;
  int max_angular_depth = 10;
  double abs_tol = 1e-10;
  double radial_panel = 0.25;
  int max_radial_depth = 40;
  double envelope_eps = 1e-14;
  double max_radius = 60.0;
};

struct PolarIntegral {
  double integral = 0.0;      ///< ∫ f d²α/π
  double abs_integral = 0.0;  ///< ∫ |f| d²α/π
  double error = 0.0;         ///< estimated absolute error of either integral
  double radius = 0.0;        ///< integration radius used
  std::size_t evaluations = 0;
  bool converged = true;
};

/// ∫ f(α) d²α/π and ∫ |f(α)| d²α/π over the plane, α = ρ e^{iθ}.
PolarIntegral integrate_polar(const PhaseFunction& f, const PolarQuadratureOptions& opts = {});

/// Radius beyond which max_θ |f| ρ² < eps on two consecutive probe rings.
double envelope_radius(const PhaseFunction& f, double eps, double max_radius);

}  // namespace ncbs
