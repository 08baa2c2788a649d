#include "ncbs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ncbs {

GaussLegendreRule gauss_legendre(int n)
{
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int l = 1; l < n; ++l) {
        const double p2 = ((2.0 * l + 1.0) * x * p1 - l * p0) / (l + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

double envelope_radius(const PhaseFunction& f, double eps, double max_radius)
{
  constexpr int kProbeAngles = 32;
  constexpr double kStep = 0.5;
  int quiet = 0;
  for (double rho = 2.0; rho <= max_radius; rho += kStep) {
    double peak = 0.0;
    for (int i = 0; i < kProbeAngles; ++i) {
      const double th = 2.0 * std::numbers::pi * i / kProbeAngles;
      peak = std::max(peak, std::abs(f(std::polar(rho, th))) * rho * rho);
    }
    quiet = peak < eps ? quiet + 1 : 0;
    if (quiet == 2) return rho;
  }
  return max_radius;
}

namespace {

struct Pair {
  double f = 0.0;
  double a = 0.0;
};

class RayIntegrator {
 public:
  RayIntegrator(const PhaseFunction& f, const PolarQuadratureOptions& opts, double radius)
      : f_(f), opts_(opts), radius_(radius)
  {
  }

  // ∫_0^R g(ρ) ρ dρ for g = f and |f| along direction θ.
  Pair integrate(double theta, double& err, bool& ok)
  {
    dir_ = std::polar(1.0, theta);
    const int panels = std::max(1, static_cast<int>(std::ceil(radius_ / opts_.radial_panel)));
    const double h = radius_ / panels;
    const double tol = opts_.abs_tol / panels;
    Pair total;
    for (int p = 0; p < panels; ++p) {
      const double a = p * h;
      const double b = a + h;
      const double m = 0.5 * (a + b);
      const Pair fa = eval(a), fm = eval(m), fb = eval(b);
      const Pair whole = simpson(a, b, fa, fm, fb);
      const Pair got = adapt(a, b, fa, fm, fb, whole, tol, opts_.max_radial_depth, err, ok);
      total.f += got.f;
      total.a += got.a;
    }
    return total;
  }

  std::size_t evaluations() const { return evals_; }

 private:
  Pair eval(double rho)
  {
    ++evals_;
    const double v = f_(rho * dir_);
    return {v * rho, std::abs(v) * rho};
  }

  static Pair simpson(double a, double b, const Pair& fa, const Pair& fm, const Pair& fb)
  {
    const double w = (b - a) / 6.0;
    return {w * (fa.f + 4.0 * fm.f + fb.f), w * (fa.a + 4.0 * fm.a + fb.a)};
  }

  Pair adapt(double a, double b, const Pair& fa, const Pair& fm, const Pair& fb, const Pair& whole,
             double tol, int depth, double& err, bool& ok)
  {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Pair flm = eval(lm), frm = eval(rm);
    const Pair left = simpson(a, m, fa, flm, fm);
    const Pair right = simpson(m, b, fm, frm, fb);
    const double df = left.f + right.f - whole.f;
    const double da = left.a + right.a - whole.a;
    const double diff = std::max(std::abs(df), std::abs(da));
    if (diff <= 15.0 * tol || depth <= 0) {
      if (depth <= 0 && diff > 15.0 * tol) ok = false;
      err += diff / 15.0;
      return {left.f + right.f + df / 15.0, left.a + right.a + da / 15.0};
    }
    const Pair l = adapt(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, err, ok);
    const Pair r = adapt(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, err, ok);
    return {l.f + r.f, l.a + r.a};
  }

  const PhaseFunction& f_;
  const PolarQuadratureOptions& opts_;
  double radius_;
  std::complex<double> dir_{1.0, 0.0};
  std::size_t evals_ = 0;
};

class AngularIntegrator {
 public:
  AngularIntegrator(RayIntegrator& ray, const PolarQuadratureOptions& opts)
      : ray_(ray), opts_(opts), rule_(gauss_legendre(opts.angular_order))
  {
  }

  Pair integrate(double& err, bool& ok)
  {
    const double width = 2.0 * std::numbers::pi / opts_.angular_panels;
    const double tol = opts_.abs_tol / opts_.angular_panels;
    Pair total;
    for (int p = 0; p < opts_.angular_panels; ++p) {
      const double a = p * width;
      double discarded = 0.0;
      const Pair whole = panel(a, a + width, discarded, ok);
      const Pair got = adapt(a, a + width, whole, tol, opts_.max_angular_depth, err, ok);
      total.f += got.f;
      total.a += got.a;
    }
    return total;
  }

 private:
  Pair panel(double a, double b, double& err, bool& ok)
  {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    Pair s;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      const Pair v = ray_.integrate(mid + half * rule_.nodes[i], err, ok);
      s.f += rule_.weights[i] * v.f;
      s.a += rule_.weights[i] * v.a;
    }
    return {s.f * half, s.a * half};
  }

  Pair adapt(double a, double b, const Pair& whole, double tol, int depth, double& err, bool& ok)
  {
    const double m = 0.5 * (a + b);
    double scratch = 0.0;
    const Pair left = panel(a, m, scratch, ok);
    const Pair right = panel(m, b, scratch, ok);
    const double diff =
        std::max(std::abs(left.f + right.f - whole.f), std::abs(left.a + right.a - whole.a));
    if (diff <= tol || depth <= 0) {
      if (depth <= 0 && diff > tol) ok = false;
      err += diff + scratch;
      return {left.f + right.f, left.a + right.a};
    }
    const Pair l = adapt(a, m, left, 0.5 * tol, depth - 1, err, ok);
    const Pair r = adapt(m, b, right, 0.5 * tol, depth - 1, err, ok);
    return {l.f + r.f, l.a + r.a};
  }

  RayIntegrator& ray_;
  const PolarQuadratureOptions& opts_;
  GaussLegendreRule rule_;
};

}  // namespace

PolarIntegral integrate_polar(const PhaseFunction& f, const PolarQuadratureOptions& opts)
{
  PolarIntegral out;
  out.radius = envelope_radius(f, opts.envelope_eps, opts.max_radius);
  RayIntegrator ray(f, opts, out.radius);
  AngularIntegrator ang(ray, opts);
  double err = 0.0;
  bool ok = true;
  const Pair p = ang.integrate(err, ok);
  out.integral = p.f / std::numbers::pi;
  out.abs_integral = p.a / std::numbers::pi;
  out.error = err / std::numbers::pi;
  out.converged = ok && out.radius < opts.max_radius;
  out.evaluations = ray.evaluations();
  return out;
}

}  // namespace ncbs
