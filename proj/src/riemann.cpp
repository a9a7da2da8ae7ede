// Fixed-grid midpoint oracle. Deliberately independent of the adaptive
// engine: it shares only the pointwise integrands and the truncated domain.

#include <cmath>
#include <numbers>

#include "qfric/errors.hpp"
#include "qfric/quadrature.hpp"

namespace qfric {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double midpoint(double lo, double h, int i) { return lo + (i + 0.5) * h; }

// omega = W v^2. Near omega = kappa = 0 the surface response depends on
// omega / kappa^2 (Drude skin depth); in (v, kappa) that is a function of
// direction only, and the midpoint rule keeps second order.
double evanescent_sum(FormulationId f, const ScenarioParams& p,
                      const TruncatedDomain& d, int n) {
  const double hv = 1.0 / n;
  const double ht = d.theta_max / n;
  const double hk = d.kappa_max / n;
  double total = 0.0;
  const int halves = d.full_axis ? 2 : 1;
  for (int half = 0; half < halves; ++half) {
    const double sign = half == 0 ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) {
      const double v = midpoint(0.0, hv, i);
      const double omega = sign * d.omega_max * v * v;
      const double jac = 2.0 * d.omega_max * v;
      double plane = 0.0;
      for (int j = 0; j < n; ++j) {
        const double theta = midpoint(0.0, ht, j);
        double row = 0.0;
        for (int k = 0; k < n; ++k) {
          const double kappa = midpoint(0.0, hk, k);
          row += kappa * ev_integrand(f, evanescent_mode(omega, kappa, theta), p);
        }
        plane += row;
      }
      total += jac * plane;
    }
  }
  return total * hv * ht * hk / (two_pi * two_pi * two_pi);
}

template <class Integrand>
double propagating_sum(const TruncatedDomain& d, int n, Integrand&& integrand) {
  const double hw = d.omega_max / n;
  const double ht = d.theta_max / n;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double omega = midpoint(0.0, hw, i);
    const double hq = omega / n;
    double plane = 0.0;
    for (int j = 0; j < n; ++j) {
      const double theta = midpoint(0.0, ht, j);
      double row = 0.0;
      for (int k = 0; k < n; ++k) {
        const double qz = midpoint(0.0, hq, k);
        row += qz * integrand(propagating_mode(omega, qz, theta));
      }
      plane += row * hq;
    }
    total += plane;
  }
  return total * hw * ht / (two_pi * two_pi * two_pi);
}

double freespace_sum(FormulationId f, const ScenarioParams& p,
                     const TruncatedDomain& d, int n) {
  const double hw = d.omega_max / n;
  const double hx = 2.0 / n;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double omega = midpoint(0.0, hw, i);
    double row = 0.0;
    for (int k = 0; k < n; ++k)
      row += freespace_integrand(f, omega, midpoint(-1.0, hx, k), p);
    total += row;
  }
  return total * hw * hx / two_pi;
}

}  // namespace

double riemann_oracle(ForceSector sector, FormulationId f,
                      const ScenarioParams& p, int grid_n,
                      const QuadratureSpec& spec) {
  if (grid_n < 32) throw DomainError("riemann_oracle needs grid_n >= 32");
  validate(p);
  const auto d = truncated_domain(f, sector, p, spec);
  switch (sector) {
    case ForceSector::Evanescent:
      return evanescent_sum(f, p, d, grid_n);
    case ForceSector::PropSurface:
      return propagating_sum(d, grid_n, [&](const ModePoint& m) {
        return prop_surface_integrand(f, m, p);
      });
    case ForceSector::VPStress:
      if (f != FormulationId::VP)
        throw UnsupportedCombination("propagating stress exists only for VP");
      return propagating_sum(d, grid_n, [&](const ModePoint& m) {
        return vp_stress_integrand(m, p);
      });
    case ForceSector::FreeSpace:
      return freespace_sum(f, p, d, grid_n);
  }
  return 0.0;
}

}  // namespace qfric
