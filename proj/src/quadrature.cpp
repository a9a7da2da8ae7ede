#include "qfric/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "qfric/adaptive.hpp"
#include "qfric/errors.hpp"

namespace qfric {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

struct Levels {
  quad::Tolerance outer;
  quad::Tolerance middle;
  quad::Tolerance inner;
};

// Inner integrals are converged against their own |f| mass, a decade
// tighter than the outer target. The qx-odd part has already cancelled
// pointwise (theta paired with pi - theta), so that mass is close to the net
// integral, and what is left below rounding is covered by the noise term.
Levels levels(const QuadratureSpec& spec, double measure) {
  Levels lv;
  lv.outer = {spec.rel_tol, spec.abs_floor / measure, false, 4000};
  lv.middle = {spec.rel_tol * 1e-1, 0.0, true, 600};
  lv.inner = {spec.rel_tol * 1e-1, 0.0, true, 400};
  return lv;
}

double characteristic_frequency(const ScenarioParams& p) {
  return std::max({p.thermal.t1, p.thermal.t2, p.particle.omega0,
                   p.surface.omega_p});
}

// Log-spaced seeds scale * 2^k inside (0, hi), plus the end points.
std::vector<double> frequency_breaks(double hi, double scale, bool full_axis) {
  std::vector<double> pos{0.0};
  for (double w = scale / 8.0; w < hi; w *= 2.0) pos.push_back(w);
  pos.push_back(hi);
  if (!full_axis) return pos;
  std::vector<double> all;
  all.reserve(2 * pos.size());
  for (auto it = pos.rbegin(); it != pos.rend(); ++it)
    if (*it != 0.0) all.push_back(-*it);
  all.insert(all.end(), pos.begin(), pos.end());
  return all;
}

// Every integrand is even in qy, so full-plane forms are integrated over the
// upper half plane theta in [0, pi] and doubled. The quadrant forms keep
// their own range [0, pi/2].
struct AngularRange {
  double hi;
  double weight;
};

AngularRange angular_range(const TruncatedDomain& d) {
  return d.theta_max > pi ? AngularRange{pi, 2.0}
                          : AngularRange{d.theta_max, 1.0};
}

std::vector<double> angle_breaks(double hi) {
  std::vector<double> b;
  for (double t = 0.0; t < hi - 1e-12; t += 0.5 * pi) b.push_back(t);
  b.push_back(hi);
  return b;
}

// Sorts and drops breakpoints closer than `gap` to the previous one; a
// sliver panel would put its nodes on top of the feature itself.
void sort_unique(std::vector<double>& v, double gap) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end(),
                      [gap](double a, double b) { return b - a <= gap; }),
          v.end());
}

ForceResult finish(const quad::AdaptiveResult& r, double measure,
                   const quad::Budget& budget, FormulationId f,
                   ForceSector sector) {
  ForceResult res{r.estimate.value * measure, r.estimate.error * measure,
                  budget.evals, f, sector};
  if (!r.converged)
    throw NonConvergenceError(
        std::string("quadrature did not converge (") +
            std::string(to_string(f)) + ", " + std::string(to_string(sector)) +
            ")",
        res);
  return res;
}

void check_inputs(const ScenarioParams& p, const QuadratureSpec& spec) {
  validate(p);
  validate(spec);
}

}  // namespace

void validate(const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
  if (!(spec.abs_floor >= 0.0)) throw DomainError("abs_floor must be >= 0");
  if (spec.max_evals <= 0) throw DomainError("max_evals must be positive");
  if (!(std::exp(-spec.tail_exponent) < spec.rel_tol * 1e-3))
    throw DomainError("tail_exponent too small for the requested rel_tol");
  if (!(spec.omega_cutoff_factor > 0.0))
    throw DomainError("omega_cutoff_factor must be positive");
}

double omega_cutoff(const ScenarioParams& p, const QuadratureSpec& spec) {
  return spec.omega_cutoff_factor * characteristic_frequency(p) * p.kin.gamma *
         (1.0 + p.kin.beta);
}

TruncatedDomain truncated_domain(FormulationId f, ForceSector sector,
                                 const ScenarioParams& p,
                                 const QuadratureSpec& spec) {
  TruncatedDomain d;
  d.omega_max = omega_cutoff(p, spec);
  d.theta_max = f == FormulationId::DK_quadrant ? 0.5 * pi : two_pi;
  if (sector == ForceSector::Evanescent) {
    d.kappa_max = spec.tail_exponent / (2.0 * p.kin.z);
    d.omega_max =
        std::max(d.omega_max, p.kin.gamma * p.kin.beta * d.kappa_max);
    d.full_axis = f == FormulationId::PH;
  }
  return d;
}

ForceResult integrate_evanescent(FormulationId f, const ScenarioParams& p,
                                 const QuadratureSpec& spec) {
  check_inputs(p, spec);
  const auto dom = truncated_domain(f, ForceSector::Evanescent, p, spec);
  const auto ang = angular_range(dom);
  const double measure = ang.weight / (two_pi * two_pi * two_pi);
  const auto lv = levels(spec, measure);
  const double beta = p.kin.beta;
  const double gamma = p.kin.gamma;
  const double kmax = dom.kappa_max;
  const double w0 = p.particle.omega0;
  const double half_width = p.particle.gamma_a;
  quad::Budget budget{0, spec.max_evals};

  // Breakpoints of the kappa integral at fixed (w, theta):
  //  - the anomalous-Doppler line w' = 0, where Im a(w') [N1 - N2(w')] is
  //    continuous but kinked;
  //  - the particle resonance w' = +-w0, flanked at two half-widths;
  //  - the surface-plasmon pole of R_p, kappa^2 = -w^2 / (Re eps + 1);
  //  - octaves of the e^{-2 kappa z} decay length.
  // Full-plane forms pair theta with pi - theta, as in the propagating
  // sector; at beta = 0 the pair cancels exactly and the force is a clean 0.
  const bool paired = ang.weight == 2.0;
  const double theta_hi = paired ? 0.5 * pi : ang.hi;
  const auto kappa_integral = [&](double omega, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double aw = std::abs(omega);
    std::vector<double> br{0.0, kmax};
    const auto add_q = [&](double q) {
      if (q > aw) {
        const double k = std::sqrt((q - aw) * (q + aw));
        if (k < kmax) br.push_back(k);
      }
    };
    if (beta > 0.0 && c != 0.0) {
      for (double cx : {c, -c}) {
        if (cx == -c && !paired) break;
        const double slope = gamma * beta * cx;  // -dw'/dq
        add_q(gamma * omega / slope);
        for (double target : {-w0, w0}) {
          const double qres = (gamma * omega - target) / slope;
          const double dq = half_width / std::abs(slope);
          for (double q : {qres - 2.0 * dq, qres, qres + 2.0 * dq}) add_q(q);
        }
      }
    }
    const double re_eps = drude_eps(p.surface, omega).real();
    if (re_eps < -1.0) {
      const double k = aw / std::sqrt(-(re_eps + 1.0));
      if (k < kmax) br.push_back(k);
    }
    for (double k = 0.25 / p.kin.z; k < kmax; k *= 2.0) br.push_back(k);
    sort_unique(br, 1e-9 * kmax);
    br.back() = kmax;
    auto g = [&](double kappa) {
      const double a = ev_integrand(f, evanescent_mode(omega, kappa, c, s), p);
      if (!paired) {
        ++budget.evals;
        return quad::Estimate{kappa * a, 0.0, std::abs(kappa * a), 0.0};
      }
      const double b = ev_integrand(f, evanescent_mode(omega, kappa, -c, s), p);
      budget.evals += 2;
      const double v = kappa * (a + b);
      return quad::Estimate{v, 0.0, std::abs(v), eps * kappa * (std::abs(a) + std::abs(b))};
    };
    return quad::integrate(g, br, lv.inner, budget).estimate;
  };

  const auto base_angles = angle_breaks(theta_hi);
  const auto theta_integral = [&](double omega) {
    // Directions along which the kink line leaves the kappa box.
    std::vector<double> br = base_angles;
    if (beta > 0.0) {
      const double c = std::abs(omega) / (beta * std::hypot(kmax, omega));
      if (c < 1.0) {
        const double t = std::acos(c);
        double a = omega > 0.0 ? t : pi - t;
        if (paired && a > theta_hi) a = pi - a;
        if (a > 0.0 && a < theta_hi) br.push_back(a);
        sort_unique(br, 1e-9);
        br.back() = theta_hi;
      }
    }
    auto g = [&](double theta) { return kappa_integral(omega, theta); };
    return quad::integrate(g, br, lv.middle, budget).estimate;
  };

  const auto wbreaks = frequency_breaks(dom.omega_max,
                                        characteristic_frequency(p), dom.full_axis);
  const auto r = quad::integrate(theta_integral, wbreaks, lv.outer, budget);
  return finish(r, measure, budget, f, ForceSector::Evanescent);
}

namespace {

// (1/(2pi)^3) \int_0^wmax dw \int dtheta \int_0^w dqz  qz * integrand(mode),
// with ceil(2 w z / pi) initial q_z panels for the cos/sin(2 q_z z) factors.
// Full-plane forms pair theta with pi - theta (qx -> -qx) inside the q_z
// integrand. The part of the integrand odd in qx with no w' dependence
// (surface occupation N1) cancels there, not in the angular integral; when T2
// is small that part outweighs the net force by ~1e6 and would otherwise pin
// the L1-relative inner tolerances far above the target.
template <class Integrand>
ForceResult integrate_propagating(FormulationId f, ForceSector sector,
                                  const ScenarioParams& p,
                                  const QuadratureSpec& spec,
                                  Integrand&& integrand) {
  const auto dom = truncated_domain(f, sector, p, spec);
  const auto ang = angular_range(dom);
  const double measure = ang.weight / (two_pi * two_pi * two_pi);
  const auto lv = levels(spec, measure);
  quad::Budget budget{0, spec.max_evals};
  const double z = p.kin.z;
  const bool paired = ang.weight == 2.0;

  const auto qz_integral = [&](double omega, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const int panels =
        std::max(1, static_cast<int>(std::ceil(2.0 * omega * z / pi)));
    std::vector<double> br(static_cast<std::size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i) br[i] = omega * i / panels;
    br.back() = omega;
    auto g = [&](double qz) {
      const double a = integrand(propagating_mode(omega, qz, c, s));
      if (!paired) {
        ++budget.evals;
        return quad::Estimate{qz * a, 0.0, std::abs(qz * a), 0.0};
      }
      const double b = integrand(propagating_mode(omega, qz, -c, s));
      budget.evals += 2;
      const double v = qz * (a + b);
      return quad::Estimate{v, 0.0, std::abs(v), eps * qz * (std::abs(a) + std::abs(b))};
    };
    auto tol = lv.inner;
    tol.max_panels = std::max(tol.max_panels, 4 * panels);
    return quad::integrate(g, br, tol, budget).estimate;
  };
  const auto angles = angle_breaks(paired ? 0.5 * pi : ang.hi);
  const auto theta_integral = [&](double omega) {
    auto g = [&](double theta) { return qz_integral(omega, theta); };
    return quad::integrate(g, angles, lv.middle, budget).estimate;
  };
  const auto wbreaks =
      frequency_breaks(dom.omega_max, characteristic_frequency(p), false);
  const auto r = quad::integrate(theta_integral, wbreaks, lv.outer, budget);
  return finish(r, measure, budget, f, sector);
}

}  // namespace

ForceResult integrate_prop_surface(FormulationId f, const ScenarioParams& p,
                                   const QuadratureSpec& spec) {
  check_inputs(p, spec);
  if (f == FormulationId::VP)
    throw UnsupportedCombination(
        "no per-particle propagating surface force is defined for VP");
  return integrate_propagating(
      f, ForceSector::PropSurface, p, spec,
      [&](const ModePoint& m) { return prop_surface_integrand(f, m, p); });
}

ForceResult integrate_vp_stress(const ScenarioParams& p,
                                const QuadratureSpec& spec) {
  check_inputs(p, spec);
  return integrate_propagating(
      FormulationId::VP, ForceSector::VPStress, p, spec,
      [&](const ModePoint& m) { return vp_stress_integrand(m, p); });
}

ForceResult integrate_freespace(FormulationId f, const ScenarioParams& p,
                                const QuadratureSpec& spec) {
  check_inputs(p, spec);
  if (f != FormulationId::PH && f != FormulationId::DK_folded)
    throw UnsupportedCombination("free-space force is defined for PH and DK only");
  const auto dom = truncated_domain(f, ForceSector::FreeSpace, p, spec);
  const double measure = 1.0 / two_pi;
  const auto lv = levels(spec, measure);
  quad::Budget budget{0, spec.max_evals};
  const std::array<double, 3> xbreaks{-1.0, 0.0, 1.0};
  const auto x_integral = [&](double omega) {
    auto g = [&](double x) { return freespace_integrand(f, omega, x, p); };
    return quad::integrate(g, xbreaks, lv.inner, budget).estimate;
  };
  const auto wbreaks =
      frequency_breaks(dom.omega_max, characteristic_frequency(p), false);
  const auto r = quad::integrate(x_integral, wbreaks, lv.outer, budget);
  return finish(r, measure, budget, f, ForceSector::FreeSpace);
}

}  // namespace qfric
