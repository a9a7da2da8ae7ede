#include "qfric/integrands.hpp"

#include <cmath>
#include <numbers>

#include "qfric/errors.hpp"

namespace qfric {

namespace {

constexpr double pi = std::numbers::pi;

ReflectionPair surface_reflection(const ModePoint& m, const ScenarioParams& p) {
  const cplx eps = drude_eps(p.surface, m.omega);
  const cplx k1 = medium_kappa1(m.omega, m.transverse, eps, m.sector);
  return reflection_coeffs(m.complex_kappa(), k1, eps);
}

// Im alpha(w') [N1(w) - N2(w')]
double particle_factor(double omega, double omega_prime,
                       const ScenarioParams& p) {
  return lorentz_alpha(p.particle, omega_prime).imag() *
         occupation_difference(omega, p.thermal.t1, omega_prime, p.thermal.t2);
}

struct WeightedReflection {
  double re = 0.0;  // sum_mu phi_mu Re R_mu
  double im = 0.0;  // sum_mu phi_mu Im R_mu
};

WeightedReflection weighted(const ModePoint& m, double omega_prime,
                            const ReflectionPair& r, const Kinematics& kin) {
  const auto w = polarization_weights(omega_prime, m.qx, m.qy, m.kappa_sq(), kin);
  return {w.phis * r.rs.real() + w.phip * r.rp.real(),
          w.phis * r.rs.imag() + w.phip * r.rp.imag()};
}

void require_evanescent(const ModePoint& m) {
  if (m.sector != Sector::Evanescent)
    throw DomainError("evanescent integrand needs q > |omega|");
  if (m.transverse == 0.0)
    throw SingularityError("evanescent integrand is singular at kappa = 0");
}

void require_propagating(const ModePoint& m) {
  if (m.sector != Sector::Propagating)
    throw DomainError("propagating integrand needs q < |omega|");
  if (m.transverse == 0.0)
    throw SingularityError("propagating integrand is singular at q_z = 0");
  if (!(m.omega > 0.0))
    throw DomainError("propagating forms are defined for omega > 0 only");
}

void require_quadrant(const ModePoint& m) {
  if (!(m.qx >= 0.0 && m.qy >= 0.0))
    throw DomainError("quadrant integrand needs qx >= 0 and qy >= 0");
}

// (qx / kappa) e^{-2 kappa z} Im a(w') [N1 - N2(w')] sum phi Im R
double ev_core(const ModePoint& m, double omega_prime, const ReflectionPair& r,
               const ScenarioParams& p) {
  const double kappa = m.transverse;
  const double decay = std::exp(-2.0 * kappa * p.kin.z);
  return (m.qx / kappa) * decay * particle_factor(m.omega, omega_prime, p) *
         weighted(m, omega_prime, r, p.kin).im;
}

}  // namespace

void validate(const ScenarioParams& p) {
  make_kinematics(p.kin.beta, p.kin.z);
  make_thermal(p.thermal.t1, p.thermal.t2);
  make_drude(p.surface.omega_p, p.surface.gamma_d);
  make_lorentz(p.particle.alpha0, p.particle.omega0, p.particle.gamma_a);
}

std::string_view to_string(FormulationId f) {
  switch (f) {
    case FormulationId::PH: return "ph";
    case FormulationId::VP: return "vp";
    case FormulationId::DK_folded: return "dk";
    case FormulationId::DK_quadrant: return "dk-quadrant";
  }
  return "?";
}

std::string_view to_string(ForceSector s) {
  switch (s) {
    case ForceSector::Evanescent: return "ev";
    case ForceSector::PropSurface: return "prop-surface";
    case ForceSector::FreeSpace: return "free-space";
    case ForceSector::VPStress: return "vp-stress";
  }
  return "?";
}

FormulationId parse_formulation(std::string_view name) {
  if (name == "ph") return FormulationId::PH;
  if (name == "vp") return FormulationId::VP;
  if (name == "dk") return FormulationId::DK_folded;
  if (name == "dk-quadrant") return FormulationId::DK_quadrant;
  throw DomainError("unknown formulation '" + std::string(name) + "'");
}

ForceSector parse_sector(std::string_view name) {
  if (name == "ev") return ForceSector::Evanescent;
  if (name == "prop-surface") return ForceSector::PropSurface;
  if (name == "free-space") return ForceSector::FreeSpace;
  if (name == "vp-stress") return ForceSector::VPStress;
  throw DomainError("unknown sector '" + std::string(name) + "'");
}

double ev_integrand(FormulationId f, const ModePoint& m,
                    const ScenarioParams& p) {
  if (f == FormulationId::DK_quadrant) return dk_ev_quadrant_integrand(m, p);
  require_evanescent(m);
  if (f != FormulationId::PH && !(m.omega > 0.0))
    throw DomainError("VP and DK evanescent forms are defined for omega > 0");
  const double wp = doppler(m.omega, m.qx, p.kin, DopplerSign::Minus);
  const double core = ev_core(m, wp, surface_reflection(m, p), p);
  switch (f) {
    case FormulationId::PH: return core / p.kin.gamma;
    case FormulationId::VP: return -8.0 * pi * core;
    default: return 8.0 * pi / p.kin.gamma * core;
  }
}

double dk_ev_quadrant_integrand(const ModePoint& m, const ScenarioParams& p) {
  require_evanescent(m);
  require_quadrant(m);
  if (!(m.omega > 0.0))
    throw DomainError("DK quadrant form is defined for omega > 0");
  const auto r = surface_reflection(m, p);
  const double minus = doppler(m.omega, m.qx, p.kin, DopplerSign::Minus);
  const double plus = doppler(m.omega, m.qx, p.kin, DopplerSign::Plus);
  const auto branch = [&](double wp) {
    return particle_factor(m.omega, wp, p) * weighted(m, wp, r, p.kin).im;
  };
  const double kappa = m.transverse;
  return 16.0 * pi / p.kin.gamma * (m.qx / kappa) *
         std::exp(-2.0 * kappa * p.kin.z) * (branch(minus) - branch(plus));
}

double prop_surface_integrand(FormulationId f, const ModePoint& m,
                              const ScenarioParams& p) {
  if (f == FormulationId::VP)
    throw UnsupportedCombination(
        "no per-particle propagating surface force is defined for VP");
  require_propagating(m);
  const auto r = surface_reflection(m, p);
  const double qz = m.transverse;
  const double c = std::cos(2.0 * qz * p.kin.z);
  const double s = std::sin(2.0 * qz * p.kin.z);
  const double minus = doppler(m.omega, m.qx, p.kin, DopplerSign::Minus);

  if (f == FormulationId::DK_quadrant) {
    require_quadrant(m);
    const double plus = doppler(m.omega, m.qx, p.kin, DopplerSign::Plus);
    const double fm = particle_factor(m.omega, minus, p);
    const double fp = particle_factor(m.omega, plus, p);
    const auto wm = weighted(m, minus, r, p.kin);
    const auto wpl = weighted(m, plus, r, p.kin);
    const double pref = 16.0 * pi / p.kin.gamma * (m.qx / qz);
    return pref * (-s) * (fm * wm.im - fp * wpl.im) +
           pref * c * (fm * wm.re - fp * wpl.re);
  }

  const auto w = weighted(m, minus, r, p.kin);
  const double body = (m.qx / qz) * particle_factor(m.omega, minus, p) *
                      (w.re * c - w.im * s);
  return f == FormulationId::PH ? 2.0 / p.kin.gamma * body
                                : 8.0 * pi / p.kin.gamma * body;
}

double freespace_integrand(FormulationId f, double omega, double x,
                           const ScenarioParams& p) {
  if (!(omega > 0.0)) throw DomainError("free-space forms need omega > 0");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("x must lie in [-1, 1]");
  const double b = p.kin.beta;
  const double g = p.kin.gamma;
  const double w4 = omega * omega * omega * omega;
  switch (f) {
    case FormulationId::DK_folded: {
      const double w1 = g * omega * (1.0 + b * x);
      const double lever = 1.0 + b * x;
      return -4.0 * g * w4 * x * lever * lever * particle_factor(omega, w1, p);
    }
    case FormulationId::PH: {
      const double w1 = g * omega * (1.0 - b * x);
      const double lever = 1.0 - b * x;
      return g / pi * w4 * x * lever * lever * particle_factor(omega, w1, p);
    }
    default:
      throw UnsupportedCombination("free-space force is defined for PH and DK only");
  }
}

double vp_stress_integrand(const ModePoint& m, const ScenarioParams& p) {
  require_propagating(m);
  const auto r = surface_reflection(m, p);
  const double wp = doppler(m.omega, m.qx, p.kin, DopplerSign::Minus);
  const double absorbed = 2.0 - std::norm(r.rp) - std::norm(r.rs);
  return -m.qx * absorbed *
         occupation_difference(m.omega, p.thermal.t1, wp, p.thermal.t2);
}

double symmetry_residual(const ModePoint& m, const ScenarioParams& p) {
  ModePoint mirror = m;
  mirror.omega = -m.omega;
  mirror.qx = -m.qx;
  return std::abs(ev_integrand(FormulationId::PH, m, p) -
                  ev_integrand(FormulationId::PH, mirror, p));
}

}  // namespace qfric
