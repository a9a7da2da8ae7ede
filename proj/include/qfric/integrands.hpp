#pragma once

// Pointwise force integrands of the three formulations (PH, VP, DK).
//
// Each evaluator returns the full integrand, prefactor included, of
// a force written as
//     f = \int dw/(2 pi) \int d^2q/(2 pi)^2  integrand(w, qx, qy)
// (free-space forms: f = \int dw/(2 pi) \int_{-1}^{1} dx integrand(w, x)).
// The measure factors 1/(2 pi)^n are applied by the quadrature, never here.

#include <string>
#include <string_view>

#include "qfric/physics.hpp"
#include "qfric/response.hpp"

namespace qfric {

struct ScenarioParams {
  Kinematics kin;
  ThermalPair thermal;
  DrudeModel surface;
  LorentzOscillator particle;
};

/// Validates every component; throws DomainError naming the bad field.
void validate(const ScenarioParams& p);

enum class FormulationId { PH, VP, DK_folded, DK_quadrant };

/// Which part of the force an integral represents.
enum class ForceSector { Evanescent, PropSurface, FreeSpace, VPStress };

std::string_view to_string(FormulationId f);
std::string_view to_string(ForceSector s);
/// Accepts the CLI spellings: ph, vp, dk, dk-quadrant.
FormulationId parse_formulation(std::string_view name);
/// Accepts ev, prop-surface, free-space, vp-stress.
ForceSector parse_sector(std::string_view name);

/// Evanescent integrand. PH accepts any omega != 0 (prefactor 1/gamma);
/// VP (-8 pi) and DK_folded (8 pi / gamma, full q-plane, omega'_- only)
/// require omega > 0. DK_quadrant forwards to dk_ev_quadrant_integrand.
double ev_integrand(FormulationId f, const ModePoint& mode,
                    const ScenarioParams& p);

/// Two-branch DK integrand on the quadrant qx, qy >= 0, prefactor 16 pi / gamma.
double dk_ev_quadrant_integrand(const ModePoint& mode, const ScenarioParams& p);

/// Surface part of the propagating force, omega > 0:
/// PH 2/gamma, DK_folded 8 pi/gamma (full disk), DK_quadrant 16 pi/gamma with
/// the separate sin and cos braces.
double prop_surface_integrand(FormulationId f, const ModePoint& mode,
                              const ScenarioParams& p);

/// Blackbody drag in free space as a function of (omega, x = c q_x / omega).
/// DK: -4 gamma w^4 x (1 + b x)^2 Im a(w1) [N1(w) - N2(w1)], w1 = g w (1 + b x)
/// PH: (gamma/pi) w^4 x (1 - b x)^2 Im a(w') [N1(w) - N2(w')], w' = g w (1 - b x)
double freespace_integrand(FormulationId f, double omega, double x,
                           const ScenarioParams& p);

/// Propagating-wave stress on the surface (force per area):
/// -qx (2 - |R_p|^2 - |R_s|^2) [N1(w) - N2(w')].
double vp_stress_integrand(const ModePoint& mode, const ScenarioParams& p);

/// |I(w, qx, qy) - I(-w, -qx, qy)| for the PH evanescent integrand.
double symmetry_residual(const ModePoint& mode, const ScenarioParams& p);

}  // namespace qfric
