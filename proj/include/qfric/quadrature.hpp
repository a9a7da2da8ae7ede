#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qfric/integrands.hpp"

namespace qfric {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_floor = 1e-14;
  std::int64_t max_evals = 400'000'000;
  double tail_exponent = 40.0;        // kappa truncated at tail_exponent / (2 z)
  double omega_cutoff_factor = 30.0;  // see omega_cutoff()
};

/// Throws DomainError unless rel_tol > 0 and exp(-tail_exponent) is far
/// below rel_tol.
void validate(const QuadratureSpec& spec);

struct ForceResult {
  double value = 0.0;  // force (natural units), or force per area for VPStress
  double error_estimate = 0.0;
  std::int64_t evals = 0;
  FormulationId formulation = FormulationId::PH;
  ForceSector sector = ForceSector::Evanescent;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, ForceResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const ForceResult& partial() const { return partial_; }

 private:
  ForceResult partial_;
};

/// Truncated integration box shared by the adaptive engine and the oracle.
struct TruncatedDomain {
  double omega_max = 0.0;  // |omega| < omega_max
  double kappa_max = 0.0;  // evanescent sector only
  double theta_max = 0.0;  // 2 pi, or pi/2 for the DK quadrant forms
  bool full_axis = false;  // omega over (-omega_max, omega_max) (PH evanescent)
};

/// omega_cutoff_factor * max(T1, T2, omega0, omega_p) * gamma (1 + beta).
double omega_cutoff(const ScenarioParams& p, const QuadratureSpec& spec);

/// Domain for (f, sector). In the evanescent sector omega_max is raised to
/// at least gamma beta kappa_max, the largest frequency that reaches the
/// anomalous-Doppler region within the kappa cutoff.
TruncatedDomain truncated_domain(FormulationId f, ForceSector sector,
                                 const ScenarioParams& p,
                                 const QuadratureSpec& spec);

/// Evanescent force: (1/(2pi)^3) \int dw \int dtheta \int dkappa kappa * I,
/// using q dq = kappa dkappa to cancel the explicit 1/kappa.
ForceResult integrate_evanescent(FormulationId f, const ScenarioParams& p,
                                 const QuadratureSpec& spec = {});

/// Surface part of the propagating force, q dq = q_z dq_z on q_z in (0, w).
ForceResult integrate_prop_surface(FormulationId f, const ScenarioParams& p,
                                   const QuadratureSpec& spec = {});

/// Free-space drag, (1/2pi) \int_0^wmax dw \int_{-1}^{1} dx I(w, x).
ForceResult integrate_freespace(FormulationId f, const ScenarioParams& p,
                                const QuadratureSpec& spec = {});

/// Propagating stress on the surface (force per area).
ForceResult integrate_vp_stress(const ScenarioParams& p,
                                const QuadratureSpec& spec = {});

/// Midpoint fixed-grid sum on the same truncated, substituted domain with
/// grid_n cells per axis (per half-axis for full-axis omega). grid_n >= 32.
/// The evanescent frequency axis is sampled as omega = omega_max v^2.
double riemann_oracle(ForceSector sector, FormulationId f,
                      const ScenarioParams& p, int grid_n,
                      const QuadratureSpec& spec = {});

}  // namespace qfric
