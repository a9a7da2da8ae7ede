#pragma once

#include <functional>
#include <span>

#include "qfric/physics.hpp"

namespace qfric {

/// Drude permittivity of the half-space, eps(w) = 1 - wp^2 / (w (w + i G)).
struct DrudeModel {
  double omega_p = 1.0;
  double gamma_d = 0.1;
};

/// Single Lorentz oscillator, alpha(w) = a0 w0^2 / (w0^2 - w^2 - i ga w).
struct LorentzOscillator {
  double alpha0 = 1.0;
  double omega0 = 1.0;
  double gamma_a = 0.1;
};

/// Both parameters must be positive; a lossless surface is rejected because
/// it puts a real-axis pole into R_p.
DrudeModel make_drude(double omega_p, double gamma_d);
LorentzOscillator make_lorentz(double alpha0, double omega0, double gamma_a);

/// Throws SingularityError at omega == 0. conj(eps(|w|)) for w < 0.
cplx drude_eps(const DrudeModel& m, double omega);
cplx lorentz_alpha(const LorentzOscillator& m, double omega);

struct DiluteReport {
  double max_value = 0.0;  // max over the grid of |4 pi n2 alpha(w)|
  double threshold = 0.01;
  bool pass = true;
};

/// Checks |4 pi n2 alpha(w)| <= threshold over a frequency grid.
DiluteReport dilute_check(const std::function<cplx(double)>& alpha, double n2,
                          std::span<const double> omega_grid,
                          double threshold = 0.01);

}  // namespace qfric
