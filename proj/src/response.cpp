#include "qfric/response.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qfric/errors.hpp"

namespace qfric {

namespace {
bool positive(double x) { return x > 0.0 && std::isfinite(x); }
}  // namespace

DrudeModel make_drude(double omega_p, double gamma_d) {
  if (!positive(omega_p)) throw DomainError("omega_p must be positive");
  if (!positive(gamma_d))
    throw DomainError("gamma_d must be positive (lossless surfaces rejected)");
  return {omega_p, gamma_d};
}

LorentzOscillator make_lorentz(double alpha0, double omega0, double gamma_a) {
  if (!positive(alpha0)) throw DomainError("alpha0 must be positive");
  if (!positive(omega0)) throw DomainError("omega0 must be positive");
  if (!positive(gamma_a)) throw DomainError("gamma_a must be positive");
  return {alpha0, omega0, gamma_a};
}

cplx drude_eps(const DrudeModel& m, double omega) {
  if (omega == 0.0) throw SingularityError("Drude permittivity pole at omega = 0");
  const double w = std::abs(omega);
  const cplx eps = 1.0 - m.omega_p * m.omega_p / (w * cplx{w, m.gamma_d});
  return omega > 0.0 ? eps : std::conj(eps);
}

cplx lorentz_alpha(const LorentzOscillator& m, double omega) {
  const double w = std::abs(omega);
  const double w02 = m.omega0 * m.omega0;
  const cplx a = m.alpha0 * w02 / cplx{w02 - w * w, -m.gamma_a * w};
  return omega >= 0.0 ? a : std::conj(a);
}

DiluteReport dilute_check(const std::function<cplx(double)>& alpha, double n2,
                          std::span<const double> omega_grid,
                          double threshold) {
  if (omega_grid.empty()) throw DomainError("dilute_check needs a non-empty grid");
  if (!(threshold > 0.0 && threshold < 1.0))
    throw DomainError("dilute threshold must lie in (0, 1)");
  if (!(n2 >= 0.0)) throw DomainError("density n2 must be non-negative");
  DiluteReport r;
  r.threshold = threshold;
  for (double w : omega_grid)
    r.max_value =
        std::max(r.max_value, std::abs(4.0 * std::numbers::pi * n2 * alpha(w)));
  r.pass = r.max_value <= threshold;
  return r;
}

}  // namespace qfric
