#include "qfric/physics.hpp"

#include <cmath>
#include <string>

#include "qfric/errors.hpp"

namespace qfric {

Kinematics make_kinematics(double beta, double z) {
  if (!(beta >= 0.0 && beta < 1.0))
    throw DomainError("beta must lie in [0, 1), got " + std::to_string(beta));
  if (!(z > 0.0) || !std::isfinite(z))
    throw DomainError("distance z must be positive, got " + std::to_string(z));
  // (1 - b)(1 + b) keeps full precision as beta -> 1.
  const double gamma = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
  return {beta, gamma, z};
}

ThermalPair make_thermal(double t1, double t2) {
  if (!(t1 >= 0.0) || !(t2 >= 0.0) || !std::isfinite(t1) || !std::isfinite(t2))
    throw DomainError("temperatures must be finite and non-negative");
  return {t1, t2};
}

double doppler(double omega, double qx, const Kinematics& kin,
               DopplerSign sign) {
  const double shift = qx * kin.velocity();
  return sign == DopplerSign::Minus ? kin.gamma * (omega - shift)
                                    : kin.gamma * (omega + shift);
}

double occupation(double omega, double t) {
  if (!(t >= 0.0)) throw DomainError("temperature must be non-negative");
  if (omega == 0.0)
    throw SingularityError("occupation number has a pole at omega = 0");
  if (t == 0.0) return omega > 0.0 ? 0.0 : -1.0;
  if (omega > 0.0) return 1.0 / std::expm1(omega / t);
  return -1.0 - 1.0 / std::expm1(-omega / t);
}

double occupation_difference(double omega1, double t1, double omega2,
                             double t2) {
  // N(-w) = -1 - N(w) makes the difference odd; fold onto omega1 > 0 so the
  // identity holds bit-for-bit.
  if (omega1 < 0.0) return -occupation_difference(-omega1, t1, -omega2, t2);
  return occupation(omega1, t1) - occupation(omega2, t2);
}

TransverseConstant transverse_constant(double omega, double q) {
  if (!(q >= 0.0)) throw DomainError("lateral wave number must be >= 0");
  const double w = std::abs(omega);
  if (q >= w) return {Sector::Evanescent, std::sqrt((q - w) * (q + w))};
  return {Sector::Propagating, std::sqrt((w - q) * (w + q))};
}

ModePoint make_mode(double omega, double qx, double qy) {
  ModePoint m;
  m.omega = omega;
  m.qx = qx;
  m.qy = qy;
  m.q = std::hypot(qx, qy);
  const auto tc = transverse_constant(omega, m.q);
  m.sector = tc.sector;
  m.transverse = tc.value;
  return m;
}

ModePoint evanescent_mode(double omega, double kappa, double theta) {
  return evanescent_mode(omega, kappa, std::cos(theta), std::sin(theta));
}

ModePoint evanescent_mode(double omega, double kappa, double cos_t,
                          double sin_t) {
  if (!(kappa >= 0.0)) throw DomainError("kappa must be >= 0");
  ModePoint m;
  m.omega = omega;
  m.q = std::sqrt(kappa * kappa + omega * omega);
  m.qx = m.q * cos_t;
  m.qy = m.q * sin_t;
  m.sector = Sector::Evanescent;
  m.transverse = kappa;
  return m;
}

ModePoint propagating_mode(double omega, double qz, double theta) {
  return propagating_mode(omega, qz, std::cos(theta), std::sin(theta));
}

ModePoint propagating_mode(double omega, double qz, double cos_t,
                           double sin_t) {
  const double w = std::abs(omega);
  if (!(qz >= 0.0 && qz <= w))
    throw DomainError("q_z must lie in [0, |omega|]");
  ModePoint m;
  m.omega = omega;
  m.q = std::sqrt((w - qz) * (w + qz));
  m.qx = m.q * cos_t;
  m.qy = m.q * sin_t;
  m.sector = Sector::Propagating;
  m.transverse = qz;
  return m;
}

cplx medium_kappa1(double omega, double transverse, cplx eps1, Sector sector) {
  const double k2 = sector == Sector::Evanescent ? transverse * transverse
                                                 : -transverse * transverse;
  const double w2 = omega * omega;
  if (omega >= 0.0) return std::sqrt(k2 - (eps1 - 1.0) * w2);
  // eps1(omega) = conj(eps1(|omega|)) for omega < 0.
  return std::conj(std::sqrt(k2 - (std::conj(eps1) - 1.0) * w2));
}

ReflectionPair reflection_coeffs(cplx kappa, cplx kappa1, cplx eps1) {
  const cplx ds = kappa + kappa1;
  const cplx dp = eps1 * kappa + kappa1;
  if (ds == 0.0 || dp == 0.0)
    throw SingularityError("reflection amplitude pole (surface mode)");
  return {(kappa - kappa1) / ds, (eps1 * kappa - kappa1) / dp};
}

WeightPair polarization_weights(double omega_prime, double qx, double qy,
                                double kappa_sq, const Kinematics& kin) {
  const double q2 = qx * qx + qy * qy;
  if (q2 == 0.0) throw DomainError("polarization weights undefined at q = 0");
  const double ratio = kappa_sq / q2;
  const double g2 = kin.gamma * kin.gamma;
  const double b2 = kin.beta * kin.beta;
  const double w2 = omega_prime * omega_prime;
  return {w2 + 2.0 * g2 * b2 * qy * qy * ratio,
          w2 + 2.0 * g2 * (q2 - b2 * qx * qx) * ratio};
}

}  // namespace qfric
