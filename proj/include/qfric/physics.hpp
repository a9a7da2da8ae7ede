#pragma once

// Algebraic building blocks shared by every force formulation.
//
// Natural units throughout: hbar = c = k_B = 1, vacuum permittivity 1.
// Frequencies are the base scale; lengths are inverse frequencies.

#include <complex>

namespace qfric {

using cplx = std::complex<double>;

struct Kinematics {
  double beta = 0.0;   // v / c, in [0, 1)
  double gamma = 1.0;  // 1 / sqrt(1 - beta^2)
  double z = 1.0;      // particle-surface distance, > 0

  double velocity() const { return beta; }  // c = 1
};

/// Builds kinematics for a velocity fraction. Throws DomainError unless
/// 0 <= beta < 1 and z > 0.
Kinematics make_kinematics(double beta, double z = 1.0);

struct ThermalPair {
  double t1 = 0.0;  // surface temperature, surface rest frame
  double t2 = 0.0;  // particle temperature, co-moving frame
};

ThermalPair make_thermal(double t1, double t2);

enum class Sector { Evanescent, Propagating };

enum class DopplerSign { Minus, Plus };

/// gamma (omega - qx v) for Minus, gamma (omega + qx v) for Plus.
double doppler(double omega, double qx, const Kinematics& kin,
               DopplerSign sign = DopplerSign::Minus);

/// Bose-Einstein occupation N(omega, T) = 1/2 [coth(omega / 2T) - 1].
///
/// At T = 0 this is the step 0 (omega > 0) / -1 (omega < 0). Throws
/// SingularityError at omega == 0.
double occupation(double omega, double t);

/// N(omega1, t1) - N(omega2, t2), evaluated so that the result is exactly odd
/// under (omega1, omega2) -> (-omega1, -omega2).
double occupation_difference(double omega1, double t1, double omega2,
                             double t2);

struct TransverseConstant {
  Sector sector = Sector::Evanescent;
  double value = 0.0;  // kappa (evanescent) or q_z (propagating), >= 0
};

/// kappa = sqrt(q^2 - omega^2) for q >= |omega|, otherwise
/// q_z = sqrt(omega^2 - q^2). q == |omega| is tagged evanescent with 0.
TransverseConstant transverse_constant(double omega, double q);

/// One photon mode (omega, qx, qy) with its vertical wave constant.
struct ModePoint {
  double omega = 0.0;
  double qx = 0.0;
  double qy = 0.0;
  double q = 0.0;
  Sector sector = Sector::Evanescent;
  double transverse = 0.0;  // kappa or q_z

  /// Signed kappa^2 = q^2 - omega^2 (negative, -q_z^2, when propagating).
  double kappa_sq() const {
    return sector == Sector::Evanescent ? transverse * transverse
                                        : -transverse * transverse;
  }
  /// Vertical constant as it enters exp(-kappa z): kappa or -i q_z.
  cplx complex_kappa() const {
    return sector == Sector::Evanescent ? cplx{transverse, 0.0}
                                        : cplx{0.0, -transverse};
  }
};

/// Mode from lateral components; the sector follows from q vs |omega|.
ModePoint make_mode(double omega, double qx, double qy);
/// Evanescent mode parametrised by (kappa, polar angle of q).
ModePoint evanescent_mode(double omega, double kappa, double theta);
/// Same, with the direction of q given as (cos theta, sin theta).
ModePoint evanescent_mode(double omega, double kappa, double cos_t, double sin_t);
/// Propagating mode parametrised by (q_z, polar angle of q); needs q_z <= |omega|.
ModePoint propagating_mode(double omega, double qz, double theta);
ModePoint propagating_mode(double omega, double qz, double cos_t, double sin_t);

/// Propagation constant in the half-space, sqrt(kappa^2 - (eps1 - 1) omega^2)
/// with Re >= 0. `transverse` is kappa or q_z as tagged by `sector`; `eps1`
/// is the permittivity already evaluated at omega. For omega < 0 the result
/// is conj(kappa1(|omega|)).
cplx medium_kappa1(double omega, double transverse, cplx eps1, Sector sector);

struct ReflectionPair {
  cplx rs;
  cplx rp;
};

/// R_s = (k - k1)/(k + k1), R_p = (eps1 k - k1)/(eps1 k + k1).
/// Throws SingularityError on a vanishing denominator.
ReflectionPair reflection_coeffs(cplx kappa, cplx kappa1, cplx eps1);

struct WeightPair {
  double phis = 0.0;
  double phip = 0.0;
};

/// Polarisation weights
///   phi_s = w'^2 + 2 gamma^2 beta^2 qy^2 kappa^2 / q^2
///   phi_p = w'^2 + 2 gamma^2 (q^2 - beta^2 qx^2) kappa^2 / q^2
/// `kappa_sq` is signed (-q_z^2 in the propagating sector). Throws
/// DomainError for q == 0.
WeightPair polarization_weights(double omega_prime, double qx, double qy,
                                double kappa_sq, const Kinematics& kin);

}  // namespace qfric
