#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "qfric/errors.hpp"
#include "qfric/integrands.hpp"

using namespace qfric;
using doctest::Approx;
using qfric::testing::reference_scenario;
using qfric::testing::scenario;

namespace {

constexpr double pi = std::numbers::pi;

// transcription_oracle.py
constexpr double ev_ph_ref = -0.0010475291708486809;
constexpr double ev_vp_ref = 0.030400123905634156;
constexpr double ev_dk_ref = -0.026327279580473786;
constexpr double ev_dkq_ref = -8.6817858062277079;
constexpr double ev_ph_mirror_ref = -0.0010475291708486809;
constexpr double prop_ph_ref = -0.039775583032189843;
constexpr double prop_dk_ref = -0.49983471778471377;
constexpr double prop_dkq_ref = -0.96581371763985354;
constexpr double stress_ref = -0.082919294398579057;
constexpr double fs_dk_ref = -1.1190393886849292;
constexpr double fs_ph_ref = 0.0086979387318570329;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("evanescent integrands against the transcription oracle") {
  const auto p = reference_scenario();
  const auto m = make_mode(0.4, 0.7, 0.2);
  CHECK(rel(ev_integrand(FormulationId::PH, m, p), ev_ph_ref) < 1e-13);
  CHECK(rel(ev_integrand(FormulationId::VP, m, p), ev_vp_ref) < 1e-13);
  CHECK(rel(ev_integrand(FormulationId::DK_folded, m, p), ev_dk_ref) < 1e-13);
  CHECK(rel(ev_integrand(FormulationId::DK_quadrant, m, p), ev_dkq_ref) < 1e-13);
  CHECK(rel(dk_ev_quadrant_integrand(m, p), ev_dkq_ref) < 1e-13);
  CHECK(rel(ev_integrand(FormulationId::PH, make_mode(-0.4, -0.7, 0.2), p),
            ev_ph_mirror_ref) < 1e-13);
  CHECK(symmetry_residual(m, p) <= 1e-12 * std::abs(ev_ph_ref));
}

TEST_CASE("propagating integrands against the transcription oracle") {
  const auto p = reference_scenario();
  const auto m = make_mode(1.2, 0.5, 0.3);
  CHECK(rel(prop_surface_integrand(FormulationId::PH, m, p), prop_ph_ref) < 1e-13);
  CHECK(rel(prop_surface_integrand(FormulationId::DK_folded, m, p), prop_dk_ref) < 1e-13);
  CHECK(rel(prop_surface_integrand(FormulationId::DK_quadrant, m, p), prop_dkq_ref) < 1e-13);
  CHECK(rel(vp_stress_integrand(m, p), stress_ref) < 1e-13);
}

TEST_CASE("free-space integrands against the transcription oracle") {
  const auto p = scenario(0.5, 1.0, 1.0, 0.0);
  CHECK(rel(freespace_integrand(FormulationId::DK_folded, 0.8, 0.5, p), fs_dk_ref) < 1e-13);
  CHECK(rel(freespace_integrand(FormulationId::PH, 0.8, 0.5, p), fs_ph_ref) < 1e-13);
  CHECK(freespace_integrand(FormulationId::PH, 0.8, 0.0, p) == 0.0);
  CHECK(freespace_integrand(FormulationId::DK_folded, 0.8, 0.0, p) == 0.0);
  CHECK_THROWS_AS(freespace_integrand(FormulationId::VP, 0.8, 0.5, p), UnsupportedCombination);
}

TEST_CASE("equilibrium integrands vanish") {
  const auto p = scenario(0.0, 1.0, 0.5, 0.5);
  const auto ev = make_mode(0.4, 0.7, 0.2);
  const auto pr = make_mode(1.2, 0.5, 0.3);
  for (auto f : {FormulationId::PH, FormulationId::VP, FormulationId::DK_folded,
                 FormulationId::DK_quadrant})
    CHECK(ev_integrand(f, ev, p) == 0.0);
  for (auto f : {FormulationId::PH, FormulationId::DK_folded, FormulationId::DK_quadrant})
    CHECK(prop_surface_integrand(f, pr, p) == 0.0);
  CHECK(vp_stress_integrand(pr, p) == 0.0);
  CHECK(freespace_integrand(FormulationId::PH, 0.8, 0.3, p) == 0.0);
  CHECK(freespace_integrand(FormulationId::DK_folded, 0.8, 0.3, p) == 0.0);
  CHECK(symmetry_residual(ev, p) == 0.0);
}

TEST_CASE("quadrant form vanishes on qx = 0") {
  const auto p = reference_scenario();
  CHECK(dk_ev_quadrant_integrand(make_mode(0.4, 0.0, 0.7), p) == 0.0);
}

TEST_CASE("transparent surface removes the surface terms") {
  // omega_p -> 0 gives eps -> 1 and R -> 0.
  const auto p = scenario(0.5, 1.0, 0.5, 0.2, 1e-9, 0.1);
  const auto m = make_mode(1.2, 0.5, 0.3);
  CHECK(std::abs(prop_surface_integrand(FormulationId::PH, m, p)) < 1e-18);
  CHECK(std::abs(prop_surface_integrand(FormulationId::DK_folded, m, p)) < 1e-18);
}

TEST_CASE("pointwise conversion identities at random modes") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uw(0.05, 4.0), uq(0.0, 6.0), ut(0.0, 2.0 * pi);
  const auto p = scenario(0.7, 0.8, 0.6, 0.3);
  const double g = p.kin.gamma;
  for (int i = 0; i < 500; ++i) {
    const double w = uw(rng);
    const auto m = evanescent_mode(w, uq(rng) + 1e-3, ut(rng));
    const auto mirror = make_mode(-w, -m.qx, m.qy);
    const double ph = ev_integrand(FormulationId::PH, m, p) +
                      ev_integrand(FormulationId::PH, mirror, p);
    const double vp = ev_integrand(FormulationId::VP, m, p);
    const double dk = ev_integrand(FormulationId::DK_folded, m, p);
    if (ph == 0.0) continue;
    CHECK(vp / ph == Approx(-4.0 * pi * g).epsilon(1e-12));
    CHECK(dk / ph == Approx(4.0 * pi).epsilon(1e-12));
    CHECK(dk / vp == Approx(-1.0 / g).epsilon(1e-12));
  }
}

TEST_CASE("domain errors") {
  const auto p = reference_scenario();
  CHECK_THROWS_AS(ev_integrand(FormulationId::PH, make_mode(1.2, 0.5, 0.3), p), DomainError);
  CHECK_THROWS_AS(ev_integrand(FormulationId::PH, evanescent_mode(0.4, 0.0, 0.3), p),
                  SingularityError);
  CHECK_THROWS_AS(ev_integrand(FormulationId::VP, make_mode(-0.4, 0.7, 0.2), p), DomainError);
  CHECK_THROWS_AS(dk_ev_quadrant_integrand(make_mode(0.4, -0.7, 0.2), p), DomainError);
  CHECK_THROWS_AS(prop_surface_integrand(FormulationId::VP, make_mode(1.2, 0.5, 0.3), p),
                  UnsupportedCombination);
  CHECK_THROWS_AS(prop_surface_integrand(FormulationId::PH, make_mode(0.4, 0.7, 0.2), p),
                  DomainError);
  CHECK(parse_formulation("dk-quadrant") == FormulationId::DK_quadrant);
  CHECK(parse_sector("vp-stress") == ForceSector::VPStress);
  CHECK_THROWS_AS(parse_formulation("xx"), DomainError);
  CHECK_THROWS_AS(parse_sector("ev2"), DomainError);
  CHECK(to_string(FormulationId::DK_folded) == "dk");
  CHECK(to_string(ForceSector::PropSurface) == "prop-surface");
}
