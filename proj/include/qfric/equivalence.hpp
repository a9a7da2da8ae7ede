#pragma once

// Cross-formulation harness: forces in every formulation, their
// ratios, and the conversion-factor suite over a grid of scenarios.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qfric/quadrature.hpp"

namespace qfric {

/// Dispatches to the integrate_* routine for (f, sector). Throws
/// UnsupportedCombination for pairings with no force formula.
ForceResult force(FormulationId f, ForceSector sector, const ScenarioParams& p,
                  const QuadratureSpec& spec = {});

/// True when a force expression exists for (f, sector).
bool supported(FormulationId f, ForceSector sector);

/// Expected f_a / f_b. Evanescent: VP/PH = -4 pi gamma, DK/PH = 4 pi,
/// DK/VP = -1/gamma; propagating surface and free space: DK/PH = 4 pi.
/// DK_quadrant carries the DK_folded value. Inverse pairs are accepted.
double expected_ratio(FormulationId a, FormulationId b, ForceSector sector,
                      const Kinematics& kin);

enum class RatioStatus { Pass, Fail, Indeterminate, NonConverged, Error };

std::string_view to_string(RatioStatus s);

struct RatioReport {
  FormulationId a = FormulationId::PH;
  FormulationId b = FormulationId::PH;
  ForceSector sector = ForceSector::Evanescent;
  ScenarioParams scenario{};
  double measured_ratio = 0.0;
  double expected_ratio = 0.0;
  double rel_deviation = 0.0;
  bool pass = false;
  RatioStatus status = RatioStatus::Error;
  ForceResult force_a{};
  ForceResult force_b{};
  std::string message;
};

inline constexpr double default_ratio_tolerance = 1e-5;

/// Computes both forces and compares f_a / f_b with expected_ratio.
/// Throws IndeterminateRatio when |f_b| <= spec.abs_floor, and
/// NonConvergenceError if either integral fails.
RatioReport ratio_check(FormulationId a, FormulationId b, ForceSector sector,
                        const ScenarioParams& p, const QuadratureSpec& spec = {},
                        double tolerance = default_ratio_tolerance);

/// Forms the report from already computed forces.
RatioReport compare_forces(const ForceResult& fa, const ForceResult& fb,
                           const ScenarioParams& p, const QuadratureSpec& spec,
                           double tolerance = default_ratio_tolerance);

struct SignCheck {
  ScenarioParams scenario{};
  double ph = 0.0;
  double vp = 0.0;
  bool pass = false;  // sign(f_VP) == -sign(f_PH)
};

enum class SuiteVerdict { Pass, Fail, NoInformation };

std::string_view to_string(SuiteVerdict v);

struct SuiteReport {
  std::vector<RatioReport> entries;  // scenario-major, fixed pair order
  std::vector<SignCheck> signs;      // converged, determinate evanescent pairs
  SuiteVerdict verdict = SuiteVerdict::NoInformation;
};

/// The (a, b, sector) triples checked for every scenario, in report order.
struct RatioPair {
  FormulationId a;
  FormulationId b;
  ForceSector sector;
};
std::span<const RatioPair> suite_pairs();

/// Each force is integrated once per scenario and shared by the ratios that
/// use it. Integrals run on up to `jobs` threads; the report order does not
/// depend on `jobs`. Member failures become per-entry statuses.
SuiteReport prefactor_suite(std::span<const ScenarioParams> grid,
                            const QuadratureSpec& spec = {}, int jobs = 1,
                            double tolerance = default_ratio_tolerance);

struct SymmetrySample {
  int points = 0;
  double max_residual = 0.0;  // max |I(m) - I(-w, -qx, qy)| / |I(m)|
  ModePoint worst{};
};

/// Evaluates the PH evanescent evenness residual at n seeded random modes,
/// omega uniform in (-wc, wc) with wc = 3 max(T1, T2, w0, wp) gamma (1 + b),
/// kappa in (0, 10 / z], theta in [0, 2 pi).
SymmetrySample symmetry_sample(const ScenarioParams& p, int n,
                               std::uint64_t seed);

/// Runs task(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& task);

}  // namespace qfric
