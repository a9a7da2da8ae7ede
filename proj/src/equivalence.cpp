#include "qfric/equivalence.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <thread>
#include <utility>

#include "qfric/errors.hpp"

namespace qfric {

namespace {

constexpr double pi = std::numbers::pi;

// Force in formulation f relative to PH in the same sector.
double factor_vs_ph(FormulationId f, ForceSector sector, const Kinematics& kin) {
  switch (f) {
    case FormulationId::PH:
      return 1.0;
    case FormulationId::VP:
      if (sector == ForceSector::Evanescent) return -4.0 * pi * kin.gamma;
      break;
    case FormulationId::DK_folded:
    case FormulationId::DK_quadrant:
      if (sector == ForceSector::FreeSpace && f == FormulationId::DK_quadrant)
        break;
      if (sector != ForceSector::VPStress) return 4.0 * pi;
      break;
  }
  throw UnsupportedCombination("no force expression for (" +
                               std::string(to_string(f)) + ", " +
                               std::string(to_string(sector)) + ")");
}

constexpr std::array<RatioPair, 5> pairs{{
    {FormulationId::VP, FormulationId::PH, ForceSector::Evanescent},
    {FormulationId::DK_folded, FormulationId::VP, ForceSector::Evanescent},
    {FormulationId::DK_folded, FormulationId::PH, ForceSector::Evanescent},
    {FormulationId::DK_folded, FormulationId::PH, ForceSector::PropSurface},
    {FormulationId::DK_folded, FormulationId::PH, ForceSector::FreeSpace},
}};

struct Outcome {
  std::optional<ForceResult> result;
  RatioStatus failure = RatioStatus::Error;
  std::string message;
};

Outcome run_force(FormulationId f, ForceSector s, const ScenarioParams& p,
                  const QuadratureSpec& spec) {
  Outcome o;
  try {
    o.result = force(f, s, p, spec);
  } catch (const NonConvergenceError& e) {
    o.failure = RatioStatus::NonConverged;
    o.message = e.what();
  } catch (const std::exception& e) {
    o.message = e.what();
  }
  return o;
}

}  // namespace

ForceResult force(FormulationId f, ForceSector sector, const ScenarioParams& p,
                  const QuadratureSpec& spec) {
  switch (sector) {
    case ForceSector::Evanescent:
      return integrate_evanescent(f, p, spec);
    case ForceSector::PropSurface:
      return integrate_prop_surface(f, p, spec);
    case ForceSector::FreeSpace:
      return integrate_freespace(f, p, spec);
    case ForceSector::VPStress:
      if (f != FormulationId::VP)
        throw UnsupportedCombination(
            "the propagating stress on the surface is defined for VP only");
      return integrate_vp_stress(p, spec);
  }
  throw UnsupportedCombination("unknown sector");
}

bool supported(FormulationId f, ForceSector sector) {
  switch (sector) {
    case ForceSector::Evanescent:
      return true;
    case ForceSector::PropSurface:
      return f != FormulationId::VP;
    case ForceSector::FreeSpace:
      return f == FormulationId::PH || f == FormulationId::DK_folded;
    case ForceSector::VPStress:
      return f == FormulationId::VP;
  }
  return false;
}

double expected_ratio(FormulationId a, FormulationId b, ForceSector sector,
                      const Kinematics& kin) {
  return factor_vs_ph(a, sector, kin) / factor_vs_ph(b, sector, kin);
}

std::string_view to_string(RatioStatus s) {
  switch (s) {
    case RatioStatus::Pass: return "pass";
    case RatioStatus::Fail: return "fail";
    case RatioStatus::Indeterminate: return "indeterminate";
    case RatioStatus::NonConverged: return "nonconverged";
    case RatioStatus::Error: return "error";
  }
  return "?";
}

std::string_view to_string(SuiteVerdict v) {
  switch (v) {
    case SuiteVerdict::Pass: return "pass";
    case SuiteVerdict::Fail: return "fail";
    case SuiteVerdict::NoInformation: return "no information";
  }
  return "?";
}

RatioReport compare_forces(const ForceResult& fa, const ForceResult& fb,
                           const ScenarioParams& p, const QuadratureSpec& spec,
                           double tolerance) {
  if (fa.sector != fb.sector)
    throw DomainError("ratio of forces from different sectors");
  RatioReport r;
  r.a = fa.formulation;
  r.b = fb.formulation;
  r.sector = fa.sector;
  r.scenario = p;
  r.force_a = fa;
  r.force_b = fb;
  r.expected_ratio = expected_ratio(r.a, r.b, r.sector, p.kin);
  if (!(std::abs(fb.value) > spec.abs_floor)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "denominator force %.3g is below the absolute floor %.3g",
                  fb.value, spec.abs_floor);
    throw IndeterminateRatio(buf);
  }
  r.measured_ratio = fa.value / fb.value;
  r.rel_deviation =
      std::abs(r.measured_ratio - r.expected_ratio) / std::abs(r.expected_ratio);
  r.pass = r.rel_deviation <= tolerance;
  r.status = r.pass ? RatioStatus::Pass : RatioStatus::Fail;
  return r;
}

RatioReport ratio_check(FormulationId a, FormulationId b, ForceSector sector,
                        const ScenarioParams& p, const QuadratureSpec& spec,
                        double tolerance) {
  expected_ratio(a, b, sector, p.kin);  // reject unsupported pairs up front
  const ForceResult fa = force(a, sector, p, spec);
  const ForceResult fb = force(b, sector, p, spec);
  return compare_forces(fa, fb, p, spec, tolerance);
}

SymmetrySample symmetry_sample(const ScenarioParams& p, int n,
                               std::uint64_t seed) {
  if (n <= 0) throw DomainError("symmetry sample needs a positive point count");
  validate(p);
  const double wc = 3.0 *
                    std::max({p.thermal.t1, p.thermal.t2, p.particle.omega0,
                              p.surface.omega_p}) *
                    p.kin.gamma * (1.0 + p.kin.beta);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uw(-wc, wc);
  std::uniform_real_distribution<double> uk(0.0, 10.0 / p.kin.z);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * pi);
  SymmetrySample out;
  while (out.points < n) {
    const double w = uw(rng);
    const double k = uk(rng);
    const double t = ut(rng);
    if (w == 0.0 || k == 0.0) continue;
    const ModePoint m = evanescent_mode(w, k, t);
    ++out.points;
    const double scale = std::abs(ev_integrand(FormulationId::PH, m, p));
    const double res = symmetry_residual(m, p);
    const double rel = res == 0.0 ? 0.0 : res / scale;
    if (rel > out.max_residual || std::isnan(rel)) {
      out.max_residual = rel;
      out.worst = m;
      if (std::isnan(rel)) break;
    }
  }
  return out;
}

std::span<const RatioPair> suite_pairs() { return pairs; }

void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& task) {
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) task(i);
    });
  for (auto& t : pool) t.join();
}

SuiteReport prefactor_suite(std::span<const ScenarioParams> grid,
                            const QuadratureSpec& spec, int jobs,
                            double tolerance) {
  if (grid.empty()) throw DomainError("prefactor_suite needs a nonempty grid");

  // Distinct (formulation, sector) integrals, in first-use order.
  std::vector<std::pair<FormulationId, ForceSector>> needed;
  for (const auto& pr : pairs)
    for (auto f : {pr.a, pr.b})
      if (std::find(needed.begin(), needed.end(), std::pair{f, pr.sector}) ==
          needed.end())
        needed.emplace_back(f, pr.sector);

  const std::size_t per = needed.size();
  std::vector<Outcome> outcomes(grid.size() * per);
  parallel_for(outcomes.size(), jobs, [&](std::size_t i) {
    const auto& [f, s] = needed[i % per];
    outcomes[i] = run_force(f, s, grid[i / per], spec);
  });
  const auto outcome = [&](std::size_t scenario, FormulationId f,
                           ForceSector s) -> const Outcome& {
    const auto k = std::find(needed.begin(), needed.end(), std::pair{f, s}) -
                   needed.begin();
    return outcomes[scenario * per + static_cast<std::size_t>(k)];
  };

  SuiteReport rep;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ScenarioParams& p = grid[i];
    for (const auto& pr : pairs) {
      const Outcome& oa = outcome(i, pr.a, pr.sector);
      const Outcome& ob = outcome(i, pr.b, pr.sector);
      RatioReport r;
      r.a = pr.a;
      r.b = pr.b;
      r.sector = pr.sector;
      r.scenario = p;
      r.expected_ratio = expected_ratio(pr.a, pr.b, pr.sector, p.kin);
      if (!oa.result || !ob.result) {
        const Outcome& bad = oa.result ? ob : oa;
        r.status = bad.failure;
        r.message = bad.message;
      } else {
        try {
          r = compare_forces(*oa.result, *ob.result, p, spec, tolerance);
        } catch (const IndeterminateRatio& e) {
          r.force_a = *oa.result;
          r.force_b = *ob.result;
          r.status = RatioStatus::Indeterminate;
          r.message = e.what();
        }
      }
      rep.entries.push_back(std::move(r));
    }
    const Outcome& ph = outcome(i, FormulationId::PH, ForceSector::Evanescent);
    const Outcome& vp = outcome(i, FormulationId::VP, ForceSector::Evanescent);
    if (ph.result && vp.result && std::abs(ph.result->value) > spec.abs_floor &&
        std::abs(vp.result->value) > spec.abs_floor) {
      const double a = ph.result->value;
      const double b = vp.result->value;
      rep.signs.push_back({p, a, b, std::signbit(a) != std::signbit(b)});
    }
  }

  bool any_pass = false;
  bool any_fail = false;
  for (const auto& e : rep.entries) {
    if (e.status == RatioStatus::Pass) any_pass = true;
    else if (e.status != RatioStatus::Indeterminate) any_fail = true;
  }
  for (const auto& s : rep.signs)
    if (!s.pass) any_fail = true;
  rep.verdict = any_fail   ? SuiteVerdict::Fail
                : any_pass ? SuiteVerdict::Pass
                           : SuiteVerdict::NoInformation;
  return rep;
}

}  // namespace qfric
