#pragma once

// Globally adaptive 21-point Gauss-Kronrod integration (QUADPACK qag/qagp
// style) that nests: an integrand may itself return an Estimate, whose error
// is propagated into the outer panel error.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

namespace qfric::quad {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;  // integral of |f|, for cancellation-aware tolerances
  // integral of the rounding level of f, when f is itself a difference of
  // much larger terms; below it no error estimate means anything
  double noise = 0.0;
};

/// Shared evaluation counter for a whole (possibly nested) integration.
struct Budget {
  std::int64_t evals = 0;
  std::int64_t max_evals = std::numeric_limits<std::int64_t>::max();
  bool exhausted() const { return evals >= max_evals; }
};

struct Tolerance {
  double rel = 1e-8;
  double abs = 0.0;
  bool relative_to_l1 = false;  // measure rel against l1 instead of |value|
  int max_panels = 1000;
  double noise_margin = 10.0;

  double target(const Estimate& e) const {
    const double scale = relative_to_l1 ? e.l1 : std::abs(e.value);
    return std::max({abs, rel * scale, noise_margin * e.noise});
  }
};

namespace detail {

struct GK21Nodes {
  static constexpr int n = 10;  // Kronrod nodes per half, centre excluded
  static constexpr std::array<double, 11> xgk = {
      0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
      0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
      0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
      0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
      0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
      0.0};
  static constexpr std::array<double, 11> wgk = {
      0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
      0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
      0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
      0.123491976262065851077208980053639, 0.134709217311473325928054001771707,
      0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
      0.149445554002916905664936468389821};
  // Gauss weights for the odd-indexed Kronrod nodes xgk[1], xgk[3], ...
  static constexpr std::array<double, 5> wg = {
      0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
      0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
      0.295524224714752870173892994651338};
  static constexpr double wg_centre = 0.0;
};

template <class F>
Estimate call(F& f, double x, Budget& budget) {
  using R = std::invoke_result_t<F&, double>;
  if constexpr (std::is_same_v<R, Estimate>) {
    return f(x);
  } else {
    ++budget.evals;
    const double v = f(x);
    return {v, 0.0, std::abs(v)};
  }
}

}  // namespace detail

/// One Kronrod panel with the QUADPACK error heuristic.
template <class Rule, class F>
Estimate gk(F& f, double a, double b, Budget& budget) {
  using detail::call;
  constexpr int n = Rule::n;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);

  std::array<double, 2 * n + 1> fv{};
  double inner_err = 0.0;
  double inner_noise = 0.0;
  const auto fc = call(f, centr, budget);
  fv[2 * n] = fc.value;
  double resk = Rule::wgk[n] * fc.value;
  double resabs = Rule::wgk[n] * fc.l1;
  inner_err += Rule::wgk[n] * fc.error;
  inner_noise += Rule::wgk[n] * fc.noise;
  double resg = Rule::wg_centre * fc.value;
  for (int j = 0; j < n; ++j) {
    const double dx = hlgth * Rule::xgk[j];
    const auto f1 = call(f, centr - dx, budget);
    const auto f2 = call(f, centr + dx, budget);
    fv[2 * j] = f1.value;
    fv[2 * j + 1] = f2.value;
    resk += Rule::wgk[j] * (f1.value + f2.value);
    resabs += Rule::wgk[j] * (f1.l1 + f2.l1);
    inner_err += Rule::wgk[j] * (f1.error + f2.error);
    inner_noise += Rule::wgk[j] * (f1.noise + f2.noise);
    if (j % 2 == 1) resg += Rule::wg[j / 2] * (f1.value + f2.value);
  }
  const double reskh = 0.5 * resk;
  double resasc = Rule::wgk[n] * std::abs(fv[2 * n] - reskh);
  for (int j = 0; j < n; ++j)
    resasc += Rule::wgk[j] *
              (std::abs(fv[2 * j] - reskh) + std::abs(fv[2 * j + 1] - reskh));

  const double h = std::abs(hlgth);
  double err = std::abs((resk - resg) * hlgth);
  resasc *= h;
  resabs *= h;
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * resabs, err);
  return {resk * hlgth, err + inner_err * h, resabs, inner_noise * h};
}

template <class F>
Estimate gk21(F& f, double a, double b, Budget& budget) {
  return gk<detail::GK21Nodes>(f, a, b, budget);
}

struct AdaptiveResult {
  Estimate estimate;
  bool converged = false;
  int panels = 0;
};

/// Integrates f over [breaks.front(), breaks.back()], starting from one
/// panel per consecutive pair of breakpoints and bisecting the panel with the
/// largest error until the tolerance is met. Panel order and tie-breaking
/// are fixed, so results are bit-reproducible.
template <class Rule = detail::GK21Nodes, class F>
AdaptiveResult integrate(F&& f, std::span<const double> breaks,
                         const Tolerance& tol, Budget& budget) {
  struct Panel {
    double a, b;
    Estimate e;
  };
  std::vector<Panel> panels;
  panels.reserve(breaks.size() + 64);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (breaks[i + 1] > breaks[i])
      panels.push_back({breaks[i], breaks[i + 1], gk<Rule>(f, breaks[i], breaks[i + 1], budget)});

  const auto total = [&] {
    Estimate t;
    for (const auto& p : panels) {
      t.value += p.e.value;
      t.error += p.e.error;
      t.l1 += p.e.l1;
      t.noise += p.e.noise;
    }
    return t;
  };

  Estimate sum = total();
  while (sum.error > tol.target(sum) &&
         static_cast<int>(panels.size()) < tol.max_panels && !budget.exhausted()) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].e.error > panels[worst].e.error) worst = i;
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) break;  // panel at floating-point resolution
    panels[worst] = {p.a, mid, gk<Rule>(f, p.a, mid, budget)};
    panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                  Panel{mid, p.b, gk<Rule>(f, mid, p.b, budget)});
    sum = total();
  }
  return {sum, sum.error <= tol.target(sum), static_cast<int>(panels.size())};
}

}  // namespace qfric::quad
