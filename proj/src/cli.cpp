#include "qfric/cli.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfric/errors.hpp"

namespace qfric::cli {

namespace {

constexpr double symmetry_tolerance = 1e-12;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// key=value reader that accepts omega-p, omega_p or omegap for --omega-p
class FlatConfig : public CLI::ConfigBase {
 public:
  static std::string fold(const std::string& key) {
    std::string out;
    for (char c : key)
      if (std::isalnum(static_cast<unsigned char>(c)))
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  }
  void add_name(const std::string& lname) { names_[fold(lname)] = lname; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigBase::from_config(input);
    for (auto& item : items) {
      const auto it = names_.find(fold(item.name));
      if (it != names_.end()) item.name = it->second;
    }
    return items;
  }

 private:
  std::map<std::string, std::string> names_;
};

ScenarioParams build_scenario(double beta, double z, double t1, double t2,
                              double wp, double gd, double a0, double w0,
                              double ga) {
  return {make_kinematics(beta, z), make_thermal(t1, t2), make_drude(wp, gd),
          make_lorentz(a0, w0, ga)};
}

void require_supported(FormulationId f, ForceSector s) {
  if (!supported(f, s))
    throw ConfigError("no force expression for formulation " +
                      std::string(to_string(f)) + " in sector " +
                      std::string(to_string(s)));
}

OutputRecord force_record(const ScenarioParams& p, FormulationId f,
                          ForceSector s, const QuadratureSpec& spec) {
  OutputRecord r;
  r.scenario = p;
  r.formulation = to_string(f);
  r.sector = to_string(s);
  try {
    const ForceResult res = force(f, s, p, spec);
    r.value = res.value;
    r.error = res.error_estimate;
    r.evals = res.evals;
    r.status = "ok";
  } catch (const NonConvergenceError& e) {
    r.value = e.partial().value;
    r.error = e.partial().error_estimate;
    r.evals = e.partial().evals;
    r.status = "nonconverged";
  }
  return r;
}

OutputRecord ratio_record(const RatioReport& rep) {
  OutputRecord r;
  r.scenario = rep.scenario;
  r.formulation = std::string(to_string(rep.a)) + "/" + std::string(to_string(rep.b));
  r.sector = to_string(rep.sector);
  const auto& fa = rep.force_a;
  const auto& fb = rep.force_b;
  r.evals = fa.evals + fb.evals;
  r.status = std::string(to_string(rep.status));
  if (rep.status == RatioStatus::Pass || rep.status == RatioStatus::Fail) {
    r.value = rep.measured_ratio;
    r.error = std::abs(rep.measured_ratio) *
              (fa.error_estimate / std::abs(fa.value) +
               fb.error_estimate / std::abs(fb.value));
  } else {
    r.value = std::numeric_limits<double>::quiet_NaN();
    r.error = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

void note_ratio(const RatioReport& rep, std::ostream& diag) {
  diag << to_string(rep.a) << "/" << to_string(rep.b) << " " << to_string(rep.sector)
       << " beta=" << fmt17(rep.scenario.kin.beta) << " z=" << fmt17(rep.scenario.kin.z)
       << " t1=" << fmt17(rep.scenario.thermal.t1) << " t2=" << fmt17(rep.scenario.thermal.t2)
       << ": " << to_string(rep.status);
  if (rep.status == RatioStatus::Pass || rep.status == RatioStatus::Fail)
    diag << " measured " << fmt17(rep.measured_ratio) << " expected "
         << fmt17(rep.expected_ratio) << " rel.dev " << rep.rel_deviation;
  else if (!rep.message.empty())
    diag << " (" << rep.message << ")";
  diag << "\n";
}

OutputRecord symmetry_record(const ScenarioParams& p, int n, std::uint64_t seed,
                             std::ostream& diag) {
  const SymmetrySample s = symmetry_sample(p, n, seed);
  const bool ok = s.max_residual <= symmetry_tolerance;
  diag << "symmetry: " << s.points << " points, max relative residual "
       << s.max_residual << (ok ? "" : " (above 1e-12)") << "\n";
  return {p, "ph", "ev", s.max_residual, 0.0, s.points, ok ? "pass" : "fail"};
}

}  // namespace

std::vector<double> sweep_values(const SweepAxis& axis) {
  if (axis.count < 1) throw ConfigError("count must be at least 1");
  std::vector<double> v(static_cast<std::size_t>(axis.count));
  for (int i = 0; i < axis.count; ++i)
    v[i] = axis.count == 1
               ? axis.start
               : axis.start + (axis.stop - axis.start) * i / (axis.count - 1);
  if (axis.count > 1) v.back() = axis.stop;
  return v;
}

ScenarioParams with_parameter(const ScenarioParams& p, const std::string& name,
                              double value) {
  ScenarioParams q = p;
  try {
    if (name == "beta")
      q.kin = make_kinematics(value, p.kin.z);
    else if (name == "z")
      q.kin = make_kinematics(p.kin.beta, value);
    else if (name == "t1")
      q.thermal = make_thermal(value, p.thermal.t2);
    else if (name == "t2")
      q.thermal = make_thermal(p.thermal.t1, value);
    else
      throw ConfigError("axis must be one of beta, z, t1, t2");
  } catch (const DomainError& e) {
    throw ConfigError(name + " = " + fmt17(value) + ": " + e.what());
  }
  return q;
}

RunConfig parse_config(int argc, const char* const* argv) {
  CLI::App app{"Lateral force on a polarizable particle moving above a half-space",
               "qfric"};
  app.set_config("--config", "", "flat key=value file; flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);

  double beta = 0.5, z = 1.0, t1 = 0.5, t2 = 0.2;
  double wp = 1.0, gd = 0.1, a0 = 1.0, w0 = 1.0, ga = 0.1;
  std::string formulation = "ph", reference = "ph", sector = "ev", output = "csv";
  QuadratureSpec spec;
  std::string axis;
  double start = 0.0, stop = 0.0;
  int count = 0;
  int jobs = 1;
  std::uint64_t seed = 1;

  app.add_option("--beta", beta, "v/c in [0, 1)")->capture_default_str();
  app.add_option("--z", z, "particle height above the surface")->capture_default_str();
  app.add_option("--t1", t1, "surface temperature")->capture_default_str();
  app.add_option("--t2", t2, "particle temperature (co-moving frame)")->capture_default_str();
  app.add_option("--omega-p", wp, "Drude plasma frequency")->capture_default_str();
  app.add_option("--gamma-d", gd, "Drude damping")->capture_default_str();
  app.add_option("--alpha0", a0, "static polarizability")->capture_default_str();
  app.add_option("--omega0", w0, "particle resonance")->capture_default_str();
  app.add_option("--gamma-a", ga, "particle damping")->capture_default_str();
  app.add_option("--formulation", formulation)
      ->check(CLI::IsMember({"ph", "vp", "dk", "dk-quadrant"}))
      ->capture_default_str();
  app.add_option("--reference", reference, "denominator formulation for compare")
      ->check(CLI::IsMember({"ph", "vp", "dk", "dk-quadrant"}))
      ->capture_default_str();
  app.add_option("--sector", sector)
      ->check(CLI::IsMember({"ev", "prop-surface", "free-space", "vp-stress"}))
      ->capture_default_str();
  app.add_option("--rel-tol", spec.rel_tol)->capture_default_str();
  app.add_option("--max-evals", spec.max_evals)->capture_default_str();
  app.add_option("--axis", axis, "sweep parameter")
      ->check(CLI::IsMember({"beta", "z", "t1", "t2"}));
  app.add_option("--start", start);
  app.add_option("--stop", stop);
  app.add_option("--count", count, "sweep points, or random points for symmetry checks");
  app.add_option("--output", output)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--jobs", jobs)->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();

  auto reader = std::make_shared<FlatConfig>();
  for (const CLI::Option* opt : app.get_options())
    for (const auto& n : opt->get_lnames()) reader->add_name(n);
  app.config_formatter(reader);

  const std::pair<const char*, Command> commands[] = {
      {"force", Command::Force},
      {"compare", Command::Compare},
      {"sweep", Command::Sweep},
      {"verify", Command::Verify},
      {"check-symmetry", Command::CheckSymmetry},
  };
  const char* help[] = {
      "one force value", "ratio of two formulations against its expected factor",
      "forces along one parameter axis",
      "conversion factors, evenness sample and equilibrium nulls",
      "evenness residual at random evanescent modes"};
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i)
    subs.push_back(app.add_subcommand(commands[i].first, help[i])->fallthrough());

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  RunConfig cfg;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) cfg.command = commands[i].second;
  try {
    cfg.scenario = build_scenario(beta, z, t1, t2, wp, gd, a0, w0, ga);
    validate(spec);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  cfg.spec = spec;
  cfg.formulation = parse_formulation(formulation);
  cfg.reference = parse_formulation(reference);
  cfg.sector = parse_sector(sector);
  cfg.output = output == "json" ? OutputFormat::Json : OutputFormat::Csv;
  cfg.jobs = jobs;
  cfg.seed = seed;
  if (count < 0) throw ConfigError("count must be positive");
  if (count > 0) cfg.symmetry_points = count;

  switch (cfg.command) {
    case Command::Force:
      require_supported(cfg.formulation, cfg.sector);
      break;
    case Command::Compare:
      require_supported(cfg.formulation, cfg.sector);
      require_supported(cfg.reference, cfg.sector);
      try {
        expected_ratio(cfg.formulation, cfg.reference, cfg.sector, cfg.scenario.kin);
      } catch (const DomainError& e) {
        throw ConfigError(e.what());
      }
      break;
    case Command::Sweep: {
      require_supported(cfg.formulation, cfg.sector);
      if (axis.empty()) throw ConfigError("sweep needs --axis");
      if (count < 1) throw ConfigError("sweep needs --count >= 1");
      cfg.sweep = SweepAxis{axis, start, stop, count};
      for (double v : sweep_values(*cfg.sweep)) with_parameter(cfg.scenario, axis, v);
      break;
    }
    case Command::Verify:
    case Command::CheckSymmetry:
      break;
  }
  return cfg;
}

RunOutcome run(const RunConfig& cfg, std::ostream& diag) {
  RunOutcome out;
  const auto converged = [](const OutputRecord& r) { return r.status != "nonconverged"; };

  switch (cfg.command) {
    case Command::Force: {
      out.records.push_back(force_record(cfg.scenario, cfg.formulation, cfg.sector, cfg.spec));
      if (!converged(out.records.back())) out.exit_code = exit_convergence;
      break;
    }
    case Command::Sweep: {
      const auto values = sweep_values(*cfg.sweep);
      out.records.resize(values.size());
      parallel_for(values.size(), cfg.jobs, [&](std::size_t i) {
        const auto p = with_parameter(cfg.scenario, cfg.sweep->name, values[i]);
        out.records[i] = force_record(p, cfg.formulation, cfg.sector, cfg.spec);
      });
      for (const auto& r : out.records)
        if (!converged(r)) out.exit_code = exit_convergence;
      break;
    }
    case Command::Compare: {
      RatioReport rep;
      rep.a = cfg.formulation;
      rep.b = cfg.reference;
      rep.sector = cfg.sector;
      rep.scenario = cfg.scenario;
      try {
        rep = ratio_check(cfg.formulation, cfg.reference, cfg.sector, cfg.scenario, cfg.spec);
      } catch (const IndeterminateRatio& e) {
        rep.status = RatioStatus::Indeterminate;
        rep.message = e.what();
      } catch (const NonConvergenceError& e) {
        rep.status = RatioStatus::NonConverged;
        rep.message = e.what();
      }
      note_ratio(rep, diag);
      out.records.push_back(ratio_record(rep));
      if (rep.status == RatioStatus::Fail) out.exit_code = exit_verification;
      if (rep.status == RatioStatus::NonConverged) out.exit_code = exit_convergence;
      break;
    }
    case Command::CheckSymmetry: {
      out.records.push_back(
          symmetry_record(cfg.scenario, cfg.symmetry_points, cfg.seed, diag));
      if (out.records.back().status != "pass") out.exit_code = exit_verification;
      break;
    }
    case Command::Verify: {
      bool failed = false;
      bool nonconverged = false;
      const SuiteReport suite = prefactor_suite(
          std::span<const ScenarioParams>(&cfg.scenario, 1), cfg.spec, cfg.jobs);
      for (const auto& e : suite.entries) {
        note_ratio(e, diag);
        out.records.push_back(ratio_record(e));
        if (e.status == RatioStatus::NonConverged) nonconverged = true;
      }
      for (const auto& s : suite.signs)
        diag << "sign(vp) = -sign(ph): " << (s.pass ? "pass" : "fail") << "\n";
      diag << "conversion factors: " << to_string(suite.verdict) << "\n";
      if (suite.verdict == SuiteVerdict::Fail) {
        for (const auto& e : suite.entries)
          if (e.status == RatioStatus::Fail || e.status == RatioStatus::Error) failed = true;
        for (const auto& s : suite.signs)
          if (!s.pass) failed = true;
      }

      out.records.push_back(
          symmetry_record(cfg.scenario, cfg.symmetry_points, cfg.seed, diag));
      if (out.records.back().status != "pass") failed = true;

      // Equilibrium: no motion and one temperature.
      ScenarioParams eq = cfg.scenario;
      eq.kin = make_kinematics(0.0, cfg.scenario.kin.z);
      eq.thermal = make_thermal(cfg.scenario.thermal.t1, cfg.scenario.thermal.t1);
      for (auto s : {ForceSector::Evanescent, ForceSector::PropSurface,
                     ForceSector::FreeSpace, ForceSector::VPStress})
        for (auto f : {FormulationId::PH, FormulationId::VP, FormulationId::DK_folded,
                       FormulationId::DK_quadrant}) {
          if (!supported(f, s)) continue;
          OutputRecord r = force_record(eq, f, s, cfg.spec);
          if (!converged(r)) {
            nonconverged = true;
          } else {
            const bool null = std::abs(r.value) <= cfg.spec.abs_floor;
            r.status = null ? "pass" : "fail";
            if (!null) failed = true;
          }
          diag << "equilibrium " << r.formulation << " " << r.sector << ": "
               << fmt17(r.value) << " " << r.status << "\n";
          out.records.push_back(std::move(r));
        }
      out.exit_code = failed         ? exit_verification
                      : nonconverged ? exit_convergence
                                     : exit_ok;
      break;
    }
  }
  return out;
}

std::string emit_records(std::span<const OutputRecord> records,
                         OutputFormat format) {
  if (format == OutputFormat::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      const auto& p = r.scenario;
      arr.push_back({{"beta", p.kin.beta},
                     {"z", p.kin.z},
                     {"t1", p.thermal.t1},
                     {"t2", p.thermal.t2},
                     {"omega_p", p.surface.omega_p},
                     {"gamma_d", p.surface.gamma_d},
                     {"alpha0", p.particle.alpha0},
                     {"omega0", p.particle.omega0},
                     {"gamma_a", p.particle.gamma_a},
                     {"formulation", r.formulation},
                     {"sector", r.sector},
                     {"value", r.value},
                     {"error", r.error},
                     {"evals", r.evals},
                     {"status", r.status}});
    }
    return arr.dump(2) + "\n";
  }
  std::string s =
      "beta,z,t1,t2,omega_p,gamma_d,alpha0,omega0,gamma_a,formulation,sector,"
      "value,error,evals,status\n";
  for (const auto& r : records) {
    const auto& p = r.scenario;
    for (double v : {p.kin.beta, p.kin.z, p.thermal.t1, p.thermal.t2,
                     p.surface.omega_p, p.surface.gamma_d, p.particle.alpha0,
                     p.particle.omega0, p.particle.gamma_a})
      s += fmt17(v) + ",";
    s += r.formulation + "," + r.sector + "," + fmt17(r.value) + "," +
         fmt17(r.error) + "," + std::to_string(r.evals) + "," + r.status + "\n";
  }
  return s;
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_config(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return exit_ok;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  }
  const RunOutcome res = run(cfg, err);
  out << emit_records(res.records, cfg.output);
  out.flush();
  return res.exit_code;
}

}  // namespace qfric::cli
