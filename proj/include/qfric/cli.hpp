#pragma once

// Command-line front end: configuration, dispatch and record emission.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfric/equivalence.hpp"

namespace qfric::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_convergence = 3;
inline constexpr int exit_verification = 4;

enum class Command { Force, Compare, Sweep, Verify, CheckSymmetry };
enum class OutputFormat { Csv, Json };

struct SweepAxis {
  std::string name;  // beta, z, t1 or t2
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
};

struct RunConfig {
  Command command = Command::Force;
  ScenarioParams scenario{};
  QuadratureSpec spec{};
  FormulationId formulation = FormulationId::PH;
  FormulationId reference = FormulationId::PH;  // denominator for compare
  ForceSector sector = ForceSector::Evanescent;
  std::optional<SweepAxis> sweep;
  int symmetry_points = 10000;
  OutputFormat output = OutputFormat::Csv;
  int jobs = 1;
  std::uint64_t seed = 1;
};

/// Bad flags, unreadable config file or out-of-domain values.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_config when --help was requested; what() is the text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flags override values from --config (flat key=value, long flag names).
RunConfig parse_config(int argc, const char* const* argv);

/// Points of a sweep, linear from start to stop inclusive.
std::vector<double> sweep_values(const SweepAxis& axis);

/// Copy of p with the named parameter replaced; validates the result.
ScenarioParams with_parameter(const ScenarioParams& p, const std::string& name,
                              double value);

struct OutputRecord {
  ScenarioParams scenario{};
  std::string formulation;
  std::string sector;
  double value = 0.0;
  double error = 0.0;
  std::int64_t evals = 0;
  std::string status;
};

struct RunOutcome {
  int exit_code = exit_ok;
  std::vector<OutputRecord> records;
};

/// Executes a validated configuration. Human-readable notes go to `diag`.
RunOutcome run(const RunConfig& config, std::ostream& diag);

/// CSV with the fixed header, or a JSON array of objects with the same keys.
std::string emit_records(std::span<const OutputRecord> records,
                         OutputFormat format);

/// Full entry point: parse, run, write records to `out`; returns exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace qfric::cli
