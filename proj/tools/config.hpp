#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "stapulse/stapulse.hpp"

namespace stapulse::cli {

// Which parameter a sweep run scans.
enum class SweepKind { Detuning, Eta, OffResonant, Coefficient };

struct SweepSettings {
  SweepKind kind = SweepKind::Detuning;
  double range_mhz = 2.0;        // detuning half-range
  int count = 401;               // detuning / eta point count
  double detuning_mhz = 0.0;     // fixed detuning for eta sweeps
  double eta_range = 0.2;
  double cutoff_mhz = 3.5;       // off-resonant band
  double outer_mhz = 10.0;
  int count_per_side = 131;
  int subscript = 2;             // coefficient maps
  double coeff_min = 0.0;
  double coeff_max = 0.0;
  int coeff_count = 2;
  double map_range_mhz = 1.0;
  int map_count = 41;
  double report_window_mhz = 0.34;
};

// One parsed config file. Fields the file omits keep their defaults; the
// command-line flags override out_dir, step, jobs, and plot.
struct RunConfig {
  TaskKind task = TaskKind::CreateAsqs;
  double tf_us = 4.0;
  TargetState target;

  bool optimize_coefficients = false;  // "coefficients": "optimize"
  std::vector<std::optional<double>> even;  // a2, a4, a6, a8
  std::vector<std::optional<double>> odd;   // a1, a3, a5, a7

  ErrorChannel channel;
  std::optional<double> t2_us;
  double mixed_overlap = 0.5;

  double step_us = 1e-3;
  int jobs = 0;
  std::filesystem::path out_dir = ".";
  bool plot = false;

  SweepSettings sweep;
  Objective objective;
  std::optional<ScanPlan> plan;  // nullopt -> ScanPlan::defaults(task)

  std::optional<ChsParameters> chs;
};

// Parses a JSON config. Unknown keys, malformed values, and inconsistent
// coefficient blocks throw ValidationError naming the offending field.
RunConfig load_config(const std::filesystem::path& path);

// Coefficients per the config: explicit values run through the constraint
// solver; "optimize" runs the coordinate scan first and returns its winner.
PulseCoefficients resolve_coefficients(const RunConfig& config);

// Serializes a solved coefficient set in config-file shape, so an optimize
// run's winner can feed straight back into the other commands.
std::string coefficients_to_json(const PulseCoefficients& coeffs);

}  // namespace stapulse::cli
