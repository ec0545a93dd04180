#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

#include "plot.hpp"

namespace stapulse::cli {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::filesystem::path prepare_out_dir(const RunConfig& config) {
  std::filesystem::create_directories(config.out_dir);
  return config.out_dir;
}

void print_kv(const char* key, double value) {
  std::cout << key << ": " << format_value(value) << "\n";
}

std::vector<double> real_parts(const std::vector<std::complex<double>>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    out.push_back(angular_to_mhz(v.real()));
  }
  return out;
}

void plot_pulses(const std::filesystem::path& path, const SampledPulses& samples) {
  ChartSpec chart;
  chart.title = "Synthesized envelopes";
  chart.x_label = "t (us)";
  chart.y_label = "Rabi rate / 2pi (MHz)";
  chart.series.push_back({"omega_p", samples.t, real_parts(samples.omega_p)});
  chart.series.push_back({"omega_s", samples.t, real_parts(samples.omega_s)});
  write_line_chart(path, chart);
}

void plot_populations(const std::filesystem::path& path, const PropagationResult& result) {
  ChartSpec chart;
  chart.title = "Level populations";
  chart.x_label = "t (us)";
  chart.y_label = "population";
  std::vector<double> p1, pe, p0;
  for (const auto& c : result.trajectory) {
    p1.push_back(std::norm(c[0]));
    pe.push_back(std::norm(c[1]));
    p0.push_back(std::norm(c[2]));
  }
  chart.series.push_back({"pop1", result.times, p1});
  chart.series.push_back({"pope", result.times, pe});
  chart.series.push_back({"pop0", result.times, p0});
  write_line_chart(path, chart);
}

const char* sweep_axis_label(const SweepGrid& grid) {
  switch (grid.axis1.kind) {
    case AxisKind::DetuningMhz:
      return "detuning (MHz)";
    case AxisKind::Eta:
      return "relative amplitude error";
    case AxisKind::Coefficient:
      return "coefficient value";
  }
  return "axis";
}

void plot_sweep(const std::filesystem::path& path, const SweepGrid& grid) {
  ChartSpec chart;
  chart.title = "Fidelity sweep";
  chart.x_label = sweep_axis_label(grid);
  chart.y_label = "fidelity";
  std::vector<double> f;
  for (const auto& p : grid.points) {
    f.push_back(p.fidelity);
  }
  chart.series.push_back({"fidelity", grid.axis1.values, f});
  write_line_chart(path, chart);
}

}  // namespace

int cmd_synth(const RunConfig& config, const SynthOptions& options) {
  const PulseCoefficients coeffs = resolve_coefficients(config);
  PulsePair pulses = synthesize_pulses(coeffs);
  if (options.reverse) {
    pulses = time_reverse(pulses);
  }
  const SampledPulses samples = sample_pulses(pulses, config.step_us);

  const auto dir = prepare_out_dir(config);
  write_pulse_csv(dir / "pulses.csv", samples);
  if (config.plot) {
    plot_pulses(dir / "pulses.svg", samples);
  }

  std::cout << "task: " << task_name(coeffs.task) << "\n";
  print_kv("tf_us", coeffs.tf);
  for (int n = 1; n <= 2 * coeffs.order(); ++n) {
    std::cout << "a" << n << ": " << format_value(coeffs.value(n)) << "\n";
  }
  print_kv("peak_rabi_mhz", angular_to_mhz(peak_rabi(pulses, config.step_us)));
  std::cout << "wrote " << (dir / "pulses.csv").string() << "\n";
  return 0;
}

int cmd_propagate(const RunConfig& config, const PropagateOptions& options) {
  const PulseCoefficients coeffs = resolve_coefficients(config);
  const PulsePair pulses = synthesize_pulses(coeffs);
  const PropagationResult result =
      propagate(pulses, config.channel, task_initial_state(coeffs), task_target_state(coeffs),
                config.step_us, Record::Trajectory);

  const auto dir = prepare_out_dir(config);
  write_trajectory_csv(dir / "trajectory.csv", result);
  if (options.bloch) {
    write_bloch_csv(dir / "bloch.csv", bloch_trajectory(result));
  }
  if (config.plot) {
    plot_populations(dir / "trajectory.svg", result);
  }

  std::cout << "task: " << task_name(coeffs.task) << "\n";
  print_kv("detuning_mhz", config.channel.detuning_mhz);
  print_kv("eta", config.channel.eta);
  print_kv("fidelity", result.fidelity_value);
  print_kv("t_u_us", result.dwell_time);
  print_kv("pop1", result.final_state.pop1());
  print_kv("pope", result.final_state.pope());
  print_kv("pop0", result.final_state.pop0());
  print_kv("norm_drift", result.norm_drift);
  if (config.t2_us) {
    print_kv("fidelity_t2",
             decoherence_adjusted_fidelity(result.fidelity_value, result.dwell_time,
                                           {*config.t2_us, config.mixed_overlap}));
  }
  std::cout << "wrote " << (dir / "trajectory.csv").string() << "\n";
  return 0;
}

int cmd_sweep(const RunConfig& config) {
  const PulseCoefficients coeffs = resolve_coefficients(config);
  const PulsePair pulses = synthesize_pulses(coeffs);
  const ThreeLevelState initial = task_initial_state(coeffs);
  const ThreeLevelState target = task_target_state(coeffs);
  const SweepConfig run{config.step_us, config.jobs};
  const SweepSettings& s = config.sweep;

  SweepGrid grid;
  RobustnessReport report{kNan, kNan, kNan, kNan};
  switch (s.kind) {
    case SweepKind::Detuning: {
      grid = detuning_sweep(pulses, initial, target, s.range_mhz, s.count, run);
      report.window_mhz = s.report_window_mhz;
      report.avg_fidelity_window = windowed_average(grid, s.report_window_mhz);
      // The far-detuned part of the same grid covers the leakage band.
      if (s.range_mhz > s.cutoff_mhz) {
        report.cutoff_mhz = s.cutoff_mhz;
        double worst = 0.0;
        for (size_t i = 0; i < grid.axis1.values.size(); ++i) {
          if (std::abs(grid.axis1.values[i]) >= s.cutoff_mhz) {
            worst = std::max(worst, grid.points[i].pop0);
          }
        }
        report.max_offres_pop0 = worst;
      }
      break;
    }
    case SweepKind::Eta:
      grid = eta_sweep(pulses, initial, target, s.detuning_mhz, s.eta_range, s.count, run);
      break;
    case SweepKind::OffResonant: {
      OffResonantScan scan =
          off_resonant_excitation(pulses, s.cutoff_mhz, s.outer_mhz, s.count_per_side, run);
      grid = std::move(scan.grid);
      report.cutoff_mhz = scan.cutoff_mhz;
      report.max_offres_pop0 = scan.max_pop0;
      break;
    }
    case SweepKind::Coefficient: {
      const Axis coeff_axis =
          Axis::linspace(AxisKind::Coefficient, s.coeff_min, s.coeff_max, s.coeff_count);
      const Axis detuning_axis = Axis::linspace(AxisKind::DetuningMhz, -s.map_range_mhz,
                                                s.map_range_mhz, s.map_count);
      grid = coefficient_map(coeffs, s.subscript, coeff_axis, detuning_axis, run);
      break;
    }
  }

  const auto dir = prepare_out_dir(config);
  write_sweep_csv(dir / "sweep.csv", grid);
  const bool has_report = !std::isnan(report.avg_fidelity_window) ||
                          !std::isnan(report.max_offres_pop0);
  if (has_report) {
    write_report(dir / "report.txt", report);
    write_report(std::cout, report);
  }
  if (config.plot && !grid.axis2.has_value()) {
    plot_sweep(dir / "sweep.svg", grid);
  }
  std::cout << "wrote " << (dir / "sweep.csv").string() << "\n";
  return 0;
}

int cmd_optimize(const RunConfig& config) {
  const ScanPlan plan = config.plan ? *config.plan : ScanPlan::defaults(config.task);
  const ScanResult result =
      coordinate_scan(config.task, config.tf_us, config.target, plan, config.objective,
                      {config.step_us, config.jobs});

  const auto dir = prepare_out_dir(config);
  write_scan_log_csv(dir / "scan_log.csv", result.log);
  std::ofstream best(dir / "best.json");
  if (!best) {
    throw ValidationError("cannot open " + (dir / "best.json").string() + " for writing");
  }
  best << coefficients_to_json(result.best);

  std::cout << "task: " << task_name(config.task) << "\n";
  for (int n = 2; n <= 8; n += 2) {
    std::cout << "a" << n << ": " << format_value(result.best.value(n)) << "\n";
  }
  print_kv("mean_infidelity", result.best_metrics.mean_infidelity);
  print_kv("max_offres_pop0", result.best_metrics.max_offres_pop0);
  print_kv("score", result.best_metrics.score);
  std::cout << "wrote " << (dir / "scan_log.csv").string() << " and "
            << (dir / "best.json").string() << "\n";
  return 0;
}

int cmd_compare_chs(const RunConfig& config) {
  if (!config.chs) {
    throw ValidationError("compare-chs needs a \"chs\" block in the config");
  }
  const PulseCoefficients coeffs = resolve_coefficients(config);
  const PulsePair shortcut = synthesize_pulses(coeffs);
  const PulsePair chs = synthesize_chs(*config.chs);
  const ThreeLevelState initial = task_initial_state(coeffs);
  const ThreeLevelState target = task_target_state(coeffs);
  const SweepConfig run{config.step_us, config.jobs};

  const SweepGrid lhs =
      detuning_sweep(shortcut, initial, target, config.sweep.range_mhz, config.sweep.count, run);
  const SweepGrid rhs =
      detuning_sweep(chs, initial, target, config.sweep.range_mhz, config.sweep.count, run);

  const auto dir = prepare_out_dir(config);
  std::ofstream out(dir / "compare.csv");
  if (!out) {
    throw ValidationError("cannot open " + (dir / "compare.csv").string() + " for writing");
  }
  out << "detuning_mhz, f_shortcut, f_chs\n";
  for (size_t i = 0; i < lhs.axis1.values.size(); ++i) {
    out << format_value(lhs.axis1.values[i]) << ", " << format_value(lhs.points[i].fidelity)
        << ", " << format_value(rhs.points[i].fidelity) << "\n";
  }

  if (config.plot) {
    ChartSpec chart;
    chart.title = "Shortcut vs chirped sech drive";
    chart.x_label = "detuning (MHz)";
    chart.y_label = "fidelity";
    std::vector<double> f1, f2;
    for (const auto& p : lhs.points) {
      f1.push_back(p.fidelity);
    }
    for (const auto& p : rhs.points) {
      f2.push_back(p.fidelity);
    }
    chart.series.push_back({"shortcut", lhs.axis1.values, f1});
    chart.series.push_back({"chs", rhs.axis1.values, f2});
    write_line_chart(dir / "compare.svg", chart);
  }

  print_kv("f_shortcut_resonance", lhs.points[lhs.points.size() / 2].fidelity);
  print_kv("f_chs_resonance", rhs.points[rhs.points.size() / 2].fidelity);
  std::cout << "wrote " << (dir / "compare.csv").string() << "\n";
  return 0;
}

}  // namespace stapulse::cli
