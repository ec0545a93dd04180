#include "stapulse/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "stapulse/errors.hpp"
#include "stapulse/units.hpp"

namespace stapulse {

namespace {

std::ofstream open_or_throw(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot open " + path.string() + " for writing");
  }
  return out;
}

template <typename Writer>
void to_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out = open_or_throw(path);
  writer(out);
  if (!out) {
    throw ValidationError("write to " + path.string() + " failed");
  }
}

void write_row(std::ostream& out, const std::vector<double>& values) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out << ", ";
    }
    out << format_value(values[i]);
  }
  out << '\n';
}

}  // namespace

std::string format_value(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

const char* axis_column_name(AxisKind kind) {
  switch (kind) {
    case AxisKind::DetuningMhz:
      return "detuning_mhz";
    case AxisKind::Eta:
      return "eta";
    case AxisKind::Coefficient:
      return "coefficient";
  }
  return "axis";
}

void write_pulse_csv(std::ostream& out, const SampledPulses& pulses) {
  out << "t_us, omega_p_MHz, omega_s_MHz, phase_rad\n";
  for (size_t i = 0; i < pulses.t.size(); ++i) {
    write_row(out, {pulses.t[i], angular_to_mhz(pulses.omega_p[i].real()),
                    angular_to_mhz(pulses.omega_s[i].real()), pulses.phase});
  }
}

void write_pulse_csv(const std::filesystem::path& path, const SampledPulses& pulses) {
  to_file(path, [&](std::ostream& out) { write_pulse_csv(out, pulses); });
}

void write_trajectory_csv(std::ostream& out, const PropagationResult& result) {
  if (result.trajectory.empty()) {
    throw ValidationError("trajectory CSV needs a result recorded with Record::Trajectory");
  }
  out << "t_us, re_c1, im_c1, re_ce, im_ce, re_c0, im_c0, pop1, pope, pop0\n";
  for (size_t i = 0; i < result.trajectory.size(); ++i) {
    const Eigen::Vector3cd& c = result.trajectory[i];
    write_row(out, {result.times[i], c[0].real(), c[0].imag(), c[1].real(), c[1].imag(),
                    c[2].real(), c[2].imag(), std::norm(c[0]), std::norm(c[1]),
                    std::norm(c[2])});
  }
}

void write_trajectory_csv(const std::filesystem::path& path, const PropagationResult& result) {
  to_file(path, [&](std::ostream& out) { write_trajectory_csv(out, result); });
}

void write_bloch_csv(std::ostream& out, const std::vector<BlochSample>& samples) {
  out << "t_us, u, v, w\n";
  for (const BlochSample& s : samples) {
    write_row(out, {s.t, s.u, s.v, s.w});
  }
}

void write_bloch_csv(const std::filesystem::path& path,
                     const std::vector<BlochSample>& samples) {
  to_file(path, [&](std::ostream& out) { write_bloch_csv(out, samples); });
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid) {
  out << axis_column_name(grid.axis1.kind);
  if (grid.axis2) {
    out << ", " << axis_column_name(grid.axis2->kind);
  }
  out << ", fidelity, pop1, pope, pop0, t_u_us\n";
  const size_t cols = grid.axis2 ? grid.axis2->values.size() : 1;
  for (size_t idx = 0; idx < grid.points.size(); ++idx) {
    const SweepPoint& p = grid.points[idx];
    std::vector<double> row;
    row.push_back(grid.axis1.values[idx / cols]);
    if (grid.axis2) {
      row.push_back(grid.axis2->values[idx % cols]);
    }
    row.insert(row.end(), {p.fidelity, p.pop1, p.pope, p.pop0, p.dwell_time});
    write_row(out, row);
  }
}

void write_sweep_csv(const std::filesystem::path& path, const SweepGrid& grid) {
  to_file(path, [&](std::ostream& out) { write_sweep_csv(out, grid); });
}

void write_scan_log_csv(std::ostream& out, const std::vector<ScanLogEntry>& log) {
  out << "step, a2, a4, a6, a8, mean_infidelity, max_offres_pop0, score\n";
  for (const ScanLogEntry& e : log) {
    out << e.scan_step << ", ";
    write_row(out, {e.a2, e.a4, e.a6, e.a8, e.mean_infidelity, e.max_offres_pop0, e.score});
  }
}

void write_scan_log_csv(const std::filesystem::path& path,
                        const std::vector<ScanLogEntry>& log) {
  to_file(path, [&](std::ostream& out) { write_scan_log_csv(out, log); });
}

void write_report(std::ostream& out, const RobustnessReport& report) {
  if (!std::isnan(report.window_mhz)) {
    out << "window_mhz: " << format_value(report.window_mhz) << '\n';
  }
  if (!std::isnan(report.avg_fidelity_window)) {
    out << "avg_fidelity_window: " << format_value(report.avg_fidelity_window) << '\n';
  }
  if (!std::isnan(report.cutoff_mhz)) {
    out << "cutoff_mhz: " << format_value(report.cutoff_mhz) << '\n';
  }
  if (!std::isnan(report.max_offres_pop0)) {
    out << "max_offres_pop0: " << format_value(report.max_offres_pop0) << '\n';
  }
}

void write_report(const std::filesystem::path& path, const RobustnessReport& report) {
  to_file(path, [&](std::ostream& out) { write_report(out, report); });
}

}  // namespace stapulse
