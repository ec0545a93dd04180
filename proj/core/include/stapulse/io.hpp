#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "stapulse/optimize.hpp"
#include "stapulse/propagate.hpp"
#include "stapulse/pulses.hpp"
#include "stapulse/sweep.hpp"

namespace stapulse {

// All writers emit plain CSV with a header row, 12 significant digits, and
// frequencies converted to ordinary MHz. The path overloads throw
// ValidationError when the file cannot be opened.

// Header: t_us, omega_p_MHz, omega_s_MHz, phase_rad
// Complex envelopes are written by their real part (the task pulses are
// real; chirped drives keep their phase in the last column's static term).
void write_pulse_csv(std::ostream& out, const SampledPulses& pulses);
void write_pulse_csv(const std::filesystem::path& path, const SampledPulses& pulses);

// Header: t_us, re_c1, im_c1, re_ce, im_ce, re_c0, im_c0, pop1, pope, pop0
void write_trajectory_csv(std::ostream& out, const PropagationResult& result);
void write_trajectory_csv(const std::filesystem::path& path, const PropagationResult& result);

// Header: t_us, u, v, w
void write_bloch_csv(std::ostream& out, const std::vector<BlochSample>& samples);
void write_bloch_csv(const std::filesystem::path& path, const std::vector<BlochSample>& samples);

// 1D header: axis1, fidelity, pop1, pope, pop0, t_u_us
// 2D header: axis1, axis2, fidelity, pop1, pope, pop0, t_u_us
// axis1/axis2 are named after their kind (detuning_mhz, eta, coefficient).
void write_sweep_csv(std::ostream& out, const SweepGrid& grid);
void write_sweep_csv(const std::filesystem::path& path, const SweepGrid& grid);

// Header: step, a2, a4, a6, a8, mean_infidelity, max_offres_pop0, score
void write_scan_log_csv(std::ostream& out, const std::vector<ScanLogEntry>& log);
void write_scan_log_csv(const std::filesystem::path& path, const std::vector<ScanLogEntry>& log);

// key: value lines (window_mhz, avg_fidelity_window, cutoff_mhz,
// max_offres_pop0); NaN fields are omitted.
void write_report(std::ostream& out, const RobustnessReport& report);
void write_report(const std::filesystem::path& path, const RobustnessReport& report);

// 12-significant-digit decimal formatting shared by every writer.
std::string format_value(double v);

const char* axis_column_name(AxisKind kind);

}  // namespace stapulse
