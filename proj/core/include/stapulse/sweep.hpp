#pragma once

#include <optional>
#include <vector>

#include "stapulse/propagate.hpp"

namespace stapulse {

enum class AxisKind { DetuningMhz, Eta, Coefficient };

// A strictly increasing list of parameter values to scan.
struct Axis {
  AxisKind kind = AxisKind::DetuningMhz;
  std::vector<double> values;

  // count evenly spaced values over [min, max]; count >= 2, min < max.
  static Axis linspace(AxisKind kind, double min, double max, int count);
  // Symmetric band +-[inner, outer], count values per side; inner < outer.
  static Axis two_sided_band(AxisKind kind, double inner, double outer, int count_per_side);
};

struct SweepPoint {
  double fidelity = 0.0;
  double pop1 = 0.0, pope = 0.0, pop0 = 0.0;
  double dwell_time = 0.0;
  double norm_drift = 0.0;
};

// Results on a 1D or 2D grid; points are stored axis1-major, so point
// (i, j) sits at index i * axis2.values.size() + j.
struct SweepGrid {
  Axis axis1;
  std::optional<Axis> axis2;
  std::vector<SweepPoint> points;

  const SweepPoint& at(int i) const { return points[static_cast<size_t>(i)]; }
  const SweepPoint& at(int i, int j) const;
};

struct SweepConfig {
  double step = 1e-3;  // integrator step, us
  int jobs = 0;        // worker threads; 0 means hardware concurrency
};

// Fidelity and populations versus detuning over +-range_mhz (count points,
// endpoints included), drive and endpoints fixed.
SweepGrid detuning_sweep(const PulsePair& pulses, const ThreeLevelState& initial,
                         const ThreeLevelState& target, double range_mhz, int count,
                         const SweepConfig& config = {});

// Fidelity versus relative amplitude error eta over +-eta_range at a fixed
// detuning. eta_range must stay below 1 so 1 + eta > 0 everywhere.
SweepGrid eta_sweep(const PulsePair& pulses, const ThreeLevelState& initial,
                    const ThreeLevelState& target, double detuning_mhz, double eta_range,
                    int count, const SweepConfig& config = {});

// Residual excitation scan over the far-detuned band |detuning| in
// [cutoff_mhz, outer_mhz], starting from |1>: the worst leakage into |0>
// and |e> at the end of the pulse.
struct OffResonantScan {
  SweepGrid grid;
  double max_pop0 = 0.0;
  double max_pope = 0.0;
  double cutoff_mhz = 0.0;
  double outer_mhz = 0.0;
};
OffResonantScan off_resonant_excitation(const PulsePair& pulses, double cutoff_mhz,
                                        double outer_mhz, int count_per_side,
                                        const SweepConfig& config = {});

// 2D map: one even ansatz coefficient (subscript 2, 6, or 8) against
// detuning, re-solving a_4 from the constraint at every scan value. The
// task endpoints come from `base`.
SweepGrid coefficient_map(const PulseCoefficients& base, int coefficient_subscript,
                          const Axis& coefficient_axis, const Axis& detuning_axis,
                          const SweepConfig& config = {});

// Mean fidelity over |detuning| <= window_mhz on a 1D detuning sweep.
// A positive gaussian_fwhm_mhz weights the average by a normal profile of
// that full width at half maximum; 0 keeps it flat. Throws ValidationError
// when the window contains no grid points or the axis is not a detuning.
double windowed_average(const SweepGrid& grid, double window_mhz,
                        double gaussian_fwhm_mhz = 0.0);

struct RobustnessReport {
  double window_mhz = 0.0;
  double avg_fidelity_window = 0.0;
  double cutoff_mhz = 0.0;
  double max_offres_pop0 = 0.0;
};

}  // namespace stapulse
