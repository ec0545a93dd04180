#include "stapulse/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "stapulse/errors.hpp"

namespace stapulse {

namespace {

// Runs fn(0..n-1) across worker threads; the first exception wins and is
// rethrown on the calling thread after everyone joins.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
  }
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) {
        return;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(jobs));
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back(worker);
  }
  for (auto& th : pool) {
    th.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

SweepPoint measure(const PulsePair& pulses, const ErrorChannel& channel,
                   const ThreeLevelState& initial, const ThreeLevelState& target,
                   double step) {
  const PropagationResult r = propagate(pulses, channel, initial, target, step);
  SweepPoint p;
  p.fidelity = r.fidelity_value;
  p.pop1 = r.final_state.pop1();
  p.pope = r.final_state.pope();
  p.pop0 = r.final_state.pop0();
  p.dwell_time = r.dwell_time;
  p.norm_drift = r.norm_drift;
  return p;
}

void require_increasing(const std::vector<double>& v) {
  for (size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) {
      throw ValidationError("axis values must be strictly increasing");
    }
  }
}

}  // namespace

Axis Axis::linspace(AxisKind kind, double min, double max, int count) {
  if (count < 2 || !(min < max)) {
    throw ValidationError("linspace needs min < max and at least two points");
  }
  Axis axis;
  axis.kind = kind;
  axis.values.resize(static_cast<size_t>(count));
  const double span = (max - min) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) {
    axis.values[static_cast<size_t>(i)] = min + span * static_cast<double>(i);
  }
  axis.values.back() = max;
  return axis;
}

Axis Axis::two_sided_band(AxisKind kind, double inner, double outer, int count_per_side) {
  if (!(inner < outer) || count_per_side < 2) {
    throw ValidationError("band needs inner < outer and at least two points per side");
  }
  const Axis positive = linspace(kind, inner, outer, count_per_side);
  Axis axis;
  axis.kind = kind;
  axis.values.reserve(2 * positive.values.size());
  for (auto it = positive.values.rbegin(); it != positive.values.rend(); ++it) {
    axis.values.push_back(-*it);
  }
  axis.values.insert(axis.values.end(), positive.values.begin(), positive.values.end());
  return axis;
}

const SweepPoint& SweepGrid::at(int i, int j) const {
  const size_t cols = axis2 ? axis2->values.size() : 1;
  return points[static_cast<size_t>(i) * cols + static_cast<size_t>(j)];
}

SweepGrid detuning_sweep(const PulsePair& pulses, const ThreeLevelState& initial,
                         const ThreeLevelState& target, double range_mhz, int count,
                         const SweepConfig& config) {
  if (!(range_mhz > 0.0)) {
    throw ValidationError("detuning range must be positive");
  }
  SweepGrid grid;
  grid.axis1 = Axis::linspace(AxisKind::DetuningMhz, -range_mhz, range_mhz, count);
  grid.points.resize(grid.axis1.values.size());
  parallel_for(static_cast<int>(grid.axis1.values.size()), config.jobs, [&](int i) {
    const ErrorChannel channel{grid.axis1.values[static_cast<size_t>(i)], 0.0};
    grid.points[static_cast<size_t>(i)] = measure(pulses, channel, initial, target, config.step);
  });
  return grid;
}

SweepGrid eta_sweep(const PulsePair& pulses, const ThreeLevelState& initial,
                    const ThreeLevelState& target, double detuning_mhz, double eta_range,
                    int count, const SweepConfig& config) {
  if (!(eta_range > 0.0 && eta_range < 1.0)) {
    throw ValidationError("eta range must lie in (0, 1)");
  }
  SweepGrid grid;
  grid.axis1 = Axis::linspace(AxisKind::Eta, -eta_range, eta_range, count);
  grid.points.resize(grid.axis1.values.size());
  parallel_for(static_cast<int>(grid.axis1.values.size()), config.jobs, [&](int i) {
    const ErrorChannel channel{detuning_mhz, grid.axis1.values[static_cast<size_t>(i)]};
    grid.points[static_cast<size_t>(i)] = measure(pulses, channel, initial, target, config.step);
  });
  return grid;
}

OffResonantScan off_resonant_excitation(const PulsePair& pulses, double cutoff_mhz,
                                        double outer_mhz, int count_per_side,
                                        const SweepConfig& config) {
  if (!(cutoff_mhz > 0.0)) {
    throw ValidationError("excitation cutoff must be positive");
  }
  OffResonantScan scan;
  scan.cutoff_mhz = cutoff_mhz;
  scan.outer_mhz = outer_mhz;
  scan.grid.axis1 =
      Axis::two_sided_band(AxisKind::DetuningMhz, cutoff_mhz, outer_mhz, count_per_side);
  scan.grid.points.resize(scan.grid.axis1.values.size());

  const ThreeLevelState initial = ground_state_1();
  parallel_for(static_cast<int>(scan.grid.axis1.values.size()), config.jobs, [&](int i) {
    const ErrorChannel channel{scan.grid.axis1.values[static_cast<size_t>(i)], 0.0};
    scan.grid.points[static_cast<size_t>(i)] =
        measure(pulses, channel, initial, initial, config.step);
  });
  for (const SweepPoint& p : scan.grid.points) {
    scan.max_pop0 = std::max(scan.max_pop0, p.pop0);
    scan.max_pope = std::max(scan.max_pope, p.pope);
  }
  return scan;
}

SweepGrid coefficient_map(const PulseCoefficients& base, int coefficient_subscript,
                          const Axis& coefficient_axis, const Axis& detuning_axis,
                          const SweepConfig& config) {
  if (coefficient_subscript != 2 && coefficient_subscript != 6 && coefficient_subscript != 8) {
    throw ValidationError("scanned coefficient must be a2, a6, or a8 (a4 is re-solved)");
  }
  if (coefficient_axis.kind != AxisKind::Coefficient ||
      detuning_axis.kind != AxisKind::DetuningMhz) {
    throw ValidationError("coefficient_map needs a coefficient axis and a detuning axis");
  }
  require_increasing(coefficient_axis.values);
  require_increasing(detuning_axis.values);

  SweepGrid grid;
  grid.axis1 = coefficient_axis;
  grid.axis2 = detuning_axis;
  const int rows = static_cast<int>(coefficient_axis.values.size());
  const int cols = static_cast<int>(detuning_axis.values.size());
  grid.points.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));

  const ThreeLevelState initial = task_initial_state(base);
  const ThreeLevelState target = task_target_state(base);

  parallel_for(rows * cols, config.jobs, [&](int idx) {
    const int i = idx / cols;
    const int j = idx % cols;

    std::vector<std::optional<double>> even{base.value(2), std::nullopt, base.value(6),
                                            base.value(8)};
    even[static_cast<size_t>(coefficient_subscript) / 2 - 1] =
        coefficient_axis.values[static_cast<size_t>(i)];
    const PulseCoefficients coeffs =
        solve_constraint(base.task, base.tf, base.target, even);
    const PulsePair pulses = synthesize_pulses(coeffs);

    const ErrorChannel channel{detuning_axis.values[static_cast<size_t>(j)], 0.0};
    grid.points[static_cast<size_t>(idx)] = measure(pulses, channel, initial, target, config.step);
  });
  return grid;
}

double windowed_average(const SweepGrid& grid, double window_mhz, double gaussian_fwhm_mhz) {
  if (grid.axis1.kind != AxisKind::DetuningMhz || grid.axis2.has_value()) {
    throw ValidationError("windowed_average needs a 1D detuning sweep");
  }
  if (!(window_mhz > 0.0)) {
    throw ValidationError("averaging window must be positive");
  }
  double weight_sum = 0.0;
  double value_sum = 0.0;
  for (size_t i = 0; i < grid.axis1.values.size(); ++i) {
    const double d = grid.axis1.values[i];
    if (std::abs(d) > window_mhz + 1e-12) {
      continue;
    }
    double w = 1.0;
    if (gaussian_fwhm_mhz > 0.0) {
      const double z = d / gaussian_fwhm_mhz;
      w = std::exp(-4.0 * std::log(2.0) * z * z);
    }
    weight_sum += w;
    value_sum += w * grid.points[i].fidelity;
  }
  if (weight_sum <= 0.0) {
    throw ValidationError("no sweep points inside the averaging window");
  }
  return value_sum / weight_sum;
}

}  // namespace stapulse
