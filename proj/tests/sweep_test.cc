#include "stapulse/sweep.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "stapulse/errors.hpp"
#include "stapulse/pulses.hpp"

namespace stapulse {
namespace {

PulsePair rectangular_pump(double omega, double tf) {
  PulsePair pulses;
  pulses.tf = tf;
  pulses.envelopes = [omega](double) -> PulseSample { return {omega, 0.0}; };
  return pulses;
}

TEST(Axis, LinspaceCoversRangeEvenly) {
  const Axis axis = Axis::linspace(AxisKind::DetuningMhz, -1.0, 1.0, 5);
  ASSERT_EQ(axis.values.size(), 5u);
  EXPECT_DOUBLE_EQ(axis.values.front(), -1.0);
  EXPECT_DOUBLE_EQ(axis.values[2], 0.0);
  EXPECT_DOUBLE_EQ(axis.values.back(), 1.0);
  EXPECT_EQ(axis.kind, AxisKind::DetuningMhz);

  EXPECT_THROW(Axis::linspace(AxisKind::Eta, 0.0, 1.0, 1), ValidationError);
  EXPECT_THROW(Axis::linspace(AxisKind::Eta, 1.0, 1.0, 5), ValidationError);
  EXPECT_THROW(Axis::linspace(AxisKind::Eta, 2.0, 1.0, 5), ValidationError);
}

TEST(Axis, TwoSidedBandMirrorsThePositiveSide) {
  const Axis axis = Axis::two_sided_band(AxisKind::DetuningMhz, 1.0, 2.0, 3);
  ASSERT_EQ(axis.values.size(), 6u);
  const double expected[] = {-2.0, -1.5, -1.0, 1.0, 1.5, 2.0};
  for (size_t i = 0; i < 6; ++i) {
    EXPECT_DOUBLE_EQ(axis.values[i], expected[i]) << "index " << i;
  }

  EXPECT_THROW(Axis::two_sided_band(AxisKind::DetuningMhz, 2.0, 1.0, 3), ValidationError);
  EXPECT_THROW(Axis::two_sided_band(AxisKind::DetuningMhz, 1.0, 2.0, 1), ValidationError);
}

TEST(DetuningSweep, PointsMatchDirectPropagation) {
  const PulseCoefficients coeffs = testing::row1();
  const PulsePair pulses = synthesize_pulses(coeffs);
  const ThreeLevelState initial = task_initial_state(coeffs);
  const ThreeLevelState target = task_target_state(coeffs);

  const SweepGrid grid = detuning_sweep(pulses, initial, target, 0.5, 5);
  ASSERT_EQ(grid.points.size(), 5u);
  EXPECT_FALSE(grid.axis2.has_value());

  for (int i : {0, 2, 4}) {
    const PropagationResult direct =
        propagate(pulses, ErrorChannel{grid.axis1.values[static_cast<size_t>(i)], 0.0},
                  initial, target);
    EXPECT_DOUBLE_EQ(grid.at(i).fidelity, direct.fidelity_value);
    EXPECT_DOUBLE_EQ(grid.at(i).pop0, direct.final_state.pop0());
    EXPECT_DOUBLE_EQ(grid.at(i).dwell_time, direct.dwell_time);
  }
  EXPECT_THROW(detuning_sweep(pulses, initial, target, -1.0, 5), ValidationError);
}

TEST(DetuningSweep, WorkerCountDoesNotChangeResults) {
  const PulseCoefficients coeffs = testing::row1();
  const PulsePair pulses = synthesize_pulses(coeffs);
  const ThreeLevelState initial = task_initial_state(coeffs);
  const ThreeLevelState target = task_target_state(coeffs);

  SweepConfig serial;
  serial.jobs = 1;
  SweepConfig parallel;
  parallel.jobs = 4;
  const SweepGrid a = detuning_sweep(pulses, initial, target, 1.0, 9, serial);
  const SweepGrid b = detuning_sweep(pulses, initial, target, 1.0, 9, parallel);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_DOUBLE_EQ(a.points[i].fidelity, b.points[i].fidelity) << "index " << i;
    EXPECT_DOUBLE_EQ(a.points[i].pop0, b.points[i].pop0) << "index " << i;
  }
}

TEST(EtaSweep, FollowsAmplitudeScalingOnRectangularPulse) {
  const double omega = 2.0;
  const PulsePair pulses = rectangular_pump(omega, 1.0);
  const SweepGrid grid =
      eta_sweep(pulses, ground_state_1(), ground_state_1(), 0.0, 0.2, 5);
  ASSERT_EQ(grid.points.size(), 5u);
  EXPECT_EQ(grid.axis1.kind, AxisKind::Eta);
  for (size_t i = 0; i < grid.points.size(); ++i) {
    const double eta = grid.axis1.values[i];
    const double expected = std::pow(std::sin(0.5 * (1.0 + eta) * omega), 2);
    EXPECT_NEAR(grid.points[i].pope, expected, 1e-10) << "eta " << eta;
  }

  EXPECT_THROW(eta_sweep(pulses, ground_state_1(), ground_state_1(), 0.0, 1.0, 5),
               ValidationError);
  EXPECT_THROW(eta_sweep(pulses, ground_state_1(), ground_state_1(), 0.0, 0.0, 5),
               ValidationError);
}

TEST(OffResonantExcitation, ReportsWorstLeakageOverTheBand) {
  const PulsePair pulses = synthesize_pulses(testing::row1());
  const OffResonantScan scan = off_resonant_excitation(pulses, 3.5, 4.0, 3);
  ASSERT_EQ(scan.grid.points.size(), 6u);
  EXPECT_DOUBLE_EQ(scan.cutoff_mhz, 3.5);
  EXPECT_DOUBLE_EQ(scan.outer_mhz, 4.0);

  double worst_pop0 = 0.0;
  double worst_pope = 0.0;
  for (const SweepPoint& p : scan.grid.points) {
    worst_pop0 = std::max(worst_pop0, p.pop0);
    worst_pope = std::max(worst_pope, p.pope);
  }
  EXPECT_DOUBLE_EQ(scan.max_pop0, worst_pop0);
  EXPECT_DOUBLE_EQ(scan.max_pope, worst_pope);

  EXPECT_THROW(off_resonant_excitation(pulses, 0.0, 4.0, 3), ValidationError);
  EXPECT_THROW(off_resonant_excitation(pulses, 4.0, 3.5, 3), ValidationError);
}

TEST(CoefficientMap, ResolvesTheConstraintAtEveryScanValue) {
  const PulseCoefficients base = testing::row1();
  const Axis coeff_axis = Axis::linspace(AxisKind::Coefficient, -1.2, -1.0, 3);
  const Axis detuning_axis = Axis::linspace(AxisKind::DetuningMhz, -0.2, 0.2, 5);
  const SweepGrid map = coefficient_map(base, 2, coeff_axis, detuning_axis);
  ASSERT_EQ(map.points.size(), 15u);
  ASSERT_TRUE(map.axis2.has_value());

  // The middle row scans a2 = -1.1, which is the base set itself, so it
  // must reproduce a plain detuning sweep bit for bit.
  const SweepGrid direct = detuning_sweep(synthesize_pulses(base), task_initial_state(base),
                                          task_target_state(base), 0.2, 5);
  for (int j = 0; j < 5; ++j) {
    EXPECT_DOUBLE_EQ(map.at(1, j).fidelity, direct.at(j).fidelity) << "column " << j;
  }

  EXPECT_THROW(coefficient_map(base, 4, coeff_axis, detuning_axis), ValidationError);
  EXPECT_THROW(coefficient_map(base, 2, detuning_axis, detuning_axis), ValidationError);
  EXPECT_THROW(coefficient_map(base, 2, coeff_axis, coeff_axis), ValidationError);
}

TEST(WindowedAverage, FlatAndGaussianWeights) {
  SweepGrid grid;
  grid.axis1 = Axis::linspace(AxisKind::DetuningMhz, -0.2, 0.2, 5);
  const double fidelities[] = {0.9, 0.95, 1.0, 0.97, 0.88};
  for (double f : fidelities) {
    SweepPoint p;
    p.fidelity = f;
    grid.points.push_back(p);
  }

  EXPECT_NEAR(windowed_average(grid, 0.1), (0.95 + 1.0 + 0.97) / 3.0, 1e-15);
  EXPECT_NEAR(windowed_average(grid, 0.05), 1.0, 1e-15);
  EXPECT_NEAR(windowed_average(grid, 1.0), (0.9 + 0.95 + 1.0 + 0.97 + 0.88) / 5.0, 1e-15);

  const double wing = std::pow(2.0, -4.0);  // exp(-4 ln2) at one FWHM off center
  const double expected =
      (wing * 0.95 + 1.0 + wing * 0.97) / (1.0 + 2.0 * wing);
  EXPECT_NEAR(windowed_average(grid, 0.1, 0.1), expected, 1e-15);
}

TEST(WindowedAverage, RejectsUnsupportedGrids) {
  SweepGrid grid;
  grid.axis1 = Axis::linspace(AxisKind::DetuningMhz, 0.5, 1.0, 3);
  grid.points.resize(3);
  EXPECT_THROW(windowed_average(grid, 0.1), ValidationError);
  EXPECT_THROW(windowed_average(grid, 0.0), ValidationError);

  grid.axis1.kind = AxisKind::Eta;
  EXPECT_THROW(windowed_average(grid, 0.6), ValidationError);

  grid.axis1.kind = AxisKind::DetuningMhz;
  grid.axis2 = Axis::linspace(AxisKind::DetuningMhz, -1.0, 1.0, 3);
  EXPECT_THROW(windowed_average(grid, 0.6), ValidationError);
}

}  // namespace
}  // namespace stapulse
