#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fixtures.hpp"
#include "stapulse/chs.hpp"
#include "stapulse/invariant.hpp"
#include "stapulse/optimize.hpp"
#include "stapulse/propagate.hpp"
#include "stapulse/pulses.hpp"
#include "stapulse/sweep.hpp"
#include "stapulse/units.hpp"

namespace stapulse {
namespace {

using testing::kPi;

// Each test checks one release criterion and prints a pass/fail line; the
// final test audits the norm drift accumulated by everything before it, so
// the definition order here matters.
class Acceptance : public ::testing::Test {
 protected:
  void tag(const char* label, const char* name) {
    label_ = label;
    name_ = name;
  }

  void TearDown() override {
    std::printf("[acceptance] criterion %s (%s): %s\n", label_, name_,
                HasFailure() ? "FAIL" : "PASS");
    std::fflush(stdout);
  }

  static PropagationResult run_tracked(const PulsePair& pulses, const ErrorChannel& channel,
                                       const ThreeLevelState& initial,
                                       const ThreeLevelState& target, double step = 1e-3,
                                       Record record = Record::FinalOnly) {
    PropagationResult result = propagate(pulses, channel, initial, target, step, record);
    worst_drift_ = std::max(worst_drift_, result.norm_drift);
    return result;
  }

  static PropagationResult run_task(const PulseCoefficients& coeffs, double detuning_mhz,
                                    double eta, double step = 1e-3) {
    return run_tracked(synthesize_pulses(coeffs), ErrorChannel{detuning_mhz, eta},
                       task_initial_state(coeffs), task_target_state(coeffs), step);
  }

  static void track_grid(const SweepGrid& grid) {
    for (const SweepPoint& p : grid.points) {
      worst_drift_ = std::max(worst_drift_, p.norm_drift);
    }
  }

  const char* label_ = "??";
  const char* name_ = "";
  static double worst_drift_;
};

double Acceptance::worst_drift_ = 0.0;

TEST_F(Acceptance, Criterion01ConstraintAlgebra) {
  tag("01", "constraint-algebra");
  EXPECT_NEAR(testing::row1().value(4), 0.17, 1e-12);
  EXPECT_NEAR(testing::row2().value(4), -0.335, 1e-12);
  EXPECT_NEAR(testing::row3().value(4), -0.52, 1e-12);
}

TEST_F(Acceptance, Criterion02BoundaryDelivery) {
  tag("02", "boundary-delivery");
  for (const PulseCoefficients& coeffs :
       {testing::row1(), testing::row2(), testing::row3()}) {
    const PropagationResult result = run_task(coeffs, 0.0, 0.0);
    EXPECT_GE(result.fidelity_value, 0.9999) << task_name(coeffs.task);
  }
}

TEST_F(Acceptance, Criterion03PeakRabiBound) {
  tag("03", "peak-rabi-bound");
  const SampledPulses samples = sample_pulses(synthesize_pulses(testing::row1()), 1e-3);
  double peak_pump = 0.0;
  double peak_stokes = 0.0;
  for (size_t i = 0; i < samples.t.size(); ++i) {
    peak_pump = std::max(peak_pump, std::abs(samples.omega_p[i]));
    peak_stokes = std::max(peak_stokes, std::abs(samples.omega_s[i]));
  }
  EXPECT_LT(angular_to_mhz(peak_pump), 1.6);
  EXPECT_LT(angular_to_mhz(peak_stokes), 1.6);
}

TEST_F(Acceptance, Criterion04RobustWindowAverage) {
  tag("04", "robust-window-average");
  const PulseCoefficients coeffs = testing::row1();
  // 10 kHz grid over the +-340 kHz window.
  const SweepGrid grid = detuning_sweep(synthesize_pulses(coeffs), task_initial_state(coeffs),
                                        task_target_state(coeffs), 0.34, 69);
  track_grid(grid);
  EXPECT_NEAR(windowed_average(grid, 0.34), 0.998, 0.003);
}

TEST_F(Acceptance, Criterion05FarDetunedFloor) {
  tag("05", "far-detuned-floor");
  const PulseCoefficients coeffs = testing::row1();
  const PulsePair pulses = synthesize_pulses(coeffs);
  const Axis band = Axis::two_sided_band(AxisKind::DetuningMhz, 5.0, 10.0, 21);
  for (double detuning_mhz : band.values) {
    const double f = run_tracked(pulses, ErrorChannel{detuning_mhz, 0.0},
                                 task_initial_state(coeffs), task_target_state(coeffs))
                         .fidelity_value;
    EXPECT_GE(f, 0.49) << "detuning " << detuning_mhz;
    EXPECT_LE(f, 0.51) << "detuning " << detuning_mhz;
  }
}

TEST_F(Acceptance, Criterion06OffResonantExcitation) {
  tag("06", "off-resonant-excitation");
  // 10 kHz grid over |detuning| in [3.5, 10] MHz, starting from |1>.
  const OffResonantScan scan =
      off_resonant_excitation(synthesize_pulses(testing::row1()), 3.5, 10.0, 651);
  track_grid(scan.grid);
  EXPECT_LT(scan.max_pop0, 0.02);
}

TEST_F(Acceptance, Criterion07DwellTime) {
  tag("07", "dwell-time");
  const PropagationResult result = run_task(testing::row1(), 0.0, 0.0);
  EXPECT_NEAR(result.dwell_time, 0.7, 0.1);
}

TEST_F(Acceptance, Criterion08DecoherenceFormula) {
  tag("08", "decoherence-formula");
  DecoherenceModel model;
  model.mixed_overlap = 0.5;
  model.t2_us = 50.0;
  EXPECT_NEAR(decoherence_adjusted_fidelity(0.998, 0.7, model), 0.991, 0.001);
  model.t2_us = 2600.0;
  EXPECT_NEAR(decoherence_adjusted_fidelity(0.998, 0.7, model), 0.998, 0.001);
}

TEST_F(Acceptance, Criterion09TwoLevelTask) {
  tag("09", "two-level-task");
  const PulseCoefficients coeffs = testing::row2();
  const SweepGrid grid = detuning_sweep(synthesize_pulses(coeffs), task_initial_state(coeffs),
                                        task_target_state(coeffs), 0.32, 65);
  track_grid(grid);
  EXPECT_NEAR(windowed_average(grid, 0.32), 0.995, 0.003);

  const PropagationResult resonant =
      run_tracked(synthesize_pulses(coeffs), ErrorChannel{}, task_initial_state(coeffs),
                  task_target_state(coeffs), 1e-3, Record::Trajectory);
  double worst_u = 0.0;
  for (const BlochSample& s : bloch_trajectory(resonant)) {
    worst_u = std::max(worst_u, std::abs(s.u));
  }
  EXPECT_LT(worst_u, 1e-3);
}

TEST_F(Acceptance, Criterion10ReverseTask) {
  tag("10", "reverse-task");
  const PulseCoefficients coeffs = testing::row3();
  const SweepGrid grid = detuning_sweep(synthesize_pulses(coeffs), task_initial_state(coeffs),
                                        task_target_state(coeffs), 0.52, 105);
  track_grid(grid);
  EXPECT_GT(windowed_average(grid, 0.52), 0.999);

  // Running the mirrored, sign-flipped drive from the prepared state must
  // return the population to |1> without re-optimization.
  const PulsePair reversed = time_reverse(synthesize_pulses(testing::row1()));
  const double back = run_tracked(reversed, ErrorChannel{},
                                  testing::equal_superposition().embed(), ground_state_1())
                          .fidelity_value;
  EXPECT_GE(back, 0.999);
}

TEST_F(Acceptance, Criterion11AmplitudeErrorAsymmetry) {
  tag("11", "amplitude-error-asymmetry");
  const PulseCoefficients coeffs = testing::row1();
  auto fidelity_at = [&](double detuning_mhz, double eta) {
    return run_task(coeffs, detuning_mhz, eta).fidelity_value;
  };
  // Overdriving beats underdriving: at resonance for both probe depths, and
  // at the 170 kHz working point for the deeper probe.
  EXPECT_GT(fidelity_at(0.0, 0.1), fidelity_at(0.0, -0.1));
  EXPECT_GT(fidelity_at(0.0, 0.2), fidelity_at(0.0, -0.2));
  EXPECT_GT(fidelity_at(0.17, 0.2), fidelity_at(0.17, -0.2));
}

TEST_F(Acceptance, Criterion12InvariantSuite) {
  tag("12", "invariant-suite");
  for (const PulseCoefficients& coeffs :
       {testing::row1(), testing::row2(), testing::row3()}) {
    const InvariantSpec spec = testing::spec_for(coeffs);
    const PulsePair pulses = synthesize_pulses(coeffs);
    const double omega0 = spec.omega0;
    for (int i = 0; i < 100; ++i) {
      const double t = coeffs.tf * (static_cast<double>(i) + 0.5) / 100.0;
      ASSERT_LT(invariance_residual(spec, pulses, t), 1e-6 * omega0)
          << task_name(coeffs.task) << " t = " << t;

      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(invariant_matrix(spec, t));
      ASSERT_NEAR(solver.eigenvalues()[0], -0.5 * omega0, 1e-9);
      ASSERT_NEAR(solver.eigenvalues()[1], 0.0, 1e-9);
      ASSERT_NEAR(solver.eigenvalues()[2], 0.5 * omega0, 1e-9);

      ASSERT_LT(std::abs(lr_phase_rate(spec, pulses, t, Branch::Zero)), 1e-8 * omega0)
          << task_name(coeffs.task) << " t = " << t;
    }
    EXPECT_LT(track_invariant_eigenstate(pulses, spec), 1e-6) << task_name(coeffs.task);
  }
}

TEST_F(Acceptance, Criterion13OptimizerDominance) {
  tag("13", "optimizer-dominance");
  const Objective objective;
  const struct {
    TaskKind task;
    PulseCoefficients published;
  } cases[] = {{TaskKind::CreateAsqs, testing::row1()},
               {TaskKind::TwoLevelTransfer, testing::row2()}};
  for (const auto& c : cases) {
    const double published_score = evaluate_objective(c.published, objective).score;
    const ScanResult scan = coordinate_scan(c.task, 4.0, testing::equal_superposition(),
                                            ScanPlan::defaults(c.task), objective);
    EXPECT_LE(scan.best_metrics.score, published_score * (1.0 + 1e-6))
        << task_name(c.task);

    const SweepGrid check =
        detuning_sweep(synthesize_pulses(scan.best), task_initial_state(scan.best),
                       task_target_state(scan.best), 0.34, 69);
    track_grid(check);
  }
}

TEST_F(Acceptance, SubstituteChsBaseline) {
  tag("chs", "substitute-baseline");
  // The published sech-drive comparison numbers depend on parameters this
  // toolkit does not ship; the substituted check is a calibrated pi pulse
  // plus the qualitative flatness claim against the shortcut drive.
  ChsParameters p;
  p.beta = 1.5;
  p.mu = 0.0;
  p.center = 2.0;
  p.duration = 4.0;
  p.assignment = ChsAssignment::Pump;
  p.omega_max = 1.0;
  const double unit_area =
      (std::atan(std::sinh(p.beta * p.center)) +
       std::atan(std::sinh(p.beta * (p.duration - p.center)))) /
      p.beta;
  p.omega_max = kPi / unit_area;

  const ThreeLevelState excited = normalized(Eigen::Vector3cd(0.0, 1.0, 0.0));
  const double transfer =
      run_tracked(synthesize_chs(p), ErrorChannel{}, ground_state_1(), excited)
          .fidelity_value;
  EXPECT_GE(transfer, 0.99);

  // Chirping the same sech envelope buys amplitude-error robustness: its
  // transfer varies less over eta in [-0.2, 0.2] than the shortcut drive's.
  ChsParameters chirped = p;
  chirped.omega_max = 5.0;
  chirped.mu = 2.0;
  const SweepGrid chs_grid =
      eta_sweep(synthesize_chs(chirped), ground_state_1(), excited, 0.0, 0.2, 9);
  track_grid(chs_grid);

  const PulseCoefficients coeffs = testing::row2();
  const SweepGrid shortcut_grid =
      eta_sweep(synthesize_pulses(coeffs), task_initial_state(coeffs),
                task_target_state(coeffs), 0.0, 0.2, 9);
  track_grid(shortcut_grid);

  auto spread = [](const SweepGrid& grid) {
    double lo = grid.points.front().fidelity;
    double hi = lo;
    for (const SweepPoint& point : grid.points) {
      lo = std::min(lo, point.fidelity);
      hi = std::max(hi, point.fidelity);
    }
    return hi - lo;
  };
  EXPECT_LT(spread(chs_grid), spread(shortcut_grid));
}

TEST_F(Acceptance, Criterion14NumericalHygiene) {
  tag("14", "numerical-hygiene");
  EXPECT_LT(worst_drift_, 1e-9);

  // Halving the 1 ns step must not move any reported figure.
  const PulseCoefficients row1 = testing::row1();
  const PulseCoefficients row2 = testing::row2();
  const PulseCoefficients row3 = testing::row3();
  const struct {
    const PulseCoefficients& coeffs;
    double detuning_mhz;
  } probes[] = {{row1, 0.0}, {row1, 0.17}, {row2, 0.0}, {row3, 0.52}};
  for (const auto& probe : probes) {
    const double coarse =
        run_task(probe.coeffs, probe.detuning_mhz, 0.0, 1e-3).fidelity_value;
    const double fine =
        run_task(probe.coeffs, probe.detuning_mhz, 0.0, 0.5e-3).fidelity_value;
    EXPECT_NEAR(coarse, fine, 1e-8)
        << task_name(probe.coeffs.task) << " detuning " << probe.detuning_mhz;
  }

  const PulsePair pulses = synthesize_pulses(row1);
  const double leak_coarse = run_tracked(pulses, ErrorChannel{3.5, 0.0}, ground_state_1(),
                                         ground_state_1(), 1e-3)
                                 .final_state.pop0();
  const double leak_fine = run_tracked(pulses, ErrorChannel{3.5, 0.0}, ground_state_1(),
                                       ground_state_1(), 0.5e-3)
                               .final_state.pop0();
  EXPECT_NEAR(leak_coarse, leak_fine, 1e-8);
}

}  // namespace
}  // namespace stapulse
