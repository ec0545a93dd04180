#include <benchmark/benchmark.h>

#include "stapulse/invariant.hpp"
#include "stapulse/propagate.hpp"
#include "stapulse/pulses.hpp"
#include "stapulse/sweep.hpp"
#include "stapulse/units.hpp"

namespace stapulse {
namespace {

constexpr double kPi = 0.5 * kTwoPi;

PulseCoefficients reference_coefficients() {
  return solve_constraint(TaskKind::CreateAsqs, 4.0, TargetState(0.25 * kPi, 0.5 * kPi),
                          {-1.1, std::nullopt, 0.06, 0.02});
}

void BM_EnvelopeSample(benchmark::State& state) {
  const PulsePair pulses = synthesize_pulses(reference_coefficients());
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    if (t >= pulses.tf) {
      t = 0.0;
    }
    benchmark::DoNotOptimize(pulses.envelopes(t));
  }
}
BENCHMARK(BM_EnvelopeSample);

void BM_InvariantEigenstates(benchmark::State& state) {
  const PulseCoefficients coeffs = reference_coefficients();
  const InvariantSpec spec = task_invariant(coeffs, kTwoPi);
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    if (t >= coeffs.tf) {
      t = 0.0;
    }
    benchmark::DoNotOptimize(invariant_eigenstates(spec, t));
  }
}
BENCHMARK(BM_InvariantEigenstates);

void BM_InvarianceResidual(benchmark::State& state) {
  const PulseCoefficients coeffs = reference_coefficients();
  const InvariantSpec spec = task_invariant(coeffs, kTwoPi);
  const PulsePair pulses = synthesize_pulses(coeffs);
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    if (t >= coeffs.tf) {
      t = 0.0;
    }
    benchmark::DoNotOptimize(invariance_residual(spec, pulses, t));
  }
}
BENCHMARK(BM_InvarianceResidual);

void BM_PropagateResonant(benchmark::State& state) {
  const PulseCoefficients coeffs = reference_coefficients();
  const PulsePair pulses = synthesize_pulses(coeffs);
  const ThreeLevelState initial = task_initial_state(coeffs);
  const ThreeLevelState target = task_target_state(coeffs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(pulses, ErrorChannel{}, initial, target));
  }
}
BENCHMARK(BM_PropagateResonant);

void BM_PropagateDetuned(benchmark::State& state) {
  const PulseCoefficients coeffs = reference_coefficients();
  const PulsePair pulses = synthesize_pulses(coeffs);
  const ThreeLevelState initial = task_initial_state(coeffs);
  const ThreeLevelState target = task_target_state(coeffs);
  const ErrorChannel channel{0.17, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(pulses, channel, initial, target));
  }
}
BENCHMARK(BM_PropagateDetuned);

void BM_DetuningSweep(benchmark::State& state) {
  const PulseCoefficients coeffs = reference_coefficients();
  const PulsePair pulses = synthesize_pulses(coeffs);
  const ThreeLevelState initial = task_initial_state(coeffs);
  const ThreeLevelState target = task_target_state(coeffs);
  SweepConfig config;
  config.jobs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        detuning_sweep(pulses, initial, target, 0.34, static_cast<int>(state.range(0)),
                       config));
  }
}
BENCHMARK(BM_DetuningSweep)->Arg(9)->Arg(33);

}  // namespace
}  // namespace stapulse

BENCHMARK_MAIN();
