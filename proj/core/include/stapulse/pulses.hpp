#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "stapulse/coefficients.hpp"
#include "stapulse/invariant.hpp"
#include "stapulse/state.hpp"

namespace stapulse {

struct PulseSample {
  std::complex<double> omega_p{0.0, 0.0};
  std::complex<double> omega_s{0.0, 0.0};
};

// A synthesized drive: complex pump/Stokes envelopes (rad/us) over
// t in [0, tf] plus the static phase on the Stokes leg. Negative real
// values are legitimate sign flips of the field, not errors.
struct PulsePair {
  std::function<PulseSample(double)> envelopes;
  double phase = 0.0;
  double tf = 0.0;

  std::complex<double> omega_p(double t) const { return envelopes(t).omega_p; }
  std::complex<double> omega_s(double t) const { return envelopes(t).omega_s; }
};

// Ansatz gamma(t) = ramp(t) + sum_n a_n sin(n pi t / tf) with the task's
// beta profile. Ramps run 0 -> pi (CreateAsqs), 0 -> -pi/2
// (TwoLevelTransfer), pi -> 0 (ReturnToOne); the superposition tasks use
// beta = ((pi - theta_x)/2)(1 - cos gamma) and the two-level task beta = 0.
AngleTrajectory angle_trajectory(const PulseCoefficients& coeffs);

// Task-form envelopes: the beta(gamma) substitution reduces the general
// inverse-engineering formulas to
//   omega_p = gamma_dot [(pi - theta_x) cos gamma sin beta + 2 cos beta]
//   omega_s = gamma_dot [(pi - theta_x) cos gamma cos beta - 2 sin beta]
// for the superposition tasks and omega_p = 2 gamma_dot, omega_s = 0 for
// the two-level transfer.
PulsePair synthesize_pulses(const PulseCoefficients& coeffs);

// General inverse-engineering route, valid for any smooth trajectory:
//   omega_p = 2 [beta_dot cot(gamma) sin(beta) + gamma_dot cos(beta)]
//   omega_s = 2 [beta_dot cot(gamma) cos(beta) - gamma_dot sin(beta)]
// Singular where sin(gamma) = 0 unless beta_dot vanishes there too.
PulsePair pulses_from_trajectory(const AngleTrajectory& path);

// Reversed drive omega^new(t) = -omega(tf - t); undoes the forward
// evolution up to phases, turning a creation pulse into a return pulse.
PulsePair time_reverse(const PulsePair& pulses);

// The state each task starts from and the state it must deliver.
ThreeLevelState task_initial_state(const PulseCoefficients& coeffs);
ThreeLevelState task_target_state(const PulseCoefficients& coeffs);

// Invariant parametrization consistent with synthesize_pulses(coeffs).
InvariantSpec task_invariant(const PulseCoefficients& coeffs, double omega0);

struct SampledPulses {
  std::vector<double> t;
  std::vector<std::complex<double>> omega_p;
  std::vector<std::complex<double>> omega_s;
  double phase = 0.0;
};

// Uniform grid of ceil(tf/dt)+1 samples including both endpoints.
SampledPulses sample_pulses(const PulsePair& pulses, double dt);

// Largest |omega| over a sampling of both envelopes, in rad/us.
double peak_rabi(const PulsePair& pulses, double dt = 1e-3);

}  // namespace stapulse
