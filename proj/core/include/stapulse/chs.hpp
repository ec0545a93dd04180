#pragma once

#include "stapulse/pulses.hpp"

namespace stapulse {

// Which transition the sech drive sits on. `Both` places two copies with
// centers offset by +-separation/2, sharing amplitude and chirp.
enum class ChsAssignment { Pump, Stokes, Both };

// Chirped hyperbolic-secant drive
//   omega(t) = omega_max sech(beta (t - center)) e^{i chi(t)},
//   chi(t)   = mu ln cosh(beta (t - center)),
// so the instantaneous frequency offset d(chi)/dt = mu beta tanh(...) sweeps
// from -mu*beta to +mu*beta across the pulse. mu = 0 degenerates to a plain
// sech pulse.
struct ChsParameters {
  double omega_max = 0.0;   // peak Rabi rate, rad/us
  double beta = 0.0;        // steepness, 1/us
  double mu = 0.0;          // chirp ratio (dimensionless)
  double center = 0.0;      // pulse center, us
  double duration = 0.0;    // window tf, us
  ChsAssignment assignment = ChsAssignment::Pump;
  double separation = 0.0;  // center offset between the two pulses for Both
  double phase = 0.0;       // static phase on the Stokes leg
};

double chs_amplitude(const ChsParameters& p, double t);
double chs_frequency_offset(const ChsParameters& p, double t);

// Complex-envelope drive over [0, duration]. Throws ValidationError unless
// omega_max >= 0, beta > 0, duration > 0, and separation >= 0.
PulsePair synthesize_chs(const ChsParameters& p);

}  // namespace stapulse
