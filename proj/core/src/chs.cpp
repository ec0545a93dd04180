#include "stapulse/chs.hpp"

#include <cmath>
#include <complex>

#include "stapulse/errors.hpp"

namespace stapulse {

namespace {

void validate(const ChsParameters& p) {
  if (p.omega_max < 0.0) {
    throw ValidationError("chs omega_max must be nonnegative");
  }
  if (!(p.beta > 0.0)) {
    throw ValidationError("chs steepness beta must be positive");
  }
  if (!(p.duration > 0.0)) {
    throw ValidationError("chs duration must be positive");
  }
  if (p.separation < 0.0) {
    throw ValidationError("chs separation must be nonnegative");
  }
}

// sech envelope with the chirp folded into the complex phase:
// omega_max sech(x) e^{i mu ln cosh(x)}, x = beta (t - center).
std::complex<double> complex_envelope(const ChsParameters& p, double center, double t) {
  const double x = p.beta * (t - center);
  // cosh overflows before sech underflows; clamp the far tails to zero.
  if (std::abs(x) > 700.0) {
    return {0.0, 0.0};
  }
  const double amplitude = p.omega_max / std::cosh(x);
  const double chi = p.mu * std::log(std::cosh(x));
  return std::polar(amplitude, chi);
}

}  // namespace

double chs_amplitude(const ChsParameters& p, double t) {
  validate(p);
  return std::abs(complex_envelope(p, p.center, t));
}

double chs_frequency_offset(const ChsParameters& p, double t) {
  validate(p);
  return p.mu * p.beta * std::tanh(p.beta * (t - p.center));
}

PulsePair synthesize_chs(const ChsParameters& p) {
  validate(p);
  PulsePair pair;
  pair.phase = p.phase;
  pair.tf = p.duration;
  pair.envelopes = [p](double t) -> PulseSample {
    switch (p.assignment) {
      case ChsAssignment::Pump:
        return {complex_envelope(p, p.center, t), 0.0};
      case ChsAssignment::Stokes:
        return {0.0, complex_envelope(p, p.center, t)};
      case ChsAssignment::Both:
        return {complex_envelope(p, p.center - 0.5 * p.separation, t),
                complex_envelope(p, p.center + 0.5 * p.separation, t)};
    }
    return {0.0, 0.0};
  };
  return pair;
}

}  // namespace stapulse
