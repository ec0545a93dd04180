#include "stapulse/propagate.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "stapulse/errors.hpp"
#include "stapulse/units.hpp"

namespace stapulse {

namespace {

using std::complex;

constexpr double kNormTolerance = 1e-6;
constexpr double kDriftLimit = 1e-6;

int step_count(double tf, double step) {
  if (!(step > 0.0)) {
    throw ValidationError("integrator step must be positive");
  }
  if (!(tf > 0.0)) {
    throw ValidationError("pulse duration must be positive");
  }
  const double ratio = tf / step;
  const int n = static_cast<int>(std::llround(ratio));
  if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * std::max(1.0, ratio)) {
    throw ValidationError("pulse duration must be an integer number of steps (tf/step = " +
                          std::to_string(ratio) + ")");
  }
  return n;
}

// Composite Simpson weights over n equal intervals; falls back to the 3/8
// rule on the trailing three when n is odd.
double simpson(const std::vector<double>& f, double h) {
  const size_t n = f.size() - 1;
  if (n == 0) {
    return 0.0;
  }
  if (n == 1) {
    return 0.5 * h * (f[0] + f[1]);
  }
  double total = 0.0;
  size_t even_part = n;
  if (n % 2 != 0) {
    even_part = n - 3;
  }
  if (even_part >= 2) {
    double s = f[0] + f[even_part];
    for (size_t i = 1; i < even_part; i += 2) {
      s += 4.0 * f[i];
    }
    for (size_t i = 2; i < even_part; i += 2) {
      s += 2.0 * f[i];
    }
    total += s * h / 3.0;
  }
  if (n % 2 != 0) {
    const size_t b = even_part;
    total += 3.0 * h / 8.0 * (f[b] + 3.0 * f[b + 1] + 3.0 * f[b + 2] + f[b + 3]);
  }
  return total;
}

struct Stepper {
  complex<double> scale;        // 1 + eta on both envelopes
  complex<double> stokes_phase; // e^{-i phase} folded into the Stokes leg
  double two_delta;             // 2 * detuning, rad/us

  Eigen::Vector3cd deriv(const PulseSample& s, const Eigen::Vector3cd& y) const {
    const complex<double> op = scale * s.omega_p;
    const complex<double> os = scale * s.omega_s * stokes_phase;
    const complex<double> minus_i_half{0.0, -0.5};
    Eigen::Vector3cd d;
    d[0] = op * y[1];
    d[1] = std::conj(op) * y[0] + two_delta * y[1] + os * y[2];
    d[2] = std::conj(os) * y[1];
    return minus_i_half * d;
  }
};

}  // namespace

PropagationResult propagate(const PulsePair& pulses, const ErrorChannel& channel,
                            const ThreeLevelState& initial, const ThreeLevelState& target,
                            double step, Record record) {
  if (!(channel.eta > -1.0)) {
    throw ValidationError("amplitude error eta must stay above -1");
  }
  if (std::abs(initial.norm_sq() - 1.0) > kNormTolerance) {
    throw ValidationError("initial state is not normalized");
  }
  const int n = step_count(pulses.tf, step);
  const double h = step;

  Stepper integ;
  integ.scale = 1.0 + channel.eta;
  integ.stokes_phase = std::exp(complex<double>(0.0, -pulses.phase));
  integ.two_delta = 2.0 * mhz_to_angular(channel.detuning_mhz);

  PropagationResult out;
  Eigen::Vector3cd y = initial.c;
  std::vector<double> excited(static_cast<size_t>(n) + 1);
  excited[0] = std::norm(y[1]);

  if (record == Record::Trajectory) {
    out.times.reserve(static_cast<size_t>(n) + 1);
    out.trajectory.reserve(static_cast<size_t>(n) + 1);
    out.times.push_back(0.0);
    out.trajectory.push_back(y);
  }

  double drift = std::abs(y.squaredNorm() - 1.0);
  PulseSample s_left = pulses.envelopes(0.0);
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * h;
    const PulseSample s_mid = pulses.envelopes(t + 0.5 * h);
    const PulseSample s_right = pulses.envelopes(t + h);

    const Eigen::Vector3cd k1 = integ.deriv(s_left, y);
    const Eigen::Vector3cd k2 = integ.deriv(s_mid, y + (0.5 * h) * k1);
    const Eigen::Vector3cd k3 = integ.deriv(s_mid, y + (0.5 * h) * k2);
    const Eigen::Vector3cd k4 = integ.deriv(s_right, y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    s_left = s_right;

    excited[static_cast<size_t>(i) + 1] = std::norm(y[1]);
    drift = std::max(drift, std::abs(y.squaredNorm() - 1.0));
    if (record == Record::Trajectory) {
      out.times.push_back(static_cast<double>(i + 1) * h);
      out.trajectory.push_back(y);
    }
  }

  if (drift > kDriftLimit) {
    throw IntegrationError("norm drift " + std::to_string(drift) +
                           " exceeds tolerance; reduce the integrator step");
  }

  out.final_state = ThreeLevelState{y};
  out.fidelity_value = fidelity(out.final_state, target);
  out.dwell_time = simpson(excited, h);
  out.norm_drift = drift;
  return out;
}

PropagationResult propagate(const PulsePair& pulses, const ErrorChannel& channel,
                            const ThreeLevelState& initial, const TargetState& target,
                            double step, Record record) {
  return propagate(pulses, channel, initial, target.embed(), step, record);
}

double track_invariant_eigenstate(const PulsePair& pulses, const InvariantSpec& spec,
                                  double step) {
  const InvariantEigenstates start = invariant_eigenstates(spec, 0.0);
  const ThreeLevelState initial{start.phi0};
  const PropagationResult run =
      propagate(pulses, ErrorChannel{}, initial, initial, step, Record::Trajectory);

  double worst = 0.0;
  for (size_t i = 0; i < run.times.size(); ++i) {
    const Eigen::Vector3cd phi0 = invariant_eigenstates(spec, run.times[i]).phi0;
    const double overlap = std::norm(phi0.dot(run.trajectory[i]));
    worst = std::max(worst, 1.0 - overlap);
  }
  return worst;
}

double decoherence_adjusted_fidelity(double ideal_fidelity, double dwell_time_us,
                                     const DecoherenceModel& model) {
  if (!(model.t2_us > 0.0)) {
    throw ValidationError("dephasing time T2 must be positive");
  }
  if (ideal_fidelity < 0.0 || ideal_fidelity > 1.0 + 1e-12) {
    throw ValidationError("ideal fidelity must lie in [0, 1]");
  }
  if (dwell_time_us < 0.0) {
    throw ValidationError("dwell time must be nonnegative");
  }
  if (model.mixed_overlap < 0.0 || model.mixed_overlap > 1.0) {
    throw ValidationError("mixed-state overlap must lie in [0, 1]");
  }
  const double survival = std::exp(-dwell_time_us / model.t2_us);
  return survival * ideal_fidelity + (1.0 - survival) * model.mixed_overlap;
}

std::vector<BlochSample> bloch_trajectory(const PropagationResult& result) {
  if (result.trajectory.empty()) {
    throw ValidationError("bloch_trajectory needs a result recorded with Record::Trajectory");
  }
  std::vector<BlochSample> samples;
  samples.reserve(result.trajectory.size());
  for (size_t i = 0; i < result.trajectory.size(); ++i) {
    const Eigen::Vector3d b = bloch_vector(ThreeLevelState{result.trajectory[i]});
    samples.push_back({result.times[i], b[0], b[1], b[2]});
  }
  return samples;
}

}  // namespace stapulse
