#include "stapulse/pulses.hpp"

#include <algorithm>
#include <cmath>

#include "stapulse/errors.hpp"

namespace stapulse {

namespace {

constexpr double kPi = 3.14159265358979323846;

// gamma(t) = ramp0 + slope t + sum_n a_n sin(n pi t / tf);
// beta = beta_coeff (1 - cos gamma), beta_coeff = 0 for the two-level task.
struct TaskProfile {
  double ramp0 = 0.0;
  double slope = 0.0;
  double beta_coeff = 0.0;
  bool two_level = false;
};

TaskProfile profile_for(const PulseCoefficients& c) {
  switch (c.task) {
    case TaskKind::CreateAsqs:
      return {0.0, kPi / c.tf, 0.5 * (kPi - c.target.theta), false};
    case TaskKind::TwoLevelTransfer:
      return {0.0, -0.5 * kPi / c.tf, 0.0, true};
    case TaskKind::ReturnToOne:
      return {kPi, -kPi / c.tf, 0.5 * (kPi - c.target.theta), false};
  }
  throw ValidationError("unknown task kind");
}

// One pass over the Fourier series via the angle-addition recurrence:
// value = sum a_n sin(n u), rate = (pi/tf) sum n a_n cos(n u).
void eval_series(const std::vector<double>& a, double omega, double t, double& value,
                 double& rate) {
  const double u = omega * t;
  const double cu = std::cos(u);
  const double su = std::sin(u);
  double cn = cu;
  double sn = su;
  value = 0.0;
  rate = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    value += a[i] * sn;
    rate += a[i] * static_cast<double>(i + 1) * cn;
    const double next_c = cn * cu - sn * su;
    sn = sn * cu + cn * su;
    cn = next_c;
  }
  rate *= omega;
}

}  // namespace

AngleTrajectory angle_trajectory(const PulseCoefficients& coeffs) {
  const TaskProfile p = profile_for(coeffs);
  const double omega = kPi / coeffs.tf;
  const std::vector<double> a = coeffs.a;

  AngleTrajectory path;
  path.phase = coeffs.target.phi;
  path.duration = coeffs.tf;
  path.gamma = [a, omega, p](double t) {
    double s, sd;
    eval_series(a, omega, t, s, sd);
    return p.ramp0 + p.slope * t + s;
  };
  path.gamma_dot = [a, omega, p](double t) {
    double s, sd;
    eval_series(a, omega, t, s, sd);
    return p.slope + sd;
  };
  path.beta = [a, omega, p](double t) {
    if (p.two_level) {
      return 0.0;
    }
    double s, sd;
    eval_series(a, omega, t, s, sd);
    return p.beta_coeff * (1.0 - std::cos(p.ramp0 + p.slope * t + s));
  };
  path.beta_dot = [a, omega, p](double t) {
    if (p.two_level) {
      return 0.0;
    }
    double s, sd;
    eval_series(a, omega, t, s, sd);
    return p.beta_coeff * std::sin(p.ramp0 + p.slope * t + s) * (p.slope + sd);
  };
  return path;
}

PulsePair synthesize_pulses(const PulseCoefficients& coeffs) {
  const TaskProfile p = profile_for(coeffs);
  const double omega = kPi / coeffs.tf;
  const std::vector<double> a = coeffs.a;

  PulsePair pair;
  pair.phase = coeffs.target.phi;
  pair.tf = coeffs.tf;
  pair.envelopes = [a, omega, p](double t) -> PulseSample {
    double s, sd;
    eval_series(a, omega, t, s, sd);
    const double gamma = p.ramp0 + p.slope * t + s;
    const double gd = p.slope + sd;
    if (p.two_level) {
      return {2.0 * gd, 0.0};
    }
    const double beta = p.beta_coeff * (1.0 - std::cos(gamma));
    const double cg = std::cos(gamma);
    const double sb = std::sin(beta);
    const double cb = std::cos(beta);
    const double shape = 2.0 * p.beta_coeff * cg;
    return {gd * (shape * sb + 2.0 * cb), gd * (shape * cb - 2.0 * sb)};
  };
  return pair;
}

PulsePair pulses_from_trajectory(const AngleTrajectory& path) {
  if (!(path.duration > 0.0)) {
    throw ValidationError("trajectory duration must be positive");
  }
  PulsePair pair;
  pair.phase = path.phase;
  pair.tf = path.duration;
  pair.envelopes = [path](double t) -> PulseSample {
    const double gamma = path.gamma(t);
    const double beta = path.beta(t);
    const double gd = path.gamma_dot(t);
    const double bd = path.beta_dot(t);
    const double cot = std::cos(gamma) / std::sin(gamma);
    const double sb = std::sin(beta);
    const double cb = std::cos(beta);
    return {2.0 * (bd * cot * sb + gd * cb), 2.0 * (bd * cot * cb - gd * sb)};
  };
  return pair;
}

PulsePair time_reverse(const PulsePair& pulses) {
  PulsePair reversed;
  reversed.phase = pulses.phase;
  reversed.tf = pulses.tf;
  reversed.envelopes = [inner = pulses.envelopes, tf = pulses.tf](double t) -> PulseSample {
    const PulseSample s = inner(tf - t);
    return {-s.omega_p, -s.omega_s};
  };
  return reversed;
}

ThreeLevelState task_initial_state(const PulseCoefficients& coeffs) {
  switch (coeffs.task) {
    case TaskKind::CreateAsqs:
    case TaskKind::TwoLevelTransfer:
      return ground_state_1();
    case TaskKind::ReturnToOne:
      return coeffs.target.embed();
  }
  throw ValidationError("unknown task kind");
}

ThreeLevelState task_target_state(const PulseCoefficients& coeffs) {
  switch (coeffs.task) {
    case TaskKind::CreateAsqs:
      return coeffs.target.embed();
    case TaskKind::TwoLevelTransfer:
      // The drive parks the state on |e> (with a global phase fidelity
      // does not see).
      return {Eigen::Vector3cd{0.0, 1.0, 0.0}};
    case TaskKind::ReturnToOne:
      return ground_state_1();
  }
  throw ValidationError("unknown task kind");
}

InvariantSpec task_invariant(const PulseCoefficients& coeffs, double omega0) {
  return {omega0, angle_trajectory(coeffs)};
}

SampledPulses sample_pulses(const PulsePair& pulses, double dt) {
  if (!(dt > 0.0) || !(pulses.tf > 0.0)) {
    throw ValidationError("sampling needs dt > 0 and a positive pulse duration");
  }
  const int n = static_cast<int>(std::ceil(pulses.tf / dt - 1e-9));
  SampledPulses out;
  out.phase = pulses.phase;
  out.t.reserve(static_cast<size_t>(n) + 1);
  out.omega_p.reserve(static_cast<size_t>(n) + 1);
  out.omega_s.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double t = std::min(static_cast<double>(i) * dt, pulses.tf);
    const PulseSample s = pulses.envelopes(t);
    out.t.push_back(t);
    out.omega_p.push_back(s.omega_p);
    out.omega_s.push_back(s.omega_s);
  }
  return out;
}

double peak_rabi(const PulsePair& pulses, double dt) {
  const SampledPulses s = sample_pulses(pulses, dt);
  double peak = 0.0;
  for (size_t i = 0; i < s.t.size(); ++i) {
    peak = std::max({peak, std::abs(s.omega_p[i]), std::abs(s.omega_s[i])});
  }
  return peak;
}

}  // namespace stapulse
