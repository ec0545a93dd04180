#pragma once

#include <Eigen/Dense>
#include <functional>

namespace stapulse {

struct PulsePair;

// Parametrization angles (gamma, beta) of the dynamical invariant, given as
// callables of time together with their rates. The static phase enters the
// Stokes leg; duration is the pulse length tf in microseconds.
struct AngleTrajectory {
  std::function<double(double)> gamma;
  std::function<double(double)> beta;
  std::function<double(double)> gamma_dot;
  std::function<double(double)> beta_dot;
  double phase = 0.0;
  double duration = 0.0;
};

// Invariant scale omega0 (rad/us) fixes the eigenvalue splitting; it drops
// out of every derived pulse and phase, so any positive value works.
struct InvariantSpec {
  double omega0 = 0.0;
  AngleTrajectory path;
};

struct InvariantEigenstates {
  Eigen::Vector3cd phi0;      // eigenvalue 0
  Eigen::Vector3cd phi_plus;  // eigenvalue +omega0/2
  Eigen::Vector3cd phi_minus; // eigenvalue -omega0/2
};

enum class Branch { Zero, Plus, Minus };

// I/hbar at time t:
//   (omega0/2) [[0,                    cos g sin b,           -i sin g e^{-i phase}],
//               [cos g sin b,          0,                     cos g cos b e^{-i phase}],
//               [i sin g e^{i phase},  cos g cos b e^{i phase}, 0                   ]]
// with g = gamma(t), b = beta(t). Throws ValidationError unless omega0 > 0.
Eigen::Matrix3cd invariant_matrix(const InvariantSpec& spec, double t);

// Closed-form orthonormal eigenvectors of invariant_matrix(spec, t),
// eigenvalues (0, +omega0/2, -omega0/2) in struct order.
InvariantEigenstates invariant_eigenstates(const InvariantSpec& spec, double t);

// Frobenius norm of dI/dt - i[H, I]/hbar at time t, with H assembled from
// the pulses on resonance. Vanishes when the pulses were synthesized from
// the same trajectory.
double invariance_residual(const InvariantSpec& spec, const PulsePair& pulses, double t);

// Lewis-Riesenfeld phase rate d(alpha_n)/dt = <phi_n| i d/dt - H/hbar |phi_n>
// at time t, on resonance. Identically zero on every branch when trajectory
// and pulses are consistent.
double lr_phase_rate(const InvariantSpec& spec, const PulsePair& pulses, double t,
                     Branch branch);

}  // namespace stapulse
