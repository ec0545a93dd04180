#pragma once

#include <Eigen/Dense>
#include <complex>

namespace stapulse {

// Amplitudes on the lambda-system basis (|1>, |e>, |0>): two ground levels
// bridged by one excited level. Component order matches the Hamiltonian
// layout used throughout.
struct ThreeLevelState {
  Eigen::Vector3cd c{0.0, 0.0, 0.0};

  std::complex<double> c1() const { return c[0]; }
  std::complex<double> ce() const { return c[1]; }
  std::complex<double> c0() const { return c[2]; }

  double pop1() const { return std::norm(c[0]); }
  double pope() const { return std::norm(c[1]); }
  double pop0() const { return std::norm(c[2]); }
  double norm_sq() const { return c.squaredNorm(); }
};

// Returns amps scaled to unit norm. Throws ValidationError when the vector
// is too small to normalize meaningfully.
ThreeLevelState normalized(const Eigen::Vector3cd& amps);

inline ThreeLevelState ground_state_1() { return {Eigen::Vector3cd{1.0, 0.0, 0.0}}; }
inline ThreeLevelState ground_state_0() { return {Eigen::Vector3cd{0.0, 0.0, 1.0}}; }

// Ground-level superposition cos(theta)|1> + sin(theta) e^{i phi}|0>.
// Angles are accepted anywhere in [0, 2*pi].
struct TargetState {
  double theta = 0.0;
  double phi = 0.0;

  TargetState() = default;
  TargetState(double theta_in, double phi_in);

  ThreeLevelState embed() const;
};

// Overlap probability |<target|psi>|^2. Both states must be normalized to
// within 1e-6 in probability; otherwise throws ValidationError.
double fidelity(const ThreeLevelState& psi, const ThreeLevelState& target);
double fidelity(const ThreeLevelState& psi, const TargetState& target);

// Bloch vector of the (|1>, |e>) projection:
//   u = 2 Re(c1 ce*), v = 2 Im(c1 ce*), w = |c1|^2 - |ce|^2.
// Population outside the pair shortens the vector below unit length.
Eigen::Vector3d bloch_vector(const ThreeLevelState& s);

}  // namespace stapulse
