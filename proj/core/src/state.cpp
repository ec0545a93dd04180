#include "stapulse/state.hpp"

#include <cmath>

#include "stapulse/errors.hpp"
#include "stapulse/units.hpp"

namespace stapulse {

namespace {

constexpr double kNormTolerance = 1e-6;

void require_normalized(const ThreeLevelState& s, const char* who) {
  if (std::abs(s.norm_sq() - 1.0) > kNormTolerance) {
    throw ValidationError(std::string(who) + " state is not normalized: |psi|^2 = " +
                          std::to_string(s.norm_sq()));
  }
}

}  // namespace

ThreeLevelState normalized(const Eigen::Vector3cd& amps) {
  const double n = amps.norm();
  if (n < 1e-12) {
    throw ValidationError("cannot normalize a near-zero state vector");
  }
  return {amps / n};
}

TargetState::TargetState(double theta_in, double phi_in) : theta(theta_in), phi(phi_in) {
  if (!(theta >= 0.0 && theta <= kTwoPi) || !(phi >= 0.0 && phi <= kTwoPi)) {
    throw ValidationError("target angles must lie in [0, 2*pi]");
  }
}

ThreeLevelState TargetState::embed() const {
  const std::complex<double> c0 = std::sin(theta) * std::exp(std::complex<double>(0.0, phi));
  return {Eigen::Vector3cd{std::cos(theta), 0.0, c0}};
}

double fidelity(const ThreeLevelState& psi, const ThreeLevelState& target) {
  require_normalized(psi, "final");
  require_normalized(target, "target");
  const std::complex<double> overlap = target.c.dot(psi.c);
  return std::norm(overlap);
}

double fidelity(const ThreeLevelState& psi, const TargetState& target) {
  return fidelity(psi, target.embed());
}

Eigen::Vector3d bloch_vector(const ThreeLevelState& s) {
  const std::complex<double> coherence = s.c1() * std::conj(s.ce());
  return {2.0 * coherence.real(), 2.0 * coherence.imag(), s.pop1() - s.pope()};
}

}  // namespace stapulse
