#include "stapulse/hamiltonian.hpp"

namespace stapulse {

Eigen::Matrix3cd assemble_hamiltonian(const HamiltonianSample& h) {
  const std::complex<double> stokes =
      0.5 * h.omega_s * std::exp(std::complex<double>(0.0, -h.phase));
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 1) = 0.5 * h.omega_p;
  m(1, 0) = std::conj(m(0, 1));
  m(1, 1) = h.detuning;
  m(1, 2) = stokes;
  m(2, 1) = std::conj(stokes);
  return m;
}

}  // namespace stapulse
