#pragma once

#include <Eigen/Dense>
#include <complex>

namespace stapulse {

// One instant of the rotating-frame drive. Envelopes are complex so chirped
// pulses can fold their accumulated phase into the amplitude; the plain
// shortcut pulses keep them real. All rates are angular (rad/us).
struct HamiltonianSample {
  std::complex<double> omega_p{0.0, 0.0};  // pump, couples |1> <-> |e>
  std::complex<double> omega_s{0.0, 0.0};  // Stokes, couples |e> <-> |0>
  double phase = 0.0;                      // static phase on the Stokes leg
  double detuning = 0.0;                   // shared one-photon detuning
};

// H/hbar on the (|1>, |e>, |0>) basis:
//   [[0,          omega_p/2,                0                      ],
//    [omega_p*/2, detuning,                 omega_s e^{-i phase}/2 ],
//    [0,          omega_s* e^{i phase}/2,   0                      ]]
// Hermitian by construction; detuning sits on the excited level only.
Eigen::Matrix3cd assemble_hamiltonian(const HamiltonianSample& h);

}  // namespace stapulse
