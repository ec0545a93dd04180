#pragma once

#include <vector>

#include "stapulse/invariant.hpp"
#include "stapulse/pulses.hpp"
#include "stapulse/state.hpp"

namespace stapulse {

// Systematic experimental imperfections applied to a nominal drive:
// a static detuning of the excited level (ordinary MHz) and a relative
// amplitude error scaling both envelopes by (1 + eta).
struct ErrorChannel {
  double detuning_mhz = 0.0;
  double eta = 0.0;  // must stay > -1
};

enum class Record { FinalOnly, Trajectory };

struct PropagationResult {
  ThreeLevelState final_state;
  double fidelity_value = 0.0;
  double dwell_time = 0.0;   // integral of |c_e|^2 dt over the pulse, us
  double norm_drift = 0.0;   // max |  |psi|^2 - 1  | over all steps
  std::vector<double> times;               // filled under Record::Trajectory
  std::vector<Eigen::Vector3cd> trajectory;
};

// Fixed-step RK4 integration of i d(psi)/dt = H(t)/hbar psi from t = 0 to
// tf. `step` is the time step in us (default 1 ns); tf must be an integer
// multiple of it to within 1e-9. Throws ValidationError on bad arguments
// and IntegrationError when the norm drifts beyond 1e-6.
PropagationResult propagate(const PulsePair& pulses, const ErrorChannel& channel,
                            const ThreeLevelState& initial, const ThreeLevelState& target,
                            double step = 1e-3, Record record = Record::FinalOnly);
PropagationResult propagate(const PulsePair& pulses, const ErrorChannel& channel,
                            const ThreeLevelState& initial, const TargetState& target,
                            double step = 1e-3, Record record = Record::FinalOnly);

// Starts in the invariant's zero-branch eigenstate and returns the largest
// value of 1 - |<phi_0(t)|psi(t)>|^2 along the resonant, error-free drive:
// how far the state strays from the transport channel it should ride.
double track_invariant_eigenstate(const PulsePair& pulses, const InvariantSpec& spec,
                                  double step = 1e-3);

// Exponential dephasing of the excited level during its occupation:
//   F_T2 = e^{-t_u/T2} F_ideal + (1 - e^{-t_u/T2}) mixed_overlap.
// mixed_overlap is the fidelity the fully dephased state retains (1/2 for
// the equal-superposition targets).
struct DecoherenceModel {
  double t2_us = 0.0;
  double mixed_overlap = 0.5;
};
double decoherence_adjusted_fidelity(double ideal_fidelity, double dwell_time_us,
                                     const DecoherenceModel& model);

struct BlochSample {
  double t = 0.0;
  double u = 0.0, v = 0.0, w = 0.0;
};

// Bloch track of the (|1>, |e>) projection; requires a result recorded with
// Record::Trajectory.
std::vector<BlochSample> bloch_trajectory(const PropagationResult& result);

}  // namespace stapulse
