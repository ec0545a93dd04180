#pragma once

#include "stapulse/stapulse.hpp"

namespace stapulse::testing {

inline constexpr double kPi = 3.14159265358979323846;

// Equal ground-state superposition (|1> + i|0>)/sqrt(2).
inline TargetState equal_superposition() { return {0.25 * kPi, 0.5 * kPi}; }

// Published coefficient sets, one per task (a4 solved from the constraint).
inline PulseCoefficients row1() {
  return solve_constraint(TaskKind::CreateAsqs, 4.0, equal_superposition(),
                          {-1.1, std::nullopt, 0.06, 0.02});
}

inline PulseCoefficients row2() {
  return solve_constraint(TaskKind::TwoLevelTransfer, 4.0, equal_superposition(),
                          {0.5, std::nullopt, 0.14, 0.0});
}

inline PulseCoefficients row3() {
  return solve_constraint(TaskKind::ReturnToOne, 4.0, equal_superposition(),
                          {1.06, std::nullopt, 0.16, 0.0});
}

inline InvariantSpec spec_for(const PulseCoefficients& coeffs) {
  return task_invariant(coeffs, kTwoPi);
}

}  // namespace stapulse::testing
