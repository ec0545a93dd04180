#pragma once

#include <optional>
#include <vector>

#include "stapulse/state.hpp"

namespace stapulse {

// The three pulse tasks share one ansatz family and differ in the linear
// ramp, the beta profile, and the constraint their even Fourier
// coefficients must satisfy.
enum class TaskKind { CreateAsqs, TwoLevelTransfer, ReturnToOne };

const char* task_name(TaskKind task);

// Right-hand side of the even-coefficient constraint
// sum_m m*a_{2m} = target: -1/2, +1/4, +1/2 in TaskKind order. The odd
// coefficients always obey a1 + 3 a3 + 5 a5 + 7 a7 + ... = 0 so the
// envelopes vanish at both endpoints.
double even_constraint_target(TaskKind task);

// Fourier coefficients of the gamma ansatz, a[0] = a_1 through a[2k-1] =
// a_{2k}, plus the pulse duration and the ground-superposition target the
// task creates (or, for ReturnToOne, starts from).
struct PulseCoefficients {
  TaskKind task = TaskKind::CreateAsqs;
  std::vector<double> a;
  double tf = 0.0;
  TargetState target;

  double value(int n) const;  // a_n by subscript, 0 when n exceeds the list
  int order() const { return static_cast<int>(a.size()) / 2; }  // k
};

// Validates both constraints (1e-9 tolerance), tf > 0, and an even
// coefficient count; throws ValidationError with the offending sum.
PulseCoefficients make_coefficients(TaskKind task, double tf, const TargetState& target,
                                    std::vector<double> a);

// Solves the even constraint for the single unset entry of `even`, and the
// odd constraint for the single unset entry of `odd` when one exists.
// `even[m-1]` holds a_{2m}, `odd[m-1]` holds a_{2m-1}; an empty or absent
// `odd` means all odd coefficients are zero. Exactly one even entry must be
// unset; throws ValidationError otherwise, or when a fully set list
// violates its constraint.
PulseCoefficients solve_constraint(TaskKind task, double tf, const TargetState& target,
                                   std::vector<std::optional<double>> even,
                                   std::vector<std::optional<double>> odd = {});

}  // namespace stapulse
