#include "stapulse/coefficients.hpp"

#include <cmath>
#include <string>

#include "stapulse/errors.hpp"

namespace stapulse {

namespace {

constexpr double kConstraintTolerance = 1e-9;

// Weighted sums fixed by the envelope boundary conditions: gamma_dot must
// vanish at t = 0 and t = tf, which splits into one equation on the odd
// coefficients and one on the even ones.
double odd_sum(const std::vector<double>& a) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); i += 2) {
    s += static_cast<double>(i + 1) * a[i];
  }
  return s;
}

double even_weighted_sum(const std::vector<double>& a) {
  double s = 0.0;
  for (size_t i = 1; i < a.size(); i += 2) {
    s += 0.5 * static_cast<double>(i + 1) * a[i];
  }
  return s;
}

}  // namespace

const char* task_name(TaskKind task) {
  switch (task) {
    case TaskKind::CreateAsqs:
      return "create-asqs";
    case TaskKind::TwoLevelTransfer:
      return "two-level-transfer";
    case TaskKind::ReturnToOne:
      return "return-to-one";
  }
  return "unknown";
}

double even_constraint_target(TaskKind task) {
  switch (task) {
    case TaskKind::CreateAsqs:
      return -0.5;
    case TaskKind::TwoLevelTransfer:
      return 0.25;
    case TaskKind::ReturnToOne:
      return 0.5;
  }
  return 0.0;
}

double PulseCoefficients::value(int n) const {
  if (n < 1 || n > static_cast<int>(a.size())) {
    return 0.0;
  }
  return a[static_cast<size_t>(n - 1)];
}

PulseCoefficients make_coefficients(TaskKind task, double tf, const TargetState& target,
                                    std::vector<double> a) {
  if (!(tf > 0.0)) {
    throw ValidationError("pulse duration tf must be positive");
  }
  if (a.empty() || a.size() % 2 != 0) {
    throw ValidationError("coefficient list must have even length (a_1 .. a_2k)");
  }
  const double odd = odd_sum(a);
  if (std::abs(odd) > kConstraintTolerance) {
    throw ValidationError("odd coefficients violate a1 + 3 a3 + 5 a5 + ... = 0 (sum = " +
                          std::to_string(odd) + ")");
  }
  const double target_sum = even_constraint_target(task);
  const double even = even_weighted_sum(a);
  if (std::abs(even - target_sum) > kConstraintTolerance) {
    throw ValidationError(std::string("even coefficients violate sum m*a_2m = ") +
                          std::to_string(target_sum) + " for task " + task_name(task) +
                          " (sum = " + std::to_string(even) + ")");
  }
  return {task, std::move(a), tf, target};
}

PulseCoefficients solve_constraint(TaskKind task, double tf, const TargetState& target,
                                   std::vector<std::optional<double>> even,
                                   std::vector<std::optional<double>> odd) {
  if (even.empty()) {
    throw ValidationError("at least one even coefficient slot is required");
  }
  const size_t k = std::max(even.size(), odd.size());
  std::vector<double> a(2 * k, 0.0);

  // Even entries: even[m-1] = a_2m with weight m; solve the single gap.
  int gap = -1;
  double partial = 0.0;
  for (size_t m = 1; m <= even.size(); ++m) {
    if (even[m - 1].has_value()) {
      partial += static_cast<double>(m) * (*even[m - 1]);
      a[2 * m - 1] = *even[m - 1];
    } else if (gap >= 0) {
      throw ValidationError("more than one even coefficient left unset");
    } else {
      gap = static_cast<int>(m);
    }
  }
  const double target_sum = even_constraint_target(task);
  if (gap < 0) {
    // Fully specified; fall through to full validation below.
  } else {
    a[2 * static_cast<size_t>(gap) - 1] = (target_sum - partial) / static_cast<double>(gap);
  }

  // Odd entries: odd[m-1] = a_{2m-1} with weight 2m-1.
  int odd_gap = -1;
  double odd_partial = 0.0;
  for (size_t m = 1; m <= odd.size(); ++m) {
    if (odd[m - 1].has_value()) {
      odd_partial += static_cast<double>(2 * m - 1) * (*odd[m - 1]);
      a[2 * m - 2] = *odd[m - 1];
    } else if (odd_gap >= 0) {
      throw ValidationError("more than one odd coefficient left unset");
    } else {
      odd_gap = static_cast<int>(m);
    }
  }
  if (odd_gap >= 0) {
    a[2 * static_cast<size_t>(odd_gap) - 2] =
        -odd_partial / static_cast<double>(2 * odd_gap - 1);
  }

  return make_coefficients(task, tf, target, std::move(a));
}

}  // namespace stapulse
