#include "stapulse/optimize.hpp"

#include <cmath>

#include "stapulse/errors.hpp"

namespace stapulse {

namespace {

int range_count(const ScanRange& r) {
  if (!(r.step > 0.0) || r.min > r.max) {
    throw ValidationError("scan range needs step > 0 and min <= max");
  }
  return static_cast<int>(std::llround((r.max - r.min) / r.step)) + 1;
}

double range_value(const ScanRange& r, int i) {
  return r.min + static_cast<double>(i) * r.step;
}

struct Candidate {
  double a2 = 0.0, a6 = 0.0, a8 = 0.0;
};

PulseCoefficients resolve(TaskKind task, double tf, const TargetState& target,
                          const Candidate& c) {
  return solve_constraint(task, tf, target, {c.a2, std::nullopt, c.a6, c.a8});
}

// Smaller score wins; near-ties (1e-12) go to the lexicographically smaller
// coefficient magnitudes so reruns pick a unique winner.
bool better(double score, const Candidate& c, double best_score, const Candidate& best) {
  if (score < best_score - 1e-12) {
    return true;
  }
  if (score > best_score + 1e-12) {
    return false;
  }
  const double lhs[3] = {std::abs(c.a2), std::abs(c.a6), std::abs(c.a8)};
  const double rhs[3] = {std::abs(best.a2), std::abs(best.a6), std::abs(best.a8)};
  for (int i = 0; i < 3; ++i) {
    if (lhs[i] != rhs[i]) {
      return lhs[i] < rhs[i];
    }
  }
  return false;
}

}  // namespace

double score_from_metrics(double mean_infidelity, double max_offres_pop0,
                          const Objective& objective) {
  const double excess = std::max(0.0, max_offres_pop0 - objective.excitation_cap);
  return mean_infidelity + objective.penalty_weight * excess;
}

ObjectiveMetrics evaluate_objective(const PulseCoefficients& coeffs,
                                    const Objective& objective, const SweepConfig& config) {
  if (!(objective.fidelity_window_mhz > 0.0) || !(objective.fidelity_step_mhz > 0.0) ||
      !(objective.excitation_step_mhz > 0.0)) {
    throw ValidationError("objective windows and steps must be positive");
  }
  if (!(objective.excitation_cutoff_mhz < objective.excitation_outer_mhz)) {
    throw ValidationError("excitation band needs cutoff < outer edge");
  }

  const PulsePair pulses = synthesize_pulses(coeffs);
  const ThreeLevelState initial = task_initial_state(coeffs);
  const ThreeLevelState target = task_target_state(coeffs);

  const int half = static_cast<int>(
      std::llround(objective.fidelity_window_mhz / objective.fidelity_step_mhz));
  const SweepGrid window = detuning_sweep(pulses, initial, target,
                                          objective.fidelity_window_mhz,
                                          2 * std::max(1, half) + 1, config);
  double infidelity = 0.0;
  for (const SweepPoint& p : window.points) {
    infidelity += 1.0 - p.fidelity;
  }
  infidelity /= static_cast<double>(window.points.size());

  const int per_side = static_cast<int>(std::llround(
                           (objective.excitation_outer_mhz - objective.excitation_cutoff_mhz) /
                           objective.excitation_step_mhz)) +
                       1;
  const OffResonantScan scan =
      off_resonant_excitation(pulses, objective.excitation_cutoff_mhz,
                              objective.excitation_outer_mhz, std::max(2, per_side), config);

  ObjectiveMetrics metrics;
  metrics.mean_infidelity = infidelity;
  metrics.max_offres_pop0 = scan.max_pop0;
  metrics.score = score_from_metrics(infidelity, scan.max_pop0, objective);
  return metrics;
}

ScanPlan ScanPlan::defaults(TaskKind task) {
  ScanPlan plan;
  switch (task) {
    case TaskKind::CreateAsqs:
      plan.order = {{2, -1.5, -0.7, 0.05}, {6, 0.0, 0.16, 0.02}, {8, -0.06, 0.06, 0.02}};
      break;
    case TaskKind::TwoLevelTransfer:
      plan.order = {{2, 0.1, 0.9, 0.05}, {6, 0.0, 0.2, 0.02}, {8, -0.06, 0.06, 0.02}};
      break;
    case TaskKind::ReturnToOne:
      plan.order = {{2, 0.7, 1.5, 0.05}, {6, 0.0, 0.2, 0.02}, {8, -0.06, 0.06, 0.02}};
      break;
  }
  plan.refine_a6 = {0.04, 0.06, 0.08, 0.10, 0.12};
  return plan;
}

ScanResult coordinate_scan(TaskKind task, double tf, const TargetState& target,
                           const ScanPlan& plan, const Objective& objective,
                           const SweepConfig& config) {
  if (plan.order.empty()) {
    throw ValidationError("scan plan has no coordinate ranges");
  }
  for (const ScanRange& r : plan.order) {
    if (r.coefficient_subscript != 2 && r.coefficient_subscript != 6 &&
        r.coefficient_subscript != 8) {
      throw ValidationError("scan ranges cover a2, a6, a8 only (a4 is re-solved)");
    }
  }
  const ScanRange* a8_range = nullptr;
  for (const ScanRange& r : plan.order) {
    if (r.coefficient_subscript == 8) {
      a8_range = &r;
    }
  }
  if (!plan.refine_a6.empty() && a8_range == nullptr) {
    throw ValidationError("refinement re-scans a8 and needs an a8 range in the plan");
  }

  ScanResult result;
  Candidate current;  // unscanned coordinates start at zero
  Candidate best;
  double best_score = 0.0;
  bool have_best = false;
  int pass = 0;

  auto apply = [](Candidate& c, int subscript, double v) {
    switch (subscript) {
      case 2:
        c.a2 = v;
        break;
      case 6:
        c.a6 = v;
        break;
      default:
        c.a8 = v;
        break;
    }
  };

  auto run_pass = [&](const ScanRange& range, Candidate base) {
    ++pass;
    Candidate pass_best;
    double pass_best_score = 0.0;
    bool have_pass_best = false;
    const int count = range_count(range);
    for (int i = 0; i < count; ++i) {
      Candidate c = base;
      apply(c, range.coefficient_subscript, range_value(range, i));
      const PulseCoefficients coeffs = resolve(task, tf, target, c);
      const ObjectiveMetrics m = evaluate_objective(coeffs, objective, config);
      result.log.push_back({pass, c.a2, coeffs.value(4), c.a6, c.a8, m.mean_infidelity,
                            m.max_offres_pop0, m.score});
      if (!have_best || better(m.score, c, best_score, best)) {
        best = c;
        best_score = m.score;
        have_best = true;
      }
      if (!have_pass_best || better(m.score, c, pass_best_score, pass_best)) {
        pass_best = c;
        pass_best_score = m.score;
        have_pass_best = true;
      }
    }
    return pass_best;
  };

  // Coordinate passes in plan order, each anchored at the best point the
  // previous passes produced.
  for (const ScanRange& range : plan.order) {
    const Candidate pass_best = run_pass(range, current);
    apply(current, range.coefficient_subscript,
          range.coefficient_subscript == 2   ? pass_best.a2
          : range.coefficient_subscript == 6 ? pass_best.a6
                                             : pass_best.a8);
  }

  // Refinement: re-run the a8 pass with a6 pinned at each requested value.
  for (double a6 : plan.refine_a6) {
    Candidate base = current;
    base.a6 = a6;
    run_pass(*a8_range, base);
  }

  result.best = resolve(task, tf, target, best);
  result.best_metrics = evaluate_objective(result.best, objective, config);
  return result;
}

}  // namespace stapulse
