#pragma once

#include "stapulse/sweep.hpp"

namespace stapulse {

// Robustness score for a coefficient set: mean infidelity over the
// detuning window plus a hinge penalty when far-off-resonant leakage
// exceeds its cap. Lower is better.
struct Objective {
  double fidelity_window_mhz = 0.17;
  double fidelity_step_mhz = 0.01;
  double excitation_cutoff_mhz = 3.5;
  double excitation_outer_mhz = 10.0;
  double excitation_step_mhz = 0.05;
  double excitation_cap = 0.02;
  double penalty_weight = 10.0;
};

struct ObjectiveMetrics {
  double mean_infidelity = 0.0;
  double max_offres_pop0 = 0.0;
  double score = 0.0;
};

double score_from_metrics(double mean_infidelity, double max_offres_pop0,
                          const Objective& objective);

// Synthesizes the drive for `coeffs` and measures both objective terms on
// the grids the objective pins down.
ObjectiveMetrics evaluate_objective(const PulseCoefficients& coeffs,
                                    const Objective& objective,
                                    const SweepConfig& config = {});

// One pass of the scan: vary the even coefficient with the given subscript
// over min..max in uniform steps, others held at their current values.
struct ScanRange {
  int coefficient_subscript = 2;  // one of 2, 6, 8 (a_4 is always re-solved)
  double min = 0.0;
  double max = 0.0;
  double step = 0.0;
};

// Coordinate-descent plan: scan the ranges in order, each around the best
// point so far, then re-scan the last range once per refine_a6 value with
// a_6 pinned there. Empty refine_a6 skips refinement.
struct ScanPlan {
  std::vector<ScanRange> order;
  std::vector<double> refine_a6;

  static ScanPlan defaults(TaskKind task);
};

struct ScanLogEntry {
  int scan_step = 0;  // 1-based pass index
  double a2 = 0.0, a4 = 0.0, a6 = 0.0, a8 = 0.0;
  double mean_infidelity = 0.0;
  double max_offres_pop0 = 0.0;
  double score = 0.0;
};

struct ScanResult {
  PulseCoefficients best;
  ObjectiveMetrics best_metrics;
  std::vector<ScanLogEntry> log;
};

// Deterministic coordinate scan over the even coefficients; the winner is
// the lowest score over every evaluation, ties broken toward smaller
// (|a2|, |a6|, |a8|) lexicographically. Coefficients outside the scanned
// set start at zero.
ScanResult coordinate_scan(TaskKind task, double tf, const TargetState& target,
                           const ScanPlan& plan, const Objective& objective,
                           const SweepConfig& config = {});

}  // namespace stapulse
