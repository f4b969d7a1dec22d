#pragma once

#include "prc/chains.hpp"
#include "prc/solver.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prc {

/// One step of the Ricci iteration: solve Ric(next) = c * start, then
/// g = c * start satisfies Ric(c' next) = g for any c' > 0.
struct IterationStep {
  int index = 1;                  // i, 1-based
  std::vector<double> start;      // \bar g_i
  std::vector<double> next;       // \bar g_{i+1}
  double c = 0.0;                 // c_i
  std::vector<double> metric;     // g_i = c_i \bar g_i
  /// ||ricci(\bar g_{i+1}) - g_i||_inf / ||g_i||_inf.
  double residual = 0.0;
  SolveStatus status = SolveStatus::inconclusive;
  /// Chain condition for T = \bar g_i, unless skipped because the model
  /// is solvable for every T.
  std::optional<bool> condition_pass;
  /// Max relative change between consecutive Q-trace-normalized g_i; unset
  /// for the first step.
  std::optional<double> normalized_change;
};

struct IterationTrace {
  std::vector<IterationStep> steps;
  int requested = 0;
  bool complete = false;
  /// Why the trace stops early, when it does.
  std::string stop_reason;
  bool condition_check_skipped = false;
};

/// Builds g_1 = c_1 \bar g_1, g_2, ... with Ric g_{i+1} = g_i by repeated
/// prescribed Ricci solves with T = \bar g_i. Stops at the first step whose
/// solve is not certified.
IterationTrace ricci_iterate(const SpaceModel& model, const SubalgebraLattice& lattice,
                             std::span<const double> start, int steps, const SolveOptions& options = {});

}  // namespace prc
