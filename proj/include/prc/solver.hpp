#pragma once

#include "prc/chains.hpp"
#include "prc/model.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prc {

enum class SolveStatus { solved, diverged, inconclusive };

std::string to_string(SolveStatus status);

struct SolveOptions {
  int starts = 16;
  std::uint64_t seed = 1;
  int max_iterations = 10000;
  double gradient_tol = 1e-10;
  double residual_tol = 1e-8;
  /// Run the multistarts on OpenMP threads. Results do not depend on it.
  bool parallel = true;
};

/// Result of one optimizer start.
struct StartOutcome {
  SolveStatus status = SolveStatus::inconclusive;
  std::vector<double> x;
  double scalar = 0.0;
  double c = 0.0;
  double residual = 0.0;
  int iterations = 0;
  /// Smallest simplex weight u_i = d_i z_i / x_i reached.
  double min_weight = 1.0;
  /// Summands whose weight ended below 1e-8 (x_i escaping to infinity).
  IndexSet collapsed;
};

struct SolveReport {
  SolveStatus status = SolveStatus::inconclusive;
  std::vector<double> x;
  /// Proportionality constant: Ric g = c T.
  double c = 0.0;
  /// max_i |r_i - c z_i| / max_i z_i with c = sum r z d / sum z^2 d.
  double residual = 0.0;
  /// |sum_i d_i z_i / x_i - 1|.
  double constraint_error = 0.0;
  double scalar = 0.0;
  /// Norm of grad S projected onto the tangent space of M_T.
  double tangent_gradient = 0.0;
  int starts_used = 0;
  int best_start = 0;
  int iterations = 0;
  /// Number of starts whose S is within 1e-6 of the best one.
  int starts_agreeing = 0;
  IndexSet collapsed;
  /// Further certified maximizers with the same S but a different metric.
  std::vector<std::vector<double>> alternatives;
  /// Condition check run by solve_prescribed_ricci, when the hypothesis
  /// allows one.
  std::optional<ConditionReport> theorem;
  std::string diagnostic;
  std::vector<StartOutcome> start_outcomes;
};

/// Maximizes S over M_T = {x : sum d_i z_i / x_i = 1}.
///
/// The constraint is removed with u_i = d_i z_i / x_i, which maps M_T onto
/// the open simplex, and u is written as softmax(w). Each start runs BFGS
/// in w with a backtracking line search and finishes with Newton steps on
/// Ric x = c z. A start is reported as diverged when it ends uncertified
/// with some u_i below 1e-8: the gradient flattened there, S stalled for 100
/// iterations, or u_i reached e^-30.
SolveReport maximize_scalar_curvature(const SpaceModel& model, std::span<const double> z,
                                      const SolveOptions& options = {});

/// Runs the chain condition check (advisory), maximizes S on M_T and
/// certifies Ric g = c T with c > 0 to options.residual_tol.
SolveReport solve_prescribed_ricci(const SpaceModel& model, const SubalgebraLattice& lattice,
                                   std::span<const Number> z, const SolveOptions& options = {});

/// Least-squares c = sum r_i z_i d_i / sum z_i^2 d_i and the relative
/// residual max_i |r_i - c z_i| / max_i z_i.
struct Certificate {
  double c = 0.0;
  double residual = 0.0;
};
Certificate certify(const SpaceModel& model, std::span<const double> x, std::span<const double> z);

}  // namespace prc
