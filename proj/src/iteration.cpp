#include "prc/iteration.hpp"

#include "prc/curvature.hpp"
#include "prc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace prc {

namespace {

std::vector<double> trace_normalized(const SpaceModel& model, const std::vector<double>& g) {
  double trace = 0.0;
  for (int i = 0; i < model.summands(); ++i) trace += model.dim(i) * g[i];
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[i] * model.dimension() / trace;
  return out;
}

}  // namespace

IterationTrace ricci_iterate(const SpaceModel& model, const SubalgebraLattice& lattice,
                             std::span<const double> start, int steps, const SolveOptions& options) {
  if (steps < 1) throw DomainError("the iteration needs at least one step");
  if (static_cast<int>(start.size()) != model.summands())
    throw DomainError("starting metric has " + std::to_string(start.size()) + " coefficients, expected " +
                      std::to_string(model.summands()));

  IterationTrace trace;
  trace.requested = steps;
  trace.condition_check_skipped = always_solvable(model, lattice);

  std::vector<double> current(start.begin(), start.end());
  std::vector<double> previous_normalized;
  for (int i = 1; i <= steps; ++i) {
    IterationStep step;
    step.index = i;
    step.start = current;

    std::vector<Number> z(current.begin(), current.end());
    if (!trace.condition_check_skipped) {
      try {
        step.condition_pass = check_theorem(model, lattice, z).pass;
      } catch (const HypothesisError&) {
        step.condition_pass.reset();
      }
    }

    const SolveReport solved = maximize_scalar_curvature(model, current, options);
    step.status = solved.status;
    if (solved.status != SolveStatus::solved) {
      trace.stop_reason = "step " + std::to_string(i) + ": solve " + to_string(solved.status) +
                          (solved.diagnostic.empty() ? "" : " (" + solved.diagnostic + ")");
      trace.steps.push_back(std::move(step));
      return trace;
    }

    step.next = solved.x;
    step.c = solved.c;
    step.metric.resize(current.size());
    for (std::size_t k = 0; k < current.size(); ++k) step.metric[k] = step.c * current[k];

    // Ric(c_{i+1} next) = Ric(next) by scale invariance, so this is the
    // defining relation Ric g_{i+1} = g_i.
    const auto r = ricci<double>(model, step.next);
    double diff = 0.0, norm = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      diff = std::max(diff, std::abs(r[k] - step.metric[k]));
      norm = std::max(norm, std::abs(step.metric[k]));
    }
    step.residual = diff / norm;

    auto normalized = trace_normalized(model, step.metric);
    if (!previous_normalized.empty()) {
      double change = 0.0;
      for (std::size_t k = 0; k < normalized.size(); ++k)
        change = std::max(change, std::abs(normalized[k] - previous_normalized[k]) / previous_normalized[k]);
      step.normalized_change = change;
    }
    previous_normalized = std::move(normalized);

    if (!(step.c > 0)) {
      trace.stop_reason = "step " + std::to_string(i) + ": non-positive constant c";
      trace.steps.push_back(std::move(step));
      return trace;
    }
    current = step.next;
    trace.steps.push_back(std::move(step));
  }
  trace.complete = true;
  return trace;
}

}  // namespace prc
