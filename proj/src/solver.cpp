#include "prc/solver.hpp"

#include "prc/curvature.hpp"
#include "prc/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace prc {

namespace {

constexpr double kCollapseWeight = 1e-8;
constexpr double kPolishWeight = 1e-10;
constexpr int kStagnationWindow = 100;
constexpr int kFlatSteps = 20;
// Past this S loses too many digits to cancellation to rank starts.
constexpr double kMinLogWeight = -30.0;
constexpr double kMaxStep = 5.0;
constexpr double kArmijo = 1e-4;

// z is normalized to max z = 1 inside the optimizer.
struct Problem {
  const SpaceModel& model;
  std::vector<double> z;
  int s;
};

struct Point {
  std::vector<double> w;      // softmax coordinates, w[s-1] = 0
  std::vector<double> log_u;  // log of simplex weights
  std::vector<double> x;
  std::vector<double> grad;   // dS/dw
  double scalar = -std::numeric_limits<double>::infinity();
  Certificate cert;
  double min_log_u = 0.0;
  bool finite = false;
};

Point evaluate(const Problem& p, std::vector<double> w) {
  Point pt;
  pt.w = std::move(w);
  const int s = p.s;
  const double top = *std::max_element(pt.w.begin(), pt.w.end());
  double sum = 0.0;
  for (double wi : pt.w) sum += std::exp(wi - top);
  const double lse = top + std::log(sum);
  pt.log_u.resize(s);
  pt.x.resize(s);
  for (int i = 0; i < s; ++i) {
    pt.log_u[i] = pt.w[i] - lse;
    pt.x[i] = p.model.dim(i) * p.z[i] * std::exp(-pt.log_u[i]);
  }
  pt.min_log_u = *std::min_element(pt.log_u.begin(), pt.log_u.end());
  if (!std::all_of(pt.x.begin(), pt.x.end(), [](double v) { return std::isfinite(v) && v > 0; }))
    return pt;

  pt.scalar = scalar_curvature<double>(p.model, IndexSet::full(s), pt.x);
  const auto r = ricci<double>(p.model, pt.x);
  // dS/du_i = r_i / z_i; chain rule through softmax.
  double mean = 0.0;
  for (int i = 0; i < s; ++i) mean += std::exp(pt.log_u[i]) * r[i] / p.z[i];
  pt.grad.resize(s);
  for (int i = 0; i < s; ++i) pt.grad[i] = std::exp(pt.log_u[i]) * (r[i] / p.z[i] - mean);
  pt.cert = certify(p.model, pt.x, p.z);
  pt.finite = std::isfinite(pt.scalar) &&
              std::all_of(pt.grad.begin(), pt.grad.end(), [](double g) { return std::isfinite(g); });
  return pt;
}

double max_abs(const std::vector<double>& v, int n) {
  double m = 0.0;
  for (int i = 0; i < n; ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

// Newton iteration on r(x) - c z = 0, sum d z / x = 1, started from a point
// that BFGS has brought close to a critical point.
void polish(const Problem& p, std::vector<double>& x, double& c) {
  const int s = p.s;
  auto residual = [&](const std::vector<double>& xv, double cv) {
    Eigen::VectorXd F(s + 1);
    const auto r = ricci<double>(p.model, xv);
    double constraint = -1.0;
    for (int i = 0; i < s; ++i) {
      F(i) = r[i] - cv * p.z[i];
      constraint += p.model.dim(i) * p.z[i] / xv[i];
    }
    F(s) = constraint;
    return F;
  };
  Eigen::VectorXd F = residual(x, c);
  for (int iter = 0; iter < 30 && F.lpNorm<Eigen::Infinity>() > 1e-15; ++iter) {
    const auto jr = ricci_jacobian(p.model, x);
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(s + 1, s + 1);
    for (int i = 0; i < s; ++i) {
      for (int m = 0; m < s; ++m) J(i, m) = jr[static_cast<std::size_t>(i) * s + m];
      J(i, s) = -p.z[i];
      J(s, i) = -p.model.dim(i) * p.z[i] / (x[i] * x[i]);
    }
    const Eigen::VectorXd step = J.partialPivLu().solve(-F);
    if (!step.allFinite()) return;
    bool improved = false;
    for (double t = 1.0; t > 1e-6; t /= 2) {
      std::vector<double> trial(s);
      bool positive = true;
      for (int i = 0; i < s; ++i) {
        trial[i] = x[i] + t * step(i);
        positive = positive && trial[i] > 0;
      }
      if (!positive) continue;
      const double trial_c = c + t * step(s);
      Eigen::VectorXd trial_F = residual(trial, trial_c);
      if (trial_F.allFinite() && trial_F.lpNorm<Eigen::Infinity>() < F.lpNorm<Eigen::Infinity>()) {
        x = std::move(trial);
        c = trial_c;
        F = std::move(trial_F);
        improved = true;
        break;
      }
    }
    if (!improved) return;
  }
}

StartOutcome run_start(const Problem& p, std::vector<double> w0, const SolveOptions& options) {
  const int s = p.s;
  const int n = s - 1;
  Point cur = evaluate(p, std::move(w0));
  StartOutcome out;
  if (!cur.finite) return out;

  std::vector<double> H(static_cast<std::size_t>(n) * n, 0.0);
  auto reset = [&] {
    std::fill(H.begin(), H.end(), 0.0);
    for (int i = 0; i < n; ++i) H[static_cast<std::size_t>(i) * n + i] = 1.0;
  };
  reset();
  bool scaled = false;
  int collapse_iter = -1;
  double collapse_scalar = 0.0;
  bool diverged = false;
  int flat_steps = 0;

  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    out.min_weight = std::min(out.min_weight, std::exp(cur.min_log_u));
    if (cur.cert.residual <= 1e-2 * options.residual_tol) break;
    if (max_abs(cur.grad, s) <= options.gradient_tol) {
      // A flat gradient near a face of the simplex is the supremum leaking out.
      diverged = cur.min_log_u < std::log(kCollapseWeight);
      break;
    }

    if (cur.min_log_u < std::log(kCollapseWeight)) {
      if (cur.min_log_u < kMinLogWeight) {
        diverged = true;
        break;
      }
      if (collapse_iter < 0) {
        collapse_iter = iter;
        collapse_scalar = cur.scalar;
      } else if (iter - collapse_iter >= kStagnationWindow) {
        if (cur.scalar - collapse_scalar <= 1e-10 * (1.0 + std::abs(cur.scalar))) {
          diverged = true;
          break;
        }
        collapse_iter = iter;
        collapse_scalar = cur.scalar;
      }
    } else {
      collapse_iter = -1;
    }

    // Ascent direction H * grad S (H approximates the inverse Hessian of -S).
    std::vector<double> dir(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) dir[i] += H[static_cast<std::size_t>(i) * n + j] * cur.grad[j];
    double slope = 0.0;
    for (int i = 0; i < n; ++i) slope += cur.grad[i] * dir[i];
    if (!(slope > 0)) {
      reset();
      scaled = false;
      dir.assign(cur.grad.begin(), cur.grad.begin() + n);
      slope = 0.0;
      for (int i = 0; i < n; ++i) slope += cur.grad[i] * cur.grad[i];
    }
    if (const double longest = max_abs(dir, n); longest > kMaxStep) {
      for (double& d : dir) d *= kMaxStep / longest;
      slope *= kMaxStep / longest;
    }

    Point next;
    bool accepted = false;
    double alpha = 1.0;
    for (int tries = 0; tries < 60; ++tries, alpha /= 2) {
      std::vector<double> w = cur.w;
      for (int i = 0; i < n; ++i) w[i] += alpha * dir[i];
      next = evaluate(p, std::move(w));
      if (next.finite && next.scalar >= cur.scalar + kArmijo * alpha * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    // At the optimum the Armijo test passes on rounding alone; leave the rest to polish().
    flat_steps = next.scalar - cur.scalar <= 4 * std::numeric_limits<double>::epsilon() * std::abs(cur.scalar)
                     ? flat_steps + 1
                     : 0;
    if (flat_steps >= kFlatSteps) {
      cur = std::move(next);
      ++iter;
      break;
    }

    // BFGS update of the inverse Hessian of -S.
    std::vector<double> step(n), change(n);
    double sy = 0.0, yy = 0.0;
    for (int i = 0; i < n; ++i) {
      step[i] = alpha * dir[i];
      change[i] = -(next.grad[i] - cur.grad[i]);
      sy += step[i] * change[i];
      yy += change[i] * change[i];
    }
    if (sy > 1e-300 && yy > 0) {
      if (!scaled) {
        std::fill(H.begin(), H.end(), 0.0);
        for (int i = 0; i < n; ++i) H[static_cast<std::size_t>(i) * n + i] = sy / yy;
        scaled = true;
      }
      const double rho = 1.0 / sy;
      std::vector<double> Hy(n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Hy[i] += H[static_cast<std::size_t>(i) * n + j] * change[j];
      double yHy = 0.0;
      for (int i = 0; i < n; ++i) yHy += change[i] * Hy[i];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          H[static_cast<std::size_t>(i) * n + j] +=
              -rho * (Hy[i] * step[j] + step[i] * Hy[j]) + (rho * rho * yHy + rho) * step[i] * step[j];
    }
    cur = std::move(next);
  }
  out.iterations = iter;
  out.min_weight = std::min(out.min_weight, std::exp(cur.min_log_u));

  std::vector<double> x = cur.x;
  if (!diverged && cur.min_log_u > std::log(kPolishWeight) && cur.cert.residual > 1e-14) {
    std::vector<double> px = x;
    double pc = cur.cert.c;
    polish(p, px, pc);
    const double polished = scalar_curvature<double>(p.model, IndexSet::full(s), px);
    const Certificate cert = certify(p.model, px, p.z);
    if (cert.residual < cur.cert.residual && polished >= cur.scalar - 1e-9 * (1.0 + std::abs(cur.scalar))) {
      x = std::move(px);
    }
  }

  out.x = x;
  out.scalar = scalar_curvature<double>(p.model, IndexSet::full(s), x);
  const Certificate cert = certify(p.model, x, p.z);
  out.c = cert.c;
  out.residual = cert.residual;
  for (int i = 0; i < s; ++i)
    if (cur.log_u[i] < std::log(kCollapseWeight)) out.collapsed.insert(i);

  if (out.residual <= options.residual_tol && out.c > 0)
    out.status = SolveStatus::solved;
  else if (diverged || !out.collapsed.empty())
    out.status = SolveStatus::diverged;
  else
    out.status = SolveStatus::inconclusive;
  return out;
}

std::vector<double> initial_weights(const Problem& p, int start, std::uint64_t seed) {
  std::vector<double> w(p.s);
  for (int i = 0; i < p.s; ++i) w[i] = std::log(p.model.dim(i) * p.z[i]);
  if (start > 0) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(start));
    std::normal_distribution<double> jitter(0.0, 1.5);
    for (double& wi : w) wi += jitter(rng);
  }
  const double last = w.back();
  for (double& wi : w) wi -= last;
  return w;
}

}  // namespace

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::solved: return "solved";
    case SolveStatus::diverged: return "diverged";
    case SolveStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Certificate certify(const SpaceModel& model, std::span<const double> x, std::span<const double> z) {
  const auto r = ricci<double>(model, x);
  double num = 0.0, den = 0.0, zmax = 0.0;
  for (int i = 0; i < model.summands(); ++i) {
    num += r[i] * z[i] * model.dim(i);
    den += z[i] * z[i] * model.dim(i);
    zmax = std::max(zmax, z[i]);
  }
  Certificate out;
  out.c = num / den;
  for (int i = 0; i < model.summands(); ++i) out.residual = std::max(out.residual, std::abs(r[i] - out.c * z[i]));
  out.residual /= zmax;
  return out;
}

SolveReport maximize_scalar_curvature(const SpaceModel& model, std::span<const double> z,
                                      const SolveOptions& options) {
  const int s = model.summands();
  if (static_cast<int>(z.size()) != s)
    throw DomainError("T has " + std::to_string(z.size()) + " coefficients, expected " + std::to_string(s));
  for (int i = 0; i < s; ++i)
    if (!(z[i] > 0) || !std::isfinite(z[i]))
      throw DomainError("T coefficient " + std::to_string(i + 1) + " is not positive");
  if (options.starts < 1) throw DomainError("at least one optimizer start is required");

  const double zmax = *std::max_element(z.begin(), z.end());
  Problem problem{model, {}, s};
  problem.z.resize(s);
  for (int i = 0; i < s; ++i) problem.z[i] = z[i] / zmax;

  std::vector<StartOutcome> outcomes;
  if (s == 1) {
    // M_T is the single point x = d z.
    StartOutcome only;
    only.x = {model.dim(0) * problem.z[0]};
    only.scalar = scalar_curvature<double>(model, IndexSet::full(1), only.x);
    const Certificate cert = certify(model, only.x, problem.z);
    only.c = cert.c;
    only.residual = cert.residual;
    only.status = only.c > 0 ? SolveStatus::solved : SolveStatus::inconclusive;
    outcomes.push_back(std::move(only));
  } else {
    outcomes.resize(options.starts);
#pragma omp parallel for schedule(dynamic) if (options.parallel)
    for (int start = 0; start < options.starts; ++start)
      outcomes[start] = run_start(problem, initial_weights(problem, start, options.seed), options);
  }

  // Undo the normalization z -> z / max z.
  for (StartOutcome& o : outcomes) {
    for (double& xi : o.x) xi *= zmax;
    if (!o.x.empty()) {
      o.scalar = scalar_curvature<double>(model, IndexSet::full(s), o.x);
      const Certificate cert = certify(model, o.x, z);
      o.c = cert.c;
      o.residual = cert.residual;
    }
  }

  SolveReport report;
  report.starts_used = static_cast<int>(outcomes.size());
  int best = -1;
  for (int i = 0; i < report.starts_used; ++i) {
    if (outcomes[i].x.empty() || !std::isfinite(outcomes[i].scalar)) continue;
    if (best < 0 || outcomes[i].scalar > outcomes[best].scalar) best = i;
  }
  if (best < 0) {
    report.diagnostic = "no optimizer start produced a finite metric";
    report.start_outcomes = std::move(outcomes);
    return report;
  }

  const StartOutcome& top = outcomes[best];
  report.best_start = best;
  report.status = top.status;
  report.x = top.x;
  report.c = top.c;
  report.residual = top.residual;
  report.scalar = top.scalar;
  report.iterations = top.iterations;
  report.collapsed = top.collapsed;
  report.constraint_error =
      std::abs(trace_constraint<double>(model, IndexSet::full(s), z, report.x) - 1.0);

  const auto grad = scalar_curvature_gradient<double>(model, report.x);
  double gn = 0.0, nn = 0.0;
  std::vector<double> normal(s);
  for (int i = 0; i < s; ++i) {
    normal[i] = -model.dim(i) * z[i] / (report.x[i] * report.x[i]);
    gn += grad[i] * normal[i];
    nn += normal[i] * normal[i];
  }
  double tangent = 0.0;
  for (int i = 0; i < s; ++i) tangent += std::pow(grad[i] - gn / nn * normal[i], 2);
  report.tangent_gradient = std::sqrt(tangent);

  const double scale = std::max(1.0, std::abs(top.scalar));
  const double xmax = *std::max_element(top.x.begin(), top.x.end());
  for (int i = 0; i < report.starts_used; ++i) {
    const StartOutcome& o = outcomes[i];
    if (o.x.empty()) continue;
    if (std::abs(o.scalar - top.scalar) <= 1e-6 * scale) ++report.starts_agreeing;
    if (i == best || o.status != SolveStatus::solved) continue;
    if (std::abs(o.scalar - top.scalar) > 1e-9 * scale) continue;
    auto distinct = [&](const std::vector<double>& other) {
      double diff = 0.0;
      for (int k = 0; k < s; ++k) diff = std::max(diff, std::abs(o.x[k] - other[k]));
      return diff > 1e-6 * xmax;
    };
    if (distinct(top.x) && std::all_of(report.alternatives.begin(), report.alternatives.end(), distinct))
      report.alternatives.push_back(o.x);
  }

  if (report.status == SolveStatus::diverged)
    report.diagnostic = "simplex weights collapsed for summands " + report.collapsed.to_string() +
                        "; the supremum of S on M_T does not appear to be attained";
  else if (report.status == SolveStatus::inconclusive)
    report.diagnostic = "optimizer stopped without certifying a critical point";
  report.start_outcomes = std::move(outcomes);
  return report;
}

SolveReport solve_prescribed_ricci(const SpaceModel& model, const SubalgebraLattice& lattice,
                                   std::span<const Number> z, const SolveOptions& options) {
  std::vector<double> zd(z.size());
  std::transform(z.begin(), z.end(), zd.begin(), [](const Number& v) { return v.to_double(); });

  std::optional<ConditionReport> theorem;
  std::string hypothesis_note;
  try {
    theorem = check_theorem(model, lattice, z);
  } catch (const HypothesisError& e) {
    hypothesis_note = e.what();
  }

  SolveReport report = maximize_scalar_curvature(model, zd, options);
  report.theorem = std::move(theorem);
  if (report.status == SolveStatus::solved) {
    const Certificate cert = certify(model, report.x, zd);
    report.c = cert.c;
    report.residual = cert.residual;
    if (cert.residual > options.residual_tol || !(cert.c > 0)) {
      report.status = SolveStatus::inconclusive;
      report.diagnostic = "certification failed: residual " + format_double(cert.residual) + ", c " +
                          format_double(cert.c);
    }
  }
  if (!hypothesis_note.empty())
    report.diagnostic += (report.diagnostic.empty() ? "" : "; ") + hypothesis_note;
  return report;
}

}  // namespace prc
