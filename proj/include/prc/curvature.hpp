#pragma once

#include "prc/model.hpp"

#include <span>
#include <vector>

namespace prc {

// Curvature of diagonal invariant forms sum_i x_i pi_i^* Q.
//
// Every function takes coefficient vectors of full length s; entries whose
// index lies outside the selected set J are ignored. The kernels are
// instantiated for double (optimizer path) and Rational (exact checks).

/// Scalar curvature of x restricted to the summands in J:
///   S = 1/2 sum_i d_i b_i / x_i - 1/4 sum_{i,j,k} [ijk] x_k / (x_i x_j),
/// all indices running over J.
template <class Real>
Real scalar_curvature(const SpaceModel& model, IndexSet J, std::span<const Real> x);

/// S over J_k minus 1/2 sum_{i in J_k} sum_{j,k outside J_k} [ijk] / x_i.
/// Equals scalar_curvature when J_k is the full set.
template <class Real>
Real modified_scalar_curvature(const SpaceModel& model, IndexSet Jk, std::span<const Real> x);

/// Ricci coefficients r with Ric g = sum_i r_i pi_i^* Q, i.e.
///   r_i = b_i/2 + x_i^2/(4 d_i) sum_{j,k} [jki]/(x_j x_k)
///              - 1/(2 d_i) sum_{j,k} [ijk] x_k / x_j.
template <class Real>
std::vector<Real> ricci(const SpaceModel& model, std::span<const Real> x);

/// dS/dx_i = -d_i r_i / x_i^2.
template <class Real>
std::vector<Real> scalar_curvature_gradient(const SpaceModel& model, std::span<const Real> x);

/// Row-major s x s matrix of d r_i / d x_m.
std::vector<double> ricci_jacobian(const SpaceModel& model, std::span<const double> x);

/// sum_{i in J} d_i z_i / x_i. A metric x lies in M_T(J) iff this is 1.
template <class Real>
Real trace_constraint(const SpaceModel& model, IndexSet J, std::span<const Real> z,
                      std::span<const Real> x);

template <class Real>
struct FormStats {
  Real lambda_min;
  Real lambda_max;
  Real trace;  // trace with respect to Q
};

/// Extremal eigenvalues and Q-trace of sum z_i pi_i^* Q restricted to J.
template <class Real>
FormStats<Real> form_stats(const SpaceModel& model, std::span<const Real> z, IndexSet J);

}  // namespace prc
