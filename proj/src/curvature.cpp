#include "prc/curvature.hpp"

#include "prc/errors.hpp"

namespace prc {

namespace {

template <class Real>
Real value_of(const SpaceModel& model, const OrderedTriple& t);

template <>
double value_of<double>(const SpaceModel&, const OrderedTriple& t) {
  return t.value;
}

template <>
Rational value_of<Rational>(const SpaceModel& model, const OrderedTriple& t) {
  return model.triple(t.i, t.j, t.k).to_rational();
}

template <class Real>
void require_positive(const SpaceModel& model, IndexSet J, std::span<const Real> x, const char* what) {
  if (static_cast<int>(x.size()) != model.summands())
    throw DomainError(std::string(what) + " has " + std::to_string(x.size()) +
                      " coefficients, expected " + std::to_string(model.summands()));
  if (!J.subset_of(IndexSet::full(model.summands())))
    throw DomainError("index set " + J.to_string() + " has an index outside 1.." +
                      std::to_string(model.summands()));
  for (int i : J.members())
    if (!(x[i] > 0))
      throw DomainError(std::string(what) + " coefficient " + std::to_string(i + 1) +
                        " is not positive");
}

template <class Real>
Real half_killing_trace(const SpaceModel& model, IndexSet J, std::span<const Real> x) {
  Real sum = 0;
  for (int i : J.members()) sum += Real(model.dim(i)) * as<Real>(model.killing(i)) / x[i];
  return sum / 2;
}

}  // namespace

template <class Real>
Real scalar_curvature(const SpaceModel& model, IndexSet J, std::span<const Real> x) {
  require_positive(model, J, x, "metric");
  Real brackets = 0;
  for (const OrderedTriple& t : model.ordered_triples()) {
    if (!J.contains(t.i) || !J.contains(t.j) || !J.contains(t.k)) continue;
    brackets += value_of<Real>(model, t) * x[t.k] / (x[t.i] * x[t.j]);
  }
  return half_killing_trace(model, J, x) - brackets / 4;
}

template <class Real>
Real modified_scalar_curvature(const SpaceModel& model, IndexSet Jk, std::span<const Real> x) {
  Real result = scalar_curvature(model, Jk, x);
  Real outside = 0;
  for (const OrderedTriple& t : model.ordered_triples()) {
    if (!Jk.contains(t.i) || Jk.contains(t.j) || Jk.contains(t.k)) continue;
    outside += value_of<Real>(model, t) / x[t.i];
  }
  return result - outside / 2;
}

template <class Real>
std::vector<Real> ricci(const SpaceModel& model, std::span<const Real> x) {
  const int s = model.summands();
  require_positive(model, IndexSet::full(s), x, "metric");
  std::vector<Real> inverse_pair(s, Real(0));  // sum_{j,k} [jki] / (x_j x_k)
  std::vector<Real> ratio(s, Real(0));         // sum_{j,k} [ijk] x_k / x_j
  for (const OrderedTriple& t : model.ordered_triples()) {
    const Real v = value_of<Real>(model, t);
    inverse_pair[t.k] += v / (x[t.i] * x[t.j]);
    ratio[t.i] += v * x[t.k] / x[t.j];
  }
  std::vector<Real> r(s);
  for (int i = 0; i < s; ++i) {
    const Real d = Real(model.dim(i));
    r[i] = as<Real>(model.killing(i)) / 2 + x[i] * x[i] * inverse_pair[i] / (4 * d) - ratio[i] / (2 * d);
  }
  return r;
}

template <class Real>
std::vector<Real> scalar_curvature_gradient(const SpaceModel& model, std::span<const Real> x) {
  std::vector<Real> g = ricci(model, x);
  for (int i = 0; i < model.summands(); ++i) g[i] = -Real(model.dim(i)) * g[i] / (x[i] * x[i]);
  return g;
}

std::vector<double> ricci_jacobian(const SpaceModel& model, std::span<const double> x) {
  const int s = model.summands();
  require_positive(model, IndexSet::full(s), x, "metric");
  std::vector<double> inverse_pair(s, 0.0);
  std::vector<double> jac(static_cast<std::size_t>(s) * s, 0.0);
  auto at = [&](int row, int col) -> double& { return jac[static_cast<std::size_t>(row) * s + col]; };
  for (const OrderedTriple& t : model.ordered_triples()) {
    const double v = t.value;
    const double xi = x[t.i], xj = x[t.j], xk = x[t.k];
    inverse_pair[t.k] += v / (xi * xj);
    // d/dx of x_k^2/(4 d_k) * v/(x_i x_j), product part in x_k handled below.
    const double pk = xk * xk / (4.0 * model.dim(t.k));
    at(t.k, t.i) -= pk * v / (xi * xi * xj);
    at(t.k, t.j) -= pk * v / (xi * xj * xj);
    // d/dx of -1/(2 d_i) * v x_k / x_j.
    const double qi = 1.0 / (2.0 * model.dim(t.i));
    at(t.i, t.k) -= qi * v / xj;
    at(t.i, t.j) += qi * v * xk / (xj * xj);
  }
  for (int i = 0; i < s; ++i) at(i, i) += x[i] * inverse_pair[i] / (2.0 * model.dim(i));
  return jac;
}

template <class Real>
Real trace_constraint(const SpaceModel& model, IndexSet J, std::span<const Real> z,
                      std::span<const Real> x) {
  require_positive(model, J, x, "metric");
  require_positive(model, J, z, "form");
  Real sum = 0;
  for (int i : J.members()) sum += Real(model.dim(i)) * z[i] / x[i];
  return sum;
}

template <class Real>
FormStats<Real> form_stats(const SpaceModel& model, std::span<const Real> z, IndexSet J) {
  if (J.empty()) throw DomainError("form statistics need a non-empty index set");
  require_positive(model, J, z, "form");
  const auto members = J.members();
  FormStats<Real> out{z[members.front()], z[members.front()], Real(0)};
  for (int i : members) {
    if (z[i] < out.lambda_min) out.lambda_min = z[i];
    if (out.lambda_max < z[i]) out.lambda_max = z[i];
    out.trace += Real(model.dim(i)) * z[i];
  }
  return out;
}

#define PRC_INSTANTIATE(Real)                                                                      \
  template Real scalar_curvature<Real>(const SpaceModel&, IndexSet, std::span<const Real>);        \
  template Real modified_scalar_curvature<Real>(const SpaceModel&, IndexSet, std::span<const Real>); \
  template std::vector<Real> ricci<Real>(const SpaceModel&, std::span<const Real>);                \
  template std::vector<Real> scalar_curvature_gradient<Real>(const SpaceModel&, std::span<const Real>); \
  template Real trace_constraint<Real>(const SpaceModel&, IndexSet, std::span<const Real>,         \
                                       std::span<const Real>);                                     \
  template FormStats<Real> form_stats<Real>(const SpaceModel&, std::span<const Real>, IndexSet);

PRC_INSTANTIATE(double)
PRC_INSTANTIATE(Rational)

#undef PRC_INSTANTIATE

}  // namespace prc
