#include "prc/chains.hpp"

#include "prc/errors.hpp"

#include <algorithm>

namespace prc {

namespace {

constexpr double kMarginTol = 1e-12;

bool strictly_positive(const Number& margin) {
  return margin.is_exact() ? margin.sign() > 0 : margin.to_double() > kMarginTol;
}

Number weighted_sum(const SpaceModel& model, IndexSet J, std::span<const Number> coeffs) {
  Number sum = 0;
  for (int i : J.members()) sum += Number(model.dim(i)) * coeffs[i];
  return sum;
}

void require_positive_form(const SpaceModel& model, std::span<const Number> z) {
  if (static_cast<int>(z.size()) != model.summands())
    throw DomainError("T has " + std::to_string(z.size()) + " coefficients, expected " +
                      std::to_string(model.summands()));
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i].sign() <= 0) throw DomainError("T coefficient " + std::to_string(i + 1) + " is not positive");
}

HypothesisVerdict require_hypothesis(const SpaceModel& model, const SubalgebraLattice& lattice) {
  HypothesisVerdict h = check_hypothesis(model, lattice);
  if (h.status == Verdict::violated)
    throw HypothesisError("hypothesis violated: summand " + std::to_string(*h.violating_summand + 1) +
                          " is one-dimensional and commutes with subalgebra " +
                          h.violating_subalgebra->to_string());
  return h;
}

ConditionReport check_chains(const SpaceModel& model, const SubalgebraLattice& lattice,
                             std::span<const Number> z, Criterion criterion) {
  require_positive_form(model, z);
  ConditionReport report;
  report.criterion = criterion;
  report.hypothesis = require_hypothesis(model, lattice);
  report.hypothesis_caveat = report.hypothesis.status != Verdict::satisfied;

  for (const SimpleChain& chain : enumerate_simple_chains(lattice)) {
    ChainCondition c;
    c.chain = chain;
    c.eta = eta(model, chain);
    c.lambda_min = z[chain.kprime.members().front()];
    for (int i : chain.kprime.members()) c.lambda_min = min(c.lambda_min, z[i]);
    if (criterion == Criterion::theorem) {
      c.l_measure = weighted_sum(model, chain.l(), z);
      c.rhs = c.eta.value;
    } else {
      c.l_measure = z[chain.l().members().front()];
      for (int i : chain.l().members()) c.l_measure = max(c.l_measure, z[i]);
      c.rhs = c.eta.value * Number(model.dimension(chain.l()));
    }
    c.lhs = c.lambda_min / c.l_measure;
    c.margin = c.lhs - c.rhs;
    c.pass = strictly_positive(c.margin);
    if (c.pass)
      c.label = "pass";
    else if (criterion == Criterion::theorem && model.summands() == 2)
      c.label = "no-solution";
    else
      c.label = "inconclusive";
    if (!c.pass && !report.first_failing) report.first_failing = report.chains.size();
    report.chains.push_back(std::move(c));
  }
  report.pass = !report.first_failing.has_value();
  return report;
}

}  // namespace

std::vector<SimpleChain> enumerate_simple_chains(const SubalgebraLattice& lattice) {
  std::vector<SimpleChain> chains;
  const auto& L = lattice.members;
  for (auto k = L.rbegin(); k != L.rend(); ++k) {
    for (IndexSet kp : L) {
      if (kp.empty() || !kp.proper_subset_of(*k)) continue;
      const bool maximal = std::none_of(L.begin(), L.end(), [&](IndexSet m) {
        return kp.proper_subset_of(m) && m.proper_subset_of(*k);
      });
      if (maximal) chains.push_back({lattice.s, *k, kp});
    }
  }
  return chains;
}

Number bracket(const SpaceModel& model, IndexSet u, IndexSet v, IndexSet w) {
  Number sum = 0;
  for (int i : u.members())
    for (int j : v.members())
      for (int k : w.members()) sum += model.triple(i, j, k);
  return sum;
}

Eta eta(const SpaceModel& model, const SimpleChain& chain, double tol) {
  const IndexSet n = chain.kprime, l = chain.l(), j = chain.j(), jp = chain.jprime();
  if (n.empty() || !n.proper_subset_of(chain.k))
    throw DomainError("not a chain: k' = " + n.to_string() + ", k = " + chain.k.to_string());

  Eta out;
  out.omega = model.dim(n.members().front());
  for (int i : n.members()) out.omega = std::min(out.omega, model.dim(i));
  const Number omega = out.omega;

  out.numerator = Number(2) * weighted_sum(model, n, model.killing()) - Number(2) * bracket(model, n, jp, jp) -
                  bracket(model, n, n, n);
  out.denominator =
      omega * (Number(2) * weighted_sum(model, l, model.killing()) - bracket(model, l, l, l) -
               Number(2) * bracket(model, l, j, j));

  out.casimir_numerator = Number(4) * weighted_sum(model, n, model.casimir()) + bracket(model, n, n, n);
  out.casimir_denominator = omega * (Number(4) * weighted_sum(model, l, model.casimir()) +
                                     bracket(model, l, l, l) + Number(4) * bracket(model, l, n, l));

  if (out.denominator.near_zero(tol) || out.casimir_denominator.near_zero(tol))
    throw HypothesisError("eta is undefined for chain (" + chain.k.to_string() + ", " +
                          n.to_string() + "): zero denominator");
  out.value = out.numerator / out.denominator;
  out.casimir_value = out.casimir_numerator / out.casimir_denominator;
  return out;
}

ConditionReport check_theorem(const SpaceModel& model, const SubalgebraLattice& lattice,
                              std::span<const Number> z) {
  return check_chains(model, lattice, z, Criterion::theorem);
}

ConditionReport check_corollary_lambda(const SpaceModel& model, const SubalgebraLattice& lattice,
                                       std::span<const Number> z) {
  return check_chains(model, lattice, z, Criterion::corollary_lambda);
}

TwoSummandCondition two_summand_condition(const SpaceModel& model, const SubalgebraLattice& lattice,
                                          std::span<const Number> z) {
  if (model.summands() != 2)
    throw DomainError("two-summand condition needs s = 2, model has s = " +
                      std::to_string(model.summands()));
  require_positive_form(model, z);
  TwoSummandCondition out;
  const bool first = lattice.contains(IndexSet::of({0}));
  const bool second = lattice.contains(IndexSet::of({1}));
  if (first == second) {
    out.kind = TwoSummandCondition::Kind::trivially_solvable;
    out.pass = true;
    return out;
  }
  const int a = first ? 0 : 1;
  const int b = 1 - a;
  out.subalgebra_summand = a;
  out.eta = eta(model, SimpleChain{2, IndexSet::full(2), IndexSet::of({a})}).value;
  out.threshold = Number(model.dim(b)) * out.eta;
  out.ratio = z[a] / z[b];
  out.pass = strictly_positive(out.ratio - out.threshold);
  return out;
}

}  // namespace prc
