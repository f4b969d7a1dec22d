#pragma once

#include "prc/model.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prc {

/// Nested subalgebras g ⊇ k ⊋ k' ⊋ h with k' maximal in k, encoded by the
/// index sets of k and k'.
struct SimpleChain {
  int s = 0;
  IndexSet k;
  IndexSet kprime;

  /// Summands of k ⊖ k'.
  IndexSet l() const { return k - kprime; }
  /// Summands of g ⊖ k.
  IndexSet j() const { return k.complement(s); }
  /// Summands of g ⊖ k'.
  IndexSet jprime() const { return kprime.complement(s); }

  bool operator==(const SimpleChain&) const = default;
};

/// All simple chains of the lattice. Ordered by k from the full set
/// downwards (reverse lattice order), then by k' in lattice order.
std::vector<SimpleChain> enumerate_simple_chains(const SubalgebraLattice& lattice);

/// The obstruction number eta(k, k') of a chain, with both of its algebraic
/// forms kept for cross-checking.
struct Eta {
  Number value;
  /// Killing-form expression: numerator and denominator (omega included)
  /// after cancelling the common sign.
  Number numerator;
  Number denominator;
  /// Same quotient written through Casimir eigenvalues.
  Number casimir_numerator;
  Number casimir_denominator;
  Number casimir_value;
  /// omega(n) = min_{j in J_k'} d_j.
  int omega = 0;
};

/// Killing-form expression
///   (2 sum_{J_k'} d b - 2<n j' j'> - <n n n>)
///     / (omega (2 sum_{J_l} d b - <l l l> - 2<l j j>)).
/// Throws HypothesisError if the denominator vanishes.
Eta eta(const SpaceModel& model, const SimpleChain& chain, double tol = 1e-12);

/// <u v w> = sum over the three index sets of [ijk].
Number bracket(const SpaceModel& model, IndexSet u, IndexSet v, IndexSet w);

enum class Criterion { theorem, corollary_lambda };

/// One chain's inequality lhs > eta * factor.
struct ChainCondition {
  SimpleChain chain;
  Eta eta;
  Number lambda_min;  // min of T over J_k'
  Number l_measure;   // tr_Q T|_l (theorem) or lambda_max(T|_l) (corollary)
  Number lhs;         // lambda_min / l_measure
  Number rhs;         // eta (theorem) or eta * dim l (corollary)
  Number margin;      // lhs - rhs
  bool pass = false;
  /// "pass", or for a failing chain "inconclusive" (s >= 3, existence
  /// undecided) or "no-solution" (two summands under the theorem).
  std::string label;
};

struct ConditionReport {
  Criterion criterion = Criterion::theorem;
  std::vector<ChainCondition> chains;
  bool pass = true;
  std::optional<std::size_t> first_failing;
  HypothesisVerdict hypothesis;
  /// Set when the hypothesis could not be confirmed (verdict unknown).
  bool hypothesis_caveat = false;
};

/// Evaluates lambda_-(T|_n) / tr_Q T|_l > eta(k, k') for every simple chain.
/// Exact comparison when T and the model are exact, otherwise margin > 1e-12.
/// Throws HypothesisError if the hypothesis is violated, DomainError for
/// non-positive T.
ConditionReport check_theorem(const SpaceModel& model, const SubalgebraLattice& lattice,
                              std::span<const Number> z);

/// Evaluates lambda_-(T|_n) / lambda_+(T|_l) > eta(k, k') dim l.
ConditionReport check_corollary_lambda(const SpaceModel& model, const SubalgebraLattice& lattice,
                                       std::span<const Number> z);

/// Existence criterion for two inequivalent summands.
struct TwoSummandCondition {
  enum class Kind {
    /// Exactly one summand a spans a subalgebra: solvable iff
    /// z_a / z_b > d_b eta.
    criterion,
    /// Neither or both summands span subalgebras: every T is solvable.
    trivially_solvable,
  };
  Kind kind = Kind::criterion;
  /// Zero-based index of the summand whose span with h is a subalgebra.
  int subalgebra_summand = 0;
  Number eta;
  Number threshold;  // d_b * eta
  Number ratio;      // z_a / z_b
  bool pass = false;
};

TwoSummandCondition two_summand_condition(const SpaceModel& model, const SubalgebraLattice& lattice,
                                          std::span<const Number> z);

}  // namespace prc
