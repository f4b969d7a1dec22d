#pragma once

#include "prc/index_set.hpp"
#include "prc/number.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prc {

/// One structure constant [ijk] with zero-based indices i <= j <= k.
struct Triple {
  std::array<int, 3> idx{};
  Number value;
};

/// A structure constant for one ordered index triple, with the value as a
/// double. Every nonzero canonical triple expands to its distinct
/// permutations.
struct OrderedTriple {
  int i = 0, j = 0, k = 0;
  double value = 0.0;
};

/// Raw description of a homogeneous space G/H as read from a model file.
/// At least one of `casimir` / `killing` must be present.
struct ModelData {
  std::string name;
  int s = 0;
  std::vector<int> dims;
  std::optional<std::vector<Number>> casimir;
  std::optional<std::vector<Number>> killing;
  std::vector<Triple> triples;
  bool pairwise_inequivalent = false;
};

struct ValidationReport;

/// A validated, immutable homogeneous-space model. Only `validate` builds
/// one, so every instance satisfies the model invariants.
class SpaceModel {
 public:
  const std::string& name() const { return source_.name; }
  int summands() const { return s_; }
  int dim(int i) const { return source_.dims[i]; }
  std::span<const int> dims() const { return source_.dims; }
  /// dim M = sum of d_i.
  int dimension() const { return dimension_; }
  /// sum_{i in J} d_i.
  int dimension(IndexSet J) const;

  const Number& casimir(int i) const { return casimir_[i]; }
  const Number& killing(int i) const { return killing_[i]; }
  std::span<const Number> casimir() const { return casimir_; }
  std::span<const Number> killing() const { return killing_; }

  /// [ijk] for any order of the (zero-based) indices.
  const Number& triple(int i, int j, int k) const { return dense_[(i * s_ + j) * s_ + k]; }
  double triple_d(int i, int j, int k) const { return dense_d_[(i * s_ + j) * s_ + k]; }
  /// sum_{j,k} [ijk] over all j, k.
  const Number& bracket_sum(int i) const { return bracket_sum_[i]; }

  /// Nonzero constants in canonical (sorted) form.
  std::span<const Triple> nonzero_triples() const { return nonzero_; }
  /// All ordered index triples with a nonzero constant.
  std::span<const OrderedTriple> ordered_triples() const { return ordered_; }

  bool pairwise_inequivalent() const { return source_.pairwise_inequivalent; }
  /// True when every number in the model is an exact rational.
  bool is_exact() const { return exact_; }

  /// The data the model was built from, as supplied (no derived fields).
  const ModelData& source() const { return source_; }

 private:
  SpaceModel() = default;
  friend ValidationReport validate(const ModelData&, double);

  ModelData source_;
  int s_ = 0;
  int dimension_ = 0;
  bool exact_ = true;
  std::vector<Number> casimir_, killing_, bracket_sum_;
  std::vector<Number> dense_;
  std::vector<double> dense_d_;
  std::vector<Triple> nonzero_;
  std::vector<OrderedTriple> ordered_;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::optional<SpaceModel> model;  // set iff errors is empty
  bool ok() const { return errors.empty(); }
};

/// Checks every model invariant and derives the missing one of zeta/b from
/// the Casimir identity d_i b_i = 2 d_i zeta_i + sum_{j,k} [ijk].
/// `tol` is the Casimir tolerance used when any involved value is a double.
ValidationReport validate(const ModelData& data, double tol = 1e-9);

/// Like `validate`, but throws InputError listing every violation.
SpaceModel make_model(const ModelData& data, double tol = 1e-9);

/// Index sets J whose summands together with h form a Lie subalgebra,
/// sorted by (|J|, lexicographic). Always contains the empty set and the
/// full set.
struct SubalgebraLattice {
  int s = 0;
  std::vector<IndexSet> members;

  bool contains(IndexSet J) const;
  /// Members other than the empty and the full set.
  std::vector<IndexSet> proper_nontrivial() const;
};

/// Bracket closure: no nonzero [ijk] with i outside J and j, k inside.
bool is_closed(const SpaceModel& model, IndexSet J);

/// Enumerates the lattice over all 2^s subsets, split across OpenMP threads.
SubalgebraLattice enumerate_subalgebras(const SpaceModel& model);
/// Single-threaded reference enumeration.
SubalgebraLattice enumerate_subalgebras_serial(const SpaceModel& model);

enum class Verdict { satisfied, violated, unknown };

std::string to_string(Verdict v);

/// Outcome of checking the structural hypothesis on subalgebras strictly
/// containing h.
struct HypothesisVerdict {
  Verdict status = Verdict::unknown;
  /// Requirement 1: inequivalence across s and g - s. Decided only through
  /// the model's pairwise-inequivalence flag.
  Verdict inequivalence = Verdict::unknown;
  /// Requirement 2: no 1-dimensional summand outside s commutes with s.
  Verdict commutator = Verdict::unknown;
  std::optional<IndexSet> violating_subalgebra;
  std::optional<int> violating_summand;
};

HypothesisVerdict check_hypothesis(const SpaceModel& model, const SubalgebraLattice& lattice,
                                   double tol = 1e-12);

/// Index of the summand that makes every T solvable, if the model has
/// exactly one trivial summand (zeta_i = 0, d_i = 1), all other zeta_j > 0,
/// and {i} is the only proper nontrivial lattice member.
std::optional<int> always_solvable_summand(const SpaceModel& model, const SubalgebraLattice& lattice,
                                           double tol = 1e-12);

inline bool always_solvable(const SpaceModel& model, const SubalgebraLattice& lattice,
                            double tol = 1e-12) {
  return always_solvable_summand(model, lattice, tol).has_value();
}

}  // namespace prc
