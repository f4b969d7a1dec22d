// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's numeric kernels; models are read
// only through ModelData.
#pragma once

#include "prc/index_set.hpp"
#include "prc/model.hpp"

#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using prc::IndexSet;
using prc::ModelData;
using prc::Rational;

/// Dense symmetric s^3 table of a model's structure constants.
struct Dense {
  int s = 0;
  std::vector<double> t;
  double operator()(int i, int j, int k) const { return t[(i * s + j) * s + k]; }
};
Dense dense(const ModelData& m);

struct RandomSpec {
  int min_s = 1;
  int max_s = 5;
  int max_dim = 6;
  double density = 0.4;
  /// Supply killing instead of casimir (both consistent).
  bool killing = false;
  /// Floating-point coefficients instead of small rationals.
  bool floating = false;
};

/// Random model satisfying the Casimir identity by construction: zeta and
/// the triples are drawn, b_i = 2 zeta_i + sum_jk [ijk] / d_i.
ModelData random_model(std::mt19937_64& rng, const RandomSpec& spec = {});

/// Killing coefficients (supplied, or implied by the Casimir identity).
std::vector<Rational> killing_from_casimir(const ModelData& m);

/// Two summands, m_1 + h closed: [112] = 0, [122] > 0.
struct TwoSummand {
  int d1, d2;
  Rational zeta1, zeta2, t111, t222, t122;
  ModelData data() const;
  /// d_2 eta from the Killing form expression with b derived by hand.
  Rational threshold() const;
};
TwoSummand random_two_summand(std::mt19937_64& rng);

/// S(x) restricted to J by direct summation over all ordered triples.
double scalar(const ModelData& m, IndexSet J, const std::vector<double>& x);
/// Ricci coefficients by direct summation.
std::vector<double> ricci(const ModelData& m, const std::vector<double>& x);

/// Central finite differences of f at x.
std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                const std::vector<double>& x, double h);

/// J closed iff [ijk] = 0 for all i, j in J and k outside J.
bool closed(const ModelData& m, IndexSet J);
std::vector<IndexSet> lattice(const ModelData& m);
/// Pairs (K, K') of lattice members with K' nonempty, K' strictly inside K
/// and no member strictly between them.
std::vector<std::pair<IndexSet, IndexSet>> chains(const std::vector<IndexSet>& members);

/// Uniform point in [lo, hi]^s.
std::vector<double> random_point(std::mt19937_64& rng, int s, double lo = 0.2, double hi = 5.0);

}  // namespace oracle
