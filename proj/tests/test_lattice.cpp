#include "fixtures.hpp"
#include "oracles.hpp"

#include "prc/chains.hpp"
#include "prc/model.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using prc::IndexSet;
using prc::ModelData;
using prc::Number;
using prc::Rational;
using prc::Verdict;

namespace {

std::set<std::uint32_t> bits(const std::vector<IndexSet>& v) {
  std::set<std::uint32_t> out;
  for (auto J : v) out.insert(J.bits());
  return out;
}

/// d = (1,4,4), zeta = (0, 0.3, 0.4): only {1} is a proper subalgebra.
ModelData one_trivial_summand() {
  ModelData m;
  m.name = "one trivial summand";
  m.s = 3;
  m.dims = {1, 4, 4};
  m.casimir = std::vector<Number>{0, Rational(3, 10), Rational(2, 5)};
  m.triples = {{{0, 1, 1}, 1}, {{0, 1, 2}, Rational(1, 2)}, {{0, 2, 2}, 1}, {{1, 1, 2}, Rational(1, 4)}};
  m.pairwise_inequivalent = true;
  return m;
}

}  // namespace

TEST_CASE("G2/U(2) lattice") {
  const auto g2 = fixtures::g2u2();
  const auto lattice = prc::enumerate_subalgebras(g2);
  const std::vector<IndexSet> expected = {IndexSet(), IndexSet::of({1}), IndexSet::of({2}), IndexSet::full(3)};
  CHECK(lattice.members == expected);
  CHECK(lattice.proper_nontrivial() == std::vector<IndexSet>{IndexSet::of({1}), IndexSet::of({2})});
  CHECK(lattice.contains(IndexSet::of({2})));
  CHECK_FALSE(lattice.contains(IndexSet::of({0})));
}

TEST_CASE("no triples: every subset is closed") {
  ModelData m;
  m.s = 4;
  m.dims = {1, 2, 3, 4};
  m.casimir = std::vector<Number>{1, 1, 1, 1};
  const auto lattice = prc::enumerate_subalgebras(prc::make_model(m));
  CHECK(lattice.members.size() == 16);
}

TEST_CASE("two summands with [112] = 0 and [122] > 0") {
  oracle::TwoSummand t{2, 3, Rational(1, 4), Rational(1, 3), 0, 0, 1};
  const auto lattice = prc::enumerate_subalgebras(prc::make_model(t.data()));
  CHECK(lattice.members == std::vector<IndexSet>{IndexSet(), IndexSet::of({0}), IndexSet::full(2)});
}

TEST_CASE("lattice matches brute-force closure; parallel matches serial") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    oracle::RandomSpec spec;
    spec.max_s = 7;
    spec.density = trial % 2 ? 0.15 : 0.4;
    const ModelData data = oracle::random_model(rng, spec);
    const auto model = prc::make_model(data);
    const auto parallel = prc::enumerate_subalgebras(model);
    const auto serial = prc::enumerate_subalgebras_serial(model);
    CHECK(parallel.members == serial.members);
    CHECK(bits(parallel.members) == bits(oracle::lattice(data)));
    CHECK(std::is_sorted(parallel.members.begin(), parallel.members.end(), prc::lattice_less));
    for (auto J : parallel.members) CHECK(prc::is_closed(model, J) == oracle::closed(data, J));
  }
}

TEST_CASE("hypothesis verdicts") {
  const auto g2 = fixtures::g2u2();
  const auto h = prc::check_hypothesis(g2, prc::enumerate_subalgebras(g2));
  CHECK(h.status == Verdict::satisfied);
  CHECK(h.commutator == Verdict::satisfied);

  ModelData unknown = prc::catalog::g2_u2();
  unknown.pairwise_inequivalent = false;
  const auto um = prc::make_model(unknown);
  const auto hu = prc::check_hypothesis(um, prc::enumerate_subalgebras(um));
  CHECK(hu.inequivalence == Verdict::unknown);
  CHECK(hu.status == Verdict::unknown);

  // Summand 3 is one-dimensional, trivial and brackets with nothing; {1} is
  // a proper subalgebra not containing it.
  ModelData bad;
  bad.s = 3;
  bad.dims = {2, 2, 1};
  bad.casimir = std::vector<Number>{Rational(1, 2), Rational(1, 2), 0};
  bad.triples = {{{0, 1, 1}, 1}};
  bad.pairwise_inequivalent = true;
  const auto bm = prc::make_model(bad);
  const auto hb = prc::check_hypothesis(bm, prc::enumerate_subalgebras(bm));
  CHECK(hb.status == Verdict::violated);
  REQUIRE(hb.violating_summand.has_value());
  CHECK(*hb.violating_summand == 2);
  CHECK_FALSE(hb.violating_subalgebra->contains(2));
}

TEST_CASE("always-solvable classification") {
  const auto model = prc::make_model(one_trivial_summand());
  const auto lattice = prc::enumerate_subalgebras(model);
  CHECK(lattice.members == std::vector<IndexSet>{IndexSet(), IndexSet::of({0}), IndexSet::full(3)});
  CHECK(prc::always_solvable(model, lattice));
  CHECK(*prc::always_solvable_summand(model, lattice) == 0);

  const auto g2 = fixtures::g2u2();
  CHECK_FALSE(prc::always_solvable(g2, prc::enumerate_subalgebras(g2)));

  ModelData positive = one_trivial_summand();
  (*positive.casimir)[0] = Rational(1, 10);
  const auto pm = prc::make_model(positive);
  CHECK_FALSE(prc::always_solvable(pm, prc::enumerate_subalgebras(pm)));
}
