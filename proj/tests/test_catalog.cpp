#include "oracles.hpp"

#include "prc/catalog.hpp"
#include "prc/chains.hpp"
#include "prc/errors.hpp"

#include "doctest.h"

using prc::IndexSet;
using prc::Number;
using prc::Rational;

TEST_CASE("flag3(4,2,4) is G2/U(2)") {
  const auto data = prc::catalog::flag3(4, 2, 4);
  REQUIRE(data.triples.size() == 2);
  CHECK(data.triples[0].value == Number(Rational(2, 3)));
  CHECK(data.triples[1].value == Number(Rational(1, 2)));
  const auto model = prc::make_model(data);
  CHECK(model.casimir(0) == Number(Rational(5, 24)));
  CHECK(model.casimir(1) == Number(Rational(1, 12)));
  CHECK(model.casimir(2) == Number(Rational(3, 8)));
  CHECK(prc::enumerate_subalgebras(model).members ==
        std::vector<IndexSet>{IndexSet(), IndexSet::of({1}), IndexSet::of({2}), IndexSet::full(3)});
  CHECK(prc::catalog::resolve("flag3:4,2,4")->name == "G2/U(2)");
  CHECK(prc::catalog::resolve("g2u2")->name == "G2/U(2)");
}

TEST_CASE("flag3 family validates exactly") {
  int generated = 0;
  for (int d1 = 1; d1 <= 8; ++d1)
    for (int d2 = 1; d2 <= 8; ++d2)
      for (int d3 = 1; d3 <= 8; ++d3) {
        if (d1 * d2 + 2 * d1 * d3 - d2 * d3 < 0) {
          CHECK_THROWS_AS(prc::catalog::flag3(d1, d2, d3), prc::InputError);
          continue;
        }
        try {
          const auto data = prc::catalog::flag3(d1, d2, d3);
          CHECK(prc::validate(data, 0.0).ok());
          ++generated;
        } catch (const prc::InputError& e) {
          // Only a negative derived zeta may reject these dims.
          CHECK(std::string(e.what()).find("casimir eigenvalue is negative") != std::string::npos);
        }
      }
  CHECK(generated > 50);
}

TEST_CASE("two-summand generator") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = oracle::random_two_summand(rng);
    prc::catalog::TwoSummandParams p{t.d1, t.d2, t.zeta1, t.zeta2, t.t111, t.t222, t.t122};
    const auto model = prc::make_model(prc::catalog::two_summand(p));
    const auto lattice = prc::enumerate_subalgebras(model);
    CHECK(lattice.contains(IndexSet::of({0})));
    const std::vector<Number> z = {1, 1};
    const auto cond = prc::two_summand_condition(model, lattice, z);
    CHECK(cond.threshold == Number(t.threshold()));
  }
  CHECK_THROWS_AS(prc::catalog::two_summand({1, 2, 0, 0, 0, 0, 0}), prc::InputError);
  const auto alias = prc::catalog::resolve("twosum:1,4,0,1/4,0,0,1/2");
  REQUIRE(alias.has_value());
  CHECK(alias->dims == std::vector<int>{1, 4});
  CHECK_FALSE(prc::catalog::resolve("model.json").has_value());
  CHECK_THROWS_AS(prc::catalog::resolve("flag3:1,2"), prc::InputError);
  CHECK_THROWS_AS(prc::catalog::resolve("flag3:1,x,2"), prc::InputError);
}

TEST_CASE("catalog entries") {
  const auto entries = prc::catalog::entries();
  bool has_e7 = false;
  for (const auto& e : entries) {
    if (e.data) CHECK(prc::validate(*e.data, 0.0).ok());
    has_e7 = has_e7 || e.name == "E7/E6";
  }
  CHECK(has_e7);
}
