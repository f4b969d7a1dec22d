#include "fixtures.hpp"

#include "prc/curvature.hpp"
#include "prc/errors.hpp"
#include "prc/iteration.hpp"

#include <cmath>

#include "doctest.h"

using prc::Number;
using prc::Rational;

namespace {

prc::SpaceModel eta_zero_space() {
  prc::catalog::TwoSummandParams p;
  p.d1 = 1;
  p.d2 = 4;
  p.zeta1 = 0;
  p.zeta2 = Rational(1, 4);
  p.t122 = Rational(1, 2);
  return prc::make_model(prc::catalog::two_summand(p));
}

}  // namespace

TEST_CASE("iteration on an always-solvable two-summand space") {
  const auto model = eta_zero_space();
  const auto lattice = prc::enumerate_subalgebras(model);
  const std::vector<double> start = {1.0, 1.0};
  const auto trace = prc::ricci_iterate(model, lattice, start, 10);
  REQUIRE(trace.complete);
  CHECK(trace.condition_check_skipped);
  REQUIRE(trace.steps.size() == 10);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    CHECK(s.index == static_cast<int>(i) + 1);
    CHECK(s.c > 0);
    CHECK(s.residual < 1e-7);
    if (i > 0) {
      CHECK(s.start == trace.steps[i - 1].next);
      CHECK(s.normalized_change.has_value());
    }
    const auto r = prc::ricci<double>(model, s.next);
    for (int k = 0; k < 2; ++k) CHECK(std::abs(r[k] - s.metric[k]) <= 1e-7 * std::abs(s.metric[k]) + 1e-12);
  }
  const auto again = prc::ricci_iterate(model, lattice, start, 10);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    CHECK(again.steps[i].next == trace.steps[i].next);
    CHECK(again.steps[i].c == trace.steps[i].c);
  }
}

TEST_CASE("iteration with chain checks on G2/U(2)") {
  const auto g2 = fixtures::g2u2();
  const auto trace = prc::ricci_iterate(g2, prc::enumerate_subalgebras(g2), std::vector<double>{1, 1, 1}, 3);
  REQUIRE_FALSE(trace.steps.empty());
  CHECK_FALSE(trace.condition_check_skipped);
  REQUIRE(trace.steps[0].condition_pass.has_value());
  CHECK(*trace.steps[0].condition_pass);
}

TEST_CASE("one summand: every g_i is the Einstein metric") {
  const auto one = prc::make_model(fixtures::irreducible());
  const auto trace = prc::ricci_iterate(one, prc::enumerate_subalgebras(one), std::vector<double>{2.0}, 4);
  REQUIRE(trace.complete);
  for (const auto& s : trace.steps) {
    CHECK(s.metric[0] == doctest::Approx(0.5));
    CHECK(s.next[0] == doctest::Approx(3 * s.start[0]));
  }
}

TEST_CASE("iteration input errors") {
  const auto model = eta_zero_space();
  const auto lattice = prc::enumerate_subalgebras(model);
  CHECK_THROWS_AS(prc::ricci_iterate(model, lattice, std::vector<double>{1.0}, 2), prc::DomainError);
  CHECK_THROWS_AS(prc::ricci_iterate(model, lattice, std::vector<double>{1.0, 1.0}, 0), prc::DomainError);
}
