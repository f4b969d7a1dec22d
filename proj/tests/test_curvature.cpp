#include "fixtures.hpp"
#include "oracles.hpp"

#include "prc/chains.hpp"
#include "prc/curvature.hpp"
#include "prc/errors.hpp"

#include <cmath>

#include "doctest.h"

using prc::IndexSet;
using prc::Rational;

namespace {

std::vector<Rational> ones(int s) { return std::vector<Rational>(s, Rational(1)); }

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace

TEST_CASE("frozen values at the unit metric") {
  const auto g2 = fixtures::g2u2();
  const auto full = IndexSet::full(3);
  const auto x = ones(3);
  CHECK(prc::scalar_curvature<Rational>(g2, full, x) == Rational(15, 4));
  CHECK(prc::ricci<Rational>(g2, x) == std::vector<Rational>{Rational(17, 48), Rational(7, 24), Rational(7, 16)});
  CHECK(prc::scalar_curvature_gradient<Rational>(g2, x) ==
        std::vector<Rational>{Rational(-17, 12), Rational(-7, 12), Rational(-7, 4)});
  CHECK(prc::modified_scalar_curvature<Rational>(g2, IndexSet::of({1}), x) == Rational(1, 6));

  const auto one = prc::make_model(fixtures::irreducible());
  CHECK(prc::scalar_curvature<Rational>(one, IndexSet::full(1), ones(1)) == Rational(3, 2));
  CHECK(prc::scalar_curvature_gradient<Rational>(one, ones(1))[0] == Rational(-3, 2));
  for (double x : {0.3, 1.0, 7.0}) CHECK(prc::ricci<double>(one, std::vector<double>{x})[0] == 0.5);
}

TEST_CASE("trace and eigenvalue statistics") {
  const auto g2 = fixtures::g2u2();
  const std::vector<Rational> z = {1, 2, 3};
  const auto stats = prc::form_stats<Rational>(g2, z, IndexSet::of({0, 2}));
  CHECK(stats.lambda_min == 1);
  CHECK(stats.lambda_max == 3);
  CHECK(stats.trace == 16);
  const auto unit = prc::form_stats<Rational>(g2, ones(3), IndexSet::of({0, 2}));
  CHECK(unit.trace == 8);
  const std::vector<Rational> c(3, Rational(5, 2));
  const auto constant = prc::form_stats<Rational>(g2, c, IndexSet::of({1, 2}));
  CHECK(constant.lambda_min == Rational(5, 2));
  CHECK(constant.trace == Rational(15));
  CHECK(prc::trace_constraint<Rational>(g2, IndexSet::full(3), ones(3), std::vector<Rational>(3, 10)) == 1);
}

TEST_CASE("kernels agree with direct summation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    oracle::RandomSpec spec;
    spec.floating = trial % 2 == 1;
    const auto data = oracle::random_model(rng, spec);
    const auto model = prc::make_model(data);
    const auto x = oracle::random_point(rng, data.s);
    const auto r = prc::ricci<double>(model, x);
    const auto ro = oracle::ricci(data, x);
    for (int i = 0; i < data.s; ++i) CHECK(rel(r[i], ro[i]) < 1e-12);
    for (std::uint32_t b = 1; b < (1u << data.s); ++b) {
      const auto J = IndexSet::from_bits(b);
      CHECK(rel(prc::scalar_curvature<double>(model, J, x), oracle::scalar(data, J, x)) < 1e-12);
    }
  }
}

TEST_CASE("exact and floating kernels agree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto data = oracle::random_model(rng);
    const auto model = prc::make_model(data);
    std::vector<Rational> xr;
    std::vector<double> xd;
    std::uniform_int_distribution<int> num(1, 20);
    for (int i = 0; i < data.s; ++i) {
      xr.emplace_back(num(rng), num(rng));
      xd.push_back(static_cast<double>(xr.back()));
    }
    const auto rr = prc::ricci<Rational>(model, xr);
    const auto rd = prc::ricci<double>(model, xd);
    for (int i = 0; i < data.s; ++i) CHECK(rel(static_cast<double>(rr[i]), rd[i]) < 1e-13);
  }
}

TEST_CASE("gradient identity and finite differences") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto data = oracle::random_model(rng);
    const auto model = prc::make_model(data);
    const auto x = oracle::random_point(rng, data.s, 0.5, 3.0);
    const auto g = prc::scalar_curvature_gradient<double>(model, x);
    const auto fd = oracle::fd_gradient(
        [&](const std::vector<double>& y) { return oracle::scalar(data, IndexSet::full(data.s), y); }, x, 1e-5);
    for (int i = 0; i < data.s; ++i) CHECK(std::abs(g[i] - fd[i]) <= 1e-6 * std::max(1.0, std::abs(fd[i])));
  }
}

TEST_CASE("ricci jacobian matches finite differences") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto data = oracle::random_model(rng);
    const auto model = prc::make_model(data);
    const auto x = oracle::random_point(rng, data.s, 0.5, 3.0);
    const auto J = prc::ricci_jacobian(model, x);
    for (int i = 0; i < data.s; ++i) {
      const auto fd = oracle::fd_gradient(
          [&](const std::vector<double>& y) { return oracle::ricci(data, y)[i]; }, x, 1e-6);
      for (int m = 0; m < data.s; ++m)
        CHECK(std::abs(J[static_cast<std::size_t>(i) * data.s + m] - fd[m]) <= 1e-6 * std::max(1.0, std::abs(fd[m])));
    }
  }
}

TEST_CASE("scale laws") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> lambda(0.1, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto data = oracle::random_model(rng);
    const auto model = prc::make_model(data);
    const auto x = oracle::random_point(rng, data.s);
    const double l = lambda(rng);
    auto y = x;
    for (double& v : y) v *= l;
    const auto full = IndexSet::full(data.s);
    const double sx = prc::scalar_curvature<double>(model, full, x);
    CHECK(std::abs(prc::scalar_curvature<double>(model, full, y) - sx / l) <= 1e-12 * std::max(1.0, std::abs(sx)));
    const auto rx = prc::ricci<double>(model, x), ry = prc::ricci<double>(model, y);
    for (int i = 0; i < data.s; ++i) CHECK(std::abs(rx[i] - ry[i]) <= 1e-12 * std::max(1.0, std::abs(rx[i])));
  }
}

TEST_CASE("modified scalar curvature") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto data = oracle::random_model(rng);
    const auto model = prc::make_model(data);
    const auto x = oracle::random_point(rng, data.s);
    const auto full = IndexSet::full(data.s);
    CHECK(prc::modified_scalar_curvature<double>(model, full, x) ==
          doctest::Approx(prc::scalar_curvature<double>(model, full, x)).epsilon(1e-14));
    for (std::uint32_t b = 1; b < (1u << data.s); ++b)
      CHECK(prc::modified_scalar_curvature<double>(model, IndexSet::from_bits(b), x) <=
            prc::scalar_curvature<double>(model, IndexSet::from_bits(b), x) + 1e-12);
  }
}

TEST_CASE("splitting inequality over simple chains") {
  std::mt19937_64 rng(29);
  int samples = 0;
  while (samples < 100) {
    oracle::RandomSpec spec;
    spec.density = 0.25;
    const auto data = oracle::random_model(rng, spec);
    const auto model = prc::make_model(data);
    const auto chains = prc::enumerate_simple_chains(prc::enumerate_subalgebras(model));
    if (chains.empty()) continue;
    for (const auto& c : chains) {
      const auto x = oracle::random_point(rng, data.s);
      const double lhs = prc::modified_scalar_curvature<double>(model, c.k, x);
      const double rhs = prc::modified_scalar_curvature<double>(model, c.kprime, x) +
                         prc::scalar_curvature<double>(model, c.l(), x);
      CHECK(lhs <= rhs + 1e-12 * std::max(1.0, std::abs(rhs)));
      ++samples;
    }
  }
}

TEST_CASE("domain errors") {
  const auto g2 = fixtures::g2u2();
  CHECK_THROWS_AS(prc::ricci<double>(g2, std::vector<double>{1, 1}), prc::DomainError);
  CHECK_THROWS_AS(prc::ricci<double>(g2, std::vector<double>{1, 0, 1}), prc::DomainError);
  CHECK_THROWS_AS(prc::scalar_curvature<double>(g2, IndexSet::full(3), std::vector<double>{1, -1, 1}),
                  prc::DomainError);
  // Entries outside J are ignored, so they may be anything.
  CHECK_NOTHROW(prc::scalar_curvature<double>(g2, IndexSet::of({0}), std::vector<double>{1, -1, 0}));
}
