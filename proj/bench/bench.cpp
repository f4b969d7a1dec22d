// Serial reference kernels against their OpenMP counterparts.

#include "prc/model.hpp"
#include "prc/solver.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

/// Sparse random model with s summands, Casimir-consistent by construction.
prc::SpaceModel sparse_model(int s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(1, 8), idx(0, s - 1), num(1, 9);
  prc::ModelData m;
  m.name = "bench";
  m.s = s;
  for (int i = 0; i < s; ++i) m.dims.push_back(dim(rng) + 1);
  m.casimir = std::vector<prc::Number>(s, prc::Number(prc::Rational(1, 4)));
  std::vector<std::array<int, 3>> seen;
  for (int t = 0; t < s; ++t) {
    std::array<int, 3> p = {idx(rng), idx(rng), idx(rng)};
    std::sort(p.begin(), p.end());
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
    seen.push_back(p);
  }
  std::sort(seen.begin(), seen.end());
  for (const auto& p : seen) m.triples.push_back({p, prc::Rational(num(rng), 4)});
  m.pairwise_inequivalent = true;
  return prc::make_model(m);
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", omp_get_max_threads());
  std::printf("%-28s %12s %12s %8s\n", "kernel", "serial [s]", "openmp [s]", "speedup");
  for (int s : {16, 18, 20, 22}) {
    const auto model = sparse_model(s, 42 + s);
    std::size_t a = 0, b = 0;
    const double ts = best_of(3, [&] { a = prc::enumerate_subalgebras_serial(model).members.size(); });
    const double tp = best_of(3, [&] { b = prc::enumerate_subalgebras(model).members.size(); });
    if (a != b) std::printf("lattice sizes differ: %zu vs %zu\n", a, b);
    char label[64];
    std::snprintf(label, sizeof label, "lattice s=%d (%zu members)", s, a);
    std::printf("%-28s %12.4f %12.4f %8.2f\n", label, ts, tp, ts / tp);
  }
  for (int s : {4, 6, 8}) {
    const auto model = sparse_model(s, 7 + s);
    const std::vector<double> z(s, 1.0);
    prc::SolveOptions serial, parallel;
    serial.parallel = false;
    serial.starts = parallel.starts = 32;
    const double ts = best_of(3, [&] { prc::maximize_scalar_curvature(model, z, serial); });
    const double tp = best_of(3, [&] { prc::maximize_scalar_curvature(model, z, parallel); });
    char label[64];
    std::snprintf(label, sizeof label, "multistart s=%d (32 starts)", s);
    std::printf("%-28s %12.4f %12.4f %8.2f\n", label, ts, tp, ts / tp);
  }
  return 0;
}
