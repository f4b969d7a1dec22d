#include "prc/errors.hpp"
#include "prc/model.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prc {

namespace {

struct Mask3 {
  std::uint32_t a, b, c;
};

std::vector<Mask3> triple_masks(const SpaceModel& model) {
  std::vector<Mask3> out;
  out.reserve(model.nonzero_triples().size());
  for (const Triple& t : model.nonzero_triples())
    out.push_back({1U << t.idx[0], 1U << t.idx[1], 1U << t.idx[2]});
  return out;
}

// A nonzero [ijk] breaks closure of J exactly when two of its three index
// slots lie in J and the third does not.
bool closed(std::uint32_t J, const std::vector<Mask3>& masks) {
  for (const Mask3& m : masks) {
    const int inside = ((J & m.a) != 0) + ((J & m.b) != 0) + ((J & m.c) != 0);
    if (inside == 2) return false;
  }
  return true;
}

void check_size(const SpaceModel& model) {
  if (model.summands() > kMaxSummands)
    throw DomainError("subalgebra enumeration supports at most " + std::to_string(kMaxSummands) +
                      " summands");
}

SubalgebraLattice finish(int s, std::vector<IndexSet> members) {
  std::sort(members.begin(), members.end(), lattice_less);
  return {s, std::move(members)};
}

}  // namespace

bool is_closed(const SpaceModel& model, IndexSet J) { return closed(J.bits(), triple_masks(model)); }

SubalgebraLattice enumerate_subalgebras_serial(const SpaceModel& model) {
  check_size(model);
  const auto masks = triple_masks(model);
  const std::uint32_t count = std::uint32_t{1} << model.summands();
  std::vector<IndexSet> members;
  for (std::uint32_t J = 0; J < count; ++J)
    if (closed(J, masks)) members.push_back(IndexSet::from_bits(J));
  return finish(model.summands(), std::move(members));
}

SubalgebraLattice enumerate_subalgebras(const SpaceModel& model) {
  check_size(model);
  const auto masks = triple_masks(model);
  const std::int64_t count = std::int64_t{1} << model.summands();
  std::vector<IndexSet> members;

#pragma omp parallel
  {
    std::vector<IndexSet> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t J = 0; J < count; ++J)
      if (closed(static_cast<std::uint32_t>(J), masks)) local.push_back(IndexSet::from_bits(static_cast<std::uint32_t>(J)));
#pragma omp critical
    members.insert(members.end(), local.begin(), local.end());
  }
  return finish(model.summands(), std::move(members));
}

}  // namespace prc
