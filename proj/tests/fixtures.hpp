#pragma once

#include "prc/catalog.hpp"
#include "prc/model.hpp"

#include <vector>

namespace fixtures {

inline prc::SpaceModel g2u2() { return prc::make_model(prc::catalog::g2_u2()); }

inline std::vector<prc::Number> numbers(std::initializer_list<prc::Number> v) { return v; }

/// One summand, d = 3, b = 1, no triples (dim M must be at least 3).
inline prc::ModelData irreducible() {
  prc::ModelData m;
  m.name = "irreducible";
  m.s = 1;
  m.dims = {3};
  m.killing = std::vector<prc::Number>{1};
  return m;
}

}  // namespace fixtures
