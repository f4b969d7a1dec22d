#pragma once

#include "prc/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prc::catalog {

/// Three-summand flag manifold of type I with Q = -B (so b_i = 1):
///   [112] = (d1 d2 + 2 d1 d3 - d2 d3) / (d1 + 4 d2 + 9 d3),
///   [123] = (d1 + d2) d3 / (d1 + 4 d2 + 9 d3),
/// all other constants zero; zeta follows from the Casimir identity.
/// Throws InputError when [112] or a derived zeta_i would be negative.
ModelData flag3(int d1, int d2, int d3);

/// G2/U(2) with U(2) on the long root: flag3(4, 2, 4).
ModelData g2_u2();

/// Two inequivalent summands where m_1 + h is a subalgebra ([112] = 0) and
/// m_2 + h is not ([122] > 0). Killing coefficients are derived from the
/// Casimir identity. Throws InputError if the result does not validate.
struct TwoSummandParams {
  int d1 = 1;
  int d2 = 2;
  Number zeta1 = 0;
  Number zeta2 = 0;
  Number t111 = 0;
  Number t222 = 0;
  Number t122 = 1;
};
ModelData two_summand(const TwoSummandParams& params);

struct CatalogEntry {
  std::string name;
  std::string parameters;
  std::string note;
  /// Empty for named spaces whose constants are not shipped.
  std::optional<ModelData> data;
};

std::vector<CatalogEntry> entries();

/// Resolves "g2u2", "flag3:d1,d2,d3" or
/// "twosum:d1,d2,zeta1,zeta2,t111,t222,t122". Returns nullopt when `spec`
/// is not a catalog alias.
std::optional<ModelData> resolve(std::string_view spec, bool exact_decimals = false);

}  // namespace prc::catalog
