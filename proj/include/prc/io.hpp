#pragma once

#include "prc/chains.hpp"
#include "prc/iteration.hpp"
#include "prc/model.hpp"
#include "prc/solver.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace prc::io {

using Json = nlohmann::ordered_json;

/// Model document: name, s, dims, casimir and/or killing, triples as
/// [i, j, k, value] (1-based, i <= j <= k), pairwise_inequivalent.
/// Values are JSON numbers or strings "p/q". Integers and strings are exact;
/// JSON floats stay floating point unless `exact_decimals` is set.
/// Throws InputError on unknown fields or wrong shapes. Range and ordering
/// of triples is left to validate().
ModelData parse_model(const Json& doc, bool exact_decimals = false);
ModelData parse_model_text(std::string_view text, bool exact_decimals = false);
ModelData load_model(const std::filesystem::path& path, bool exact_decimals = false);

/// Canonical text form: one field per line, scalar arrays inline, one triple
/// per line. parse then serialize is the identity on canonical text.
std::string serialize_model(const ModelData& data);

/// Comma-separated list of positive decimals or rationals.
std::vector<Number> parse_list(std::string_view text, bool exact_decimals = false);

/// Exact integers as JSON integers, other exact values as "p/q" strings,
/// floating values as JSON numbers.
Json number_json(const Number& v);
Json index_json(IndexSet set);

Json lattice_json(const SpaceModel& model, const SubalgebraLattice& lattice);
Json hypothesis_json(const HypothesisVerdict& verdict);
Json chains_json(const SpaceModel& model, const std::vector<SimpleChain>& chains);
/// {"chains":[{"kprime":[...],"eta":"p/q"}, ...]}
Json eta_json(const SpaceModel& model, const std::vector<SimpleChain>& chains);
Json condition_json(const ConditionReport& report);
Json two_summand_json(const TwoSummandCondition& condition);
Json solve_json(const SolveReport& report);
Json step_json(const IterationStep& step);

}  // namespace prc::io
