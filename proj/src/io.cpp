#include "prc/io.hpp"

#include "prc/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace prc::io {

namespace {

const std::set<std::string> kModelFields = {"name",    "s",       "dims", "casimir",
                                            "killing", "triples", "pairwise_inequivalent"};

Number json_number(const Json& v, bool exact_decimals, const std::string& where) {
  if (v.is_number_integer()) return Number(v.get<long long>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    return exact_decimals ? Number(Number::decimal_rational(d)) : Number(d);
  }
  if (v.is_string()) {
    try {
      return Number::parse(v.get<std::string>(), true);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected a number or a rational string");
}

int json_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<int>();
}

std::vector<Number> json_numbers(const Json& v, bool exact_decimals, const std::string& field) {
  if (!v.is_array()) throw InputError("'" + field + "' must be an array");
  std::vector<Number> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(json_number(v[i], exact_decimals, field + "[" + std::to_string(i) + "]"));
  return out;
}

std::string scalar_text(const Number& v) { return number_json(v).dump(); }

std::string inline_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "]";
}

Json doubles(const std::vector<double>& v) { return Json(v); }

}  // namespace

ModelData parse_model(const Json& doc, bool exact_decimals) {
  if (!doc.is_object()) throw InputError("model document must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!kModelFields.contains(key)) throw InputError("unknown field '" + key + "'");
  for (const char* required : {"s", "dims", "triples"})
    if (!doc.contains(required)) throw InputError(std::string("missing field '") + required + "'");

  ModelData m;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("'name' must be a string");
    m.name = doc["name"].get<std::string>();
  }
  m.s = json_int(doc["s"], "s");
  if (!doc["dims"].is_array()) throw InputError("'dims' must be an array");
  for (std::size_t i = 0; i < doc["dims"].size(); ++i)
    m.dims.push_back(json_int(doc["dims"][i], "dims[" + std::to_string(i) + "]"));
  if (doc.contains("casimir")) m.casimir = json_numbers(doc["casimir"], exact_decimals, "casimir");
  if (doc.contains("killing")) m.killing = json_numbers(doc["killing"], exact_decimals, "killing");

  const Json& triples = doc["triples"];
  if (!triples.is_array()) throw InputError("'triples' must be an array");
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const std::string where = "triples[" + std::to_string(t) + "]";
    const Json& entry = triples[t];
    if (!entry.is_array() || entry.size() != 4) throw InputError(where + ": expected [i, j, k, value]");
    Triple tr;
    for (int a = 0; a < 3; ++a) tr.idx[a] = json_int(entry[a], where) - 1;
    tr.value = json_number(entry[3], exact_decimals, where);
    m.triples.push_back(std::move(tr));
  }
  if (doc.contains("pairwise_inequivalent")) {
    if (!doc["pairwise_inequivalent"].is_boolean()) throw InputError("'pairwise_inequivalent' must be a boolean");
    m.pairwise_inequivalent = doc["pairwise_inequivalent"].get<bool>();
  }
  return m;
}

ModelData parse_model_text(std::string_view text, bool exact_decimals) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_model(doc, exact_decimals);
}

ModelData load_model(const std::filesystem::path& path, bool exact_decimals) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model_text(buf.str(), exact_decimals);
}

std::string serialize_model(const ModelData& m) {
  auto numbers = [](const std::vector<Number>& v) {
    std::vector<std::string> items;
    for (const auto& x : v) items.push_back(scalar_text(x));
    return inline_array(items);
  };
  std::vector<std::string> dims;
  for (int d : m.dims) dims.push_back(std::to_string(d));

  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << Json(m.name).dump() << ",\n";
  out << "  \"s\": " << m.s << ",\n";
  out << "  \"dims\": " << inline_array(dims) << ",\n";
  if (m.casimir) out << "  \"casimir\": " << numbers(*m.casimir) << ",\n";
  if (m.killing) out << "  \"killing\": " << numbers(*m.killing) << ",\n";
  out << "  \"triples\": [";
  for (std::size_t t = 0; t < m.triples.size(); ++t) {
    const auto& tr = m.triples[t];
    out << (t ? ",\n    " : "\n    ")
        << inline_array({std::to_string(tr.idx[0] + 1), std::to_string(tr.idx[1] + 1), std::to_string(tr.idx[2] + 1),
                         scalar_text(tr.value)});
  }
  out << (m.triples.empty() ? "],\n" : "\n  ],\n");
  out << "  \"pairwise_inequivalent\": " << (m.pairwise_inequivalent ? "true" : "false") << "\n";
  out << "}\n";
  return out.str();
}

std::vector<Number> parse_list(std::string_view text, bool exact_decimals) {
  std::vector<Number> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    if (item.empty()) throw InputError("empty entry in list '" + std::string(text) + "'");
    out.push_back(Number::parse(item, exact_decimals));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Json number_json(const Number& v) {
  if (!v.is_exact()) return Json(v.to_double());
  const Rational& r = v.exact();
  if (boost::multiprecision::denominator(r) == 1) {
    const Integer n = boost::multiprecision::numerator(r);
    if (boost::multiprecision::abs(n) <= Integer(std::numeric_limits<long long>::max()))
      return Json(n.convert_to<long long>());
  }
  return Json(v.to_string());
}

Json index_json(IndexSet set) { return Json(set.one_based()); }

Json lattice_json(const SpaceModel& model, const SubalgebraLattice& lattice) {
  Json out;
  Json members = Json::array();
  for (IndexSet J : lattice.members) members.push_back(index_json(J));
  out["subalgebras"] = std::move(members);
  out["hypothesis"] = hypothesis_json(check_hypothesis(model, lattice));
  const auto trivial = always_solvable_summand(model, lattice);
  out["always_solvable"] = trivial.has_value();
  out["always_solvable_summand"] = trivial ? Json(*trivial + 1) : Json(nullptr);
  return out;
}

Json hypothesis_json(const HypothesisVerdict& v) {
  Json out;
  out["status"] = to_string(v.status);
  out["inequivalence"] = to_string(v.inequivalence);
  out["commutator"] = to_string(v.commutator);
  out["violating_subalgebra"] = v.violating_subalgebra ? index_json(*v.violating_subalgebra) : Json(nullptr);
  out["violating_summand"] = v.violating_summand ? Json(*v.violating_summand + 1) : Json(nullptr);
  return out;
}

Json chains_json(const SpaceModel& model, const std::vector<SimpleChain>& chains) {
  Json list = Json::array();
  for (const auto& c : chains) {
    Json entry;
    entry["k"] = index_json(c.k);
    entry["kprime"] = index_json(c.kprime);
    entry["l"] = index_json(c.l());
    entry["j"] = index_json(c.j());
    try {
      const Eta e = eta(model, c);
      entry["eta"] = number_json(e.value);
      entry["omega"] = e.omega;
    } catch (const HypothesisError& err) {
      entry["eta"] = nullptr;
      entry["error"] = err.what();
    }
    list.push_back(std::move(entry));
  }
  Json out;
  out["chains"] = std::move(list);
  return out;
}

Json eta_json(const SpaceModel& model, const std::vector<SimpleChain>& chains) {
  Json list = Json::array();
  for (const auto& c : chains) {
    Json entry;
    entry["kprime"] = index_json(c.kprime);
    const Eta e = eta(model, c);
    entry["eta"] = e.value.is_exact() ? Json(e.value.to_string()) : Json(e.value.to_double());
    list.push_back(std::move(entry));
  }
  Json out;
  out["chains"] = std::move(list);
  return out;
}

Json condition_json(const ConditionReport& r) {
  Json out;
  out["criterion"] = r.criterion == Criterion::theorem ? "theorem" : "corollary_lambda";
  out["pass"] = r.pass;
  out["first_failing"] = r.first_failing ? Json(*r.first_failing) : Json(nullptr);
  out["hypothesis"] = hypothesis_json(r.hypothesis);
  out["hypothesis_caveat"] = r.hypothesis_caveat;
  Json list = Json::array();
  for (const auto& c : r.chains) {
    Json entry;
    entry["k"] = index_json(c.chain.k);
    entry["kprime"] = index_json(c.chain.kprime);
    entry["eta"] = number_json(c.eta.value);
    entry["lhs"] = c.lhs.to_double();
    entry["rhs"] = c.rhs.to_double();
    entry["margin"] = c.margin.to_double();
    entry["pass"] = c.pass;
    entry["label"] = c.label;
    list.push_back(std::move(entry));
  }
  out["chains"] = std::move(list);
  return out;
}

Json two_summand_json(const TwoSummandCondition& c) {
  Json out;
  if (c.kind == TwoSummandCondition::Kind::trivially_solvable) {
    out["kind"] = "trivially_solvable";
    out["pass"] = true;
    return out;
  }
  out["kind"] = "criterion";
  out["subalgebra_summand"] = c.subalgebra_summand + 1;
  out["eta"] = number_json(c.eta);
  out["threshold"] = number_json(c.threshold);
  out["ratio"] = c.ratio.to_double();
  out["pass"] = c.pass;
  return out;
}

Json solve_json(const SolveReport& r) {
  Json out;
  out["status"] = to_string(r.status);
  out["x"] = doubles(r.x);
  out["c"] = r.c;
  out["residual"] = r.residual;
  out["constraint_error"] = r.constraint_error;
  out["scalar"] = r.scalar;
  out["tangent_gradient"] = r.tangent_gradient;
  out["starts_used"] = r.starts_used;
  out["best_start"] = r.best_start;
  out["iterations"] = r.iterations;
  out["starts_agreeing"] = r.starts_agreeing;
  out["collapsed"] = index_json(r.collapsed);
  Json alternatives = Json::array();
  for (const auto& a : r.alternatives) alternatives.push_back(doubles(a));
  out["alternatives"] = std::move(alternatives);
  out["theorem"] = r.theorem ? condition_json(*r.theorem) : Json(nullptr);
  out["diagnostic"] = r.diagnostic;
  return out;
}

Json step_json(const IterationStep& s) {
  Json out;
  out["step"] = s.index;
  out["status"] = to_string(s.status);
  out["start"] = doubles(s.start);
  out["next"] = doubles(s.next);
  out["c"] = s.c;
  out["metric"] = doubles(s.metric);
  out["residual"] = s.residual;
  out["condition_pass"] = s.condition_pass ? Json(*s.condition_pass) : Json(nullptr);
  out["normalized_change"] = s.normalized_change ? Json(*s.normalized_change) : Json(nullptr);
  return out;
}

}  // namespace prc::io
