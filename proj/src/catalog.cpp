#include "prc/catalog.hpp"

#include "prc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace prc::catalog {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int parse_dim(const std::string& text) {
  const Number v = Number::parse(text);
  if (!v.is_exact() || boost::multiprecision::denominator(v.exact()) != 1)
    throw InputError("dimension '" + text + "' is not an integer");
  return boost::multiprecision::numerator(v.exact()).convert_to<int>();
}

// Generated models must validate; otherwise the parameters are rejected.
ModelData checked(ModelData m) {
  const auto report = validate(m);
  if (!report.ok()) throw InputError(m.name + ": invalid parameter combination: " + report.errors.front());
  return m;
}

}  // namespace

ModelData flag3(int d1, int d2, int d3) {
  if (d1 < 1 || d2 < 1 || d3 < 1) throw InputError("flag3 dimensions must be positive");
  const Rational denom = d1 + 4 * d2 + 9 * d3;
  const Rational t112 = Rational(d1 * d2 + 2 * d1 * d3 - d2 * d3) / denom;
  const Rational t123 = Rational((d1 + d2) * d3) / denom;
  if (t112 < 0)
    throw InputError("flag3(" + std::to_string(d1) + "," + std::to_string(d2) + "," + std::to_string(d3) +
                     "): [112] = " + Number(t112).to_string() + " is negative");
  ModelData m;
  m.name = "flag3(" + std::to_string(d1) + "," + std::to_string(d2) + "," + std::to_string(d3) + ")";
  m.s = 3;
  m.dims = {d1, d2, d3};
  m.killing = std::vector<Number>{1, 1, 1};
  m.triples = {{{0, 0, 1}, t112}, {{0, 1, 2}, t123}};
  m.pairwise_inequivalent = true;
  return checked(std::move(m));
}

ModelData g2_u2() {
  ModelData m = flag3(4, 2, 4);
  m.name = "G2/U(2)";
  return m;
}

ModelData two_summand(const TwoSummandParams& p) {
  if (p.t122.sign() <= 0) throw InputError("twosum: [122] must be positive");
  if (p.zeta1.sign() < 0 || p.zeta2.sign() < 0 || p.t111.sign() < 0 || p.t222.sign() < 0)
    throw InputError("twosum: casimir eigenvalues and structure constants must be non-negative");
  ModelData m;
  m.name = "twosum(" + std::to_string(p.d1) + "," + std::to_string(p.d2) + ")";
  m.s = 2;
  m.dims = {p.d1, p.d2};
  m.casimir = std::vector<Number>{p.zeta1, p.zeta2};
  m.triples.push_back({{0, 1, 1}, p.t122});
  if (!p.t111.is_zero()) m.triples.push_back({{0, 0, 0}, p.t111});
  if (!p.t222.is_zero()) m.triples.push_back({{1, 1, 1}, p.t222});
  std::sort(m.triples.begin(), m.triples.end(), [](const Triple& a, const Triple& b) { return a.idx < b.idx; });
  m.pairwise_inequivalent = true;
  return checked(std::move(m));
}

std::vector<CatalogEntry> entries() {
  std::vector<CatalogEntry> out;
  out.push_back({"g2u2", "flag3:4,2,4", "G2/U(2), U(2) on the long root", g2_u2()});
  out.push_back({"flag3", "flag3:d1,d2,d3", "three-summand flag manifold of type I, dims supplied by the user",
                 std::nullopt});
  out.push_back({"twosum", "twosum:d1,d2,zeta1,zeta2,t111,t222,t122",
                 "two inequivalent summands with m1 + h a subalgebra", std::nullopt});
  const char* unconditional = "two summands, one trivial; constants must be supplied via twosum";
  out.push_back({"SO(2k)/SU(k)", "k >= 3", unconditional, std::nullopt});
  out.push_back({"SU(k+l)/SU(k)xSU(l)", "k, l >= 2", unconditional, std::nullopt});
  out.push_back({"Sp(k)/SU(k)", "k >= 3", unconditional, std::nullopt});
  out.push_back({"E7/E6", "", unconditional, std::nullopt});
  return out;
}

std::optional<ModelData> resolve(std::string_view spec, bool exact_decimals) {
  if (spec == "g2u2") return g2_u2();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view kind = spec.substr(0, colon);
  const auto args = split(spec.substr(colon + 1), ',');
  if (kind == "flag3") {
    if (args.size() != 3) throw InputError("flag3 needs three dimensions, e.g. flag3:4,2,4");
    ModelData m = flag3(parse_dim(args[0]), parse_dim(args[1]), parse_dim(args[2]));
    if (args[0] == "4" && args[1] == "2" && args[2] == "4") m.name = "G2/U(2)";
    return m;
  }
  if (kind == "twosum") {
    if (args.size() != 7) throw InputError("twosum needs d1,d2,zeta1,zeta2,t111,t222,t122");
    TwoSummandParams p;
    p.d1 = parse_dim(args[0]);
    p.d2 = parse_dim(args[1]);
    p.zeta1 = Number::parse(args[2], exact_decimals);
    p.zeta2 = Number::parse(args[3], exact_decimals);
    p.t111 = Number::parse(args[4], exact_decimals);
    p.t222 = Number::parse(args[5], exact_decimals);
    p.t122 = Number::parse(args[6], exact_decimals);
    return two_summand(p);
  }
  return std::nullopt;
}

}  // namespace prc::catalog
