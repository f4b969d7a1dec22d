#include "prc/model.hpp"

#include "prc/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace prc {

namespace {

std::string at(int i) { return " at i=" + std::to_string(i + 1); }

bool negative(const Number& v, double tol) {
  return v.is_exact() ? v.sign() < 0 : v.to_double() < -tol;
}

}  // namespace

int SpaceModel::dimension(IndexSet J) const {
  int n = 0;
  for (int i : J.members()) n += dim(i);
  return n;
}

ValidationReport validate(const ModelData& data, double tol) {
  ValidationReport report;
  auto& errors = report.errors;
  const int s = data.s;

  if (s < 1) errors.push_back("s must be at least 1");
  if (s > kMaxSummands)
    errors.push_back("s = " + std::to_string(s) + " exceeds the supported maximum of " +
                     std::to_string(kMaxSummands));
  if (static_cast<int>(data.dims.size()) != s)
    errors.push_back("dims has " + std::to_string(data.dims.size()) + " entries, expected s = " +
                     std::to_string(s));
  if (!errors.empty()) return report;

  int n = 0;
  for (int i = 0; i < s; ++i) {
    if (data.dims[i] < 1) errors.push_back("dimension d must be positive" + at(i));
    n += data.dims[i];
  }
  if (n < 3) errors.push_back("dim M = " + std::to_string(n) + " is below 3");

  if (!data.casimir && !data.killing) errors.push_back("neither casimir nor killing given");
  auto check_length = [&](const std::optional<std::vector<Number>>& v, const char* what) {
    if (v && static_cast<int>(v->size()) != s) {
      errors.push_back(std::string(what) + " has " + std::to_string(v->size()) +
                       " entries, expected s = " + std::to_string(s));
      return false;
    }
    return true;
  };
  bool lengths_ok = check_length(data.casimir, "casimir");
  lengths_ok = check_length(data.killing, "killing") && lengths_ok;
  if (data.casimir && lengths_ok)
    for (int i = 0; i < s; ++i)
      if ((*data.casimir)[i].sign() < 0) errors.push_back("casimir eigenvalue is negative" + at(i));
  if (data.killing && lengths_ok)
    for (int i = 0; i < s; ++i)
      if ((*data.killing)[i].sign() < 0) errors.push_back("killing coefficient is negative" + at(i));

  SpaceModel model;
  model.s_ = s;
  model.dimension_ = n;
  model.dense_.assign(static_cast<std::size_t>(s) * s * s, Number(0));

  std::set<std::array<int, 3>> seen;
  for (const Triple& t : data.triples) {
    const auto [i, j, k] = t.idx;
    std::ostringstream label;
    label << "[" << i + 1 << j + 1 << k + 1 << "]";
    if (std::min({i, j, k}) < 0 || std::max({i, j, k}) >= s) {
      errors.push_back("triple " + label.str() + " has an index outside 1.." + std::to_string(s));
      continue;
    }
    if (!(i <= j && j <= k)) {
      errors.push_back("triple " + label.str() + " is not in canonical order i<=j<=k");
      continue;
    }
    if (!seen.insert(t.idx).second) {
      errors.push_back("duplicate triple " + label.str());
      continue;
    }
    if (t.value.sign() < 0) {
      errors.push_back("structure constant " + label.str() + " is negative");
      continue;
    }
    std::array<int, 3> p = t.idx;
    do {
      model.dense_[(p[0] * s + p[1]) * s + p[2]] = t.value;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  if (!errors.empty() || !lengths_ok) return report;

  model.bracket_sum_.assign(s, Number(0));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < s; ++k) model.bracket_sum_[i] += model.triple(i, j, k);

  model.casimir_.resize(s);
  model.killing_.resize(s);
  for (int i = 0; i < s; ++i) {
    const Number d = data.dims[i];
    const Number& sum = model.bracket_sum_[i];
    if (data.casimir && data.killing) {
      const Number& zeta = (*data.casimir)[i];
      const Number& b = (*data.killing)[i];
      const Number residual = d * b - Number(2) * d * zeta - sum;
      if (!residual.near_zero(tol))
        errors.push_back("Casimir residual" + at(i) + ": d b - 2 d zeta - sum[ijk] = " +
                         residual.to_string());
      model.casimir_[i] = zeta;
      model.killing_[i] = b;
    } else if (data.killing) {
      const Number& b = (*data.killing)[i];
      Number zeta = (d * b - sum) / (Number(2) * d);
      if (negative(zeta, tol)) {
        errors.push_back("derived casimir eigenvalue is negative" + at(i) + ": " + zeta.to_string());
      } else if (zeta.sign() < 0) {
        zeta = Number(0.0);
      }
      model.casimir_[i] = zeta;
      model.killing_[i] = b;
    } else {
      const Number& zeta = (*data.casimir)[i];
      model.casimir_[i] = zeta;
      model.killing_[i] = Number(2) * zeta + sum / d;
    }
  }
  if (!errors.empty()) return report;

  model.exact_ = true;
  for (const auto* v : {&model.casimir_, &model.killing_, &model.dense_})
    for (const Number& x : *v) model.exact_ = model.exact_ && x.is_exact();

  model.dense_d_.resize(model.dense_.size());
  std::transform(model.dense_.begin(), model.dense_.end(), model.dense_d_.begin(),
                 [](const Number& x) { return x.to_double(); });

  for (const Triple& t : data.triples) {
    if (t.value.is_zero()) continue;
    model.nonzero_.push_back(t);
    std::array<int, 3> p = t.idx;
    do {
      model.ordered_.push_back({p[0], p[1], p[2], t.value.to_double()});
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::sort(model.nonzero_.begin(), model.nonzero_.end(),
            [](const Triple& a, const Triple& b) { return a.idx < b.idx; });

  model.source_ = data;
  report.model = std::move(model);
  return report;
}

SpaceModel make_model(const ModelData& data, double tol) {
  ValidationReport report = validate(data, tol);
  if (!report.ok()) {
    std::string message = "invalid model '" + data.name + "':";
    for (const auto& e : report.errors) message += "\n  " + e;
    throw InputError(message);
  }
  return std::move(*report.model);
}

bool SubalgebraLattice::contains(IndexSet J) const {
  return std::find(members.begin(), members.end(), J) != members.end();
}

std::vector<IndexSet> SubalgebraLattice::proper_nontrivial() const {
  std::vector<IndexSet> out;
  for (IndexSet J : members)
    if (!J.empty() && J != IndexSet::full(s)) out.push_back(J);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

HypothesisVerdict check_hypothesis(const SpaceModel& model, const SubalgebraLattice& lattice,
                                   double tol) {
  HypothesisVerdict verdict;
  verdict.inequivalence = model.pairwise_inequivalent() ? Verdict::satisfied : Verdict::unknown;
  verdict.commutator = Verdict::satisfied;
  const int s = model.summands();

  for (IndexSet J : lattice.proper_nontrivial()) {
    for (int j : J.complement(s).members()) {
      if (model.dim(j) != 1) continue;
      if (!model.casimir(j).near_zero(tol)) continue;  // [m_j, h] != 0
      bool brackets = false;
      for (int k : J.members())
        for (int l = 0; l < s && !brackets; ++l) brackets = !model.triple(j, k, l).is_zero();
      if (brackets) continue;
      verdict.commutator = Verdict::violated;
      verdict.violating_subalgebra = J;
      verdict.violating_summand = j;
      verdict.status = Verdict::violated;
      return verdict;
    }
  }
  verdict.status = verdict.inequivalence;
  return verdict;
}

std::optional<int> always_solvable_summand(const SpaceModel& model, const SubalgebraLattice& lattice,
                                           double tol) {
  std::optional<int> trivial;
  for (int i = 0; i < model.summands(); ++i) {
    if (!model.casimir(i).near_zero(tol)) continue;
    if (trivial) return std::nullopt;
    trivial = i;
  }
  if (!trivial || model.dim(*trivial) != 1) return std::nullopt;
  const auto proper = lattice.proper_nontrivial();
  if (proper.size() != 1 || proper.front() != IndexSet::of({*trivial})) return std::nullopt;
  return trivial;
}

}  // namespace prc
