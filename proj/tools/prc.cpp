// Command-line front end for the prescribed Ricci curvature library.

#include "prc/catalog.hpp"
#include "prc/chains.hpp"
#include "prc/curvature.hpp"
#include "prc/errors.hpp"
#include "prc/io.hpp"
#include "prc/iteration.hpp"
#include "prc/model.hpp"
#include "prc/solver.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace {

using prc::Number;
using prc::io::Json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Globals {
  bool json = false;
  bool rational = false;
  double tol = 1e-9;
};

prc::ModelData load(const std::string& arg, const Globals& g) {
  if (!std::filesystem::exists(arg)) {
    if (auto m = prc::catalog::resolve(arg, g.rational)) return *m;
    throw prc::InputError("no such model file or catalog alias: '" + arg + "'");
  }
  return prc::io::load_model(arg, g.rational);
}

prc::SpaceModel build(const std::string& arg, const Globals& g) {
  return prc::make_model(load(arg, g), g.tol);
}

std::vector<Number> list_arg(const std::string& text, const prc::SpaceModel& model, const Globals& g,
                             const char* what) {
  auto v = prc::io::parse_list(text, g.rational);
  if (static_cast<int>(v.size()) != model.summands())
    throw prc::InputError(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
                          std::to_string(model.summands()));
  for (const auto& x : v)
    if (x.sign() <= 0) throw prc::InputError(std::string(what) + " entries must be positive");
  return v;
}

std::vector<double> to_doubles(const std::vector<Number>& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

std::string join(const std::vector<double>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << prc::format_double(v[i]);
  return out.str();
}

std::string join(std::span<const Number> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int cmd_validate(const std::string& arg, const Globals& g) {
  const auto data = load(arg, g);
  const auto report = prc::validate(data, g.tol);
  if (g.json) {
    Json out;
    out["valid"] = report.ok();
    out["errors"] = report.errors;
    if (report.model) {
      const auto& m = *report.model;
      out["name"] = m.name();
      out["s"] = m.summands();
      out["dimension"] = m.dimension();
      Json z = Json::array(), b = Json::array();
      for (const auto& v : m.casimir()) z.push_back(prc::io::number_json(v));
      for (const auto& v : m.killing()) b.push_back(prc::io::number_json(v));
      out["casimir"] = std::move(z);
      out["killing"] = std::move(b);
    }
    emit(out);
  } else if (report.ok()) {
    const auto& m = *report.model;
    std::cout << "valid: " << m.name() << " (s = " << m.summands() << ", dim = " << m.dimension() << ")\n"
              << "casimir: " << join(m.casimir()) << "\n"
              << "killing: " << join(m.killing()) << "\n";
  }
  if (!report.ok()) {
    for (const auto& e : report.errors) std::cerr << "error: " << e << "\n";
    return kInputError;
  }
  return kOk;
}

int cmd_subalgebras(const std::string& arg, const Globals& g) {
  const auto model = build(arg, g);
  const auto lattice = prc::enumerate_subalgebras(model);
  const Json out = prc::io::lattice_json(model, lattice);
  if (g.json) {
    emit(out);
    return kOk;
  }
  std::cout << "subalgebras (" << lattice.members.size() << "):";
  for (auto J : lattice.members) std::cout << " " << J.to_string();
  std::cout << "\nhypothesis: " << out["hypothesis"]["status"].get<std::string>()
            << " (inequivalence " << out["hypothesis"]["inequivalence"].get<std::string>() << ", commutator "
            << out["hypothesis"]["commutator"].get<std::string>() << ")\n";
  if (out["always_solvable"].get<bool>())
    std::cout << "solvable for every T (summand " << out["always_solvable_summand"].get<int>() << ")\n";
  return kOk;
}

int cmd_chains(const std::string& arg, const Globals& g) {
  const auto model = build(arg, g);
  const auto chains = prc::enumerate_simple_chains(prc::enumerate_subalgebras(model));
  const Json out = prc::io::chains_json(model, chains);
  if (g.json) {
    emit(out);
    return kOk;
  }
  for (const auto& c : out["chains"]) {
    std::cout << "k = " << c["k"].dump() << "  k' = " << c["kprime"].dump() << "  l = " << c["l"].dump()
              << "  eta = " << (c["eta"].is_null() ? std::string("undefined") : c["eta"].dump()) << "\n";
  }
  if (chains.empty()) std::cout << "no simple chains\n";
  return kOk;
}

int cmd_eta(const std::string& arg, const Globals& g) {
  const auto model = build(arg, g);
  const auto chains = prc::enumerate_simple_chains(prc::enumerate_subalgebras(model));
  const Json out = prc::io::eta_json(model, chains);
  if (g.json) {
    emit(out);
    return kOk;
  }
  for (const auto& c : out["chains"])
    std::cout << "k' = " << c["kprime"].dump() << "  eta = "
              << (c["eta"].is_string() ? c["eta"].get<std::string>() : c["eta"].dump()) << "\n";
  return kOk;
}

int cmd_check(const std::string& arg, const std::string& t_text, bool corollary, const Globals& g) {
  const auto model = build(arg, g);
  const auto lattice = prc::enumerate_subalgebras(model);
  const auto z = list_arg(t_text, model, g, "--T");
  const auto report = corollary ? prc::check_corollary_lambda(model, lattice, z)
                                : prc::check_theorem(model, lattice, z);
  std::optional<prc::TwoSummandCondition> two;
  if (model.summands() == 2 && !corollary) two = prc::two_summand_condition(model, lattice, z);

  if (g.json) {
    Json out = prc::io::condition_json(report);
    if (two) out["two_summand"] = prc::io::two_summand_json(*two);
    emit(out);
  } else {
    for (const auto& c : report.chains)
      std::cout << "chain (" << c.chain.k.to_string() << ", " << c.chain.kprime.to_string() << "): "
                << prc::format_double(c.lhs.to_double()) << " > " << prc::format_double(c.rhs.to_double()) << "  "
                << c.label << "\n";
    if (two && two->kind == prc::TwoSummandCondition::Kind::criterion)
      std::cout << "two summands: z" << two->subalgebra_summand + 1 << "/z" << 2 - two->subalgebra_summand
                << " = " << prc::format_double(two->ratio.to_double()) << " vs threshold "
                << two->threshold.to_string() << "\n";
    if (report.hypothesis_caveat) std::cout << "note: hypothesis not confirmed (inequivalence unknown)\n";
    if (report.pass) {
      std::cout << "pass\n";
    } else {
      const auto& c = report.chains[*report.first_failing];
      std::cout << "fail at chain (" << c.chain.k.to_string() << ", " << c.chain.kprime.to_string() << ")\n";
    }
  }
  return report.pass ? kOk : kFail;
}

int cmd_ricci(const std::string& arg, const std::string& x_text, const Globals& g) {
  const auto model = build(arg, g);
  const auto x = list_arg(x_text, model, g, "--x");
  const auto full = prc::IndexSet::full(model.summands());
  Json out;
  if (model.is_exact() && std::all_of(x.begin(), x.end(), [](const Number& v) { return v.is_exact(); })) {
    std::vector<prc::Rational> xr;
    for (const auto& v : x) xr.push_back(v.exact());
    Json r = Json::array(), grad = Json::array();
    for (const auto& v : prc::ricci<prc::Rational>(model, xr)) r.push_back(prc::io::number_json(Number(v)));
    for (const auto& v : prc::scalar_curvature_gradient<prc::Rational>(model, xr))
      grad.push_back(prc::io::number_json(Number(v)));
    out["ricci"] = std::move(r);
    out["scalar"] = prc::io::number_json(Number(prc::scalar_curvature<prc::Rational>(model, full, xr)));
    out["gradient"] = std::move(grad);
  } else {
    const auto xd = to_doubles(x);
    out["ricci"] = prc::ricci<double>(model, xd);
    out["scalar"] = prc::scalar_curvature<double>(model, full, xd);
    out["gradient"] = prc::scalar_curvature_gradient<double>(model, xd);
  }
  if (g.json) {
    emit(out);
  } else {
    std::cout << "ricci: " << out["ricci"].dump() << "\nscalar: " << out["scalar"].dump()
              << "\ngradient: " << out["gradient"].dump() << "\n";
  }
  return kOk;
}

int cmd_solve(const std::string& arg, const std::string& t_text, std::uint64_t seed, int starts,
              const Globals& g) {
  const auto model = build(arg, g);
  const auto lattice = prc::enumerate_subalgebras(model);
  const auto z = list_arg(t_text, model, g, "--T");
  prc::SolveOptions options;
  options.seed = seed;
  options.starts = starts;
  const auto report = prc::solve_prescribed_ricci(model, lattice, z, options);
  if (g.json) {
    emit(prc::io::solve_json(report));
  } else {
    std::cout << "status: " << prc::to_string(report.status) << "\n";
    if (!report.x.empty()) {
      std::cout << "x: " << join(report.x) << "\nc: " << prc::format_double(report.c)
                << "\nresidual: " << prc::format_double(report.residual) << "\n";
    }
    if (report.theorem)
      std::cout << "sufficient condition: " << (report.theorem->pass ? "pass" : "fail") << "\n";
    if (!report.diagnostic.empty()) std::cout << "note: " << report.diagnostic << "\n";
  }
  return report.status == prc::SolveStatus::solved ? kOk : kFail;
}

int cmd_iterate(const std::string& arg, const std::string& start_text, int steps, std::uint64_t seed,
                const Globals& g) {
  const auto model = build(arg, g);
  const auto lattice = prc::enumerate_subalgebras(model);
  const auto start = to_doubles(list_arg(start_text, model, g, "--start"));
  prc::SolveOptions options;
  options.seed = seed;
  const auto trace = prc::ricci_iterate(model, lattice, start, steps, options);
  for (const auto& s : trace.steps) {
    if (g.json) {
      emit(prc::io::step_json(s));
    } else {
      std::cout << "step " << s.index << ": " << prc::to_string(s.status) << "  c = " << prc::format_double(s.c)
                << "  next = (" << join(s.next) << ")  residual = " << prc::format_double(s.residual) << "\n";
    }
  }
  if (!trace.complete) {
    std::cerr << "iteration stopped: " << trace.stop_reason << "\n";
    return kFail;
  }
  return kOk;
}

int cmd_catalog(const std::vector<std::string>& args, const Globals& g) {
  if (args.empty()) {
    const auto list = prc::catalog::entries();
    if (g.json) {
      Json out = Json::array();
      for (const auto& e : list) {
        Json entry;
        entry["name"] = e.name;
        entry["parameters"] = e.parameters;
        entry["note"] = e.note;
        entry["generated"] = e.data.has_value();
        out.push_back(std::move(entry));
      }
      emit(out);
    } else {
      for (const auto& e : list) std::cout << e.name << "  [" << e.parameters << "]  " << e.note << "\n";
    }
    return kOk;
  }
  std::string alias = args[0];
  if (args.size() > 1) {
    alias += ":";
    for (std::size_t i = 1; i < args.size(); ++i) alias += (i > 1 ? "," : "") + args[i];
  }
  const auto data = prc::catalog::resolve(alias, g.rational);
  if (!data) throw prc::InputError("unknown catalog entry '" + args[0] + "'");
  prc::make_model(*data, g.tol);
  std::cout << prc::io::serialize_model(*data);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prescribed Ricci curvature on homogeneous spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_flag("--rational", g.rational, "Read decimals as exact rationals");
  app.add_option("--tol", g.tol, "Tolerance for the Casimir consistency check")->check(CLI::PositiveNumber);

  std::string model, t_text, x_text, start_text;
  bool corollary = false;
  std::uint64_t seed = 1;
  int starts = 16, steps = 1;
  std::vector<std::string> catalog_args;
  int code = kOk;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check a model and print derived coefficients");
  validate->add_option("model", model, "Model file or catalog alias")->required();
  validate->callback([&] { action = [&] { return cmd_validate(model, g); }; });

  auto* subalgebras = app.add_subcommand("subalgebras", "List subalgebras containing h and the hypothesis verdict");
  subalgebras->add_option("model", model)->required();
  subalgebras->callback([&] { action = [&] { return cmd_subalgebras(model, g); }; });

  auto* chains = app.add_subcommand("chains", "List simple chains with their eta values");
  chains->add_option("model", model)->required();
  chains->callback([&] { action = [&] { return cmd_chains(model, g); }; });

  auto* eta = app.add_subcommand("eta", "Print eta for every simple chain");
  eta->add_option("model", model)->required();
  eta->callback([&] { action = [&] { return cmd_eta(model, g); }; });

  auto* check = app.add_subcommand("check", "Evaluate the sufficient condition for T");
  check->add_option("model", model)->required();
  check->add_option("--T", t_text, "Comma-separated coefficients of T")->required();
  check->add_flag("--corollary", corollary, "Use the eigenvalue-ratio form");
  check->callback([&] { action = [&] { return cmd_check(model, t_text, corollary, g); }; });

  auto* ricci = app.add_subcommand("ricci", "Ricci coefficients, scalar curvature and gradient at x");
  ricci->add_option("model", model)->required();
  ricci->add_option("--x", x_text, "Comma-separated metric coefficients")->required();
  ricci->callback([&] { action = [&] { return cmd_ricci(model, x_text, g); }; });

  auto* solve = app.add_subcommand("solve", "Solve Ric g = cT");
  solve->add_option("model", model)->required();
  solve->add_option("--T", t_text, "Comma-separated coefficients of T")->required();
  solve->add_option("--seed", seed, "Multistart seed");
  solve->add_option("--starts", starts, "Number of optimizer starts")->check(CLI::PositiveNumber);
  solve->callback([&] { action = [&] { return cmd_solve(model, t_text, seed, starts, g); }; });

  auto* iterate = app.add_subcommand("iterate", "Run the Ricci iteration");
  iterate->add_option("model", model)->required();
  iterate->add_option("--start", start_text, "Comma-separated starting metric")->required();
  iterate->add_option("--steps", steps, "Number of steps")->required()->check(CLI::PositiveNumber);
  iterate->add_option("--seed", seed, "Multistart seed");
  iterate->callback([&] { action = [&] { return cmd_iterate(model, start_text, steps, seed, g); }; });

  auto* catalog = app.add_subcommand("catalog", "List or generate catalog models");
  catalog->add_option("entry", catalog_args, "flag3 d1 d2 d3 | twosum d1 d2 zeta1 zeta2 t111 t222 t122 | g2u2");
  catalog->callback([&] { action = [&] { return cmd_catalog(catalog_args, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    code = action();
  } catch (const prc::HypothesisError& e) {
    std::cerr << "hypothesis: " << e.what() << "\n";
    return kFail;
  } catch (const prc::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const prc::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return code;
}
