#pragma once

// Command-line driver. Exit codes: 0 success, 1 validation failure,
// 2 malformed input or usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfpar/demo.hpp"
#include "hopfpar/serialize.hpp"

namespace hopfpar::cli {

using io::json;

enum Exit : int { kOk = 0, kFailed = 1, kMalformed = 2 };

struct Result {
  json report;
  bool ok = true;
};

namespace detail {

inline json read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return io::parse_text(text);
  }
  return io::read_file(path);
}

inline json module_summary(const PartialModule& m) { return io::to_json(m); }

inline Result classify(const PartialModule& m) {
  json out;
  if (is_builtin(m, "kC2-dual")) {
    const auto c = classify_dual_c2(m);
    out["hopf"] = "kC2-dual";
    out["n0"] = c.n0;
    out["n1"] = c.n1;
    out["n_half"] = c.n_half;
    out["change_of_basis"] = io::to_json(c.change_of_basis);
  } else if (is_builtin(m, "sweedler")) {
    const auto s = classify_sweedler(m);
    out["hopf"] = "sweedler";
    out["global_part"] = io::to_json(s.global_part);
    out["pure_part"] = io::to_json(s.pure_part);
    out["c"] = io::to_json(s.c);
    out["d"] = io::to_json(s.d);
    out["a"] = io::to_json(s.a);
    out["b"] = io::to_json(s.b);
  } else {
    throw InvalidInput("classify: only kC2-dual and sweedler modules have a classification");
  }
  return {out, true};
}

/// The dilation in the basis adapted to the eigenspace / pure-part structure, when there is one.
inline std::optional<json> adapted_view(const PartialModule& m) {
  if (is_builtin(m, "kC2-dual")) {
    const auto c = classify_dual_c2(m);
    const PartialModule diag = change_basis(m, c.change_of_basis);
    const Dilation d = standard_dilation(diag);
    const BasisView v = in_basis(d, catalog::dual_c2_dilation_basis(d, c.n0, c.n1, c.n_half));
    json out;
    out["basis"] = "V0 + V_half in the p0 slot, then V1 + V_half in the p1 slot";
    out["t"] = io::to_json(v.t);
    json action = json::array();
    for (const auto& a : v.action) action.push_back(io::to_json(a));
    out["action"] = std::move(action);
    return out;
  }
  if (is_builtin(m, "sweedler") && is_pure(m)) {
    const Dilation d = standard_dilation(m);
    const Mat basis = catalog::sweedler_dilation_basis(d);
    if (!basis.is_square() || !inverse(basis)) return std::nullopt;
    const BasisView v = in_basis(d, basis);
    json out;
    out["basis"] = "(w, w') -> phi(w) + g phi(w')";
    out["t"] = io::to_json(v.t);
    json action = json::array();
    for (const auto& a : v.action) action.push_back(io::to_json(a));
    out["action"] = std::move(action);
    return out;
  }
  return std::nullopt;
}

inline Result run_demo(bool all, const std::string& name, std::ostream& table) {
  std::vector<const demo::Demo*> chosen;
  for (const auto& d : demo::registry())
    if (all || d.id == name) chosen.push_back(&d);
  if (chosen.empty()) throw ParseError("unknown demo '" + name + "'");
  json list = json::array();
  bool ok = true;
  for (const auto* d : chosen) {
    const auto o = demo::run_demo(*d);
    ok = ok && o.passed;
    table << (o.passed ? "PASS  " : "FAIL  ") << d->id << "  " << d->title << "\n";
    for (const auto& m : o.mismatches) table << "      " << m << "\n";
    json e;
    e["id"] = d->id;
    e["title"] = d->title;
    e["passed"] = o.passed;
    e["mismatches"] = o.mismatches;
    e["values"] = o.values;
    list.push_back(std::move(e));
  }
  json out;
  out["demos"] = std::move(list);
  if (all) {
    const auto missing = demo::uncovered_ops();
    out["uncovered_ops"] = missing;
    if (!missing.empty()) {
      ok = false;
      table << "FAIL  coverage: " << missing.size() << " operations not exercised\n";
    }
  }
  out["passed"] = ok;
  return {out, ok};
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with partial representations of Hopf algebras", "hopfpar"};
  app.require_subcommand(1);
  std::string input = "-", output, hopf_ref;
  bool all = false;
  std::string demo_name;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input,--input,-i", input, "input JSON file, '-' for standard input");
    sub->add_option("--output,-o", output, "write the report here instead of standard output");
    sub->add_option("--hopf", hopf_ref, "builtin Hopf algebra name or path, for inputs without a 'hopf' field");
  };
  struct Verb {
    const char* name;
    const char* help;
  };
  const std::vector<Verb> verbs = {
      {"validate-hopf", "check the Hopf algebra axioms"},
      {"check-partial", "check the partial representation axioms of a module"},
      {"check-action", "check the partial action axioms of a module algebra"},
      {"core", "largest global submodule"},
      {"shadow", "largest global quotient"},
      {"classify", "structure of a module over kC2-dual or sweedler"},
      {"restrict", "restriction of a globally projected module"},
      {"dilate", "standard dilation of a partial module"},
      {"globalize", "globalization of a partial module algebra"},
      {"smash", "partial and global smash products and the zeta/xi isomorphism"},
      {"morita", "Morita context between the smash products"},
  };
  for (const auto& v : verbs) add_common(app.add_subcommand(v.name, v.help), true);
  CLI::App* demo_cmd = app.add_subcommand("demo", "replay the worked examples");
  demo_cmd->add_flag("--all", all, "run every demo");
  demo_cmd->add_option("--name", demo_name, "run one demo by id");
  demo_cmd->add_option("--output,-o", output, "write the report here instead of standard output");
  CLI::App* list_cmd = app.add_subcommand("list-demos", "print demo ids");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }

  Result result;
  try {
    HopfPtr fallback;
    if (!hopf_ref.empty()) fallback = io::hopf_from(json(hopf_ref));
    auto sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();

    if (sub == list_cmd) {
      for (const auto& d : demo::registry()) out << d.id << "  " << d.title << "\n";
      return kOk;
    }
    if (sub == demo_cmd) {
      if (!all && demo_name.empty()) throw ParseError("demo needs --all or --name <id>");
      result = detail::run_demo(all, demo_name, err);
    } else if (verb == "validate-hopf") {
      HopfAlgebraData data;
      if (sub->count("input") == 0 && fallback) data = fallback->data();
      else data = io::hopf_data_from(detail::read_input(input, in));
      const auto r = validate_hopf(data);
      result.report["dim"] = data.dim;
      result.report["report"] = io::to_json(r);
      result.ok = r.ok();
    } else if (verb == "check-action" || verb == "globalize" || verb == "smash" || verb == "morita") {
      const PartialModuleAlgebra b = io::module_algebra_from(detail::read_input(input, in), fallback);
      if (verb == "check-action") {
        const auto r = check_partial_action(b);
        result.report["dim"] = b.dim();
        result.report["report"] = io::to_json(r);
        result.ok = r.ok();
      } else {
        require_partial_action(b, verb);
        if (verb == "globalize") {
          result.report = io::to_json(globalize(b));
        } else if (verb == "smash") {
          const auto z = zeta_xi(b);
          result.report["partial"] = io::to_json(partial_smash(b));
          result.report["global"] = io::to_json(global_smash(z.glob));
          json zx;
          zx["dilation_dim"] = z.tensor_dilation.projected.module.dim;
          zx["zeta"] = io::to_json(z.zeta);
          zx["xi"] = io::to_json(z.xi);
          zx["summand_rank"] = z.summand_rank;
          zx["report"] = io::to_json(z.report);
          result.report["zeta_xi"] = std::move(zx);
        } else {
          const auto mc = morita_context(b);
          auto& r = result.report;
          r["partial_smash_dim"] = mc.partial.alg.dim;
          r["global_smash_dim"] = mc.global.alg.dim;
          r["P"] = io::to_json(mc.p);
          r["Q"] = io::to_json(mc.q);
          r["tau_rank"] = mc.tau_image.dim();
          r["mu_rank"] = mc.mu_image.dim();
          r["tau_surjective"] = mc.tau_surjective();
          r["mu_surjective"] = mc.mu_surjective();
          r["report"] = io::to_json(mc.report);
          result.ok = mc.tau_surjective() && mc.mu_surjective();
        }
      }
    } else if (verb == "restrict") {
      auto [m, t] = io::projected_from(detail::read_input(input, in), fallback);
      const auto c = check_c_condition(m, t);
      result.report["c_condition"] = c.holds;
      if (!c.holds) {
        result.report["witness"] = *c.witness;
        result.ok = false;
      } else {
        const ProjectedModule p = make_projected(m, t);
        const auto r = restrict(p);
        const auto e = check_equivalence_lemma(p);
        result.report["module"] = io::to_json(r.module);
        result.report["inclusion"] = io::to_json(r.inclusion);
        result.report["c_tilde_condition"] = e.c_tilde_condition;
        result.report["commuting"] = e.commuting;
        result.ok = e.consistent();
      }
    } else {
      const PartialModule m = io::module_from(detail::read_input(input, in), fallback);
      if (verb == "check-partial") {
        const auto r = check_partial_rep(m);
        result.report["dim"] = m.dim;
        result.report["report"] = io::to_json(r);
        if (r.ok()) {
          result.report["global"] = is_global(m);
          result.report["pure"] = is_pure(m);
        }
        result.ok = r.ok();
      } else {
        require_partial(m, verb);
        if (verb == "core") {
          const Subspace core = global_core(m);
          result.report["core"] = io::to_json(core);
          result.report["module"] = io::to_json(submodule(m, core));
        } else if (verb == "shadow") {
          const auto q = global_shadow(m);
          result.report["module"] = io::to_json(q.module);
          result.report["projection"] = io::to_json(q.projection);
        } else if (verb == "classify") {
          result = detail::classify(m);
        } else if (verb == "dilate") {
          const Dilation d = standard_dilation(m);
          result.report = io::dilation_json(d);
          if (auto v = detail::adapted_view(m)) result.report["adapted"] = std::move(*v);
        }
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const InvalidInput& e) {
    result.ok = false;
    result.report = json{{"error", e.what()}};
  } catch (const AxiomViolation& e) {
    result.ok = false;
    result.report = json{{"error", e.what()}};
  }

  result.report["ok"] = result.ok;
  const std::string text = io::dump(result.report);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "error: cannot write " << output << "\n";
      return kMalformed;
    }
    f << text;
  }
  return result.ok ? kOk : kFailed;
}

}  // namespace hopfpar::cli
