// kht — batch front end for the finite compact-Hausdorff tripos model.
//
// Subcommands:
//   check      run the law suites against generated instances and a model
//   eval       evaluate a formula or a sequent in a context
//   power      build the weak power object of a space
//   delta      compute the equality predicate of a space
//   compactify one-point compactification of a space
//
// Exit codes: 0 success (laws hold / sequent holds), 1 violation or failed
// sequent, 2 input error (file, schema, parse, type).

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "kht/checks.hpp"
#include "kht/enumerate.hpp"
#include "kht/errors.hpp"
#include "kht/eval.hpp"
#include "kht/model.hpp"
#include "kht/power.hpp"
#include "kht/report.hpp"

namespace {

struct CommonOpts {
  std::string model_path;
  std::string format = "text";
  kht::CheckOptions check;
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_model = true) {
  if (with_model)
    cmd->add_option("--model", opts.model_path, "model file (JSON)");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

kht::Model load_or_empty(const CommonOpts& opts) {
  if (opts.model_path.empty()) return {};
  return kht::load_model(opts.model_path);
}

kht::SpaceRef require_space(const kht::Model& model, const std::string& name) {
  kht::SpaceRef space = model.find_space(name);
  if (!space)
    kht::fail(kht::Errc::unknown_space,
              "space '" + name + "' is not declared in the model");
  return space;
}

std::string predicate_text(const kht::Predicate& p) {
  if (p.space()->size() != 0 && p.is_full()) return "top";
  if (p.is_empty()) return p.space()->size() == 0 ? "top" : "bottom";
  return p.describe();
}

int cmd_check(const CommonOpts& opts) {
  kht::Model model = load_or_empty(opts);
  auto results = kht::run_all_checks(opts.model_path.empty() ? nullptr : &model, opts.check);
  if (opts.json())
    std::cout << kht::render_json(results).dump(2) << "\n";
  else
    std::cout << kht::render_text(results);
  return kht::all_pass(results) ? 0 : 1;
}

int cmd_eval(const CommonOpts& opts, const std::string& expr, const std::string& sequent,
             const std::string& context) {
  kht::Model model = load_or_empty(opts);
  kht::Interp interp(model, opts.check.limits);
  if (!sequent.empty()) {
    kht::SequentResult r = kht::eval_sequent_text(sequent, context, interp);
    if (opts.json()) {
      nlohmann::json j;
      j["holds"] = r.holds;
      if (!r.holds) j["counterexample"] = r.counterexample_label;
      std::cout << j.dump(2) << "\n";
    } else if (r.holds) {
      std::cout << "holds\n";
    } else {
      std::cout << "fails at " << r.counterexample_label << "\n";
    }
    return r.holds ? 0 : 1;
  }
  kht::Predicate p = kht::eval_text(expr, context, interp);
  if (opts.json()) {
    nlohmann::json j = kht::predicate_to_json(p);
    j["value"] = predicate_text(p);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << predicate_text(p) << "\n";
  }
  return 0;
}

int cmd_power(const CommonOpts& opts, const std::string& space_name, bool verify) {
  kht::Model model = load_or_empty(opts);
  kht::SpaceRef a = require_space(model, space_name);
  kht::PowerObjectBundle pa = kht::power_object(a, opts.check.limits);
  bool co_ok = true;
  if (verify) co_ok = kht::compact_open_is_discrete(a, opts.check.limits);
  if (opts.json()) {
    nlohmann::json j;
    j["base"] = a->name();
    j["two_power"] = pa.function_space->size();
    j["power"] = pa.power()->size();
    j["infinity_index"] = pa.infinity_index();
    j["membership"] = kht::predicate_to_json(pa.membership);
    nlohmann::json points = nlohmann::json::array();
    for (std::size_t i = 0; i < pa.power()->size(); ++i)
      points.push_back(kht::power_point_to_json(i, pa.infinity_index()));
    j["points"] = std::move(points);
    if (verify) j["compact_open_discrete"] = co_ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "base: " << a->name() << " (" << a->size() << " points)\n";
    std::cout << "2^" << a->name() << ": " << pa.function_space->size() << " points\n";
    std::cout << "P(" << a->name() << "): " << pa.power()->size()
              << " points, infinity index " << pa.infinity_index() << "\n";
    std::cout << "membership: " << pa.membership.extent().count() << " pairs "
              << pa.membership.describe() << "\n";
    if (verify)
      std::cout << "compact-open recomputation: "
                << (co_ok ? "discrete" : "NOT DISCRETE") << "\n";
  }
  return co_ok ? 0 : 1;
}

int cmd_delta(const CommonOpts& opts, const std::string& space_name) {
  kht::Model model = load_or_empty(opts);
  kht::SpaceRef x = require_space(model, space_name);
  kht::Predicate delta = kht::equality_predicate(x, opts.check.limits);
  if (opts.json()) {
    std::cout << kht::predicate_to_json(delta).dump(2) << "\n";
  } else {
    std::cout << "delta(" << x->name() << ") on " << delta.space()->name() << ": "
              << delta.describe() << "\n";
  }
  return 0;
}

int cmd_compactify(const CommonOpts& opts, const std::string& space_name) {
  kht::Model model = load_or_empty(opts);
  kht::SpaceRef b = require_space(model, space_name);
  kht::Compactification c = kht::alexandroff(b);
  if (opts.json()) {
    std::cout << kht::space_to_json(*c.space, opts.check.limits).dump(2) << "\n";
  } else {
    std::cout << c.space->name() << ": " << c.space->size() << " points, infinity index "
              << c.infinity_index << "\n";
    if (c.space->is_discrete()) {
      std::cout << "discrete\n";
    } else {
      for (const kht::Bits& o : c.space->opens(opts.check.limits.family_cap))
        std::cout << "open " << c.space->format_subset(o) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite compact-Hausdorff tripos model"};
  app.require_subcommand(1);

  CommonOpts check_opts;
  auto* check = app.add_subcommand("check", "run the law suites");
  add_common(check, check_opts);
  check->add_option("--max-size", check_opts.check.max_size,
                    "size bound for randomized checking")
      ->capture_default_str();
  check->add_option("--seed", check_opts.check.seed, "PRNG seed")->capture_default_str();
  check->add_option("--law", check_opts.check.law_filter, "run only laws matching substring");
  check->add_flag("--verify-compact-open", check_opts.check.verify_compact_open,
                  "recompute the compact-open topology on 2^A");
  check->add_flag("--mutate-forall", check_opts.check.mutate_forall,
                  "self-test: run with the universal quantifier replaced by the direct image")
      ->group("");

  CommonOpts eval_opts;
  std::string expr, sequent, context;
  auto* eval = app.add_subcommand("eval", "evaluate a formula or sequent");
  add_common(eval, eval_opts);
  eval->add_option("-e,--expr", expr, "formula to evaluate");
  eval->add_option("--sequent", sequent, "sequent \"phi |- psi\"");
  eval->add_option("--context", context, "context declaration, e.g. \"x : X, s : P(X)\"");

  CommonOpts power_opts;
  std::string power_space;
  bool power_verify = false;
  auto* power = app.add_subcommand("power", "build a weak power object");
  add_common(power, power_opts);
  power->add_option("--space", power_space, "base space name")->required();
  power->add_flag("--verify-compact-open", power_verify,
                  "recompute the compact-open topology on 2^A");

  CommonOpts delta_opts;
  std::string delta_space;
  auto* delta = app.add_subcommand("delta", "compute the equality predicate");
  add_common(delta, delta_opts);
  delta->add_option("--space", delta_space, "space name")->required();

  CommonOpts compact_opts;
  std::string compact_space;
  auto* compactify = app.add_subcommand("compactify", "one-point compactification");
  add_common(compactify, compact_opts);
  compactify->add_option("--space", compact_space, "space name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(check_opts);
    if (eval->parsed()) {
      if (expr.empty() == sequent.empty()) {
        std::cerr << "error: eval needs exactly one of --expr or --sequent\n";
        return 2;
      }
      return cmd_eval(eval_opts, expr, sequent, context);
    }
    if (power->parsed()) return cmd_power(power_opts, power_space, power_verify);
    if (delta->parsed()) return cmd_delta(delta_opts, delta_space);
    if (compactify->parsed()) return cmd_compactify(compact_opts, compact_space);
  } catch (const kht::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
