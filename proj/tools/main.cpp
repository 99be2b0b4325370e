// homcalc command line: validates and runs workspace documents, computes
// hom-connections, curvature and homology, performs inductions and the
// duality translations, evaluates the q-deformed Laurent calculus, and
// generates the builtin example objects.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "homcalc.hpp"

namespace {

using homcalc::json;

json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw homcalc::ParseError("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    throw homcalc::ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw homcalc::ParseError("cannot open output file: " + output);
  out << text;
}

unsigned long parse_digits(const std::string& s, const char* what) {
  if (s.empty()) throw homcalc::ParseError(std::string("missing ") + what);
  for (char c : s)
    if (c < '0' || c > '9') throw homcalc::ParseError(std::string("bad ") + what + ": " + s);
  return std::stoul(s);
}

json parse_field_flag(const std::string& field) {
  if (field == "Q") return json("Q");
  if (field.rfind("Fp:", 0) == 0) {
    json f;
    f["Fp"] = parse_digits(field.substr(3), "prime-field modulus");
    return f;
  }
  throw homcalc::ParseError("unknown field descriptor (use Q or Fp:<p>): " + field);
}

struct CommonArgs {
  std::string input;
  std::string output;
  std::string field = "Q";
  std::uint64_t seed = 20080131;
};

int run_tasks(const CommonArgs& common, const std::vector<json>& tasks) {
  json doc = common.input.empty() ? json{{"field", parse_field_flag(common.field)}}
                                  : load_input(common.input);
  if (!tasks.empty()) doc["tasks"] = tasks;
  else if (!doc.contains("tasks")) doc["tasks"] = json::array();
  auto result = homcalc::run_document(doc, common.seed);
  emit(result.report, common.output);
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homcalc: hom-connections on differential graded algebras, exactly"};
  app.require_subcommand(1);

  CommonArgs common;
  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    auto* opt = cmd->add_option("--input", common.input, "workspace document (JSON)");
    if (needs_input) opt->required();
    cmd->add_option("--output", common.output, "write the report here instead of stdout");
    cmd->add_option("--field", common.field, "scalar field for inputless commands: Q or Fp:<p>");
    cmd->add_option("--seed", common.seed, "seed for randomized identity checks");
  };

  auto* cmd_run = app.add_subcommand("run", "execute the task list of a workspace document");
  add_common(cmd_run, true);

  std::string target = "all";
  auto* cmd_validate = app.add_subcommand("validate", "validate named objects");
  add_common(cmd_validate, true);
  cmd_validate->add_option("--target", target, "object name (default: all)");

  std::string calculus, module, connection = "any", coring, map, via, degree = "all";
  std::size_t truncation = 3;
  bool xi_check = false, theta_check = false, transfer_check = false, transport_check = false;

  auto* cmd_solve = app.add_subcommand("solve", "solve the affine space of hom-connections");
  add_common(cmd_solve, true);
  cmd_solve->add_option("--calculus", calculus)->required();
  cmd_solve->add_option("--module", module)->required();
  cmd_solve->add_flag("--xi-check", xi_check, "verify the xi-family identities");

  auto* cmd_curv = app.add_subcommand("curvature", "curvature of a hom-connection");
  add_common(cmd_curv, true);
  cmd_curv->add_option("--calculus", calculus)->required();
  cmd_curv->add_option("--module", module)->required();
  cmd_curv->add_option("--connection", connection, "any | inner");
  cmd_curv->add_flag("--theta-check", theta_check, "verify the curvature factorization");

  auto* cmd_hom = app.add_subcommand("homology", "homology of a flat hom-connection, or "
                                                 "cohomology of a calculus when no module is given");
  add_common(cmd_hom, true);
  cmd_hom->add_option("--calculus", calculus)->required();
  cmd_hom->add_option("--module", module);
  cmd_hom->add_option("--connection", connection, "any | inner");
  cmd_hom->add_option("--degree", degree, "degree, or 'all'");

  auto* cmd_induce = app.add_subcommand("induce", "induce a hom-connection");
  add_common(cmd_induce, true);
  cmd_induce->add_option("--via", via, "dga-map | bimodule | left-connection")->required();
  cmd_induce->add_option("--map", map)->required();
  cmd_induce->add_option("--module", module)->required();
  cmd_induce->add_option("--connection", connection, "any | inner");
  cmd_induce->add_flag("--transfer-check", transfer_check, "verify curvature transfer (dga-map)");
  cmd_induce->add_flag("--transport-check", transport_check,
                       "verify higher-form transport (left-connection)");

  auto* cmd_dual = app.add_subcommand("dualize", "translate into the dual-coalgebra picture");
  add_common(cmd_dual, true);
  cmd_dual->add_option("--calculus", calculus)->required();
  cmd_dual->add_option("--module", module)->required();
  cmd_dual->add_option("--connection", connection, "any | inner");

  auto* cmd_contra = app.add_subcommand("contra", "contramodule of a hom-connection over a "
                                                  "coring's calculus");
  add_common(cmd_contra, true);
  cmd_contra->add_option("--coring", coring)->required();
  cmd_contra->add_option("--module", module)->required();
  cmd_contra->add_option("--connection", connection, "any | inner");
  cmd_contra->add_option("--truncation", truncation, "truncation of the generated calculus");

  std::string action, q_str, f_str, a_str, m_str, gamma_str;
  std::size_t trials = 100;
  auto* cmd_laurent = app.add_subcommand("laurent", "q-deformed Laurent polynomial calculus");
  add_common(cmd_laurent, false);
  cmd_laurent->add_option("--action", action, "jackson | scale | apply | inner | commutation | classify")
      ->required();
  cmd_laurent->add_option("--q", q_str, "deformation parameter")->required();
  cmd_laurent->add_option("--f", f_str, "polynomial argument, e.g. \"3/2*u^-1 + u^2\"");
  cmd_laurent->add_option("--a", a_str, "classifying element");
  cmd_laurent->add_option("--m", m_str, "module element");
  cmd_laurent->add_option("--gamma", gamma_str, "substitution scale");
  cmd_laurent->add_option("--trials", trials, "random trials for classify");

  std::vector<std::string> gen_args;
  auto* cmd_gen = app.add_subcommand("gen", "emit a builtin object document");
  add_common(cmd_gen, false);
  cmd_gen->add_option("spec", gen_args,
                      "builtin and parameters: matrix-algebra n | group-algebra Z/n | "
                      "product-field m | dual-numbers | sweedler-coring <algebra> | "
                      "trivial-coring <algebra> | universal-calculus <algebra> D")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (cmd_run->parsed()) return run_tasks(common, {});
    if (cmd_validate->parsed())
      return run_tasks(common, {json{{"op", "validate"}, {"target", target}}});
    if (cmd_solve->parsed())
      return run_tasks(common, {json{{"op", "solve"},
                                     {"calculus", calculus},
                                     {"module", module},
                                     {"xi_check", xi_check}}});
    if (cmd_curv->parsed())
      return run_tasks(common, {json{{"op", "curvature"},
                                     {"calculus", calculus},
                                     {"module", module},
                                     {"connection", connection},
                                     {"theta_check", theta_check}}});
    if (cmd_hom->parsed()) {
      json task{{"op", "homology"}, {"calculus", calculus}};
      if (!module.empty()) {
        task["module"] = module;
        task["connection"] = connection;
      }
      task["degree"] = degree == "all" ? json("all") : json(parse_digits(degree, "degree"));
      return run_tasks(common, {task});
    }
    if (cmd_induce->parsed()) {
      json task{{"op", "induce"}, {"via", via}, {"map", map}, {"module", module},
                {"connection", connection}};
      if (transfer_check) task["transfer_check"] = true;
      if (transport_check) task["transport_check"] = true;
      return run_tasks(common, {task});
    }
    if (cmd_dual->parsed())
      return run_tasks(common, {json{{"op", "dualize"},
                                     {"calculus", calculus},
                                     {"module", module},
                                     {"connection", connection}}});
    if (cmd_contra->parsed())
      return run_tasks(common, {json{{"op", "contra"},
                                     {"coring", coring},
                                     {"module", module},
                                     {"connection", connection},
                                     {"truncation", truncation}}});
    if (cmd_laurent->parsed()) {
      json task{{"op", "laurent"}, {"action", action}, {"q", q_str}};
      if (!f_str.empty()) task["f"] = f_str;
      if (!a_str.empty()) task["a"] = a_str;
      if (!m_str.empty()) task["m"] = m_str;
      if (!gamma_str.empty()) task["gamma"] = gamma_str;
      if (action == "classify") {
        task["trials"] = trials;
        task["seed"] = common.seed;
      }
      return run_tasks(common, {task});
    }
    if (cmd_gen->parsed()) {
      const json doc = homcalc::generate_builtin(gen_args, parse_field_flag(common.field));
      emit(doc.dump(2) + "\n", common.output);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return homcalc::exit_code_for(e);
  }
  return 0;
}
