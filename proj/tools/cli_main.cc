// Command-line front end. Exit codes: 0 success/accept, 1 check failed or
// countermodel found nothing, 2 malformed input. --json switches the report
// to a single JSON object on stdout; exit codes are unchanged.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "intck/bridges.hh"
#include "intck/calculus.hh"
#include "intck/fosem.hh"
#include "intck/models.hh"
#include "intck/syntax.hh"
#include "intck/translate.hh"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Formulas on the command line may come from either dialect. The conditional
// dialect is tried first; its diagnostic wins when both parses fail.
intck::Formula parse_any(const std::string& text) {
  try {
    return intck::parse(intck::Dialect::Cond, text);
  } catch (const intck::ParseError&) {
    try {
      return intck::parse(intck::Dialect::Modal, text);
    } catch (const intck::ParseError&) {
    }
    throw;
  }
}

intck::ModelClass class_of(const std::string& name) {
  return name == "weiss" ? intck::ModelClass::Weiss : intck::ModelClass::Chellas;
}

json violations_json(const intck::ValidationReport& rep) {
  json arr = json::array();
  for (const auto& v : rep.violations)
    arr.push_back({{"condition", v.condition}, {"witness", v.witness}, {"message", v.message}});
  return arr;
}

void print_violations(const intck::ValidationReport& rep) {
  for (const auto& v : rep.violations)
    std::cout << "VIOLATION " << v.condition << " " << v.witness << ": " << v.message << "\n";
}

struct Options {
  bool json = false;
  std::string formula;
  std::string model_path, model2_path, sheaf_path, proof_path;
  std::string mode = "int";
  std::string world;
  std::string cls = "chellas";
  std::string vars = "p,q";
  std::string target, bridge;
  bool do_tr = false, do_untr = false, do_erase = false;
  std::string st_var;
  int max_worlds = 3;
  long budget = 1000;
  uint64_t seed = 0;
};

int run_fmt(const Options& opt) {
  intck::Formula f = parse_any(opt.formula);
  if (opt.json)
    std::cout << json{{"formula", intck::print(f)}}.dump(2) << "\n";
  else
    std::cout << intck::print(f) << "\n";
  return 0;
}

int run_eval(const Options& opt) {
  intck::Model m = intck::model_from_json(read_file(opt.model_path));
  intck::Formula f = parse_any(opt.formula);
  intck::EvalMode mode = opt.mode == "weiss" ? intck::EvalMode::Weiss : intck::EvalMode::Int;
  bool value = intck::eval(m, mode, opt.world, f);
  if (opt.json)
    std::cout << json{{"value", value}}.dump(2) << "\n";
  else
    std::cout << (value ? "true" : "false") << "\n";
  return 0;
}

int run_validate_model(const Options& opt) {
  intck::Model m = intck::model_from_json(read_file(opt.model_path));
  intck::ValidationReport rep = intck::validate(m, class_of(opt.cls));
  if (opt.json)
    std::cout << json{{"ok", rep.ok()}, {"violations", violations_json(rep)}}.dump(2) << "\n";
  else if (rep.ok())
    std::cout << "OK\n";
  else
    print_violations(rep);
  return rep.ok() ? 0 : 1;
}

int run_check_proof(const Options& opt) {
  intck::ProofScript script = intck::parse_proof(read_file(opt.proof_path));
  intck::Verdict v = intck::check(script);
  if (opt.json) {
    json out{{"ok", v.ok}};
    if (v.ok)
      out["conclusion"] = intck::print(script.conclusion());
    else {
      out["line"] = v.line;
      out["reason"] = v.reason;
    }
    std::cout << out.dump(2) << "\n";
  } else if (v.ok) {
    std::cout << "ACCEPT " << intck::print(script.conclusion()) << "\n";
  } else {
    std::cout << "REJECT line " << v.line << ": " << v.reason << "\n";
  }
  return v.ok ? 0 : 1;
}

int run_check_corpus(const Options& opt) {
  intck::CorpusReport rep = intck::verify_corpus();
  if (opt.json) {
    json items = json::array();
    for (const auto& [name, v] : rep.entries) {
      json item{{"name", name}, {"ok", v.ok}};
      if (!v.ok) {
        item["line"] = v.line;
        item["reason"] = v.reason;
      }
      items.push_back(item);
    }
    std::cout << json{{"ok", rep.all_ok}, {"items", items}}.dump(2) << "\n";
  } else {
    for (const auto& [name, v] : rep.entries) {
      if (v.ok)
        std::cout << "ACCEPT " << name << "\n";
      else
        std::cout << "REJECT " << name << " line " << v.line << ": " << v.reason << "\n";
    }
  }
  return rep.all_ok ? 0 : 1;
}

int run_translate(const Options& opt) {
  std::string out;
  if (opt.do_tr) {
    out = intck::print(intck::tr(intck::parse(intck::Dialect::Modal, opt.formula)));
  } else {
    intck::Formula f = intck::parse(intck::Dialect::Cond, opt.formula);
    if (opt.do_untr)
      out = intck::print(intck::untr(f));
    else if (opt.do_erase)
      out = intck::print(intck::project_to_int(f));
    else
      out = intck::fo_print(intck::st(opt.st_var, f));
  }
  if (opt.json)
    std::cout << json{{"result", out}}.dump(2) << "\n";
  else
    std::cout << out << "\n";
  return 0;
}

int run_countermodel(const Options& opt) {
  intck::Formula f = parse_any(opt.formula);
  intck::SearchParams params;
  params.cls = class_of(opt.cls);
  params.max_worlds = opt.max_worlds;
  params.budget = opt.budget;
  params.seed = opt.seed;
  auto found = intck::countermodel_search(f, params);
  if (opt.json) {
    json out{{"found", found.has_value()}};
    if (found) out["witness"] = json::parse(intck::pointed_to_json(*found));
    std::cout << out.dump(2) << "\n";
  } else if (found) {
    std::cout << intck::pointed_to_json(*found) << "\n";
  } else {
    std::cerr << "no countermodel found within budget\n";
  }
  return found ? 0 : 1;
}

int run_glue(const Options& opt) {
  intck::Model m1 = intck::model_from_json(read_file(opt.model_path));
  intck::Model m2 = intck::model_from_json(read_file(opt.model2_path));
  intck::PointedModel pm = intck::glue(m1, m2);
  std::cout << intck::pointed_to_json(pm) << "\n";
  return 0;
}

int run_th_check(const Options& opt) {
  intck::KripkeSheaf s = intck::sheaf_from_json(read_file(opt.sheaf_path));
  std::vector<std::string> vars;
  std::stringstream ss(opt.vars);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) vars.push_back(item);
  intck::ValidationReport rep = intck::validate_sheaf(s);
  intck::ThReport th;
  if (rep.ok()) th = intck::check_th(s, vars);
  bool ok = rep.ok() && th.ok();
  if (opt.json) {
    json fails = json::array();
    for (const auto& f : th.failures) fails.push_back({{"sentence", f.sentence}, {"node", f.node}});
    std::cout << json{{"ok", ok}, {"violations", violations_json(rep)}, {"failures", fails}}.dump(2)
              << "\n";
  } else {
    print_violations(rep);
    for (const auto& f : th.failures) std::cout << "FAIL " << f.sentence << " at " << f.node << "\n";
    if (ok) std::cout << "OK\n";
  }
  return ok ? 0 : 1;
}

int run_port_proof(const Options& opt) {
  intck::ProofScript script = intck::parse_proof(read_file(opt.proof_path));
  try {
    intck::ProofScript ported = intck::port_proof(script, opt.target, opt.bridge);
    if (opt.json)
      std::cout << json{{"ok", true}, {"script", intck::print_proof(ported)}}.dump(2) << "\n";
    else
      std::cout << intck::print_proof(ported);
    return 0;
  } catch (const std::invalid_argument& e) {
    if (opt.json)
      std::cout << json{{"ok", false}, {"reason", e.what()}}.dump(2) << "\n";
    else
      std::cerr << "REJECT " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intck: checkers and translators for basic intuitionistic conditional logic"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "structured JSON report on stdout");

  auto* fmt = app.add_subcommand("fmt", "parse a formula and print it canonically");
  fmt->add_option("formula", opt.formula)->required();

  auto* ev = app.add_subcommand("eval", "evaluate a formula at a world of a model");
  ev->add_option("--model", opt.model_path)->required();
  ev->add_option("--mode", opt.mode)->check(CLI::IsMember({"int", "weiss"}));
  ev->add_option("--world", opt.world)->required();
  ev->add_option("formula", opt.formula)->required();

  auto* vm = app.add_subcommand("validate-model", "check the frame conditions of a model class");
  vm->add_option("file", opt.model_path)->required();
  vm->add_option("--class", opt.cls)->check(CLI::IsMember({"chellas", "weiss"}));

  auto* cp = app.add_subcommand("check-proof", "check a proof script");
  cp->add_option("file", opt.proof_path)->required();

  app.add_subcommand("check-corpus", "check every bundled corpus item");

  auto* tl = app.add_subcommand("translate", "translate a formula between languages");
  auto* tr_flag = tl->add_flag("--tr", opt.do_tr, "modal to conditional");
  auto* untr_flag = tl->add_flag("--untr", opt.do_untr, "conditional to modal");
  auto* erase_flag = tl->add_flag("--erase", opt.do_erase, "drop conditional subformulas");
  auto* st_opt = tl->add_option("--st", opt.st_var, "standard translation at the named world");
  tr_flag->excludes(untr_flag)->excludes(erase_flag)->excludes(st_opt);
  untr_flag->excludes(erase_flag)->excludes(st_opt);
  erase_flag->excludes(st_opt);
  tl->add_option("formula", opt.formula)->required();

  auto* cm = app.add_subcommand("countermodel", "search for a refuting pointed model");
  cm->add_option("formula", opt.formula)->required();
  cm->add_option("--class", opt.cls)->check(CLI::IsMember({"chellas", "weiss"}));
  cm->add_option("--max-worlds", opt.max_worlds);
  cm->add_option("--seed", opt.seed);
  cm->add_option("--budget", opt.budget);

  auto* gl = app.add_subcommand("glue", "join two models under a fresh root");
  gl->add_option("file1", opt.model_path)->required();
  gl->add_option("file2", opt.model2_path)->required();

  auto* th = app.add_subcommand("th-check", "check the extension-universe theory on a sheaf");
  th->add_option("--sheaf", opt.sheaf_path)->required();
  th->add_option("--vars", opt.vars, "comma-separated atom names");

  auto* pp = app.add_subcommand("port-proof", "port a proof script across a bridge");
  pp->add_option("file", opt.proof_path)->required();
  pp->add_option("--target", opt.target)->required();
  pp->add_option("--bridge", opt.bridge)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fmt->parsed()) return run_fmt(opt);
    if (ev->parsed()) return run_eval(opt);
    if (vm->parsed()) return run_validate_model(opt);
    if (cp->parsed()) return run_check_proof(opt);
    if (app.get_subcommand("check-corpus")->parsed()) return run_check_corpus(opt);
    if (tl->parsed()) {
      if (!opt.do_tr && !opt.do_untr && !opt.do_erase && opt.st_var.empty()) {
        std::cerr << "translate needs one of --tr, --untr, --st, --erase\n";
        return 2;
      }
      return run_translate(opt);
    }
    if (cm->parsed()) return run_countermodel(opt);
    if (gl->parsed()) return run_glue(opt);
    if (th->parsed()) return run_th_check(opt);
    if (pp->parsed()) return run_port_proof(opt);
  } catch (const intck::ParseError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
