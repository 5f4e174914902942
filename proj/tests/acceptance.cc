// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria pinned to the bundled corpus, the bundled model
// and sheaf fixtures, and the command-line binary.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gen.hh"
#include "intck/bridges.hh"
#include "intck/calculus.hh"
#include "intck/fosem.hh"
#include "intck/models.hh"
#include "intck/translate.hh"

using namespace intck;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(std::string text) { notes.push_back(std::move(text)); }

void criterion(int number, const std::string& label, const std::function<bool()>& body,
               double limit_seconds = 0) {
  notes.clear();
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    ok = false;
    note("over the " + std::to_string(limit_seconds) + "s limit");
  }
  std::printf("%s %2d %-34s (%.1fs)\n", ok ? "pass" : "FAIL", number, label.c_str(), secs);
  for (const std::string& n : notes) std::printf("       - %s\n", n.c_str());
  if (!ok) ++failures;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(INTCK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  r.code = WEXITSTATUS(pclose(pipe));
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data_path(const std::string& rel) { return std::string(INTCK_DATA_DIR) + "/" + rel; }

// World-dependent conditional formula: carries an atom or a conditional
// arrow, so its standard translation mentions the world of evaluation.
Formula world_dependent(gen::Rng& rng, const std::vector<std::string>& vars, int depth) {
  for (;;) {
    Formula f = gen::formula(rng, Dialect::Cond, vars, depth);
    if (!atoms(f).empty() || contains_cond_arrow(f)) return f;
  }
}

Model random_discrete(gen::Rng& rng, const std::vector<std::string>& vars) {
  Model m;
  int n = 1 + rng.below(3);
  for (int i = 0; i < n; ++i) {
    m.worlds.push_back("w" + std::to_string(i));
    m.leq.push_back(1u << i);
  }
  uint32_t all = (1u << n) - 1;
  for (const auto& var : vars)
    m.val.emplace_back(var, static_cast<uint32_t>(rng.below(static_cast<int>(all) + 1)));
  int triples = rng.below(2 * n + 1);
  for (int i = 0; i < triples; ++i)
    m.sel.push_back({rng.below(n), static_cast<uint32_t>(rng.below(static_cast<int>(all) + 1)),
                     rng.below(n)});
  std::sort(m.sel.begin(), m.sel.end());
  m.sel.erase(std::unique(m.sel.begin(), m.sel.end()), m.sel.end());
  std::sort(m.val.begin(), m.val.end());
  return m;
}

bool criterion_corpus() {
  RunResult r = run_cli("check-corpus");
  if (r.code != 0) {
    note("exit code " + std::to_string(r.code));
    return false;
  }
  int accepts = 0;
  size_t pos = 0;
  while ((pos = r.out.find("ACCEPT ", pos)) != std::string::npos) {
    if (pos == 0 || r.out[pos - 1] == '\n') ++accepts;
    pos += 7;
  }
  if (accepts < 21) {
    note("only " + std::to_string(accepts) + " items accepted");
    return false;
  }
  for (const char* name :
       {"INTCK/Nec", "INTCK/RMbox", "INTCK/RMdia", "INTCK/T1", "INTCK/T2", "INTCK/T3",
        "INTCK/T4_fwd", "INTCK/T4_bwd", "CK/A2", "CK/A4", "CK/RAdia", "CK/RCdia", "CK/A3",
        "CK/A6", "INTCK_AX0/Ax1", "INTCK/ick_nn", "IK/t1", "IK/t2", "IK/t3", "IK/t4", "IK/r1",
        "IK/r2", "IK/r3", "IK/r4"}) {
    if (r.out.find(std::string("ACCEPT ") + name + "\n") == std::string::npos) {
      note(std::string("missing ") + name);
      return false;
    }
  }
  return true;
}

bool criterion_prop5() {
  std::string model = data_path("models/prop5.json");
  bool ok = true;
  auto expect = [&](const std::string& args, int code, const std::string& out) {
    RunResult r = run_cli(args);
    if (r.code != code || r.out != out) {
      note("`" + args + "` gave exit " + std::to_string(r.code) + ", output: " + r.out);
      ok = false;
    }
  };
  expect("eval --model " + model + " --mode weiss --world v \"T=>F\"", 0, "true\n");
  expect("eval --model " + model + " --mode weiss --world w \"T=>F\"", 0, "false\n");
  expect("eval --model " + model + " --mode weiss --world w \"~~(T=>F)\"", 0, "true\n");
  expect("validate-model " + model + " --class weiss", 0, "OK\n");
  RunResult r = run_cli("validate-model " + model + " --class chellas");
  if (r.code != 1 || r.out.find("VIOLATION c1") != 0) {
    note("chellas validation: exit " + std::to_string(r.code) + ", output: " + r.out);
    ok = false;
  }
  return ok;
}

bool criterion_soundness() {
  EnumerateParams params;
  params.vars = {"p", "q", "r"};
  params.budget = 200;
  std::vector<Model> models = enumerate_models(params);
  if (models.size() != 200) {
    note("enumerated " + std::to_string(models.size()) + " models");
    return false;
  }
  const Calculus* intck = find_calculus("INTCK");
  gen::Rng rng(2026);
  long falsified = 0;
  for (const std::string& ax : intck->axioms) {
    const Scheme* s = find_scheme(ax);
    for (int i = 0; i < 100; ++i) {
      Subst sigma;
      for (const std::string& mv : atoms(s->pattern))
        sigma[mv] = gen::formula(rng, Dialect::Cond, params.vars, 3);
      Formula inst = substitute(s->pattern, sigma);
      for (const Model& m : models)
        if (extension_mask(m, EvalMode::Int, inst) != m.all_mask()) {
          if (falsified == 0) note(ax + " falsified: " + print(inst));
          ++falsified;
        }
    }
  }
  if (falsified) {
    note(std::to_string(falsified) + " falsifications");
    return false;
  }

  // No countermodel for instantiated corpus theorems within the budget.
  // Conditional theorems first, intuitionistic ones filling up the quota.
  std::vector<const CorpusItem*> theorems;
  for (const std::string& cal : {std::string("INTCK"), std::string("INT")})
    for (const CorpusItem& item : corpus_items())
      if (item.script.mode == Mode::Proof && item.script.calculus == cal &&
          theorems.size() < 20)
        theorems.push_back(&item);
  if (theorems.size() != 20) {
    note("only " + std::to_string(theorems.size()) + " theorem instances available");
    return false;
  }
  gen::Rng inst_rng(77);
  for (const CorpusItem* item : theorems) {
    Subst sigma;
    for (const std::string& atom : atoms(item->statement))
      sigma[atom] = gen::formula(inst_rng, Dialect::Cond, {"p", "q"}, 2);
    Formula inst = substitute(item->statement, sigma);
    SearchParams sp;
    sp.budget = 10000;
    if (auto found = countermodel_search(inst, sp)) {
      note(item->name + " refuted at " + found->world + " of " + model_to_json(found->model));
      return false;
    }
  }
  return true;
}

bool criterion_monotone() {
  EnumerateParams params;
  params.vars = {"p", "q", "r"};
  params.budget = 200;
  gen::Rng rng(31);
  bool ok = true;
  std::vector<Model> models = enumerate_models(params);
  for (int i = 0; i < 100; ++i) {
    Formula f = gen::formula(rng, Dialect::Cond, params.vars, 3);
    for (const Model& m : models) {
      uint32_t ext = extension_mask(m, EvalMode::Int, f);
      for (size_t w = 0; w < m.worlds.size(); ++w)
        if ((ext >> w & 1) && (m.leq[w] & ~ext)) {
          if (ok) note("extension of " + print(f) + " not upward-closed");
          ok = false;
        }
    }
  }
  return ok;
}

bool criterion_glue() {
  EnumerateParams params;
  params.vars = {"p", "q"};
  params.budget = 100;
  params.seed = 12;
  std::vector<Model> models = enumerate_models(params);
  gen::Rng rng(55);
  std::vector<Formula> battery;
  for (int i = 0; i < 50; ++i)
    battery.push_back(gen::formula(rng, Dialect::Cond, params.vars, 3));
  bool ok = true;
  for (int i = 0; i < 50; ++i) {
    const Model& m1 = models[static_cast<size_t>(rng.below(100))];
    const Model& m2 = models[static_cast<size_t>(rng.below(100))];
    PointedModel pm = glue(m1, m2);
    if (!validate(pm.model, ModelClass::Chellas).ok()) {
      note("glued model violates c1/c2");
      return false;
    }
    const std::string& p1 = m1.worlds[0];
    const std::string& p2 = m2.worlds[0];
    for (const Formula& f : battery) {
      for (const auto& w : m1.worlds)
        if (eval(m1, EvalMode::Int, w, f) != eval(pm.model, EvalMode::Int, "1:" + w, f)) {
          if (ok) note("component 1 truth not preserved: " + print(f));
          ok = false;
        }
      for (const auto& w : m2.worlds)
        if (eval(m2, EvalMode::Int, w, f) != eval(pm.model, EvalMode::Int, "2:" + w, f)) {
          if (ok) note("component 2 truth not preserved: " + print(f));
          ok = false;
        }
      if (!eval(m1, EvalMode::Int, p1, f) && !eval(m2, EvalMode::Int, p2, f) &&
          eval(pm.model, EvalMode::Int, "root", f)) {
        if (ok) note("root does not refute " + print(f));
        ok = false;
      }
    }
  }
  return ok;
}

bool criterion_round_trip() {
  gen::Rng rng(606);
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen::formula(rng, Dialect::Modal, {"p", "q", "r"}, 5);
    if (!equal(untr(tr(f)), f)) {
      note("round trip failed: " + print(f));
      return false;
    }
  }
  return true;
}

bool criterion_st_shape() {
  gen::Rng rng(404);
  for (int i = 0; i < 300; ++i) {
    Formula f = world_dependent(rng, {"p", "q", "r"}, 4);
    if (fo_free_vars(st("x", f)) != std::set<std::string>{"x"}) {
      note("free variables wrong for " + print(f));
      return false;
    }
  }
  return true;
}

bool criterion_classical_bridge(std::vector<KripkeSheaf>& battery_out) {
  gen::Rng rng(808);
  std::vector<std::string> vars{"p", "q"};
  for (int i = 0; i < 200; ++i) {
    Model m = random_discrete(rng, vars);
    KripkeSheaf s = classical_to_sheaf(m, vars);
    if (!check_th(s, vars).ok()) {
      note("check_th failed on case " + std::to_string(i));
      return false;
    }
    Formula f = gen::formula(rng, Dialect::Cond, vars, 3);
    FoFormula t = st("x", f);
    for (size_t w = 0; w < m.worlds.size(); ++w) {
      bool classical = eval(m, EvalMode::WeissExtended, static_cast<int>(w), f);
      bool fo = eval_fo(s, 0, t, {{"x", static_cast<int>(w)}});
      if (classical != fo) {
        note("disagreement on " + print(f) + " at " + m.worlds[w] + " of " + model_to_json(m));
        return false;
      }
    }
    battery_out.push_back(std::move(s));
  }
  return true;
}

bool criterion_th_battery(const std::vector<KripkeSheaf>& single_node) {
  std::vector<KripkeSheaf> battery = single_node;
  int fixtures = 0;
  for (const char* name : {"constant2.json", "chain2.json", "chain3.json", "fork3.json"}) {
    KripkeSheaf s = sheaf_from_json(slurp(data_path(std::string("sheaves/") + name)));
    if (!validate_sheaf(s).ok() || !check_th(s, {"p", "q", "r"}).ok()) {
      note(std::string(name) + " is not a Th-sheaf");
      return false;
    }
    battery.push_back(std::move(s));
    ++fixtures;
  }
  if (fixtures < 3 || single_node.empty()) {
    note("battery too small");
    return false;
  }
  int theorems = 0;
  for (const CorpusItem& item : corpus_items()) {
    if (item.script.calculus != "INTCK" || item.script.mode != Mode::Proof) continue;
    ++theorems;
    FoFormula t = st("x", item.statement);
    for (const KripkeSheaf& s : battery)
      for (size_t w = 0; w < s.nodes.size(); ++w)
        for (int e : s.interp[w].o)
          if (!eval_fo(s, static_cast<int>(w), t, {{"x", e}})) {
            note(item.name + " fails at node " + s.nodes[w]);
            return false;
          }
  }
  if (theorems == 0) {
    note("no conditional theorems found");
    return false;
  }
  return true;
}

bool criterion_porting() {
  struct Case {
    const char* item;
    const char* target;
    const char* bridge;
  };
  for (Case c : {Case{"INTCK/T4_fwd", "CK", "appendix_b"}, Case{"IK/t2", "INTCK", "tr"}}) {
    const CorpusItem* item = find_corpus_item(c.item);
    const Bridge* bridge = find_bridge(c.bridge);
    if (!item || !bridge) {
      note("missing item or bridge");
      return false;
    }
    auto path = std::filesystem::temp_directory_path() / "acceptance_port.proof";
    std::ofstream(path) << print_proof(item->script);
    RunResult r =
        run_cli("port-proof " + path.string() + " --target " + c.target + " --bridge " + c.bridge);
    if (r.code != 0) {
      note(std::string(c.item) + ": exit " + std::to_string(r.code));
      return false;
    }
    ProofScript ported = parse_proof(r.out);
    Verdict v = check(ported);
    if (!v.ok) {
      note(std::string(c.item) + ": ported script rejected: " + v.reason);
      return false;
    }
    if (ported.calculus != c.target ||
        !equal(ported.conclusion(), bridge->translate(item->statement))) {
      note(std::string(c.item) + ": wrong calculus or conclusion");
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "corpus completeness", criterion_corpus, 5.0);
  criterion(2, "three-world countermodel values", criterion_prop5);
  criterion(3, "axiom soundness + no countermodels", criterion_soundness, 120.0);
  criterion(4, "extension monotonicity", criterion_monotone);
  criterion(5, "gluing preserves and refutes", criterion_glue);
  criterion(6, "modal translation round trip", criterion_round_trip);
  criterion(7, "standard translation shape", criterion_st_shape);
  std::vector<KripkeSheaf> single_node;
  criterion(8, "classical bridge agreement", [&] { return criterion_classical_bridge(single_node); });
  criterion(9, "theorems hold on the Th battery", [&] { return criterion_th_battery(single_node); });
  criterion(10, "proof porting across bridges", criterion_porting);
  if (failures) std::printf("%d criteria failed\n", failures);
  return failures;
}
