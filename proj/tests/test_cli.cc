#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "intck/calculus.hh"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the built binary with stderr folded into the captured stream.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(INTCK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WEXITSTATUS(status);
  return r;
}

std::string data_path(const std::string& rel) { return std::string(INTCK_DATA_DIR) + "/" + rel; }

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

int count_lines(const std::string& text, const std::string& prefix) {
  int n = 0;
  size_t pos = 0;
  while ((pos = text.find(prefix, pos)) != std::string::npos) {
    if (pos == 0 || text[pos - 1] == '\n') ++n;
    pos += prefix.size();
  }
  return n;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("fmt") {
  RunResult r = run_cli("fmt \"p & (q -> r)\"");
  CHECK(r.code == 0);
  CHECK(r.out == "p & (q -> r)\n");
  CHECK(run_cli("fmt \"[]p -> <>q\"").out == "[]p -> <>q\n");

  r = run_cli("fmt \"p=>q=>r\"");
  CHECK(r.code == 2);
  CHECK(r.out.find("non-associative") != std::string::npos);

  r = run_cli("--json fmt \"p->q\"");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["formula"] == "p -> q");
}

TEST_CASE("eval") {
  std::string model = data_path("models/prop5.json");
  RunResult r = run_cli("eval --model " + model + " --mode weiss --world w \"~~(T=>F)\"");
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(run_cli("eval --model " + model + " --mode weiss --world w \"T=>F\"").out == "false\n");
  CHECK(run_cli("eval --model " + model + " --mode weiss --world v \"T=>F\"").out == "true\n");
  // Unknown world, unreadable file, bad mode, weiss diamond arrow: malformed.
  CHECK(run_cli("eval --model " + model + " --world zap \"p\"").code == 2);
  CHECK(run_cli("eval --model /nonexistent.json --world w \"p\"").code == 2);
  CHECK(run_cli("eval --model " + model + " --mode bogus --world w \"p\"").code == 2);
  CHECK(run_cli("eval --model " + model + " --mode weiss --world w \"p ~> q\"").code == 2);
  CHECK(nlohmann::json::parse(
            run_cli("--json eval --model " + model + " --mode weiss --world w \"T=>F\"").out)
            .at("value") == false);
}

TEST_CASE("validate-model") {
  CHECK(run_cli("validate-model " + data_path("models/two_chain.json")).code == 0);
  RunResult r = run_cli("validate-model " + data_path("models/prop5.json") + " --class weiss");
  CHECK(r.code == 0);
  CHECK(r.out == "OK\n");
  r = run_cli("validate-model " + data_path("models/prop5.json") + " --class chellas");
  CHECK(r.code == 1);
  CHECK(r.out.find("VIOLATION c1") != std::string::npos);
  CHECK(run_cli("validate-model " + temp_file("garbage.json", "{")).code == 2);
  auto j = nlohmann::json::parse(
      run_cli("--json validate-model " + data_path("models/bad.json") + " --class weiss").out);
  CHECK(j["ok"] == false);
  CHECK(j["violations"].size() == 2);
}

TEST_CASE("check-proof") {
  std::string good = temp_file("good.proof", R"(
calculus INTCK
mode proof
1: ~(p~>q) -> (p=>~q) ; thm INTCK/T4_fwd p=p q=q
)");
  RunResult r = run_cli("check-proof " + good);
  CHECK(r.code == 0);
  CHECK(r.out == "ACCEPT ~(p ~> q) -> p => ~q\n");

  std::string bad = temp_file("bad.proof", R"(
calculus INTCK
mode proof
1: ~(p~>q) -> (p=>q) ; thm INTCK/T4_fwd p=p q=q
)");
  r = run_cli("check-proof " + bad);
  CHECK(r.code == 1);
  CHECK(r.out.find("REJECT line 1") != std::string::npos);

  CHECK(run_cli("check-proof " + temp_file("mal.proof", "calculus INT\nmode proof\n1: p\n")).code ==
        2);
  CHECK(run_cli("check-proof /nonexistent.proof").code == 2);
}

TEST_CASE("check-corpus") {
  RunResult r = run_cli("check-corpus");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out, "ACCEPT ") == 50);
  CHECK(r.out.find("REJECT") == std::string::npos);
  auto j = nlohmann::json::parse(run_cli("--json check-corpus").out);
  CHECK(j["ok"] == true);
  CHECK(j["items"].size() == 50);
}

TEST_CASE("translate") {
  CHECK(run_cli("translate --tr \"[]p\"").out == "T => p\n");
  CHECK(run_cli("translate --untr \"(p & q) ~> r\"").out == "<>r\n");
  CHECK(run_cli("translate --erase \"(p => q) & r\"").out == "T & r\n");
  RunResult r = run_cli("translate --st=x \"p => q\"");
  CHECK(r.code == 0);
  CHECK(r.out == "exists _v0 (S(_v0) & ((forall _v1 (O(_v1) -> (E(_v1,_v0) <-> p(_v1)))) & "
                 "(forall _v2 (R(x,_v0,_v2) -> q(_v2)))))\n");
  CHECK(run_cli("translate \"p\"").code == 2);                  // no mode flag
  CHECK(run_cli("translate --tr \"p => q\"").code == 2);        // wrong dialect
  CHECK(run_cli("translate --tr --untr \"p\"").code == 2);      // exclusive flags
  CHECK(run_cli("translate --st=_v0 \"p\"").code == 2);         // reserved prefix
}

TEST_CASE("countermodel") {
  RunResult r = run_cli("countermodel \"p | ~p\" --budget 400");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("model"));
  CHECK(j.contains("world"));
  CHECK(run_cli("countermodel \"p -> q -> p\" --budget 300").code == 1);
  auto none = nlohmann::json::parse(run_cli("--json countermodel \"p -> p\" --budget 50").out);
  CHECK(none["found"] == false);
  // Stable for fixed seed and budget.
  CHECK(run_cli("countermodel \"p | ~p\" --seed 9 --budget 400").out ==
        run_cli("countermodel \"p | ~p\" --seed 9 --budget 400").out);
}

TEST_CASE("glue") {
  RunResult r = run_cli("glue " + data_path("models/two_chain.json") + " " +
                        data_path("models/discrete.json"));
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["world"] == "root");
  CHECK(j["model"]["worlds"].size() == 6);
  CHECK(run_cli("glue /nonexistent.json /nonexistent.json").code == 2);
}

TEST_CASE("th-check") {
  RunResult r = run_cli("th-check --sheaf " + data_path("sheaves/chain2.json") + " --vars p,q,r");
  CHECK(r.code == 0);
  CHECK(r.out == "OK\n");
  // A structurally fine sheaf with no sets fails the comprehension sentences.
  std::string setless = temp_file("setless.json", R"({
    "nodes": ["n0"],
    "order": [],
    "domains": {"n0": ["a"]},
    "interp": {"n0": {"O": ["a"], "p": ["a"]}},
    "transitions": {}
  })");
  r = run_cli("th-check --sheaf " + setless + " --vars p");
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL Th7 at n0") != std::string::npos);
  CHECK(run_cli("th-check --sheaf " + temp_file("nonsheaf.json", "[]") + " --vars p").code == 2);
}

TEST_CASE("port-proof") {
  const intck::CorpusItem* t4 = intck::find_corpus_item("INTCK/T4_fwd");
  REQUIRE(t4 != nullptr);
  std::string t4_path = temp_file("t4.proof", intck::print_proof(t4->script));
  RunResult r = run_cli("port-proof " + t4_path + " --target CK --bridge appendix_b");
  CHECK(r.code == 0);
  intck::ProofScript ported = intck::parse_proof(r.out);
  CHECK(ported.calculus == "CK");
  CHECK(intck::check(ported).ok);
  CHECK(intck::equal(ported.conclusion(), t4->statement));

  CHECK(run_cli("port-proof " + t4_path + " --target CK --bridge nope").code == 2);
  CHECK(run_cli("port-proof " + t4_path + " --target IK --bridge appendix_b").code == 2);

  std::string broken = temp_file("broken.proof", R"(
calculus INTCK
mode proof
1: p -> (q -> q) ; ax A0.1 phi=p psi=q
)");
  RunResult rejected = run_cli("port-proof " + broken + " --target CK --bridge appendix_b");
  CHECK(rejected.code == 1);
  CHECK(rejected.out.find("REJECT") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("bogus-subcommand").code == 2);
  CHECK(run_cli("eval --world w \"p\"").code == 2);  // missing required --model
  CHECK(run_cli("--help").code == 0);
}

TEST_SUITE_END();
