#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "gen.hh"
#include "intck/models.hh"

using namespace intck;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Model fixture(const std::string& name) {
  return model_from_json(slurp(std::string(INTCK_DATA_DIR) + "/models/" + name));
}

Formula cond(const std::string& text) { return parse(Dialect::Cond, text); }

}  // namespace

TEST_SUITE_BEGIN("models");

TEST_CASE("json loading closes the order and validates structure") {
  Model m = fixture("prop5.json");
  CHECK(m.worlds == std::vector<std::string>{"w", "v", "u"});
  CHECK(m.leq[0] == 0b011u);  // w <= w, v
  CHECK(m.leq[1] == 0b010u);
  CHECK(m.leq[2] == 0b100u);
  CHECK(m.sel.size() == 1);
  CHECK(m.sel[0].set == 0b111u);

  CHECK_THROWS_AS(model_from_json("not json"), ModelFormatError);
  CHECK_THROWS_AS(model_from_json(R"({"worlds": []})"), ModelFormatError);
  CHECK_THROWS_AS(model_from_json(R"({"worlds": ["w"], "bogus": 1})"), ModelFormatError);
  CHECK_THROWS_AS(model_from_json(R"({"worlds": ["w", "w"]})"), ModelFormatError);
  CHECK_THROWS_AS(model_from_json(R"({"worlds": ["w"], "order": [["w", "x"]]})"),
                  ModelFormatError);
  CHECK_THROWS_AS(model_from_json(R"({"worlds": ["w"], "valuation": {"Bad": ["w"]}})"),
                  ModelFormatError);
  std::string big = R"({"worlds": [)";
  for (int i = 0; i < 17; ++i) big += (i ? ",\"w" : "\"w") + std::to_string(i) + "\"";
  big += "]}";
  CHECK_THROWS_AS(model_from_json(big), ModelFormatError);
}

TEST_CASE("model json round trip") {
  for (const char* name : {"prop5.json", "two_chain.json", "discrete.json", "bad.json"}) {
    Model m = fixture(name);
    Model back = model_from_json(model_to_json(m));
    CHECK(model_to_json(back) == model_to_json(m));
  }
  PointedModel pm{fixture("two_chain.json"), "v"};
  PointedModel back = pointed_from_json(pointed_to_json(pm));
  CHECK(back.world == "v");
  CHECK(model_to_json(back.model) == model_to_json(pm.model));
}

TEST_CASE("validation reports the documented conditions") {
  CHECK(validate(fixture("two_chain.json"), ModelClass::Chellas).ok());
  CHECK(validate(fixture("two_chain.json"), ModelClass::Weiss).ok());
  CHECK(validate(fixture("discrete.json"), ModelClass::Chellas).ok());
  CHECK(validate(fixture("discrete.json"), ModelClass::Weiss).ok());

  Model prop5 = fixture("prop5.json");
  CHECK(validate(prop5, ModelClass::Weiss).ok());
  auto rep = validate(prop5, ModelClass::Chellas);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].condition == "c1");

  Model bad = fixture("bad.json");
  auto chellas = validate(bad, ModelClass::Chellas);
  REQUIRE(chellas.violations.size() == 1);
  CHECK(chellas.violations[0].condition == "valuation-monotone");
  auto weiss = validate(bad, ModelClass::Weiss);
  std::set<std::string> conds;
  for (const auto& v : weiss.violations) conds.insert(v.condition);
  CHECK(conds == std::set<std::string>{"valuation-monotone", "cw"});
}

TEST_CASE("intuitionistic clauses quantify upward") {
  Model m = fixture("two_chain.json");  // p true at v only, q everywhere
  CHECK(!eval(m, EvalMode::Int, "w", cond("p")));
  CHECK(eval(m, EvalMode::Int, "v", cond("p")));
  // p -> q is true at w; q -> p fails at w because of the upper world.
  CHECK(eval(m, EvalMode::Int, "w", cond("p -> q")));
  CHECK(!eval(m, EvalMode::Int, "w", cond("q -> p")));
  CHECK(!eval(m, EvalMode::Int, "w", cond("p | ~p")));
  CHECK(eval(m, EvalMode::Int, "v", cond("p | ~p")));
  CHECK(!eval(m, EvalMode::Int, "w", cond("~p")));
  CHECK(eval(m, EvalMode::Int, "w", cond("~~p")));
}

TEST_CASE("box arrow differs between int and weiss at non-final worlds") {
  // Local check passes at w but fails above it; only int looks up.
  Model m = model_from_json(R"({
    "worlds": ["w", "v"],
    "order": [["w", "v"]],
    "r": [{"from": "v", "set": ["w", "v"], "to": "w"}],
    "valuation": {"p": ["v"]}
  })");
  Formula f = cond("T => p");
  CHECK(eval(m, EvalMode::Weiss, "w", f));
  CHECK(!eval(m, EvalMode::Int, "w", f));
  CHECK(!eval(m, EvalMode::Weiss, "v", f));
}

TEST_CASE("diamond arrow is existential now and rejected under weiss") {
  Model m = fixture("discrete.json");  // R: w -{w}-> v, w -{w}-> u; p true at w
  CHECK(eval(m, EvalMode::Int, "w", cond("p ~> q")));   // q holds at v
  CHECK(!eval(m, EvalMode::Int, "v", cond("p ~> q")));  // v's triple has set {w,v} != [p]
  CHECK_THROWS_AS(eval(m, EvalMode::Weiss, "w", cond("p ~> q")), EvalError);
  CHECK(eval(m, EvalMode::WeissExtended, "w", cond("p ~> q")));
}

TEST_CASE("unary modalities are not interpreted on conditional models") {
  Model m = fixture("discrete.json");
  CHECK_THROWS_AS(eval(m, EvalMode::Int, "w", parse(Dialect::Modal, "[]p")), EvalError);
  CHECK_THROWS_AS(eval(m, EvalMode::Int, "w", parse(Dialect::Modal, "<>p")), EvalError);
  CHECK_THROWS_AS(eval(m, EvalMode::Int, "x", cond("p")), EvalError);  // unknown world
}

TEST_CASE("extension and satisfies_biset") {
  Model m = fixture("two_chain.json");
  CHECK(extension(m, cond("p")) == std::vector<std::string>{"v"});
  CHECK(extension(m, cond("q")) == std::vector<std::string>{"w", "v"});
  BiSet bs;
  bs.gamma = {cond("q"), cond("~~p")};
  bs.delta = {cond("p")};
  CHECK(satisfies_biset(m, EvalMode::Int, "w", bs));
  CHECK(!satisfies_biset(m, EvalMode::Int, "v", bs));  // p true at v, but v in delta
}

TEST_CASE("render_world_set") {
  Model m = fixture("prop5.json");
  CHECK(render_world_set(m, 0b111u) == "{w,v,u}");
  CHECK(render_world_set(m, 0) == "{}");
  CHECK(render_world_set(m, 0b100u) == "{u}");
}

TEST_CASE("enumeration is deterministic, valid, and budget-bounded") {
  EnumerateParams params;
  params.max_worlds = 3;
  params.vars = {"p", "q"};
  params.budget = 120;
  params.seed = 5;
  std::vector<Model> a = enumerate_models(params);
  std::vector<Model> b = enumerate_models(params);
  REQUIRE(a.size() == 120);
  REQUIRE(b.size() == 120);
  for (size_t i = 0; i < a.size(); ++i) CHECK(model_to_json(a[i]) == model_to_json(b[i]));
  for (const Model& m : a) CHECK(validate(m, ModelClass::Chellas).ok());
  params.cls = ModelClass::Weiss;
  for (const Model& m : enumerate_models(params)) CHECK(validate(m, ModelClass::Weiss).ok());
}

TEST_CASE("extensions are upward-closed on valid models") {
  EnumerateParams params;
  params.vars = {"p", "q"};
  params.budget = 60;
  gen::Rng rng(23);
  for (const Model& m : enumerate_models(params)) {
    Formula f = gen::formula(rng, Dialect::Cond, params.vars, 3);
    uint32_t ext = extension_mask(m, EvalMode::Int, f);
    for (size_t w = 0; w < m.worlds.size(); ++w)
      if (ext >> w & 1) CHECK((m.leq[w] & ~ext) == 0);
  }
}

TEST_CASE("countermodel search") {
  SearchParams params;
  params.budget = 400;
  auto found = countermodel_search(cond("p | ~p"), params);
  REQUIRE(found.has_value());
  CHECK(!eval(found->model, EvalMode::Int, found->world, cond("p | ~p")));
  CHECK(validate(found->model, ModelClass::Chellas).ok());

  CHECK(!countermodel_search(cond("p -> q -> p"), params).has_value());

  params.cls = ModelClass::Weiss;
  CHECK_THROWS_AS(countermodel_search(cond("p ~> q"), params), EvalError);
  auto weiss = countermodel_search(cond("~~(T => F) -> (T => F)"), params);
  REQUIRE(weiss.has_value());
  CHECK(validate(weiss->model, ModelClass::Weiss).ok());
  CHECK(!eval(weiss->model, EvalMode::Weiss, weiss->world, cond("~~(T => F) -> (T => F)")));
}

TEST_CASE("glue renames components under a fresh root") {
  Model m1 = fixture("two_chain.json");
  Model m2 = fixture("discrete.json");
  PointedModel pm = glue(m1, m2);
  CHECK(pm.world == "root");
  REQUIRE(pm.model.worlds.size() == 1 + m1.worlds.size() + m2.worlds.size());
  CHECK(pm.model.worlds[0] == "root");
  CHECK(pm.model.worlds[1] == "1:w");
  CHECK(pm.model.worlds[3] == "2:w");
  CHECK(validate(pm.model, ModelClass::Chellas).ok());

  // Component truth is preserved world by world.
  for (const char* text : {"p", "q", "p -> q", "p => q", "p ~> q", "~p", "(p | q) => p"}) {
    Formula f = cond(text);
    for (const auto& w : m1.worlds)
      CHECK(eval(m1, EvalMode::Int, w, f) == eval(pm.model, EvalMode::Int, "1:" + w, f));
    for (const auto& w : m2.worlds)
      CHECK(eval(m2, EvalMode::Int, w, f) == eval(pm.model, EvalMode::Int, "2:" + w, f));
  }

  // p holds at 1:v and 2:w only, so the root must refute p and ~p.
  CHECK(!eval(pm.model, EvalMode::Int, "root", cond("p")));
  CHECK(!eval(pm.model, EvalMode::Int, "root", cond("~p")));
}

TEST_SUITE_END();
