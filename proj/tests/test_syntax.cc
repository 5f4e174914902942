#include <doctest.h>

#include "gen.hh"
#include "intck/syntax.hh"

using namespace intck;

TEST_SUITE_BEGIN("syntax");

TEST_CASE("canonical printing is minimal and stable") {
  auto canon = [](const char* in) { return print(parse(Dialect::Cond, in)); };
  CHECK(canon("p & q -> r") == "p & q -> r");
  CHECK(canon("(p & q) -> r") == "p & q -> r");
  CHECK(canon("p & (q -> r)") == "p & (q -> r)");
  CHECK(canon("p | q & r") == "p | q & r");
  CHECK(canon("(p | q) & r") == "(p | q) & r");
  CHECK(canon("~ ~ p") == "~~p");
  CHECK(canon("p -> (q -> r)") == "p -> q -> r");
  CHECK(canon("(p -> q) -> r") == "(p -> q) -> r");
  CHECK(canon("(p => q) -> (p ~> q)") == "p => q -> p ~> q");
  CHECK(canon("(p => q) & r") == "(p => q) & r");
  CHECK(canon("T & F") == "T & F");
  auto modal = [](const char* in) { return print(parse(Dialect::Modal, in)); };
  CHECK(modal("[] p -> <> q") == "[]p -> <>q");
  CHECK(modal("[](p -> q)") == "[](p -> q)");
  CHECK(modal("<> <> p") == "<><>p");
}

TEST_CASE("negation and biconditional are abbreviations") {
  Formula f = parse(Dialect::Cond, "~p");
  CHECK(f->op == Op::Imp);
  CHECK(f->rhs->op == Op::Bot);
  Formula g = parse(Dialect::Cond, "p <-> q");
  CHECK(g->op == Op::And);
  CHECK(g->lhs->op == Op::Imp);
  CHECK(g->rhs->op == Op::Imp);
  CHECK(print(g) == "p <-> q");
  CHECK(equal(mk_neg(mk_var("p")), f));
  CHECK(equal(mk_iff(mk_var("p"), mk_var("q")), g));
}

TEST_CASE("precedence and associativity") {
  // -> is right-associative and loosest; & binds tighter than |.
  CHECK(equal(parse(Dialect::Cond, "p -> q -> r"),
              mk_imp(mk_var("p"), mk_imp(mk_var("q"), mk_var("r")))));
  CHECK(equal(parse(Dialect::Cond, "p | q & r"),
              mk_or(mk_var("p"), mk_and(mk_var("q"), mk_var("r")))));
  CHECK(equal(parse(Dialect::Cond, "p & q | r"),
              mk_or(mk_and(mk_var("p"), mk_var("q")), mk_var("r"))));
  CHECK(equal(parse(Dialect::Cond, "~p & q"), mk_and(mk_neg(mk_var("p")), mk_var("q"))));
  // <-> is right-associative and looser than ->.
  CHECK(equal(parse(Dialect::Cond, "p <-> q <-> r"),
              mk_iff(mk_var("p"), mk_iff(mk_var("q"), mk_var("r")))));
  CHECK(equal(parse(Dialect::Cond, "p -> q <-> q -> p"),
              mk_iff(mk_imp(mk_var("p"), mk_var("q")), mk_imp(mk_var("q"), mk_var("p")))));
  // Conditional arrows bind tighter than -> and looser than |.
  CHECK(equal(parse(Dialect::Cond, "p | q => r"), mk_box_arrow(mk_or(mk_var("p"), mk_var("q")),
                                                               mk_var("r"))));
  CHECK(equal(parse(Dialect::Cond, "p => q -> r"),
              mk_imp(mk_box_arrow(mk_var("p"), mk_var("q")), mk_var("r"))));
  // <-> lexes before <> in the modal dialect.
  CHECK(equal(parse(Dialect::Modal, "p <-> <>q"), mk_iff(mk_var("p"), mk_dia(mk_var("q")))));
}

TEST_CASE("conditional arrows are non-associative") {
  for (const char* text : {"p => q => r", "p ~> q ~> r", "p => q ~> r", "p ~> q => r"})
    CHECK_THROWS_AS(parse(Dialect::Cond, text), ParseError);
  CHECK_NOTHROW(parse(Dialect::Cond, "p => (q => r)"));
  CHECK_NOTHROW(parse(Dialect::Cond, "(p => q) ~> r"));
}

TEST_CASE("dialects reject the other language's operators") {
  CHECK_THROWS_AS(parse(Dialect::Modal, "p => q"), ParseError);
  CHECK_THROWS_AS(parse(Dialect::Modal, "p ~> q"), ParseError);
  CHECK_THROWS_AS(parse(Dialect::Cond, "[]p"), ParseError);
  CHECK_THROWS_AS(parse(Dialect::Cond, "<>p"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse(Dialect::Cond, "p & & q");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col > 1);
  }
  CHECK_THROWS_AS(parse(Dialect::Cond, ""), ParseError);
  CHECK_THROWS_AS(parse(Dialect::Cond, "p q"), ParseError);
  CHECK_THROWS_AS(parse(Dialect::Cond, "(p"), ParseError);
  CHECK_THROWS_AS(parse(Dialect::Cond, "p &"), ParseError);
}

TEST_CASE("atom names") {
  CHECK_NOTHROW(mk_var("p"));
  CHECK_NOTHROW(mk_var("p_1x"));
  CHECK_THROWS_AS(mk_var("P"), std::invalid_argument);
  CHECK_THROWS_AS(mk_var("1p"), std::invalid_argument);
  CHECK_THROWS_AS(mk_var(""), std::invalid_argument);
  CHECK_THROWS_AS(mk_var("p-q"), std::invalid_argument);
  // T and F are constants, not atoms.
  CHECK(parse(Dialect::Cond, "T")->op == Op::Top);
  CHECK(parse(Dialect::Cond, "F")->op == Op::Bot);
  CHECK(atoms(parse(Dialect::Cond, "T & F")).empty());
}

TEST_CASE("language membership") {
  Formula cond = parse(Dialect::Cond, "(p => q) & (p ~> q)");
  Formula modal = parse(Dialect::Modal, "[]p -> <>q");
  Formula prop = parse(Dialect::Cond, "p -> q");
  CHECK(is_cond(cond));
  CHECK(!is_modal(cond));
  CHECK(!is_propositional(cond));
  CHECK(contains_dia_arrow(cond));
  CHECK(contains_cond_arrow(cond));
  CHECK(is_modal(modal));
  CHECK(!is_cond(modal));
  CHECK(is_propositional(prop));
  CHECK(is_cond(prop));
  CHECK(is_modal(prop));
  CHECK(!contains_dia_arrow(parse(Dialect::Cond, "p => q")));
  CHECK(contains_cond_arrow(parse(Dialect::Cond, "p => q")));
}

TEST_CASE("atoms are sorted and deduplicated") {
  Formula f = parse(Dialect::Cond, "(q -> p) & (p => q_2) | p");
  CHECK(atoms(f) == std::vector<std::string>{"p", "q", "q_2"});
}

TEST_CASE("substitution is simultaneous") {
  Subst swap{{"p", mk_var("q")}, {"q", mk_var("p")}};
  Formula f = parse(Dialect::Cond, "p & q -> p");
  CHECK(print(substitute(f, swap)) == "q & p -> q");
  Subst grow{{"p", parse(Dialect::Cond, "p -> q")}};
  CHECK(print(substitute(parse(Dialect::Cond, "p & p"), grow)) == "(p -> q) & (p -> q)");
}

TEST_CASE("compare is a total order consistent with equal") {
  gen::Rng rng(11);
  std::vector<std::string> vars{"p", "q"};
  for (int i = 0; i < 200; ++i) {
    Formula a = gen::formula(rng, Dialect::Cond, vars, 3);
    Formula b = gen::formula(rng, Dialect::Cond, vars, 3);
    CHECK((compare(a, b) == 0) == equal(a, b));
    CHECK(compare(a, b) == -compare(b, a));
    CHECK(compare(a, a) == 0);
  }
}

TEST_CASE("parse of print is the identity") {
  gen::Rng rng(7);
  std::vector<std::string> vars{"p", "q", "r"};
  for (int i = 0; i < 400; ++i) {
    Dialect d = i % 2 == 0 ? Dialect::Cond : Dialect::Modal;
    Formula f = gen::formula(rng, d, vars, 5);
    CHECK(equal(parse(d, print(f)), f));
  }
}

TEST_SUITE_END();
