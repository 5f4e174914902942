#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace intck {

// Connective tags for the propositional/conditional/modal languages.
// Negation and biconditional are abbreviations and never appear as nodes:
// ~a is Imp(a, Bot), a <-> b is And(Imp(a,b), Imp(b,a)).
enum class Op : uint8_t {
  Var,
  Top,
  Bot,
  And,
  Or,
  Imp,
  BoxArrow,  // => conditional "box arrow"
  DiaArrow,  // ~> conditional "diamond arrow"
  Box,       // [] unary modality
  Dia,       // <> unary modality
};

struct FNode;
using Formula = std::shared_ptr<const FNode>;

struct FNode {
  Op op;
  std::string name;  // Var only
  Formula lhs;       // binary left / unary child
  Formula rhs;       // binary right
};

enum class Dialect : uint8_t { Cond, Modal };

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg), line(line_), col(col_) {}
};

// Constructors. mk_var rejects names outside [a-z][a-zA-Z0-9_]*.
Formula mk_var(const std::string& name);
Formula mk_top();
Formula mk_bot();
Formula mk_and(Formula l, Formula r);
Formula mk_or(Formula l, Formula r);
Formula mk_imp(Formula l, Formula r);
Formula mk_box_arrow(Formula l, Formula r);
Formula mk_dia_arrow(Formula l, Formula r);
Formula mk_box(Formula a);
Formula mk_dia(Formula a);
// Abbreviations, expanded on construction.
Formula mk_neg(Formula a);
Formula mk_iff(Formula l, Formula r);

bool equal(const Formula& a, const Formula& b);
// Total order on formulas, usable as a map key comparator.
int compare(const Formula& a, const Formula& b);
struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const { return compare(a, b) < 0; }
};

// Language membership tests.
bool is_cond(const Formula& f);           // no Box/Dia
bool is_modal(const Formula& f);          // no BoxArrow/DiaArrow
bool is_propositional(const Formula& f);  // neither
bool contains_dia_arrow(const Formula& f);
bool contains_cond_arrow(const Formula& f);  // BoxArrow or DiaArrow

// Atoms occurring in f, sorted, deduplicated.
std::vector<std::string> atoms(const Formula& f);

// Throws ParseError on bad input. The conditional operators => and ~> are
// non-associative: "a => b => c" is rejected.
Formula parse(Dialect dialect, const std::string& text);

// Minimal-parenthesization text; parse(print(f)) == f. Restores ~ and <->.
std::string print(const Formula& f);

using Subst = std::map<std::string, Formula>;

// Simultaneous substitution of formulas for variables.
Formula substitute(const Formula& f, const Subst& sigma);

}  // namespace intck
