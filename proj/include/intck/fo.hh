#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace intck {

// First-order language over the two-sorted signature used by the standard
// translation: unary predicates p (one per propositional atom), O ("object"/
// world sort), S (set sort), binary E (membership), ternary R (selection),
// and equality. No surface parser; values are built by translators and the
// theory constructors, and printed for reports.
enum class FoOp : uint8_t {
  AtomP,  // pred(name), one individual argument
  AtomR,
  AtomO,
  AtomS,
  AtomE,
  Eq,
  Top,
  Bot,
  And,
  Or,
  Imp,
  Forall,  // var in `name`, body in lhs
  Exists,
};

struct FoNode;
using FoFormula = std::shared_ptr<const FoNode>;

struct FoNode {
  FoOp op;
  std::string name;               // AtomP predicate name, or quantifier variable
  std::vector<std::string> args;  // individual variable arguments of atoms
  FoFormula lhs, rhs;
};

FoFormula fo_p(const std::string& pred, const std::string& x);
FoFormula fo_r(const std::string& x, const std::string& y, const std::string& z);
FoFormula fo_o(const std::string& x);
FoFormula fo_s(const std::string& x);
FoFormula fo_e(const std::string& x, const std::string& y);
FoFormula fo_eq(const std::string& x, const std::string& y);
FoFormula fo_top();
FoFormula fo_bot();
FoFormula fo_and(FoFormula l, FoFormula r);
FoFormula fo_or(FoFormula l, FoFormula r);
FoFormula fo_imp(FoFormula l, FoFormula r);
FoFormula fo_forall(const std::string& x, FoFormula body);
FoFormula fo_exists(const std::string& x, FoFormula body);
// Abbreviations.
FoFormula fo_neg(FoFormula a);
FoFormula fo_iff(FoFormula l, FoFormula r);
// Relativized quantifier (forall x)_O: forall x (O(x) -> body).
FoFormula fo_forall_o(const std::string& x, FoFormula body);

bool fo_equal(const FoFormula& a, const FoFormula& b);

std::set<std::string> fo_free_vars(const FoFormula& f);
// Binder occurrences in pre-order, duplicates kept.
std::vector<std::string> fo_binders(const FoFormula& f);

std::string fo_print(const FoFormula& f);

}  // namespace intck
