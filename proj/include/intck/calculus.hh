// Hilbert-style proof kernel: axiom schemes, five calculi, proof/derivation/
// derived-rule checking, substitution into proofs, and the bundled corpus.
#pragma once

#include "intck/syntax.hh"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace intck {

// Language fragment a calculus works over. Propositional embeds into every
// other fragment; CondBoxOnly embeds into CondFull; Modal only extends
// Propositional.
enum class Fragment { Propositional, CondBoxOnly, CondFull, Modal };

bool in_fragment(const Formula& f, Fragment frag);
bool fragment_within(Fragment sub, Fragment sup);

// Axiom scheme: a pattern formula whose variables (phi, psi, chi, theta)
// stand for metavariables.
struct Scheme {
  std::string id;
  Formula pattern;
};

// Inference rule: premise patterns plus a conclusion pattern. Conclusion
// metavariables that do not occur in a premise (chi in the congruence rules)
// are instantiated freely by the matched conclusion.
struct Rule {
  std::string id;
  std::vector<Formula> premises;
  Formula conclusion;
};

struct Calculus {
  std::string id;
  std::vector<std::string> axioms;
  std::vector<std::string> rules;
  Fragment fragment = Fragment::CondFull;
  Dialect dialect = Dialect::Cond;

  bool has_axiom(const std::string& scheme_id) const;
  bool has_rule(const std::string& rule_id) const;
};

const std::vector<Calculus>& registry();
const Calculus* find_calculus(const std::string& id);
const Scheme* find_scheme(const std::string& id);
const Rule* find_rule(const std::string& id);

// True when every axiom and rule of `sub` belongs to `sup` and sub's
// fragment embeds into sup's.
bool subcalculus(const Calculus& sub, const Calculus& sup);

// Unique binding sigma with substitute(pattern, sigma) == f, if one exists.
// Every pattern variable is treated as a metavariable; repeated
// metavariables must match equal subtrees.
std::optional<Subst> match_pattern(const Formula& pattern, const Formula& f);
std::optional<Subst> match_scheme(const Scheme& s, const Formula& f);

enum class Mode { Proof, Derivation, DerivedRule };

enum class JKind { Ax, Premise, MP, RuleApp, Thm };

struct Justification {
  JKind kind = JKind::Ax;
  std::string ref;                  // scheme / rule / corpus name
  std::vector<int> lines;           // Premise: {k}; MP: {i, j}; RuleApp: premise lines
  std::vector<std::pair<std::string, Formula>> bindings;  // Ax / Thm
};

struct ProofLine {
  int number = 0;
  Formula formula;
  Justification just;
};

struct ProofScript {
  std::string calculus;
  Mode mode = Mode::Proof;
  std::vector<Formula> premises;
  std::vector<ProofLine> lines;

  const Formula& conclusion() const;
};

struct Verdict {
  bool ok = false;
  int line = 0;          // first failing line (0 when the defect is global)
  std::string reason;
};

struct ProofFormatError : std::runtime_error {
  explicit ProofFormatError(const std::string& what, int line = 0)
      : std::runtime_error(what), line(line) {}
  int line;
};

// Text format:
//   calculus <ID>
//   mode <proof|derivation|derived_rule>
//   premise <formula>        (repeatable; derivation/derived_rule only)
//   <n>: <formula> ; <justification>
// with justifications
//   ax <SchemeId> <mv>=<formula> ...
//   pre <k>
//   mp <i> <j>               (i: antecedent line, j: implication line)
//   rule <RuleId> <i>
//   thm <Name> <atom>=<formula> ...
// Blank lines and lines starting with '#' are ignored.
ProofScript parse_proof(const std::string& text);
std::string print_proof(const ProofScript& script);

Verdict check(const ProofScript& script);

// Simultaneous substitution into every premise, line formula, and binding
// value. A checked script stays checked in the same calculus.
ProofScript substitute_proof(const ProofScript& script, const Subst& sigma);

// Inline every Thm line by substituting the cited proof's body; the result
// contains no Thm justifications. Derivations become derived rules because
// inlined axiom lines are not derivation material.
ProofScript elaborate(const ProofScript& script);

struct CorpusItem {
  std::string name;       // "CALC/name"
  ProofScript script;
  Formula statement;      // conclusion of the script
};

struct CorpusReport {
  std::vector<std::pair<std::string, Verdict>> entries;
  bool all_ok = true;
};

// Checks every bundled item in dependency order.
CorpusReport verify_corpus();

// Bundled items in corpus order (parsed, not necessarily verified).
const std::vector<CorpusItem>& corpus_items();

// Item by name, or nullptr. Only items that verified successfully resolve.
const CorpusItem* find_corpus_item(const std::string& name);

namespace detail {

// Check / elaborate against an explicit theorem resolver instead of the
// bundled corpus. Used while verifying the corpus itself, where only the
// already-verified prefix may be cited.
Verdict check_resolved(const ProofScript& script,
                       const std::map<std::string, const CorpusItem*>& thms);
ProofScript elaborate_resolved(const ProofScript& script,
                               const std::map<std::string, const CorpusItem*>& thms);
const std::map<std::string, const CorpusItem*>& verified_corpus();

}  // namespace detail

}  // namespace intck
