#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "intck/calculus.hh"
#include "intck/syntax.hh"

namespace intck {

// How one axiom scheme or inference rule of a source calculus is reproduced
// inside a target calculus when a proof is ported across.
struct BridgeEntry {
  enum class Kind {
    Self,    // same scheme / rule id in the target, bindings translated
    SelfAx,  // a different target scheme; premap supplies its bindings
    Splice,  // a corpus item of the target; premap supplies its bindings
  };
  Kind kind = Kind::Self;
  std::string ref;  // target scheme id (SelfAx) or corpus item name (Splice)
  // Target metavariable (SelfAx) or corpus atom (Splice) -> pattern over the
  // source metavariables. The ported binding for a key is
  // translate(substitute(pattern, source bindings)).
  std::vector<std::pair<std::string, Formula>> premap;
};

struct Bridge {
  std::string id;
  std::string source, target;
  Formula (*translate)(const Formula&) = nullptr;
  bool identity = false;  // translate is the identity map
  std::map<std::string, BridgeEntry> axioms;  // source scheme id -> entry
  std::map<std::string, BridgeEntry> rules;   // source rule id -> entry
};

// Built-in bridges: one identity bridge per calculus (id_INT, id_INTCK, ...),
// appendix_b (INTCK -> CK) and classical_ck (INTCK_AX0 -> CK) over the
// identity translation, lemma9 (CK -> INTCK_AX0), and the modal embedding
// pair tr (IK -> INTCK) / untr (INTCK -> IK). Every bridge covers all axioms
// and rules of its source calculus.
const std::vector<Bridge>& bridges();
const Bridge* find_bridge(const std::string& id);

// Port a checked script across a bridge. The result checks in the target
// calculus, concludes the bridge translation of the source conclusion, and
// has mode proof when the source is a proof, derived_rule otherwise.
// Throws ProofFormatError when the bridge is unknown or does not connect
// script.calculus to target, and std::invalid_argument when the source
// script does not check.
ProofScript port_proof(const ProofScript& script, const std::string& target,
                       const std::string& bridge);

}  // namespace intck
