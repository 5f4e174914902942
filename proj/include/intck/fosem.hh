#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "intck/fo.hh"
#include "intck/models.hh"

namespace intck {

struct SheafFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite Kripke sheaf: a pre-ordered family of classical structures over the
// two-sorted translation signature, connected by transition maps that must
// be identities on loops, compose along the order, and act homomorphically
// on every relation. Nodes and per-node domain elements are indexed densely;
// element indices are node-local. Node sets reuse the 16-world bitmask cap.
struct KripkeSheaf {
  std::vector<std::string> nodes;
  std::vector<uint32_t> order;  // bit v of order[w] <=> w <= v; stored closed

  struct Interp {
    std::set<int> o, s;                         // sort predicates
    std::set<std::pair<int, int>> in;           // (a, b): a is a member of b
    std::set<std::array<int, 3>> r;             // selection triples
    std::map<std::string, std::set<int>> preds; // atom -> extension
  };
  std::vector<std::vector<std::string>> domains;  // element ids per node
  std::vector<Interp> interp;
  // (w, v) with w <= v -> element map domains[w] -> domains[v], by index.
  // A missing (w, w) entry means the identity.
  std::map<std::pair<int, int>, std::vector<int>> transitions;

  int node_index(const std::string& id) const;
  int elem_index(int node, const std::string& id) const;
};

// Structural defects (dangling indices, missing transitions, empty carriers)
// throw SheafFormatError; the report lists condition violations only:
// order-reflexive, order-transitive, transition-identity,
// transition-composition, transition-homomorphism.
ValidationReport validate_sheaf(const KripkeSheaf& s);

// Variable -> element index of the evaluation node's domain.
using Assignment = std::map<std::string, int>;

// Intuitionistic first-order satisfaction: implication and the universal
// quantifier range over all nodes above the current one with the assignment
// pushed through the transitions; the existential quantifier ranges over the
// current domain. Throws EvalError when a free variable is unassigned.
bool eval_fo(const KripkeSheaf& s, int node, const FoFormula& f, const Assignment& a);
bool eval_fo(const KripkeSheaf& s, const std::string& node, const FoFormula& f,
             const std::map<std::string, std::string>& assignment);

// The theory of two-sorted extension universes: sort cover and disjointness,
// typing of membership and selection, comprehension for each declared atom,
// the full and empty sets, closure under the connectives and under both
// selection images, and extensionality. Th3/Th6 are instantiated once per
// declared atom; every sentence is closed.
struct ThSentence {
  std::string name;
  FoFormula sentence;
};
std::vector<ThSentence> th_sentences(const std::vector<std::string>& vars);

struct ThFailure {
  std::string sentence;
  std::string node;
};
struct ThReport {
  std::vector<ThFailure> failures;
  bool ok() const { return failures.empty(); }
};
// Evaluates every th_sentences(vars) member at every node of s.
ThReport check_th(const KripkeSheaf& s, const std::vector<std::string>& vars);

// One-node sheaf over a discrete-order model: the domain is the worlds plus
// every subset of worlds, O the worlds, S the subsets, In the membership,
// R the selection with its set value replaced by the subset element, and
// each declared atom its valuation. Throws std::invalid_argument when the
// order has a non-reflexive pair. The output satisfies Th for `vars`.
KripkeSheaf classical_to_sheaf(const Model& m, const std::vector<std::string>& vars);

// JSON serialization; parsing rejects unknown keys and dangling ids, closes
// the order, and requires an explicit transition for every distinct w <= v.
KripkeSheaf sheaf_from_json(const std::string& text);
std::string sheaf_to_json(const KripkeSheaf& s);

namespace detail {

// Structural pass shared by the validator and the JSON loader; throws
// SheafFormatError on dangling indices, missing transitions, empty carriers.
void check_sheaf_structure(const KripkeSheaf& s);

}  // namespace detail

}  // namespace intck
