#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "intck/syntax.hh"

namespace intck {

// Finite Kripke model for the conditional language. Worlds are indexed
// densely; world sets are bitmasks over those indices (hence the 16-world
// cap, enforced on construction from JSON and by the validator).
//
// `leq` is stored reflexively-transitively closed; the JSON loader closes
// the generator pairs it reads. The selection relation R is extensional:
// a set value X with no listed triple has no successors anywhere.
struct Model {
  std::vector<std::string> worlds;
  std::vector<uint32_t> leq;  // bit v of leq[w] <=> w <= v

  struct Triple {
    int from;
    uint32_t set;
    int to;
    auto operator<=>(const Triple&) const = default;
  };
  std::vector<Triple> sel;

  std::vector<std::pair<std::string, uint32_t>> val;  // sorted by atom name

  int index_of(const std::string& w) const;
  uint32_t all_mask() const { return worlds.size() >= 32 ? ~0u : (1u << worlds.size()) - 1; }
  uint32_t val_mask(const std::string& atom) const;
};

constexpr int kMaxWorlds = 16;

struct PointedModel {
  Model model;
  std::string world;
};

// Pair (gamma, delta) of formulas to be made true resp. false at a point.
struct BiSet {
  std::vector<Formula> gamma;
  std::vector<Formula> delta;
};

enum class ModelClass : uint8_t { Chellas, Weiss };

// int: fully intuitionistic clauses; weiss: the box-arrow clause loses its
// upward quantifier and the diamond arrow is rejected; weiss_extended adds
// the (classical) diamond-arrow clause back on top of weiss. Only int and
// weiss are surfaced by the CLI; weiss_extended backs the first-order bridge.
enum class EvalMode : uint8_t { Int, Weiss, WeissExtended };

struct ModelFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string condition;  // order-reflexive | order-transitive | valuation-monotone | c1 | c2 | cw
  std::string witness;    // rendered witness tuple
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Structural defects (dangling ids, out-of-range indices) throw
// ModelFormatError; the report lists only condition violations.
// Conditions are checked at every set value listed in the selection plus
// every upward-closed subset of the worlds.
ValidationReport validate(const Model& m, ModelClass cls);

// Extension of f as a bitmask under the given mode. Throws EvalError for a
// diamond arrow under mode weiss.
uint32_t extension_mask(const Model& m, EvalMode mode, const Formula& f);

bool eval(const Model& m, EvalMode mode, const std::string& world, const Formula& f);
bool eval(const Model& m, EvalMode mode, int world, const Formula& f);

// Worlds where f holds under the fully intuitionistic relation.
std::vector<std::string> extension(const Model& m, const Formula& f);

bool satisfies_biset(const Model& m, EvalMode mode, const std::string& world, const BiSet& bs);

// Disjoint union of two models under a fresh root below everything, with the
// selection lifted componentwise (a triple survives at every set value whose
// component intersection matches). Worlds are renamed "1:<id>" / "2:<id>";
// the point is the root.
PointedModel glue(const Model& m1, const Model& m2);

struct EnumerateParams {
  int max_worlds = 3;
  int min_worlds = 1;
  std::vector<std::string> vars;
  long budget = 100;  // number of models delivered
  uint64_t seed = 0;
  ModelClass cls = ModelClass::Chellas;
};

// Deterministic stream of valid models: exhaustive over one- and two-world
// carriers, seeded random sampling for larger ones. The sink returns false
// to stop early. Selection set values are restricted to upward-closed sets.
void enumerate_models(const EnumerateParams& params, const std::function<bool(const Model&)>& sink);

// Convenience wrapper collecting the stream into a vector.
std::vector<Model> enumerate_models(const EnumerateParams& params);

struct SearchParams {
  ModelClass cls = ModelClass::Chellas;
  int max_worlds = 3;
  long budget = 1000;  // number of candidate models examined
  uint64_t seed = 0;
};

// First pointed model in the deterministic stream that refutes f under the
// class's satisfaction relation. Absence is not a validity proof.
std::optional<PointedModel> countermodel_search(const Formula& f, const SearchParams& params);

// JSON serialization. Parsing rejects unknown keys, dangling world ids and
// carriers larger than kMaxWorlds; `order` holds generator pairs and is
// closed on load.
Model model_from_json(const std::string& text);
std::string model_to_json(const Model& m);
std::string pointed_to_json(const PointedModel& pm);
PointedModel pointed_from_json(const std::string& text);

std::string render_world_set(const Model& m, uint32_t mask);

}  // namespace intck
