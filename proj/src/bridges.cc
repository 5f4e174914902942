#include "intck/bridges.hh"

#include <set>
#include <stdexcept>

#include "intck/translate.hh"

namespace intck {

namespace {

Formula ident(const Formula& f) { return f; }

constexpr const char* kA0[] = {"A0.1", "A0.2", "A0.3", "A0.4", "A0.5",
                               "A0.6", "A0.7", "A0.8", "A0.9", "A0.10"};

using Premap = std::initializer_list<std::pair<const char*, const char*>>;

BridgeEntry self() { return {}; }

BridgeEntry entry(BridgeEntry::Kind kind, const char* ref, Dialect d, Premap premap) {
  BridgeEntry e;
  e.kind = kind;
  e.ref = ref;
  for (const auto& [key, pattern] : premap) e.premap.emplace_back(key, parse(d, pattern));
  return e;
}

std::vector<Bridge> build_bridges() {
  std::vector<Bridge> out;

  for (const Calculus& c : registry()) {
    Bridge b;
    b.id = "id_" + c.id;
    b.source = b.target = c.id;
    b.translate = ident;
    b.identity = true;
    for (const std::string& a : c.axioms) b.axioms[a] = self();
    for (const std::string& r : c.rules) b.rules[r] = self();
    out.push_back(std::move(b));
  }

  // Every INTCK axiom and rule beyond the shared core has a CK derivation in
  // the corpus; the two conditional logics share the conditional language, so
  // the formula translation is the identity.
  {
    Bridge b;
    b.id = "appendix_b";
    b.source = "INTCK";
    b.target = "CK";
    b.translate = ident;
    b.identity = true;
    for (const char* a : kA0) b.axioms[a] = self();
    b.axioms["A1"] = self();
    b.axioms["A5"] = self();
    b.axioms["A2"] = entry(BridgeEntry::Kind::Splice, "CK/A2", Dialect::Cond,
                           {{"p", "phi"}, {"q", "psi"}, {"r", "chi"}});
    b.axioms["A3"] = entry(BridgeEntry::Kind::Splice, "CK/A3", Dialect::Cond,
                           {{"p", "phi"}, {"q", "psi"}, {"r", "chi"}});
    b.axioms["A4"] = entry(BridgeEntry::Kind::Splice, "CK/A4", Dialect::Cond,
                           {{"p", "phi"}, {"q", "psi"}, {"r", "chi"}});
    b.axioms["A6"] = entry(BridgeEntry::Kind::Splice, "CK/A6", Dialect::Cond, {{"p", "phi"}});
    b.rules["MP"] = self();
    b.rules["RAbox"] = self();
    b.rules["RCbox"] = self();
    b.rules["RAdia"] = entry(BridgeEntry::Kind::Splice, "CK/RAdia", Dialect::Cond,
                             {{"p", "phi"}, {"q", "psi"}, {"r", "chi"}});
    b.rules["RCdia"] = entry(BridgeEntry::Kind::Splice, "CK/RCdia", Dialect::Cond,
                             {{"p", "phi"}, {"q", "psi"}, {"r", "chi"}});
    Bridge c = b;
    out.push_back(std::move(b));

    c.id = "classical_ck";
    c.source = "INTCK_AX0";
    c.axioms["Ax0"] = self();
    out.push_back(std::move(c));
  }

  // The one CK axiom outside INTCK_AX0, duality, has a derivation there.
  {
    Bridge b;
    b.id = "lemma9";
    b.source = "CK";
    b.target = "INTCK_AX0";
    b.translate = ident;
    b.identity = true;
    for (const char* a : kA0) b.axioms[a] = self();
    b.axioms["A1"] = self();
    b.axioms["A5"] = self();
    b.axioms["Ax0"] = self();
    b.axioms["Ax1"] = entry(BridgeEntry::Kind::Splice, "INTCK_AX0/Ax1", Dialect::Cond,
                            {{"p", "phi"}, {"q", "psi"}});
    b.rules["MP"] = self();
    b.rules["RAbox"] = self();
    b.rules["RCbox"] = self();
    out.push_back(std::move(b));
  }

  // Modal embedding: []phi -> (T => phi), <>phi -> (T ~> phi). Each modal
  // axiom maps to the trivial-antecedent instance of a conditional theorem
  // or axiom, and necessitation maps to the derived rule concluding T => p.
  {
    Bridge b;
    b.id = "tr";
    b.source = "IK";
    b.target = "INTCK";
    b.translate = tr;
    for (const char* a : kA0) b.axioms[a] = self();
    b.axioms["a1"] = entry(BridgeEntry::Kind::Splice, "INTCK/T1", Dialect::Modal,
                           {{"p", "T"}, {"q", "phi"}, {"r", "psi"}});
    b.axioms["a2"] = entry(BridgeEntry::Kind::Splice, "INTCK/T2", Dialect::Modal,
                           {{"p", "T"}, {"q", "phi"}, {"r", "psi"}});
    b.axioms["a3"] = entry(BridgeEntry::Kind::SelfAx, "A6", Dialect::Modal, {{"phi", "T"}});
    b.axioms["a4"] = entry(BridgeEntry::Kind::Splice, "INTCK/dia_or_fwd", Dialect::Modal,
                           {{"p", "T"}, {"q", "phi"}, {"r", "psi"}});
    b.axioms["a5"] = entry(BridgeEntry::Kind::SelfAx, "A4", Dialect::Modal,
                           {{"phi", "T"}, {"psi", "phi"}, {"chi", "psi"}});
    b.rules["MP"] = self();
    b.rules["nec"] =
        entry(BridgeEntry::Kind::Splice, "INTCK/Nec", Dialect::Modal, {{"p", "phi"}, {"q", "T"}});
    out.push_back(std::move(b));
  }

  // The left inverse: antecedents are discarded, so both antecedent
  // congruence rules collapse to a reflexive equivalence.
  {
    Bridge b;
    b.id = "untr";
    b.source = "INTCK";
    b.target = "IK";
    b.translate = untr;
    for (const char* a : kA0) b.axioms[a] = self();
    b.axioms["A1"] = entry(BridgeEntry::Kind::Splice, "IK/t1", Dialect::Cond,
                           {{"p", "psi"}, {"q", "chi"}});
    b.axioms["A2"] = entry(BridgeEntry::Kind::Splice, "IK/t2", Dialect::Cond,
                           {{"p", "psi"}, {"q", "chi"}});
    b.axioms["A3"] = entry(BridgeEntry::Kind::Splice, "IK/t3", Dialect::Cond,
                           {{"p", "psi"}, {"q", "chi"}});
    b.axioms["A4"] = entry(BridgeEntry::Kind::SelfAx, "a5", Dialect::Cond,
                           {{"phi", "psi"}, {"psi", "chi"}});
    b.axioms["A5"] = entry(BridgeEntry::Kind::Splice, "IK/t4", Dialect::Cond, {});
    b.axioms["A6"] = entry(BridgeEntry::Kind::SelfAx, "a3", Dialect::Cond, {});
    b.rules["MP"] = self();
    b.rules["RAbox"] =
        entry(BridgeEntry::Kind::Splice, "INT/iff_refl", Dialect::Cond, {{"p", "phi=>chi"}});
    b.rules["RAdia"] =
        entry(BridgeEntry::Kind::Splice, "INT/iff_refl", Dialect::Cond, {{"p", "phi~>chi"}});
    b.rules["RCbox"] =
        entry(BridgeEntry::Kind::Splice, "IK/r3", Dialect::Cond, {{"p", "phi"}, {"q", "psi"}});
    b.rules["RCdia"] =
        entry(BridgeEntry::Kind::Splice, "IK/r4", Dialect::Cond, {{"p", "phi"}, {"q", "psi"}});
    out.push_back(std::move(b));
  }

  for (const Bridge& b : out) {
    const Calculus* source = find_calculus(b.source);
    if (!source || !find_calculus(b.target))
      throw std::logic_error("bridge " + b.id + " connects unregistered calculi");
    for (const std::string& a : source->axioms)
      if (!b.axioms.count(a))
        throw std::logic_error("bridge " + b.id + " does not cover axiom " + a);
    for (const std::string& r : source->rules)
      if (!b.rules.count(r))
        throw std::logic_error("bridge " + b.id + " does not cover rule " + r);
  }
  return out;
}

Subst to_subst(const std::vector<std::pair<std::string, Formula>>& bindings) {
  Subst sigma;
  for (const auto& [key, value] : bindings) sigma.emplace(key, value);
  return sigma;
}

// A theorem citation survives porting when the cited item still resolves in
// the target and its statement commutes with the formula translation: any
// statement under an identity bridge, propositional statements otherwise
// (both translations are homomorphic below the modalities).
bool citation_portable(const Bridge& b, const CorpusItem& item, const Calculus& target) {
  const Calculus* cited = find_calculus(item.script.calculus);
  if (!cited || !subcalculus(*cited, target)) return false;
  return b.identity || is_propositional(item.statement);
}

// Inline just the theorem citations that cannot survive porting; everything
// else keeps its justification, renumbered.
ProofScript elaborate_for_bridge(const ProofScript& script, const Bridge& b,
                                 const Calculus& target) {
  const auto& thms = detail::verified_corpus();
  ProofScript out;
  out.calculus = script.calculus;
  out.mode = script.mode;
  out.premises = script.premises;

  std::map<int, int> renumber;
  int next = 1;
  for (const ProofLine& l : script.lines) {
    if (l.just.kind == JKind::Thm) {
      auto it = thms.find(l.just.ref);
      if (it == thms.end())
        throw ProofFormatError("cannot elaborate unknown theorem '" + l.just.ref + "'");
      if (!citation_portable(b, *it->second, target)) {
        ProofScript body = substitute_proof(
            elaborate_for_bridge(it->second->script, b, target), to_subst(l.just.bindings));
        if (!equal(body.conclusion(), l.formula))
          throw ProofFormatError("citation of " + l.just.ref +
                                 " does not instantiate its statement");
        std::map<int, int> inner;
        for (const ProofLine& bl : body.lines) {
          ProofLine nl = bl;
          for (int& ref : nl.just.lines) {
            auto ri = inner.find(ref);
            if (ri != inner.end()) ref = ri->second;
          }
          inner[bl.number] = next;
          nl.number = next++;
          out.lines.push_back(std::move(nl));
        }
        renumber[l.number] = next - 1;
        continue;
      }
    }
    ProofLine nl = l;
    if (nl.just.kind != JKind::Premise) {
      for (int& ref : nl.just.lines) {
        auto ri = renumber.find(ref);
        if (ri != renumber.end()) ref = ri->second;
      }
    }
    renumber[l.number] = next;
    nl.number = next++;
    out.lines.push_back(std::move(nl));
  }
  return out;
}

// Bindings of the target scheme or corpus item named by a premapped entry.
std::vector<std::pair<std::string, Formula>> apply_premap(const BridgeEntry& e, const Bridge& b,
                                                          const Subst& source_bindings) {
  std::vector<std::pair<std::string, Formula>> out;
  out.reserve(e.premap.size());
  for (const auto& [key, pattern] : e.premap)
    out.emplace_back(key, b.translate(substitute(pattern, source_bindings)));
  return out;
}

std::set<std::string> script_atoms(const ProofScript& s) {
  std::set<std::string> out;
  auto add = [&](const Formula& f) {
    for (const std::string& a : atoms(f)) out.insert(a);
  };
  for (const Formula& p : s.premises) add(p);
  for (const ProofLine& l : s.lines) {
    add(l.formula);
    for (const auto& [key, value] : l.just.bindings) add(value);
  }
  return out;
}

}  // namespace

const std::vector<Bridge>& bridges() {
  static const std::vector<Bridge> table = build_bridges();
  return table;
}

const Bridge* find_bridge(const std::string& id) {
  for (const Bridge& b : bridges())
    if (b.id == id) return &b;
  return nullptr;
}

ProofScript port_proof(const ProofScript& script, const std::string& target,
                       const std::string& bridge) {
  const Bridge* b = find_bridge(bridge);
  if (!b) throw ProofFormatError("unknown bridge '" + bridge + "'");
  if (b->source != script.calculus)
    throw ProofFormatError("bridge " + b->id + " ports from " + b->source + ", not " +
                           script.calculus);
  if (b->target != target)
    throw ProofFormatError("bridge " + b->id + " ports into " + b->target + ", not " + target);
  Verdict source_ok = check(script);
  if (!source_ok.ok)
    throw std::invalid_argument("source script does not check: line " +
                                std::to_string(source_ok.line) + ": " + source_ok.reason);
  const Calculus* target_calc = find_calculus(target);

  ProofScript src = elaborate_for_bridge(script, *b, *target_calc);

  ProofScript out;
  out.calculus = target;
  out.mode = src.mode == Mode::Proof ? Mode::Proof : Mode::DerivedRule;
  for (const Formula& p : src.premises) out.premises.push_back(b->translate(p));

  std::map<int, const ProofLine*> src_by_number;
  std::map<int, int> remap;  // source line number -> output line number
  int next = 1;
  auto emit = [&](Formula f, Justification j) {
    out.lines.push_back(ProofLine{next, std::move(f), std::move(j)});
    return next++;
  };
  auto out_formula = [&](int number) -> const Formula& {
    return out.lines[static_cast<size_t>(number) - 1].formula;
  };

  // Inline a derived-rule body, mapping its premise lines onto the already
  // ported images of the rule application's cited lines.
  auto splice_rule_body = [&](const CorpusItem& item, const Subst& sigma_item,
                              const std::vector<int>& refs) {
    ProofScript body = substitute_proof(item.script, sigma_item);
    std::map<int, int> inner;
    int last = 0;
    for (const ProofLine& bl : body.lines) {
      if (bl.just.kind == JKind::Premise) {
        int k = bl.just.lines[0];
        if (k < 1 || static_cast<size_t>(k) > refs.size())
          throw std::logic_error("bridge splice of " + item.name + " misuses premise " +
                                 std::to_string(k));
        int ported = remap.at(refs[static_cast<size_t>(k) - 1]);
        if (!equal(bl.formula, out_formula(ported)))
          throw std::logic_error("bridge splice of " + item.name +
                                 " does not instantiate premise " + std::to_string(k));
        inner[bl.number] = ported;
        continue;
      }
      ProofLine nl = bl;
      for (int& ref : nl.just.lines) {
        auto ri = inner.find(ref);
        if (ri != inner.end()) ref = ri->second;
      }
      inner[bl.number] = last = emit(nl.formula, nl.just);
    }
    return last;
  };

  for (const ProofLine& l : src.lines) {
    Formula image = b->translate(l.formula);
    int ported = 0;
    switch (l.just.kind) {
      case JKind::Premise:
        ported = emit(image, l.just);
        break;
      case JKind::MP: {
        Justification j = l.just;
        j.lines = {remap.at(l.just.lines[0]), remap.at(l.just.lines[1])};
        ported = emit(image, std::move(j));
        break;
      }
      case JKind::Thm: {
        Justification j = l.just;
        for (auto& [key, value] : j.bindings) value = b->translate(value);
        ported = emit(image, std::move(j));
        break;
      }
      case JKind::Ax: {
        const BridgeEntry& e = b->axioms.at(l.just.ref);
        if (e.kind == BridgeEntry::Kind::Self) {
          Justification j = l.just;
          for (auto& [key, value] : j.bindings) value = b->translate(value);
          ported = emit(image, std::move(j));
          break;
        }
        auto premapped = apply_premap(e, *b, to_subst(l.just.bindings));
        Justification j;
        j.kind = e.kind == BridgeEntry::Kind::SelfAx ? JKind::Ax : JKind::Thm;
        j.ref = e.ref;
        j.bindings = std::move(premapped);
        ported = emit(image, std::move(j));
        break;
      }
      case JKind::RuleApp: {
        const BridgeEntry& e = b->rules.at(l.just.ref);
        if (e.kind == BridgeEntry::Kind::Self) {
          Justification j = l.just;
          for (int& ref : j.lines) ref = remap.at(ref);
          ported = emit(image, std::move(j));
          break;
        }
        const Rule* rule = find_rule(l.just.ref);
        if (!rule) throw std::logic_error("unknown rule " + l.just.ref + " in checked script");
        // Recover the instantiation the checker matched, conclusion first,
        // then premises for any metavariable the conclusion leaves free.
        auto sigma = match_pattern(rule->conclusion, l.formula);
        if (!sigma)
          throw std::logic_error("rule " + rule->id + " no longer matches a checked line");
        for (size_t k = 0; k < rule->premises.size(); ++k) {
          const ProofLine* prem = src_by_number.at(l.just.lines[k]);
          auto ext = match_pattern(rule->premises[k], prem->formula);
          if (!ext)
            throw std::logic_error("rule " + rule->id + " no longer matches a checked line");
          for (const auto& [mv, value] : *ext) {
            auto it = sigma->find(mv);
            if (it == sigma->end())
              sigma->emplace(mv, value);
            else if (!equal(it->second, value))
              throw std::logic_error("rule " + rule->id + " no longer matches a checked line");
          }
        }
        const CorpusItem* item = find_corpus_item(e.ref);
        if (!item) throw std::logic_error("bridge splice item " + e.ref + " is not verified");
        auto premapped = apply_premap(e, *b, *sigma);
        Subst sigma_item = to_subst(premapped);
        for (const std::string& a : script_atoms(item->script))
          if (!sigma_item.count(a))
            throw std::logic_error("bridge splice of " + e.ref + " leaves atom " + a + " free");
        if (item->script.mode == Mode::Proof) {
          Justification j;
          j.kind = JKind::Thm;
          j.ref = e.ref;
          j.bindings = std::move(premapped);
          ported = emit(image, std::move(j));
        } else {
          ported = splice_rule_body(*item, sigma_item, l.just.lines);
        }
        break;
      }
    }
    if (!equal(out_formula(ported), image))
      throw std::logic_error("ported line " + std::to_string(l.number) +
                             " does not conclude the translated formula");
    src_by_number[l.number] = &l;
    remap[l.number] = ported;
  }

  if (!equal(out.conclusion(), b->translate(src.conclusion())))
    throw std::logic_error("ported script does not conclude the translated statement");
  Verdict v = detail::check_resolved(out, detail::verified_corpus());
  if (!v.ok)
    throw std::logic_error("ported script does not check: line " + std::to_string(v.line) +
                           ": " + v.reason);
  return out;
}

}  // namespace intck
