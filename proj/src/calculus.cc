#include "intck/calculus.hh"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace intck {

bool fragment_within(Fragment sub, Fragment sup) {
  if (sub == sup) return true;
  if (sub == Fragment::Propositional) return true;
  if (sub == Fragment::CondBoxOnly) return sup == Fragment::CondFull;
  return false;
}

bool in_fragment(const Formula& f, Fragment frag) {
  switch (frag) {
    case Fragment::Propositional: return is_propositional(f);
    case Fragment::CondBoxOnly: return is_cond(f) && !contains_dia_arrow(f);
    case Fragment::CondFull: return is_cond(f);
    case Fragment::Modal: return is_modal(f);
  }
  return false;
}

static const char* fragment_name(Fragment frag) {
  switch (frag) {
    case Fragment::Propositional: return "propositional";
    case Fragment::CondBoxOnly: return "box-conditional";
    case Fragment::CondFull: return "conditional";
    case Fragment::Modal: return "modal";
  }
  return "?";
}

bool Calculus::has_axiom(const std::string& scheme_id) const {
  return std::find(axioms.begin(), axioms.end(), scheme_id) != axioms.end();
}

bool Calculus::has_rule(const std::string& rule_id) const {
  return std::find(rules.begin(), rules.end(), rule_id) != rules.end();
}

namespace {

std::vector<std::string> a0_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 10; ++i) ids.push_back("A0." + std::to_string(i));
  return ids;
}

std::vector<Scheme> build_schemes() {
  auto c = [](const char* id, const char* pat) {
    return Scheme{id, parse(Dialect::Cond, pat)};
  };
  auto m = [](const char* id, const char* pat) {
    return Scheme{id, parse(Dialect::Modal, pat)};
  };
  std::vector<Scheme> out;
  out.push_back(c("A0.1", "phi->(psi->phi)"));
  out.push_back(c("A0.2", "(phi->(psi->chi))->((phi->psi)->(phi->chi))"));
  out.push_back(c("A0.3", "(phi&psi)->phi"));
  out.push_back(c("A0.4", "(phi&psi)->psi"));
  out.push_back(c("A0.5", "phi->(psi->(phi&psi))"));
  out.push_back(c("A0.6", "phi->(phi|psi)"));
  out.push_back(c("A0.7", "psi->(phi|psi)"));
  out.push_back(c("A0.8", "(phi->chi)->((psi->chi)->((phi|psi)->chi))"));
  out.push_back(c("A0.9", "F->phi"));
  out.push_back(c("A0.10", "phi->T"));
  out.push_back(c("A1", "((phi=>psi)&(phi=>chi))<->(phi=>(psi&chi))"));
  out.push_back(c("A2", "((phi~>psi)&(phi=>chi))->(phi~>(psi&chi))"));
  out.push_back(c("A3", "(phi~>(psi|chi))<->((phi~>psi)|(phi~>chi))"));
  out.push_back(c("A4", "((phi~>psi)->(phi=>chi))->(phi=>(psi->chi))"));
  out.push_back(c("A5", "phi=>T"));
  out.push_back(c("A6", "~(phi~>F)"));
  out.push_back(c("Ax0", "phi|~phi"));
  out.push_back(c("Ax1", "(phi~>psi)<->~(phi=>~psi)"));
  out.push_back(m("a1", "[](phi->psi)->([]phi->[]psi)"));
  out.push_back(m("a2", "[](phi->psi)->(<>phi-><>psi)"));
  out.push_back(m("a3", "~<>F"));
  out.push_back(m("a4", "<>(phi|psi)->(<>phi|<>psi)"));
  out.push_back(m("a5", "(<>phi->[]psi)->[](phi->psi)"));
  return out;
}

std::vector<Rule> build_rules() {
  auto c = [](const char* id, const char* prem, const char* concl) {
    return Rule{id, {parse(Dialect::Cond, prem)}, parse(Dialect::Cond, concl)};
  };
  std::vector<Rule> out;
  // MP is applied through the dedicated "mp i j" form; the entry only
  // records calculus membership.
  out.push_back(Rule{"MP", {}, nullptr});
  out.push_back(c("RAbox", "phi<->psi", "(phi=>chi)<->(psi=>chi)"));
  out.push_back(c("RCbox", "phi<->psi", "(chi=>phi)<->(chi=>psi)"));
  out.push_back(c("RAdia", "phi<->psi", "(phi~>chi)<->(psi~>chi)"));
  out.push_back(c("RCdia", "phi<->psi", "(chi~>phi)<->(chi~>psi)"));
  out.push_back(Rule{"nec", {parse(Dialect::Modal, "phi")},
                     parse(Dialect::Modal, "[]phi")});
  return out;
}

std::vector<Calculus> build_registry() {
  std::vector<Calculus> out;
  std::vector<std::string> a0 = a0_ids();

  Calculus int_;
  int_.id = "INT";
  int_.axioms = a0;
  int_.rules = {"MP"};
  int_.fragment = Fragment::Propositional;
  int_.dialect = Dialect::Cond;
  out.push_back(int_);

  Calculus intck;
  intck.id = "INTCK";
  intck.axioms = a0;
  for (const char* id : {"A1", "A2", "A3", "A4", "A5", "A6"}) intck.axioms.push_back(id);
  intck.rules = {"MP", "RAbox", "RCbox", "RAdia", "RCdia"};
  intck.fragment = Fragment::CondFull;
  intck.dialect = Dialect::Cond;
  out.push_back(intck);

  Calculus ax0 = intck;
  ax0.id = "INTCK_AX0";
  ax0.axioms.push_back("Ax0");
  out.push_back(ax0);

  Calculus ck;
  ck.id = "CK";
  ck.axioms = a0;
  for (const char* id : {"A1", "A5", "Ax0", "Ax1"}) ck.axioms.push_back(id);
  ck.rules = {"MP", "RAbox", "RCbox"};
  ck.fragment = Fragment::CondFull;
  ck.dialect = Dialect::Cond;
  out.push_back(ck);

  Calculus ickw;
  ickw.id = "ICK_W";
  ickw.axioms = a0;
  for (const char* id : {"A1", "A5"}) ickw.axioms.push_back(id);
  ickw.rules = {"MP", "RAbox", "RCbox"};
  ickw.fragment = Fragment::CondBoxOnly;
  ickw.dialect = Dialect::Cond;
  out.push_back(ickw);

  Calculus ik;
  ik.id = "IK";
  ik.axioms = a0;
  for (const char* id : {"a1", "a2", "a3", "a4", "a5"}) ik.axioms.push_back(id);
  ik.rules = {"MP", "nec"};
  ik.fragment = Fragment::Modal;
  ik.dialect = Dialect::Modal;
  out.push_back(ik);

  return out;
}

}  // namespace

const std::vector<Calculus>& registry() {
  static const std::vector<Calculus> reg = build_registry();
  return reg;
}

static const std::vector<Scheme>& schemes() {
  static const std::vector<Scheme> s = build_schemes();
  return s;
}

static const std::vector<Rule>& rules_table() {
  static const std::vector<Rule> r = build_rules();
  return r;
}

const Calculus* find_calculus(const std::string& id) {
  for (const Calculus& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

const Scheme* find_scheme(const std::string& id) {
  for (const Scheme& s : schemes())
    if (s.id == id) return &s;
  return nullptr;
}

const Rule* find_rule(const std::string& id) {
  for (const Rule& r : rules_table())
    if (r.id == id) return &r;
  return nullptr;
}

bool subcalculus(const Calculus& sub, const Calculus& sup) {
  for (const std::string& a : sub.axioms)
    if (!sup.has_axiom(a)) return false;
  for (const std::string& r : sub.rules)
    if (!sup.has_rule(r)) return false;
  return fragment_within(sub.fragment, sup.fragment);
}

namespace {

bool match_into(const Formula& pattern, const Formula& f, Subst& sigma) {
  if (pattern->op == Op::Var) {
    auto it = sigma.find(pattern->name);
    if (it != sigma.end()) return equal(it->second, f);
    sigma.emplace(pattern->name, f);
    return true;
  }
  if (pattern->op != f->op) return false;
  if (pattern->lhs && !match_into(pattern->lhs, f->lhs, sigma)) return false;
  if (pattern->rhs && !match_into(pattern->rhs, f->rhs, sigma)) return false;
  return true;
}

}  // namespace

std::optional<Subst> match_pattern(const Formula& pattern, const Formula& f) {
  Subst sigma;
  if (!match_into(pattern, f, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Subst> match_scheme(const Scheme& s, const Formula& f) {
  return match_pattern(s.pattern, f);
}

const Formula& ProofScript::conclusion() const {
  if (lines.empty()) throw ProofFormatError("script has no lines");
  return lines.back().formula;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

// Splits "k1=v1 k2=v2 ..." where every '=' not followed by '>' separates a
// key from a value. Formula text only contains '=' inside "=>", so the
// values may hold arbitrary printed formulas.
std::vector<std::pair<std::string, std::string>> split_bindings(const std::string& tail,
                                                                int lineno) {
  std::vector<size_t> eq_pos;
  for (size_t i = 0; i < tail.size(); ++i) {
    if (tail[i] == '=' && (i + 1 >= tail.size() || tail[i + 1] != '>')) eq_pos.push_back(i);
  }
  std::vector<std::pair<std::string, std::string>> out;
  std::vector<size_t> key_start;
  for (size_t pos : eq_pos) {
    size_t b = pos;
    while (b > 0 && ident_char(tail[b - 1])) --b;
    if (b == pos)
      throw ProofFormatError("binding '=' without a key", lineno);
    if (b > 0 && !std::isspace(static_cast<unsigned char>(tail[b - 1])))
      throw ProofFormatError("binding key must follow whitespace", lineno);
    key_start.push_back(b);
  }
  if (!eq_pos.empty() && !trim(tail.substr(0, key_start[0])).empty())
    throw ProofFormatError("stray text before first binding", lineno);
  for (size_t k = 0; k < eq_pos.size(); ++k) {
    std::string key = tail.substr(key_start[k], eq_pos[k] - key_start[k]);
    size_t vb = eq_pos[k] + 1;
    size_t ve = (k + 1 < eq_pos.size()) ? key_start[k + 1] : tail.size();
    std::string value = trim(tail.substr(vb, ve - vb));
    if (value.empty()) throw ProofFormatError("empty binding value for " + key, lineno);
    out.emplace_back(key, value);
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int lineno, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ProofFormatError(std::string("expected a positive ") + what + ", got '" + tok + "'",
                           lineno);
  }
}

Formula parse_formula_at(Dialect dialect, const std::string& text, int lineno) {
  try {
    return parse(dialect, text);
  } catch (const ParseError& e) {
    throw ProofFormatError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
  }
}

Justification parse_justification(const std::string& text, Dialect dialect, int lineno) {
  std::string just = trim(text);
  size_t sp = just.find_first_of(" \t");
  std::string kind = sp == std::string::npos ? just : just.substr(0, sp);
  std::string rest = sp == std::string::npos ? "" : trim(just.substr(sp + 1));

  Justification j;
  if (kind == "ax" || kind == "thm") {
    j.kind = kind == "ax" ? JKind::Ax : JKind::Thm;
    size_t sp2 = rest.find_first_of(" \t");
    j.ref = sp2 == std::string::npos ? rest : rest.substr(0, sp2);
    if (j.ref.empty())
      throw ProofFormatError(std::string(kind == "ax" ? "ax" : "thm") + " needs a name", lineno);
    std::string tail = sp2 == std::string::npos ? "" : rest.substr(sp2 + 1);
    for (auto& [key, value] : split_bindings(tail, lineno))
      j.bindings.emplace_back(key, parse_formula_at(dialect, value, lineno));
    return j;
  }
  std::vector<std::string> toks = split_ws(rest);
  if (kind == "pre") {
    if (toks.size() != 1) throw ProofFormatError("pre takes one premise index", lineno);
    j.kind = JKind::Premise;
    j.lines = {parse_int(toks[0], lineno, "premise index")};
    return j;
  }
  if (kind == "mp") {
    if (toks.size() != 2) throw ProofFormatError("mp takes two line numbers", lineno);
    j.kind = JKind::MP;
    j.lines = {parse_int(toks[0], lineno, "line number"),
               parse_int(toks[1], lineno, "line number")};
    return j;
  }
  if (kind == "rule") {
    if (toks.size() < 2) throw ProofFormatError("rule takes a name and premise lines", lineno);
    j.kind = JKind::RuleApp;
    j.ref = toks[0];
    for (size_t i = 1; i < toks.size(); ++i)
      j.lines.push_back(parse_int(toks[i], lineno, "line number"));
    return j;
  }
  throw ProofFormatError("unknown justification '" + kind + "'", lineno);
}

}  // namespace

ProofScript parse_proof(const std::string& text) {
  ProofScript script;
  bool have_calculus = false, have_mode = false, in_lines = false;
  Dialect dialect = Dialect::Cond;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line.rfind("calculus ", 0) == 0) {
      if (have_calculus) throw ProofFormatError("duplicate calculus header", lineno);
      script.calculus = trim(line.substr(9));
      const Calculus* c = find_calculus(script.calculus);
      if (!c) throw ProofFormatError("unknown calculus '" + script.calculus + "'", lineno);
      dialect = c->dialect;
      have_calculus = true;
      continue;
    }
    if (line.rfind("mode ", 0) == 0) {
      std::string m = trim(line.substr(5));
      if (m == "proof") script.mode = Mode::Proof;
      else if (m == "derivation") script.mode = Mode::Derivation;
      else if (m == "derived_rule") script.mode = Mode::DerivedRule;
      else throw ProofFormatError("unknown mode '" + m + "'", lineno);
      have_mode = true;
      continue;
    }
    if (!have_calculus)
      throw ProofFormatError("calculus header must come first", lineno);
    if (line.rfind("premise ", 0) == 0) {
      if (in_lines) throw ProofFormatError("premises must precede proof lines", lineno);
      script.premises.push_back(parse_formula_at(dialect, trim(line.substr(8)), lineno));
      continue;
    }

    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ProofFormatError("expected '<n>: <formula> ; <justification>'", lineno);
    int number = parse_int(trim(line.substr(0, colon)), lineno, "line number");
    std::string body = line.substr(colon + 1);
    size_t semi = body.find(';');
    if (semi == std::string::npos)
      throw ProofFormatError("proof line needs '; <justification>'", lineno);

    ProofLine pl;
    pl.number = number;
    pl.formula = parse_formula_at(dialect, trim(body.substr(0, semi)), lineno);
    pl.just = parse_justification(body.substr(semi + 1), dialect, lineno);
    script.lines.push_back(pl);
    in_lines = true;
  }
  if (!have_calculus) throw ProofFormatError("missing calculus header");
  if (!have_mode) throw ProofFormatError("missing mode header");
  if (script.lines.empty()) throw ProofFormatError("script has no lines");
  return script;
}

std::string print_proof(const ProofScript& script) {
  std::ostringstream out;
  out << "calculus " << script.calculus << "\n";
  out << "mode "
      << (script.mode == Mode::Proof ? "proof"
          : script.mode == Mode::Derivation ? "derivation" : "derived_rule")
      << "\n";
  for (const Formula& p : script.premises) out << "premise " << print(p) << "\n";
  for (const ProofLine& l : script.lines) {
    out << l.number << ": " << print(l.formula) << " ; ";
    switch (l.just.kind) {
      case JKind::Ax: out << "ax " << l.just.ref; break;
      case JKind::Premise: out << "pre " << l.just.lines[0]; break;
      case JKind::MP: out << "mp " << l.just.lines[0] << " " << l.just.lines[1]; break;
      case JKind::RuleApp:
        out << "rule " << l.just.ref;
        for (int n : l.just.lines) out << " " << n;
        break;
      case JKind::Thm: out << "thm " << l.just.ref; break;
    }
    if (l.just.kind == JKind::Ax || l.just.kind == JKind::Thm)
      for (const auto& [key, value] : l.just.bindings) out << " " << key << "=" << print(value);
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Checking

namespace {

Verdict reject(int line, std::string reason) { return Verdict{false, line, std::move(reason)}; }

// Bindings as a map; empty optional when a key repeats.
std::optional<Subst> bindings_map(const std::vector<std::pair<std::string, Formula>>& bs) {
  Subst sigma;
  for (const auto& [key, value] : bs)
    if (!sigma.emplace(key, value).second) return std::nullopt;
  return sigma;
}

// Checks binding keys against the variables of a pattern formula.
std::string binding_key_defect(const Formula& pattern, const Subst& sigma) {
  std::vector<std::string> need = atoms(pattern);
  for (const std::string& v : need)
    if (!sigma.count(v)) return "binding omits " + v;
  std::set<std::string> need_set(need.begin(), need.end());
  for (const auto& [key, value] : sigma) {
    (void)value;
    if (!need_set.count(key)) return "binding names unknown metavariable " + key;
  }
  return "";
}

}  // namespace

namespace detail {

Verdict check_resolved(const ProofScript& script,
                       const std::map<std::string, const CorpusItem*>& thms) {
  const Calculus* calc = find_calculus(script.calculus);
  if (!calc) return reject(0, "unknown calculus '" + script.calculus + "'");
  if (script.mode == Mode::Proof && !script.premises.empty())
    return reject(0, "a proof takes no premises");
  if (script.lines.empty()) return reject(0, "script has no lines");
  for (const Formula& p : script.premises)
    if (!in_fragment(p, calc->fragment))
      return reject(0, std::string("premise outside the ") + fragment_name(calc->fragment) +
                           " fragment: " + print(p));

  std::map<int, const ProofLine*> by_number;
  int last = 0;
  for (const ProofLine& l : script.lines) {
    if (l.number <= last)
      return reject(l.number, "line numbers must strictly increase");
    last = l.number;
    if (!in_fragment(l.formula, calc->fragment))
      return reject(l.number, std::string("formula outside the ") +
                                   fragment_name(calc->fragment) + " fragment");

    auto earlier = [&](int n) -> const ProofLine* {
      auto it = by_number.find(n);
      return it == by_number.end() ? nullptr : it->second;
    };

    switch (l.just.kind) {
      case JKind::Ax: {
        if (script.mode == Mode::Derivation)
          return reject(l.number, "axiom instances are not allowed in a derivation");
        if (!calc->has_axiom(l.just.ref))
          return reject(l.number, "scheme " + l.just.ref + " is not an axiom of " + calc->id);
        const Scheme* s = find_scheme(l.just.ref);
        if (!s) return reject(l.number, "unknown scheme '" + l.just.ref + "'");
        auto sigma = bindings_map(l.just.bindings);
        if (!sigma) return reject(l.number, "duplicate binding key");
        std::string defect = binding_key_defect(s->pattern, *sigma);
        if (!defect.empty()) return reject(l.number, defect);
        if (!equal(substitute(s->pattern, *sigma), l.formula))
          return reject(l.number, "formula is not that instance of " + l.just.ref);
        break;
      }
      case JKind::Premise: {
        if (script.mode == Mode::Proof)
          return reject(l.number, "premise references are not allowed in a proof");
        int k = l.just.lines[0];
        if (k < 1 || static_cast<size_t>(k) > script.premises.size())
          return reject(l.number, "premise index " + std::to_string(k) + " out of range");
        if (!equal(l.formula, script.premises[k - 1]))
          return reject(l.number, "formula differs from premise " + std::to_string(k));
        break;
      }
      case JKind::MP: {
        const ProofLine* ante = earlier(l.just.lines[0]);
        const ProofLine* impl = earlier(l.just.lines[1]);
        if (!ante || !impl)
          return reject(l.number, "mp must cite earlier lines");
        if (impl->formula->op != Op::Imp)
          return reject(l.number, "line " + std::to_string(impl->number) +
                                       " is not an implication");
        if (!equal(impl->formula->lhs, ante->formula))
          return reject(l.number, "line " + std::to_string(ante->number) +
                                       " does not match the antecedent of line " +
                                       std::to_string(impl->number));
        if (!equal(impl->formula->rhs, l.formula))
          return reject(l.number, "formula differs from the consequent of line " +
                                       std::to_string(impl->number));
        break;
      }
      case JKind::RuleApp: {
        if (script.mode == Mode::Derivation)
          return reject(l.number, "rule applications are not allowed in a derivation");
        if (l.just.ref == "MP")
          return reject(l.number, "modus ponens is written 'mp <i> <j>'");
        if (!calc->has_rule(l.just.ref))
          return reject(l.number, "rule " + l.just.ref + " is not a rule of " + calc->id);
        const Rule* r = find_rule(l.just.ref);
        if (!r) return reject(l.number, "unknown rule '" + l.just.ref + "'");
        if (l.just.lines.size() != r->premises.size())
          return reject(l.number, "rule " + r->id + " takes " +
                                       std::to_string(r->premises.size()) + " premise line(s)");
        auto sigma = match_pattern(r->conclusion, l.formula);
        if (!sigma)
          return reject(l.number, "formula does not match the conclusion of " + r->id);
        for (size_t k = 0; k < r->premises.size(); ++k) {
          const ProofLine* prem = earlier(l.just.lines[k]);
          if (!prem) return reject(l.number, "rule must cite earlier lines");
          for (const std::string& v : atoms(r->premises[k]))
            if (!sigma->count(v))
              return reject(l.number, "rule premise metavariable " + v + " is unbound");
          if (!equal(substitute(r->premises[k], *sigma), prem->formula))
            return reject(l.number, "line " + std::to_string(prem->number) +
                                         " is not the required premise of " + r->id);
        }
        break;
      }
      case JKind::Thm: {
        auto it = thms.find(l.just.ref);
        if (it == thms.end())
          return reject(l.number, "unknown theorem '" + l.just.ref + "'");
        const CorpusItem* item = it->second;
        if (item->script.mode != Mode::Proof)
          return reject(l.number, l.just.ref + " is not a theorem (it has premises)");
        const Calculus* cited = find_calculus(item->script.calculus);
        if (!cited || !subcalculus(*cited, *calc))
          return reject(l.number, item->script.calculus + " is not a subcalculus of " + calc->id);
        auto sigma = bindings_map(l.just.bindings);
        if (!sigma) return reject(l.number, "duplicate binding key");
        std::string defect = binding_key_defect(item->statement, *sigma);
        if (!defect.empty()) return reject(l.number, defect);
        if (!equal(substitute(item->statement, *sigma), l.formula))
          return reject(l.number, "formula is not that instance of " + l.just.ref);
        break;
      }
    }
    by_number[l.number] = &l;
  }
  return Verdict{true, 0, ""};
}

}  // namespace detail

Verdict check(const ProofScript& script) {
  return detail::check_resolved(script, detail::verified_corpus());
}

ProofScript substitute_proof(const ProofScript& script, const Subst& sigma) {
  ProofScript out;
  out.calculus = script.calculus;
  out.mode = script.mode;
  for (const Formula& p : script.premises) out.premises.push_back(substitute(p, sigma));
  for (const ProofLine& l : script.lines) {
    ProofLine nl = l;
    nl.formula = substitute(l.formula, sigma);
    for (auto& [key, value] : nl.just.bindings) value = substitute(value, sigma);
    out.lines.push_back(std::move(nl));
  }
  return out;
}

namespace detail {

ProofScript elaborate_resolved(const ProofScript& script,
                               const std::map<std::string, const CorpusItem*>& thms) {
  ProofScript out;
  out.calculus = script.calculus;
  out.mode = script.mode == Mode::Derivation ? Mode::DerivedRule : script.mode;
  out.premises = script.premises;

  std::map<int, int> renumber;
  int next = 1;
  for (const ProofLine& l : script.lines) {
    if (l.just.kind == JKind::Thm) {
      auto it = thms.find(l.just.ref);
      if (it == thms.end())
        throw ProofFormatError("cannot elaborate unknown theorem '" + l.just.ref + "'");
      auto sigma = bindings_map(l.just.bindings);
      if (!sigma) throw ProofFormatError("duplicate binding key citing " + l.just.ref);
      ProofScript body =
          substitute_proof(elaborate_resolved(it->second->script, thms), *sigma);
      if (!equal(body.conclusion(), l.formula))
        throw ProofFormatError("citation of " + l.just.ref + " does not instantiate its statement");
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

}  // namespace detail

ProofScript elaborate(const ProofScript& script) {
  return detail::elaborate_resolved(script, detail::verified_corpus());
}

}  // namespace intck
