#include "intck/fosem.hh"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace intck {

int KripkeSheaf::node_index(const std::string& id) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == id) return static_cast<int>(i);
  return -1;
}

int KripkeSheaf::elem_index(int node, const std::string& id) const {
  const auto& dom = domains[static_cast<size_t>(node)];
  for (size_t i = 0; i < dom.size(); ++i)
    if (dom[i] == id) return static_cast<int>(i);
  return -1;
}

namespace {

// Effective transition map; (w, w) without an entry is the identity.
const std::vector<int>* transition_of(const KripkeSheaf& s, int w, int v) {
  auto it = s.transitions.find({w, v});
  if (it != s.transitions.end()) return &it->second;
  return nullptr;
}

int transport_elem(const KripkeSheaf& s, int w, int v, int elem) {
  const std::vector<int>* t = transition_of(s, w, v);
  if (!t) {
    if (w == v) return elem;
    throw SheafFormatError("missing transition " + s.nodes[static_cast<size_t>(w)] + " > " +
                           s.nodes[static_cast<size_t>(v)]);
  }
  return (*t)[static_cast<size_t>(elem)];
}

void check_structure(const KripkeSheaf& s) {
  size_t n = s.nodes.size();
  if (n == 0) throw SheafFormatError("sheaf has no nodes");
  if (n > static_cast<size_t>(kMaxWorlds)) throw SheafFormatError("sheaf exceeds the 16-node cap");
  if (s.order.size() != n || s.domains.size() != n || s.interp.size() != n)
    throw SheafFormatError("order, domains and interp must cover every node");
  for (size_t w = 0; w < n; ++w) {
    if (s.domains[w].empty())
      throw SheafFormatError("empty domain at node " + s.nodes[w]);
    int dn = static_cast<int>(s.domains[w].size());
    auto in_dom = [&](int e) { return e >= 0 && e < dn; };
    const KripkeSheaf::Interp& i = s.interp[w];
    for (int e : i.o)
      if (!in_dom(e)) throw SheafFormatError("O lists a dangling element at node " + s.nodes[w]);
    for (int e : i.s)
      if (!in_dom(e)) throw SheafFormatError("S lists a dangling element at node " + s.nodes[w]);
    for (const auto& [a, b] : i.in)
      if (!in_dom(a) || !in_dom(b))
        throw SheafFormatError("In lists a dangling element at node " + s.nodes[w]);
    for (const auto& t : i.r)
      if (!in_dom(t[0]) || !in_dom(t[1]) || !in_dom(t[2]))
        throw SheafFormatError("R lists a dangling element at node " + s.nodes[w]);
    for (const auto& [atom, ext] : i.preds)
      for (int e : ext)
        if (!in_dom(e))
          throw SheafFormatError(atom + " lists a dangling element at node " + s.nodes[w]);
  }
  for (const auto& [pair, map] : s.transitions) {
    auto [w, v] = pair;
    if (w < 0 || v < 0 || static_cast<size_t>(w) >= n || static_cast<size_t>(v) >= n)
      throw SheafFormatError("transition between unknown nodes");
    if (!(s.order[static_cast<size_t>(w)] >> v & 1))
      throw SheafFormatError("transition " + s.nodes[static_cast<size_t>(w)] + " > " +
                             s.nodes[static_cast<size_t>(v)] + " is not along the order");
    if (map.size() != s.domains[static_cast<size_t>(w)].size())
      throw SheafFormatError("transition " + s.nodes[static_cast<size_t>(w)] + " > " +
                             s.nodes[static_cast<size_t>(v)] + " must map the whole domain");
    for (int e : map)
      if (e < 0 || static_cast<size_t>(e) >= s.domains[static_cast<size_t>(v)].size())
        throw SheafFormatError("transition " + s.nodes[static_cast<size_t>(w)] + " > " +
                               s.nodes[static_cast<size_t>(v)] + " hits a dangling element");
  }
  for (size_t w = 0; w < n; ++w)
    for (size_t v = 0; v < n; ++v)
      if (w != v && (s.order[w] >> v & 1) && !s.transitions.count({(int)w, (int)v}))
        throw SheafFormatError("missing transition " + s.nodes[w] + " > " + s.nodes[v]);
}

std::string elem_name(const KripkeSheaf& s, int node, int e) {
  return s.domains[static_cast<size_t>(node)][static_cast<size_t>(e)] + "@" +
         s.nodes[static_cast<size_t>(node)];
}

}  // namespace

void detail::check_sheaf_structure(const KripkeSheaf& s) { check_structure(s); }

ValidationReport validate_sheaf(const KripkeSheaf& s) {
  check_structure(s);
  ValidationReport report;
  auto violate = [&](const char* cond, std::string witness, std::string message) {
    report.violations.push_back({cond, std::move(witness), std::move(message)});
  };
  size_t n = s.nodes.size();

  for (size_t w = 0; w < n; ++w)
    if (!(s.order[w] >> w & 1))
      violate("order-reflexive", s.nodes[w], "node is not below itself");
  for (size_t w = 0; w < n; ++w)
    for (size_t v = 0; v < n; ++v)
      if (s.order[w] >> v & 1)
        for (size_t u = 0; u < n; ++u)
          if ((s.order[v] >> u & 1) && !(s.order[w] >> u & 1))
            violate("order-transitive",
                    "(" + s.nodes[w] + "," + s.nodes[v] + "," + s.nodes[u] + ")",
                    "order misses a composite pair");

  for (size_t w = 0; w < n; ++w) {
    auto it = s.transitions.find({(int)w, (int)w});
    if (it == s.transitions.end()) continue;
    for (size_t e = 0; e < it->second.size(); ++e)
      if (it->second[e] != static_cast<int>(e))
        violate("transition-identity", elem_name(s, (int)w, (int)e),
                "loop transition moves an element");
  }

  for (size_t w = 0; w < n; ++w)
    for (size_t v = 0; v < n; ++v) {
      if (!(s.order[w] >> v & 1)) continue;
      for (size_t u = 0; u < n; ++u) {
        if (!(s.order[v] >> u & 1)) continue;
        for (size_t e = 0; e < s.domains[w].size(); ++e) {
          int direct = transport_elem(s, (int)w, (int)u, (int)e);
          int composed = transport_elem(s, (int)v, (int)u, transport_elem(s, (int)w, (int)v, (int)e));
          if (direct != composed)
            violate("transition-composition",
                    elem_name(s, (int)w, (int)e) + " via " + s.nodes[v] + " to " + s.nodes[u],
                    "direct transition differs from the composite");
        }
      }
    }

  for (size_t w = 0; w < n; ++w)
    for (size_t v = 0; v < n; ++v) {
      if (w == v || !(s.order[w] >> v & 1)) continue;
      const KripkeSheaf::Interp& iw = s.interp[w];
      const KripkeSheaf::Interp& iv = s.interp[v];
      auto h = [&](int e) { return transport_elem(s, (int)w, (int)v, e); };
      for (int e : iw.o)
        if (!iv.o.count(h(e)))
          violate("transition-homomorphism", "O " + elem_name(s, (int)w, e),
                  "image leaves O at " + s.nodes[v]);
      for (int e : iw.s)
        if (!iv.s.count(h(e)))
          violate("transition-homomorphism", "S " + elem_name(s, (int)w, e),
                  "image leaves S at " + s.nodes[v]);
      for (const auto& [a, b] : iw.in)
        if (!iv.in.count({h(a), h(b)}))
          violate("transition-homomorphism",
                  "In(" + elem_name(s, (int)w, a) + "," + elem_name(s, (int)w, b) + ")",
                  "membership pair is dropped at " + s.nodes[v]);
      for (const auto& t : iw.r)
        if (!iv.r.count({h(t[0]), h(t[1]), h(t[2])}))
          violate("transition-homomorphism", "R at " + elem_name(s, (int)w, t[0]),
                  "selection triple is dropped at " + s.nodes[v]);
      for (const auto& [atom, ext] : iw.preds) {
        auto target = iv.preds.find(atom);
        for (int e : ext)
          if (target == iv.preds.end() || !target->second.count(h(e)))
            violate("transition-homomorphism", atom + " " + elem_name(s, (int)w, e),
                    "atom extension is dropped at " + s.nodes[v]);
      }
    }

  return report;
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const KripkeSheaf& s) : s_(s) {}

  bool eval(int w, const FoFormula& f, const Assignment& a) {
    const std::vector<std::string>& fv = free_of(f);
    std::vector<int> key;
    key.reserve(fv.size());
    for (const std::string& x : fv) {
      auto it = a.find(x);
      if (it == a.end()) throw EvalError("unassigned variable " + x);
      key.push_back(it->second);
    }
    auto memo_key = std::make_tuple(w, f.get(), std::move(key));
    auto hit = memo_.find(memo_key);
    if (hit != memo_.end()) return hit->second;
    bool value = compute(w, f, a);
    memo_.emplace(std::move(memo_key), value);
    return value;
  }

 private:
  bool compute(int w, const FoFormula& f, const Assignment& a) {
    const KripkeSheaf::Interp& i = s_.interp[static_cast<size_t>(w)];
    switch (f->op) {
      case FoOp::AtomP: {
        auto it = i.preds.find(f->name);
        return it != i.preds.end() && it->second.count(a.at(f->args[0])) > 0;
      }
      case FoOp::AtomO:
        return i.o.count(a.at(f->args[0])) > 0;
      case FoOp::AtomS:
        return i.s.count(a.at(f->args[0])) > 0;
      case FoOp::AtomE:
        return i.in.count({a.at(f->args[0]), a.at(f->args[1])}) > 0;
      case FoOp::AtomR:
        return i.r.count({a.at(f->args[0]), a.at(f->args[1]), a.at(f->args[2])}) > 0;
      case FoOp::Eq:
        return a.at(f->args[0]) == a.at(f->args[1]);
      case FoOp::Top:
        return true;
      case FoOp::Bot:
        return false;
      case FoOp::And:
        return eval(w, f->lhs, a) && eval(w, f->rhs, a);
      case FoOp::Or:
        return eval(w, f->lhs, a) || eval(w, f->rhs, a);
      case FoOp::Imp: {
        for (size_t v = 0; v < s_.nodes.size(); ++v) {
          if (!(s_.order[static_cast<size_t>(w)] >> v & 1)) continue;
          Assignment b = transport(w, static_cast<int>(v), a, f);
          if (eval(static_cast<int>(v), f->lhs, b) && !eval(static_cast<int>(v), f->rhs, b))
            return false;
        }
        return true;
      }
      case FoOp::Forall: {
        for (size_t v = 0; v < s_.nodes.size(); ++v) {
          if (!(s_.order[static_cast<size_t>(w)] >> v & 1)) continue;
          Assignment b = transport(w, static_cast<int>(v), a, f);
          for (size_t e = 0; e < s_.domains[v].size(); ++e) {
            b[f->name] = static_cast<int>(e);
            if (!eval(static_cast<int>(v), f->lhs, b)) return false;
          }
          b.erase(f->name);
        }
        return true;
      }
      case FoOp::Exists: {
        Assignment b = a;
        for (size_t e = 0; e < s_.domains[static_cast<size_t>(w)].size(); ++e) {
          b[f->name] = static_cast<int>(e);
          if (eval(w, f->lhs, b)) return true;
        }
        return false;
      }
    }
    throw std::logic_error("unreachable");
  }

  // Push the free-variable part of the assignment through the transition.
  Assignment transport(int w, int v, const Assignment& a, const FoFormula& f) {
    Assignment b;
    for (const std::string& x : free_of(f)) {
      auto it = a.find(x);
      if (it != a.end()) b.emplace(x, transport_elem(s_, w, v, it->second));
    }
    return b;
  }

  const std::vector<std::string>& free_of(const FoFormula& f) {
    auto it = fv_.find(f.get());
    if (it != fv_.end()) return it->second;
    std::set<std::string> fv = fo_free_vars(f);
    return fv_.emplace(f.get(), std::vector<std::string>(fv.begin(), fv.end())).first->second;
  }

  const KripkeSheaf& s_;
  std::map<const FoNode*, std::vector<std::string>> fv_;
  std::map<std::tuple<int, const FoNode*, std::vector<int>>, bool> memo_;
};

}  // namespace

bool eval_fo(const KripkeSheaf& s, int node, const FoFormula& f, const Assignment& a) {
  if (node < 0 || static_cast<size_t>(node) >= s.nodes.size())
    throw EvalError("node index out of range");
  Evaluator ev(s);
  return ev.eval(node, f, a);
}

bool eval_fo(const KripkeSheaf& s, const std::string& node, const FoFormula& f,
             const std::map<std::string, std::string>& assignment) {
  int w = s.node_index(node);
  if (w < 0) throw EvalError("unknown node: " + node);
  Assignment a;
  for (const auto& [x, id] : assignment) {
    int e = s.elem_index(w, id);
    if (e < 0) throw EvalError("unknown element at " + node + ": " + id);
    a.emplace(x, e);
  }
  return eval_fo(s, w, f, a);
}

std::vector<ThSentence> th_sentences(const std::vector<std::string>& vars) {
  std::vector<ThSentence> out;
  auto add = [&](std::string name, FoFormula f) {
    out.push_back({std::move(name), std::move(f)});
  };

  add("Th1", fo_forall("x", fo_or(fo_s("x"), fo_o("x"))));
  add("Th2", fo_forall("x", fo_neg(fo_and(fo_s("x"), fo_o("x")))));
  for (const std::string& p : vars)
    add("Th3[" + p + "]", fo_forall("x", fo_imp(fo_p(p, "x"), fo_o("x"))));
  add("Th4",
      fo_forall("x", fo_forall("y", fo_imp(fo_e("x", "y"), fo_and(fo_o("x"), fo_s("y"))))));
  add("Th5", fo_forall(
                 "x", fo_forall(
                          "y", fo_forall("z", fo_imp(fo_r("x", "y", "z"),
                                                     fo_and(fo_and(fo_o("x"), fo_s("y")),
                                                            fo_o("z")))))));
  for (const std::string& p : vars)
    add("Th6[" + p + "]",
        fo_exists("x", fo_and(fo_s("x"), fo_forall("y", fo_iff(fo_e("y", "x"), fo_p(p, "y"))))));
  add("Th7", fo_exists("x", fo_and(fo_s("x"), fo_forall_o("y", fo_e("y", "x")))));
  add("Th8", fo_exists("x", fo_and(fo_s("x"), fo_forall("y", fo_neg(fo_e("y", "x"))))));

  auto comprehension = [&](const std::string& name, FoFormula member) {
    add(name, fo_forall("x", fo_forall("y", fo_imp(fo_and(fo_s("x"), fo_s("y")),
                                                   fo_exists("z", fo_and(fo_s("z"),
                                                                         fo_forall_o("w", fo_iff(fo_e("w", "z"),
                                                                                                 std::move(member)))))))));
  };
  comprehension("Th9[&]", fo_and(fo_e("w", "x"), fo_e("w", "y")));
  comprehension("Th9[|]", fo_or(fo_e("w", "x"), fo_e("w", "y")));
  comprehension("Th9[->]", fo_imp(fo_e("w", "x"), fo_e("w", "y")));
  comprehension("Th10", fo_forall("u", fo_imp(fo_r("w", "x", "u"), fo_e("u", "y"))));
  comprehension("Th11", fo_exists("u", fo_and(fo_r("w", "x", "u"), fo_e("u", "y"))));

  add("Th12",
      fo_forall("x", fo_forall("y", fo_imp(fo_and(fo_and(fo_s("x"), fo_s("y")),
                                                  fo_forall_o("z", fo_iff(fo_e("z", "x"),
                                                                          fo_e("z", "y")))),
                                           fo_eq("x", "y")))));
  return out;
}

ThReport check_th(const KripkeSheaf& s, const std::vector<std::string>& vars) {
  ThReport report;
  std::vector<ThSentence> sentences = th_sentences(vars);
  for (size_t w = 0; w < s.nodes.size(); ++w) {
    Evaluator ev(s);
    for (const ThSentence& ts : sentences)
      if (!ev.eval(static_cast<int>(w), ts.sentence, {}))
        report.failures.push_back({ts.name, s.nodes[w]});
  }
  return report;
}

KripkeSheaf classical_to_sheaf(const Model& m, const std::vector<std::string>& vars) {
  for (size_t w = 0; w < m.worlds.size(); ++w)
    if (m.leq[w] != (1u << w))
      throw std::invalid_argument("the classical bridge requires a discrete order");

  KripkeSheaf s;
  s.nodes = {"n0"};
  s.order = {1u};
  auto& dom = s.domains.emplace_back();
  KripkeSheaf::Interp& i = s.interp.emplace_back();

  int n = static_cast<int>(m.worlds.size());
  for (int w = 0; w < n; ++w) {
    i.o.insert(w);
    dom.push_back(m.worlds[static_cast<size_t>(w)]);
  }
  for (uint32_t mask = 0; mask <= m.all_mask(); ++mask) {
    int e = static_cast<int>(dom.size());
    dom.push_back(render_world_set(m, mask));
    i.s.insert(e);
    for (int w = 0; w < n; ++w)
      if (mask >> w & 1) i.in.insert({w, e});
  }
  for (size_t a = 0; a < dom.size(); ++a)
    for (size_t b = a + 1; b < dom.size(); ++b)
      if (dom[a] == dom[b])
        throw std::invalid_argument("world names collide with set element names");
  for (const Model::Triple& t : m.sel) i.r.insert({t.from, n + static_cast<int>(t.set), t.to});
  for (const std::string& p : vars) {
    uint32_t mask = m.val_mask(p);
    std::set<int>& ext = i.preds[p];
    for (int w = 0; w < n; ++w)
      if (mask >> w & 1) ext.insert(w);
  }
  return s;
}

}  // namespace intck
