#include "intck/models.hh"

#include <algorithm>
#include <bit>
#include <map>

namespace intck {

int Model::index_of(const std::string& w) const {
  for (size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == w) return static_cast<int>(i);
  return -1;
}

uint32_t Model::val_mask(const std::string& atom) const {
  for (const auto& [name, mask] : val)
    if (name == atom) return mask;
  return 0;
}

std::string render_world_set(const Model& m, uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < m.worlds.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    if (!first) out += ",";
    out += m.worlds[i];
    first = false;
  }
  return out + "}";
}

namespace {

void check_shape(const Model& m) {
  size_t n = m.worlds.size();
  if (n == 0) throw ModelFormatError("model has no worlds");
  if (n > static_cast<size_t>(kMaxWorlds)) throw ModelFormatError("model exceeds the 16-world cap");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (m.worlds[i] == m.worlds[j]) throw ModelFormatError("duplicate world id: " + m.worlds[i]);
  if (m.leq.size() != n) throw ModelFormatError("order table size mismatch");
  uint32_t all = m.all_mask();
  for (uint32_t row : m.leq)
    if (row & ~all) throw ModelFormatError("order references an unknown world");
  for (const auto& t : m.sel) {
    if (t.from < 0 || t.from >= static_cast<int>(n) || t.to < 0 || t.to >= static_cast<int>(n))
      throw ModelFormatError("selection triple references an unknown world");
    if (t.set & ~all) throw ModelFormatError("selection set references an unknown world");
  }
  for (const auto& [name, mask] : m.val)
    if (mask & ~all) throw ModelFormatError("valuation of " + name + " references an unknown world");
}

bool upward_closed(const Model& m, uint32_t x) {
  uint32_t closure = 0;
  for (size_t w = 0; w < m.worlds.size(); ++w)
    if (x >> w & 1) closure |= m.leq[w];
  return (closure & ~x) == 0;
}

// Set values the frame conditions are checked at: everything listed in the
// selection plus every upward-closed subset.
std::vector<uint32_t> condition_sets(const Model& m) {
  std::vector<uint32_t> xs;
  for (const auto& t : m.sel) xs.push_back(t.set);
  uint32_t all = m.all_mask();
  for (uint32_t x = 0; x <= all; ++x) {
    if (upward_closed(m, x)) xs.push_back(x);
    if (x == all) break;
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<uint32_t> successors_at(const Model& m, uint32_t x) {
  std::vector<uint32_t> succ(m.worlds.size(), 0);
  for (const auto& t : m.sel)
    if (t.set == x) succ[t.from] |= 1u << t.to;
  return succ;
}

}  // namespace

ValidationReport validate(const Model& m, ModelClass cls) {
  check_shape(m);
  ValidationReport rep;
  size_t n = m.worlds.size();
  auto add = [&](std::string cond, std::string witness, std::string msg) {
    rep.violations.push_back({std::move(cond), std::move(witness), std::move(msg)});
  };

  for (size_t w = 0; w < n; ++w)
    if (!(m.leq[w] >> w & 1))
      add("order-reflexive", "(" + m.worlds[w] + ")", "missing " + m.worlds[w] + " <= " + m.worlds[w]);
  for (size_t w = 0; w < n; ++w)
    for (size_t v = 0; v < n; ++v) {
      if (!(m.leq[w] >> v & 1)) continue;
      uint32_t beyond = m.leq[v] & ~m.leq[w];
      if (beyond)
        add("order-transitive",
            "(" + m.worlds[w] + "," + m.worlds[v] + "," + m.worlds[std::countr_zero(beyond)] + ")",
            "order not transitively closed");
    }
  for (const auto& [atom, mask] : m.val)
    for (size_t w = 0; w < n; ++w) {
      if (!(mask >> w & 1)) continue;
      uint32_t lost = m.leq[w] & ~mask;
      if (lost)
        add("valuation-monotone",
            "(" + atom + "," + m.worlds[w] + "," + m.worlds[std::countr_zero(lost)] + ")",
            "valuation of " + atom + " not upward-closed");
    }

  for (uint32_t x : condition_sets(m)) {
    auto succ = successors_at(m, x);
    std::string xs = render_world_set(m, x);
    if (cls == ModelClass::Chellas) {
      // (c1): w <= v and R_X(w,u) imply some u' with R_X(v,u') and u <= u'.
      for (size_t w = 0; w < n; ++w)
        for (size_t v = 0; v < n; ++v) {
          if (!(m.leq[w] >> v & 1)) continue;
          for (size_t u = 0; u < n; ++u) {
            if (!(succ[w] >> u & 1)) continue;
            if (!(succ[v] & m.leq[u]))
              add("c1", "(" + xs + "," + m.worlds[w] + "," + m.worlds[v] + "," + m.worlds[u] + ")",
                  "no successor of " + m.worlds[v] + " at " + xs + " above " + m.worlds[u]);
          }
        }
      // (c2): R_X(w,v) and v <= v' imply some w' >= w with R_X(w',v').
      for (size_t w = 0; w < n; ++w)
        for (size_t v = 0; v < n; ++v) {
          if (!(succ[w] >> v & 1)) continue;
          for (size_t v2 = 0; v2 < n; ++v2) {
            if (!(m.leq[v] >> v2 & 1)) continue;
            bool found = false;
            for (size_t w2 = 0; w2 < n && !found; ++w2)
              found = (m.leq[w] >> w2 & 1) && (succ[w2] >> v2 & 1);
            if (!found)
              add("c2", "(" + xs + "," + m.worlds[w] + "," + m.worlds[v] + "," + m.worlds[v2] + ")",
                  "no world above " + m.worlds[w] + " reaching " + m.worlds[v2] + " at " + xs);
          }
        }
    } else {
      // (cw): w <= v and R_X(v,u) imply some u' with R_X(w,u') and u' <= u.
      for (size_t w = 0; w < n; ++w)
        for (size_t v = 0; v < n; ++v) {
          if (!(m.leq[w] >> v & 1)) continue;
          for (size_t u = 0; u < n; ++u) {
            if (!(succ[v] >> u & 1)) continue;
            bool found = false;
            for (size_t u2 = 0; u2 < n && !found; ++u2)
              found = (succ[w] >> u2 & 1) && (m.leq[u2] >> u & 1);
            if (!found)
              add("cw", "(" + xs + "," + m.worlds[w] + "," + m.worlds[v] + "," + m.worlds[u] + ")",
                  "no successor of " + m.worlds[w] + " at " + xs + " below " + m.worlds[u]);
          }
        }
    }
  }
  return rep;
}

namespace {

struct Evaluator {
  const Model& m;
  EvalMode mode;
  std::map<const FNode*, uint32_t> memo;

  uint32_t ext(const Formula& f) {
    auto it = memo.find(f.get());
    if (it != memo.end()) return it->second;
    uint32_t r = compute(f);
    memo.emplace(f.get(), r);
    return r;
  }

  uint32_t compute(const Formula& f) {
    size_t n = m.worlds.size();
    uint32_t all = m.all_mask();
    switch (f->op) {
      case Op::Var: return m.val_mask(f->name);
      case Op::Top: return all;
      case Op::Bot: return 0;
      case Op::And: return ext(f->lhs) & ext(f->rhs);
      case Op::Or: return ext(f->lhs) | ext(f->rhs);
      case Op::Imp: {
        uint32_t a = ext(f->lhs), b = ext(f->rhs);
        uint32_t bad = a & ~b;  // worlds where the implication fails locally
        uint32_t out = 0;
        for (size_t w = 0; w < n; ++w)
          if (!(m.leq[w] & bad)) out |= 1u << w;
        return out;
      }
      case Op::BoxArrow: {
        uint32_t x = ext(f->lhs), b = ext(f->rhs);
        auto succ = successors_at(m, x);
        uint32_t local = 0;  // worlds whose R_X successors all satisfy rhs
        for (size_t w = 0; w < n; ++w)
          if (!(succ[w] & ~b)) local |= 1u << w;
        if (mode != EvalMode::Int) return local;
        uint32_t out = 0;
        for (size_t w = 0; w < n; ++w)
          if (!(m.leq[w] & ~local)) out |= 1u << w;
        return out;
      }
      case Op::DiaArrow: {
        if (mode == EvalMode::Weiss)
          throw EvalError("diamond arrow is not part of the weiss satisfaction relation");
        uint32_t x = ext(f->lhs), b = ext(f->rhs);
        auto succ = successors_at(m, x);
        uint32_t out = 0;
        for (size_t w = 0; w < n; ++w)
          if (succ[w] & b) out |= 1u << w;
        return out;
      }
      case Op::Box:
      case Op::Dia:
        throw EvalError("modal formula evaluated against a conditional model");
    }
    return 0;
  }
};

}  // namespace

uint32_t extension_mask(const Model& m, EvalMode mode, const Formula& f) {
  Evaluator ev{m, mode, {}};
  return ev.ext(f);
}

bool eval(const Model& m, EvalMode mode, int world, const Formula& f) {
  if (world < 0 || world >= static_cast<int>(m.worlds.size())) throw EvalError("unknown world index");
  return extension_mask(m, mode, f) >> world & 1;
}

bool eval(const Model& m, EvalMode mode, const std::string& world, const Formula& f) {
  int w = m.index_of(world);
  if (w < 0) throw EvalError("unknown world: " + world);
  return eval(m, mode, w, f);
}

std::vector<std::string> extension(const Model& m, const Formula& f) {
  uint32_t mask = extension_mask(m, EvalMode::Int, f);
  std::vector<std::string> out;
  for (size_t w = 0; w < m.worlds.size(); ++w)
    if (mask >> w & 1) out.push_back(m.worlds[w]);
  return out;
}

bool satisfies_biset(const Model& m, EvalMode mode, const std::string& world, const BiSet& bs) {
  for (const auto& g : bs.gamma)
    if (!eval(m, mode, world, g)) return false;
  for (const auto& d : bs.delta)
    if (eval(m, mode, world, d)) return false;
  return true;
}

PointedModel glue(const Model& m1, const Model& m2) {
  check_shape(m1);
  check_shape(m2);
  size_t n1 = m1.worlds.size(), n2 = m2.worlds.size();
  size_t n = n1 + n2 + 1;
  if (n > 12) throw ModelFormatError("glued model would exceed the 12-world gluing cap");

  Model g;
  g.worlds.push_back("root");
  for (const auto& w : m1.worlds) g.worlds.push_back("1:" + w);
  for (const auto& w : m2.worlds) g.worlds.push_back("2:" + w);
  int off1 = 1, off2 = 1 + static_cast<int>(n1);

  g.leq.assign(n, 0);
  g.leq[0] = (1u << n) - 1;  // root below everything
  for (size_t w = 0; w < n1; ++w) g.leq[off1 + w] = m1.leq[w] << off1;
  for (size_t w = 0; w < n2; ++w) g.leq[off2 + w] = m2.leq[w] << off2;

  // Lift each component triple to every set value with the right component
  // intersection.
  uint32_t mask1 = ((1u << n1) - 1) << off1;
  uint32_t all = (1u << n) - 1;
  uint32_t other1 = all & ~mask1;
  uint32_t mask2 = ((1u << n2) - 1) << off2;
  uint32_t other2 = all & ~mask2;
  for (const auto& t : m1.sel) {
    uint32_t base = t.set << off1;
    // iterate over subsets of other1, added to base
    uint32_t rest = other1;
    for (uint32_t s = 0;; s = (s - other1) & other1) {
      g.sel.push_back({t.from + off1, base | s, t.to + off1});
      if (s == rest) break;
    }
  }
  for (const auto& t : m2.sel) {
    uint32_t base = t.set << off2;
    uint32_t rest = other2;
    for (uint32_t s = 0;; s = (s - other2) & other2) {
      g.sel.push_back({t.from + off2, base | s, t.to + off2});
      if (s == rest) break;
    }
  }
  std::sort(g.sel.begin(), g.sel.end());
  g.sel.erase(std::unique(g.sel.begin(), g.sel.end()), g.sel.end());

  std::map<std::string, uint32_t> val;
  for (const auto& [atom, mask] : m1.val) val[atom] |= mask << off1;
  for (const auto& [atom, mask] : m2.val) val[atom] |= mask << off2;
  g.val.assign(val.begin(), val.end());

  return {std::move(g), "root"};
}

}  // namespace intck
