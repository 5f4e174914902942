#include "intck/fo.hh"

namespace intck {

namespace {

FoFormula node(FoOp op, std::string name, std::vector<std::string> args, FoFormula l, FoFormula r) {
  auto n = std::make_shared<FoNode>();
  n->op = op;
  n->name = std::move(name);
  n->args = std::move(args);
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

}  // namespace

FoFormula fo_p(const std::string& pred, const std::string& x) {
  return node(FoOp::AtomP, pred, {x}, nullptr, nullptr);
}
FoFormula fo_r(const std::string& x, const std::string& y, const std::string& z) {
  return node(FoOp::AtomR, "", {x, y, z}, nullptr, nullptr);
}
FoFormula fo_o(const std::string& x) { return node(FoOp::AtomO, "", {x}, nullptr, nullptr); }
FoFormula fo_s(const std::string& x) { return node(FoOp::AtomS, "", {x}, nullptr, nullptr); }
FoFormula fo_e(const std::string& x, const std::string& y) {
  return node(FoOp::AtomE, "", {x, y}, nullptr, nullptr);
}
FoFormula fo_eq(const std::string& x, const std::string& y) {
  return node(FoOp::Eq, "", {x, y}, nullptr, nullptr);
}
FoFormula fo_top() { return node(FoOp::Top, "", {}, nullptr, nullptr); }
FoFormula fo_bot() { return node(FoOp::Bot, "", {}, nullptr, nullptr); }
FoFormula fo_and(FoFormula l, FoFormula r) { return node(FoOp::And, "", {}, std::move(l), std::move(r)); }
FoFormula fo_or(FoFormula l, FoFormula r) { return node(FoOp::Or, "", {}, std::move(l), std::move(r)); }
FoFormula fo_imp(FoFormula l, FoFormula r) { return node(FoOp::Imp, "", {}, std::move(l), std::move(r)); }
FoFormula fo_forall(const std::string& x, FoFormula body) {
  return node(FoOp::Forall, x, {}, std::move(body), nullptr);
}
FoFormula fo_exists(const std::string& x, FoFormula body) {
  return node(FoOp::Exists, x, {}, std::move(body), nullptr);
}
FoFormula fo_neg(FoFormula a) { return fo_imp(std::move(a), fo_bot()); }
FoFormula fo_iff(FoFormula l, FoFormula r) { return fo_and(fo_imp(l, r), fo_imp(r, l)); }
FoFormula fo_forall_o(const std::string& x, FoFormula body) {
  return fo_forall(x, fo_imp(fo_o(x), std::move(body)));
}

bool fo_equal(const FoFormula& a, const FoFormula& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->name != b->name || a->args != b->args) return false;
  return fo_equal(a->lhs, b->lhs) && fo_equal(a->rhs, b->rhs);
}

namespace {

void free_vars(const FoFormula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (!f) return;
  switch (f->op) {
    case FoOp::Forall:
    case FoOp::Exists: {
      bool fresh = bound.insert(f->name).second;
      free_vars(f->lhs, bound, out);
      if (fresh) bound.erase(f->name);
      return;
    }
    default:
      for (const auto& v : f->args)
        if (!bound.count(v)) out.insert(v);
      free_vars(f->lhs, bound, out);
      free_vars(f->rhs, bound, out);
  }
}

}  // namespace

std::set<std::string> fo_free_vars(const FoFormula& f) {
  std::set<std::string> bound, out;
  free_vars(f, bound, out);
  return out;
}

std::vector<std::string> fo_binders(const FoFormula& f) {
  std::vector<std::string> out;
  auto walk = [&](auto&& self, const FoFormula& g) -> void {
    if (!g) return;
    if (g->op == FoOp::Forall || g->op == FoOp::Exists) out.push_back(g->name);
    self(self, g->lhs);
    self(self, g->rhs);
  };
  walk(walk, f);
  return out;
}

namespace {

constexpr int kIff = 1, kImp = 2, kOr = 4, kAnd = 5, kUnary = 6;

void rend(const FoFormula& f, int min_prec, std::string& out) {
  auto wrap = [&](int prec, auto&& body) {
    bool paren = prec < min_prec;
    if (paren) out += '(';
    body();
    if (paren) out += ')';
  };
  switch (f->op) {
    case FoOp::AtomP: out += f->name + "(" + f->args[0] + ")"; return;
    case FoOp::AtomR: out += "R(" + f->args[0] + "," + f->args[1] + "," + f->args[2] + ")"; return;
    case FoOp::AtomO: out += "O(" + f->args[0] + ")"; return;
    case FoOp::AtomS: out += "S(" + f->args[0] + ")"; return;
    case FoOp::AtomE: out += "E(" + f->args[0] + "," + f->args[1] + ")"; return;
    case FoOp::Eq:
      wrap(kUnary, [&] { out += f->args[0] + " = " + f->args[1]; });
      return;
    case FoOp::Top: out += 'T'; return;
    case FoOp::Bot: out += 'F'; return;
    case FoOp::And: {
      if (f->lhs->op == FoOp::Imp && f->rhs->op == FoOp::Imp && fo_equal(f->lhs->lhs, f->rhs->rhs) &&
          fo_equal(f->lhs->rhs, f->rhs->lhs)) {
        wrap(kIff, [&] {
          rend(f->lhs->lhs, kIff + 1, out);
          out += " <-> ";
          rend(f->lhs->rhs, kIff, out);
        });
        return;
      }
      wrap(kAnd, [&] {
        rend(f->lhs, kAnd, out);
        out += " & ";
        rend(f->rhs, kAnd + 1, out);
      });
      return;
    }
    case FoOp::Or:
      wrap(kOr, [&] {
        rend(f->lhs, kOr, out);
        out += " | ";
        rend(f->rhs, kOr + 1, out);
      });
      return;
    case FoOp::Imp:
      if (f->rhs->op == FoOp::Bot) {
        wrap(kUnary, [&] {
          out += '~';
          rend(f->lhs, kUnary + 1, out);
        });
        return;
      }
      wrap(kImp, [&] {
        rend(f->lhs, kImp + 1, out);
        out += " -> ";
        rend(f->rhs, kImp, out);
      });
      return;
    case FoOp::Forall:
    case FoOp::Exists:
      wrap(kImp, [&] {
        out += f->op == FoOp::Forall ? "forall " : "exists ";
        out += f->name;
        out += " (";
        rend(f->lhs, 0, out);
        out += ')';
      });
      return;
  }
}

}  // namespace

std::string fo_print(const FoFormula& f) {
  std::string out;
  rend(f, 0, out);
  return out;
}

}  // namespace intck
