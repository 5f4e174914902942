#include "intck/syntax.hh"

#include <cassert>
#include <sstream>

namespace intck {

namespace {

bool valid_atom(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

Formula node(Op op, std::string name, Formula l, Formula r) {
  auto n = std::make_shared<FNode>();
  n->op = op;
  n->name = std::move(name);
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

}  // namespace

Formula mk_var(const std::string& name) {
  if (!valid_atom(name)) throw std::invalid_argument("bad atom name: " + name);
  return node(Op::Var, name, nullptr, nullptr);
}
Formula mk_top() { return node(Op::Top, "", nullptr, nullptr); }
Formula mk_bot() { return node(Op::Bot, "", nullptr, nullptr); }
Formula mk_and(Formula l, Formula r) { return node(Op::And, "", std::move(l), std::move(r)); }
Formula mk_or(Formula l, Formula r) { return node(Op::Or, "", std::move(l), std::move(r)); }
Formula mk_imp(Formula l, Formula r) { return node(Op::Imp, "", std::move(l), std::move(r)); }
Formula mk_box_arrow(Formula l, Formula r) { return node(Op::BoxArrow, "", std::move(l), std::move(r)); }
Formula mk_dia_arrow(Formula l, Formula r) { return node(Op::DiaArrow, "", std::move(l), std::move(r)); }
Formula mk_box(Formula a) { return node(Op::Box, "", std::move(a), nullptr); }
Formula mk_dia(Formula a) { return node(Op::Dia, "", std::move(a), nullptr); }
Formula mk_neg(Formula a) { return mk_imp(std::move(a), mk_bot()); }
Formula mk_iff(Formula l, Formula r) { return mk_and(mk_imp(l, r), mk_imp(r, l)); }

int compare(const Formula& a, const Formula& b) {
  if (a == b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  if (a->op != b->op) return a->op < b->op ? -1 : 1;
  if (a->op == Op::Var) return a->name.compare(b->name);
  if (int c = compare(a->lhs, b->lhs)) return c;
  return compare(a->rhs, b->rhs);
}

bool equal(const Formula& a, const Formula& b) { return compare(a, b) == 0; }

namespace {

bool scan(const Formula& f, bool (*pred)(Op)) {
  if (!f) return false;
  if (pred(f->op)) return true;
  return scan(f->lhs, pred) || scan(f->rhs, pred);
}

}  // namespace

bool is_cond(const Formula& f) {
  return !scan(f, [](Op o) { return o == Op::Box || o == Op::Dia; });
}
bool is_modal(const Formula& f) {
  return !scan(f, [](Op o) { return o == Op::BoxArrow || o == Op::DiaArrow; });
}
bool is_propositional(const Formula& f) { return is_cond(f) && is_modal(f); }
bool contains_dia_arrow(const Formula& f) {
  return scan(f, [](Op o) { return o == Op::DiaArrow; });
}
bool contains_cond_arrow(const Formula& f) {
  return scan(f, [](Op o) { return o == Op::BoxArrow || o == Op::DiaArrow; });
}

std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> s;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    if (!g) return;
    if (g->op == Op::Var) s.insert(g->name);
    self(self, g->lhs);
    self(self, g->rhs);
  };
  walk(walk, f);
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// Lexer / parser

namespace {

enum class Tok : uint8_t {
  Atom, T, F, LParen, RParen,
  And, Or, Neg, Imp, Iff, BoxArrow, DiaArrow, Box, Dia, End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

  void advance(size_t n) {
    for (size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  Token next() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\n' || src[pos] == '\r'))
      advance(1);
    Token t{Tok::End, "", line, col};
    if (pos >= src.size()) return t;
    char c = src[pos];
    auto two = [&](char a, char b) { return c == a && pos + 1 < src.size() && src[pos + 1] == b; };
    if (two('<', '-')) {
      if (pos + 2 >= src.size() || src[pos + 2] != '>') fail("expected '<->'");
      t.kind = Tok::Iff;
      advance(3);
      return t;
    }
    if (two('<', '>')) { t.kind = Tok::Dia; advance(2); return t; }
    if (two('-', '>')) { t.kind = Tok::Imp; advance(2); return t; }
    if (two('=', '>')) { t.kind = Tok::BoxArrow; advance(2); return t; }
    if (two('~', '>')) { t.kind = Tok::DiaArrow; advance(2); return t; }
    if (two('[', ']')) { t.kind = Tok::Box; advance(2); return t; }
    switch (c) {
      case '&': t.kind = Tok::And; advance(1); return t;
      case '|': t.kind = Tok::Or; advance(1); return t;
      case '~': t.kind = Tok::Neg; advance(1); return t;
      case '(': t.kind = Tok::LParen; advance(1); return t;
      case ')': t.kind = Tok::RParen; advance(1); return t;
      case 'T': t.kind = Tok::T; advance(1); return t;
      case 'F': t.kind = Tok::F; advance(1); return t;
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      size_t end = pos;
      while (end < src.size()) {
        char d = src[end];
        bool ok = (d >= 'a' && d <= 'z') || (d >= 'A' && d <= 'Z') || (d >= '0' && d <= '9') || d == '_';
        if (!ok) break;
        ++end;
      }
      t.kind = Tok::Atom;
      t.text = src.substr(pos, end - pos);
      advance(end - pos);
      return t;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

struct Parser {
  Dialect dialect;
  std::vector<Token> toks;
  size_t i = 0;

  Parser(Dialect d, const std::string& text) : dialect(d) {
    Lexer lex(text);
    for (;;) {
      Token t = lex.next();
      toks.push_back(t);
      if (t.kind == Tok::End) break;
    }
  }

  const Token& peek() const { return toks[i]; }
  Token take() { return toks[i++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(msg, t.line, t.col);
  }

  Formula parse_all() {
    Formula f = parse_iff();
    const Token& t = peek();
    if (t.kind != Tok::End) fail(t, "unexpected trailing input");
    return f;
  }

  // <-> (right-assoc, weakest) > -> (right-assoc) > =>/~> (non-assoc) > | > & > prefix
  Formula parse_iff() {
    Formula l = parse_imp();
    if (peek().kind == Tok::Iff) {
      take();
      Formula r = parse_iff();
      return mk_iff(l, r);
    }
    return l;
  }

  Formula parse_imp() {
    Formula l = parse_cond();
    if (peek().kind == Tok::Imp) {
      take();
      Formula r = parse_imp();
      return mk_imp(l, r);
    }
    return l;
  }

  Formula parse_cond() {
    Formula l = parse_or();
    Tok k = peek().kind;
    if (k == Tok::BoxArrow || k == Tok::DiaArrow) {
      Token op = take();
      if (dialect == Dialect::Modal) fail(op, "conditional operator not allowed in modal dialect");
      Formula r = parse_or();
      Tok k2 = peek().kind;
      if (k2 == Tok::BoxArrow || k2 == Tok::DiaArrow)
        fail(peek(), "conditional operators are non-associative; use parentheses");
      return k == Tok::BoxArrow ? mk_box_arrow(l, r) : mk_dia_arrow(l, r);
    }
    return l;
  }

  Formula parse_or() {
    Formula l = parse_and();
    while (peek().kind == Tok::Or) {
      take();
      l = mk_or(l, parse_and());
    }
    return l;
  }

  Formula parse_and() {
    Formula l = parse_unary();
    while (peek().kind == Tok::And) {
      take();
      l = mk_and(l, parse_unary());
    }
    return l;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Neg:
        take();
        return mk_neg(parse_unary());
      case Tok::Box:
      case Tok::Dia: {
        Token op = take();
        if (dialect == Dialect::Cond) fail(op, "modal operator not allowed in cond dialect");
        Formula a = parse_unary();
        return op.kind == Tok::Box ? mk_box(a) : mk_dia(a);
      }
      default:
        return parse_primary();
    }
  }

  Formula parse_primary() {
    Token t = take();
    switch (t.kind) {
      case Tok::Atom: return mk_var(t.text);
      case Tok::T: return mk_top();
      case Tok::F: return mk_bot();
      case Tok::LParen: {
        Formula f = parse_iff();
        Token close = take();
        if (close.kind != Tok::RParen) fail(close, "expected ')'");
        return f;
      }
      case Tok::End: fail(t, "unexpected end of input");
      default: fail(t, "expected a formula");
    }
  }
};

}  // namespace

Formula parse(Dialect dialect, const std::string& text) {
  Parser p(dialect, text);
  return p.parse_all();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// Precedence levels for printing; higher binds tighter.
constexpr int kIff = 1, kImp = 2, kCond = 3, kOr = 4, kAnd = 5, kUnary = 6, kAtom = 7;

void rend(const Formula& f, int min_prec, std::string& out) {
  auto wrap = [&](int prec, auto&& body) {
    bool paren = prec < min_prec;
    if (paren) out += '(';
    body();
    if (paren) out += ')';
  };
  switch (f->op) {
    case Op::Var: out += f->name; return;
    case Op::Top: out += 'T'; return;
    case Op::Bot: out += 'F'; return;
    case Op::And: {
      // a <-> b sugar for And(Imp(a,b), Imp(b,a)).
      const FNode& n = *f;
      if (n.lhs->op == Op::Imp && n.rhs->op == Op::Imp && equal(n.lhs->lhs, n.rhs->rhs) &&
          equal(n.lhs->rhs, n.rhs->lhs)) {
        wrap(kIff, [&] {
          rend(n.lhs->lhs, kIff + 1, out);
          out += " <-> ";
          rend(n.lhs->rhs, kIff, out);
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
    case Op::Or:
      wrap(kOr, [&] {
        rend(f->lhs, kOr, out);
        out += " | ";
        rend(f->rhs, kOr + 1, out);
      });
      return;
    case Op::Imp:
      if (f->rhs->op == Op::Bot) {
        wrap(kUnary, [&] {
          out += '~';
          rend(f->lhs, kUnary, out);
        });
        return;
      }
      wrap(kImp, [&] {
        rend(f->lhs, kImp + 1, out);
        out += " -> ";
        rend(f->rhs, kImp, out);
      });
      return;
    case Op::BoxArrow:
    case Op::DiaArrow:
      wrap(kCond, [&] {
        rend(f->lhs, kCond + 1, out);
        out += f->op == Op::BoxArrow ? " => " : " ~> ";
        rend(f->rhs, kCond + 1, out);
      });
      return;
    case Op::Box:
    case Op::Dia:
      wrap(kUnary, [&] {
        out += f->op == Op::Box ? "[]" : "<>";
        rend(f->lhs, kUnary, out);
      });
      return;
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  rend(f, 0, out);
  return out;
}

Formula substitute(const Formula& f, const Subst& sigma) {
  switch (f->op) {
    case Op::Var: {
      auto it = sigma.find(f->name);
      return it == sigma.end() ? f : it->second;
    }
    case Op::Top:
    case Op::Bot:
      return f;
    case Op::Box:
    case Op::Dia: {
      Formula a = substitute(f->lhs, sigma);
      return f->op == Op::Box ? mk_box(a) : mk_dia(a);
    }
    default: {
      Formula l = substitute(f->lhs, sigma);
      Formula r = substitute(f->rhs, sigma);
      switch (f->op) {
        case Op::And: return mk_and(l, r);
        case Op::Or: return mk_or(l, r);
        case Op::Imp: return mk_imp(l, r);
        case Op::BoxArrow: return mk_box_arrow(l, r);
        case Op::DiaArrow: return mk_dia_arrow(l, r);
        default: break;
      }
      assert(false);
      return f;
    }
  }
}

}  // namespace intck
