#include "intck/translate.hh"

#include <stdexcept>

namespace intck {

Formula tr(const Formula& f) {
  switch (f->op) {
    case Op::Var:
    case Op::Top:
    case Op::Bot:
      return f;
    case Op::And:
      return mk_and(tr(f->lhs), tr(f->rhs));
    case Op::Or:
      return mk_or(tr(f->lhs), tr(f->rhs));
    case Op::Imp:
      return mk_imp(tr(f->lhs), tr(f->rhs));
    case Op::Box:
      return mk_box_arrow(mk_top(), tr(f->lhs));
    case Op::Dia:
      return mk_dia_arrow(mk_top(), tr(f->lhs));
    case Op::BoxArrow:
    case Op::DiaArrow:
      throw std::invalid_argument("tr is defined on modal formulas");
  }
  throw std::logic_error("unreachable");
}

Formula untr(const Formula& f) {
  switch (f->op) {
    case Op::Var:
    case Op::Top:
    case Op::Bot:
      return f;
    case Op::And:
      return mk_and(untr(f->lhs), untr(f->rhs));
    case Op::Or:
      return mk_or(untr(f->lhs), untr(f->rhs));
    case Op::Imp:
      return mk_imp(untr(f->lhs), untr(f->rhs));
    case Op::BoxArrow:
      return mk_box(untr(f->rhs));
    case Op::DiaArrow:
      return mk_dia(untr(f->rhs));
    case Op::Box:
    case Op::Dia:
      throw std::invalid_argument("untr is defined on conditional formulas");
  }
  throw std::logic_error("unreachable");
}

namespace {

std::string fresh(int& counter) { return "_v" + std::to_string(counter++); }

FoFormula st_rec(const std::string& x, const Formula& f, int& counter) {
  switch (f->op) {
    case Op::Var:
      return fo_p(f->name, x);
    case Op::Top:
      return fo_top();
    case Op::Bot:
      return fo_bot();
    case Op::And:
      return fo_and(st_rec(x, f->lhs, counter), st_rec(x, f->rhs, counter));
    case Op::Or:
      return fo_or(st_rec(x, f->lhs, counter), st_rec(x, f->rhs, counter));
    case Op::Imp:
      return fo_imp(st_rec(x, f->lhs, counter), st_rec(x, f->rhs, counter));
    case Op::BoxArrow:
    case Op::DiaArrow: {
      std::string y = fresh(counter);
      std::string z = fresh(counter);
      std::string w = fresh(counter);
      FoFormula extent = fo_forall_o(z, fo_iff(fo_e(z, y), st_rec(z, f->lhs, counter)));
      FoFormula body = st_rec(w, f->rhs, counter);
      FoFormula succ = f->op == Op::BoxArrow
                           ? fo_forall(w, fo_imp(fo_r(x, y, w), std::move(body)))
                           : fo_exists(w, fo_and(fo_r(x, y, w), std::move(body)));
      return fo_exists(y, fo_and(fo_s(y), fo_and(std::move(extent), std::move(succ))));
    }
    case Op::Box:
    case Op::Dia:
      throw std::invalid_argument("st is defined on conditional formulas");
  }
  throw std::logic_error("unreachable");
}

}  // namespace

FoFormula st(const std::string& x, const Formula& f) {
  if (x.rfind("_v", 0) == 0)
    throw std::invalid_argument("the world variable must not use the _v prefix");
  int counter = 0;
  return st_rec(x, f, counter);
}

Formula project_to_int(const Formula& f) {
  switch (f->op) {
    case Op::BoxArrow:
      return mk_top();
    case Op::DiaArrow:
      return mk_bot();
    case Op::And:
      return mk_and(project_to_int(f->lhs), project_to_int(f->rhs));
    case Op::Or:
      return mk_or(project_to_int(f->lhs), project_to_int(f->rhs));
    case Op::Imp:
      return mk_imp(project_to_int(f->lhs), project_to_int(f->rhs));
    default:
      return f;
  }
}

}  // namespace intck
