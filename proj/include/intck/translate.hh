#pragma once

#include <string>

#include "intck/fo.hh"
#include "intck/syntax.hh"

namespace intck {

// Modal embedding: []psi becomes T => tr(psi), <>psi becomes T ~> tr(psi);
// atoms, T, F, &, |, -> are fixed. Input must be a modal-dialect formula.
Formula tr(const Formula& f);

// Left inverse of tr on its image: psi => chi becomes []untr(chi) and
// psi ~> chi becomes <>untr(chi); the antecedent is discarded. Defined on
// all conditional formulas, and untr(tr(f)) == f holds for every modal f.
Formula untr(const Formula& f);

// Standard translation of a conditional formula into the two-sorted
// first-order language, with x naming the world of evaluation:
//   st(x, p)        = p(x)
//   st(x, a => b)   = exists y (S(y) & forall z (O(z) -> (E(z,y) <-> st(z,a)))
//                                    & forall w (R(x,y,w) -> st(w,b)))
//   st(x, a ~> b)   = exists y (S(y) & forall z (O(z) -> (E(z,y) <-> st(z,a)))
//                                    & exists w (R(x,y,w) & st(w,b)))
// and homomorphic on T, F, &, |, ->. Bound variables are drawn from a
// counter (_v0, _v1, ...) restarted per call, so output is deterministic;
// x must not use the _v prefix.
FoFormula st(const std::string& x, const Formula& f);

// Replace every outermost subformula of the form a => b with T and every
// outermost a ~> b with F; fixes formulas free of conditional arrows.
Formula project_to_int(const Formula& f);

}  // namespace intck
