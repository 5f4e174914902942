#include "intck/calculus.hh"

#include <stdexcept>
#include <utility>

namespace intck {

namespace {

struct RawItem {
  const char* name;
  const char* text;
};

// Bundled derivations in dependency order: every theorem citation points at
// an earlier item. Names are CALC/label with CALC the script's calculus.
const RawItem kRaw[] = {
    {"INT/id", R"(calculus INT
mode proof
1: p->((p->p)->p) ; ax A0.1 phi=p psi=(p->p)
2: (p->((p->p)->p))->((p->(p->p))->(p->p)) ; ax A0.2 phi=p psi=(p->p) chi=p
3: (p->(p->p))->(p->p) ; mp 1 2
4: p->(p->p) ; ax A0.1 phi=p psi=p
5: p->p ; mp 4 3
)"},

    {"INT/b", R"(calculus INT
mode proof
1: (q->r)->(p->(q->r)) ; ax A0.1 phi=(q->r) psi=p
2: (p->(q->r))->((p->q)->(p->r)) ; ax A0.2 phi=p psi=q chi=r
3: ((p->(q->r))->((p->q)->(p->r)))->((q->r)->((p->(q->r))->((p->q)->(p->r)))) ; ax A0.1 phi=((p->(q->r))->((p->q)->(p->r))) psi=(q->r)
4: (q->r)->((p->(q->r))->((p->q)->(p->r))) ; mp 2 3
5: ((q->r)->((p->(q->r))->((p->q)->(p->r))))->(((q->r)->(p->(q->r)))->((q->r)->((p->q)->(p->r)))) ; ax A0.2 phi=(q->r) psi=(p->(q->r)) chi=((p->q)->(p->r))
6: ((q->r)->(p->(q->r)))->((q->r)->((p->q)->(p->r))) ; mp 4 5
7: (q->r)->((p->q)->(p->r)) ; mp 1 6
)"},

    {"INT/swap", R"(calculus INT
mode proof
1: (p->(q->r))->((p->q)->(p->r)) ; ax A0.2 phi=p psi=q chi=r
2: ((p->q)->(p->r))->((q->(p->q))->(q->(p->r))) ; thm INT/b p=q q=(p->q) r=(p->r)
3: (((p->q)->(p->r))->((q->(p->q))->(q->(p->r))))->(((p->(q->r))->((p->q)->(p->r)))->((p->(q->r))->((q->(p->q))->(q->(p->r))))) ; thm INT/b p=(p->(q->r)) q=((p->q)->(p->r)) r=((q->(p->q))->(q->(p->r)))
4: ((p->(q->r))->((p->q)->(p->r)))->((p->(q->r))->((q->(p->q))->(q->(p->r)))) ; mp 2 3
5: (p->(q->r))->((q->(p->q))->(q->(p->r))) ; mp 1 4
6: ((p->(q->r))->((q->(p->q))->(q->(p->r))))->(((p->(q->r))->(q->(p->q)))->((p->(q->r))->(q->(p->r)))) ; ax A0.2 phi=(p->(q->r)) psi=(q->(p->q)) chi=(q->(p->r))
7: ((p->(q->r))->(q->(p->q)))->((p->(q->r))->(q->(p->r))) ; mp 5 6
8: q->(p->q) ; ax A0.1 phi=q psi=p
9: (q->(p->q))->((p->(q->r))->(q->(p->q))) ; ax A0.1 phi=(q->(p->q)) psi=(p->(q->r))
10: (p->(q->r))->(q->(p->q)) ; mp 8 9
11: (p->(q->r))->(q->(p->r)) ; mp 10 7
)"},

    {"INT/imp_trans", R"(calculus INT
mode proof
1: (q->r)->((p->q)->(p->r)) ; thm INT/b p=p q=q r=r
2: ((q->r)->((p->q)->(p->r)))->((p->q)->((q->r)->(p->r))) ; thm INT/swap p=(q->r) q=(p->q) r=(p->r)
3: (p->q)->((q->r)->(p->r)) ; mp 1 2
)"},

    {"INT/top", R"(calculus INT
mode proof
1: T->T ; thm INT/id p=T
2: (T->T)->T ; ax A0.10 phi=(T->T)
3: T ; mp 1 2
)"},

    {"INT/pair", R"(calculus INT
mode proof
1: q->(r->(q&r)) ; ax A0.5 phi=q psi=r
2: (q->(r->(q&r)))->((p->q)->(p->(r->(q&r)))) ; thm INT/b p=p q=q r=(r->(q&r))
3: (p->q)->(p->(r->(q&r))) ; mp 1 2
4: (p->(r->(q&r)))->((p->r)->(p->(q&r))) ; ax A0.2 phi=p psi=r chi=(q&r)
5: ((p->(r->(q&r)))->((p->r)->(p->(q&r))))->(((p->q)->(p->(r->(q&r))))->((p->q)->((p->r)->(p->(q&r))))) ; thm INT/b p=(p->q) q=(p->(r->(q&r))) r=((p->r)->(p->(q&r)))
6: ((p->q)->(p->(r->(q&r))))->((p->q)->((p->r)->(p->(q&r)))) ; mp 4 5
7: (p->q)->((p->r)->(p->(q&r))) ; mp 3 6
)"},

    {"INT/and_comm", R"(calculus INT
mode proof
1: (p&q)->q ; ax A0.4 phi=p psi=q
2: (p&q)->p ; ax A0.3 phi=p psi=q
3: ((p&q)->q)->(((p&q)->p)->((p&q)->(q&p))) ; thm INT/pair p=(p&q) q=q r=p
4: ((p&q)->p)->((p&q)->(q&p)) ; mp 1 3
5: (p&q)->(q&p) ; mp 2 4
)"},

    {"INT/dni", R"(calculus INT
mode proof
1: ~p->~p ; thm INT/id p=~p
2: (~p->~p)->(p->~~p) ; thm INT/swap p=~p q=p r=F
3: p->~~p ; mp 1 2
)"},

    {"INT/nimp", R"(calculus INT
mode proof
1: F->q ; ax A0.9 phi=q
2: (F->q)->(~p->(p->q)) ; thm INT/b p=p q=F r=q
3: ~p->(p->q) ; mp 1 2
)"},

    {"INT/tneg", R"(calculus INT
mode proof
1: p->~~p ; thm INT/dni p=p
2: (p->~~p)->(~~~p->~p) ; thm INT/imp_trans p=p q=~~p r=F
3: ~~~p->~p ; mp 1 2
4: ~p->~~~p ; thm INT/dni p=~p
5: (~~~p->~p)->((~p->~~~p)->((~~~p->~p)&(~p->~~~p))) ; ax A0.5 phi=(~~~p->~p) psi=(~p->~~~p)
6: (~p->~~~p)->((~~~p->~p)&(~p->~~~p)) ; mp 3 5
7: ~~~p<->~p ; mp 4 6
)"},

    {"INT/iff_refl", R"(calculus INT
mode proof
1: p->p ; thm INT/id p=p
2: (p->p)->((p->p)->((p->p)&(p->p))) ; ax A0.5 phi=(p->p) psi=(p->p)
3: (p->p)->((p->p)&(p->p)) ; mp 1 2
4: p<->p ; mp 1 3
)"},

    {"INT/iff_sym", R"(calculus INT
mode proof
1: (p<->q)->(q<->p) ; thm INT/and_comm p=(p->q) q=(q->p)
)"},

    {"INT/exp", R"(calculus INT
mode proof
1: ((p&q)->r)->((q->(p&q))->(q->r)) ; thm INT/b p=q q=(p&q) r=r
2: (((p&q)->r)->((q->(p&q))->(q->r)))->((q->(p&q))->(((p&q)->r)->(q->r))) ; thm INT/swap p=((p&q)->r) q=(q->(p&q)) r=(q->r)
3: (q->(p&q))->(((p&q)->r)->(q->r)) ; mp 1 2
4: p->(q->(p&q)) ; ax A0.5 phi=p psi=q
5: (p->(q->(p&q)))->(((q->(p&q))->(((p&q)->r)->(q->r)))->(p->(((p&q)->r)->(q->r)))) ; thm INT/imp_trans p=p q=(q->(p&q)) r=(((p&q)->r)->(q->r))
6: ((q->(p&q))->(((p&q)->r)->(q->r)))->(p->(((p&q)->r)->(q->r))) ; mp 4 5
7: p->(((p&q)->r)->(q->r)) ; mp 3 6
8: (p->(((p&q)->r)->(q->r)))->(((p&q)->r)->(p->(q->r))) ; thm INT/swap p=p q=((p&q)->r) r=(q->r)
9: ((p&q)->r)->(p->(q->r)) ; mp 7 8
)"},

    {"INT/imp2", R"(calculus INT
mode proof
1: (p&q)->p ; ax A0.3 phi=p psi=q
2: ((p&q)->p)->((p->(q->r))->((p&q)->(q->r))) ; thm INT/imp_trans p=(p&q) q=p r=(q->r)
3: (p->(q->r))->((p&q)->(q->r)) ; mp 1 2
4: ((p&q)->(q->r))->(((p&q)->q)->((p&q)->r)) ; ax A0.2 phi=(p&q) psi=q chi=r
5: (((p&q)->(q->r))->(((p&q)->q)->((p&q)->r)))->(((p->(q->r))->((p&q)->(q->r)))->((p->(q->r))->(((p&q)->q)->((p&q)->r)))) ; thm INT/b p=(p->(q->r)) q=((p&q)->(q->r)) r=(((p&q)->q)->((p&q)->r))
6: ((p->(q->r))->((p&q)->(q->r)))->((p->(q->r))->(((p&q)->q)->((p&q)->r))) ; mp 4 5
7: (p->(q->r))->(((p&q)->q)->((p&q)->r)) ; mp 3 6
8: ((p->(q->r))->(((p&q)->q)->((p&q)->r)))->(((p&q)->q)->((p->(q->r))->((p&q)->r))) ; thm INT/swap p=(p->(q->r)) q=((p&q)->q) r=((p&q)->r)
9: ((p&q)->q)->((p->(q->r))->((p&q)->r)) ; mp 7 8
10: (p&q)->q ; ax A0.4 phi=p psi=q
11: (p->(q->r))->((p&q)->r) ; mp 10 9
)"},

    {"INT/neg_cong", R"(calculus INT
mode proof
1: (p<->q)->(p->q) ; ax A0.3 phi=(p->q) psi=(q->p)
2: (p<->q)->(q->p) ; ax A0.4 phi=(p->q) psi=(q->p)
3: (q->p)->(~p->~q) ; thm INT/imp_trans p=q q=p r=F
4: (p->q)->(~q->~p) ; thm INT/imp_trans p=p q=q r=F
5: ((p<->q)->(q->p))->(((q->p)->(~p->~q))->((p<->q)->(~p->~q))) ; thm INT/imp_trans p=(p<->q) q=(q->p) r=(~p->~q)
6: ((q->p)->(~p->~q))->((p<->q)->(~p->~q)) ; mp 2 5
7: (p<->q)->(~p->~q) ; mp 3 6
8: ((p<->q)->(p->q))->(((p->q)->(~q->~p))->((p<->q)->(~q->~p))) ; thm INT/imp_trans p=(p<->q) q=(p->q) r=(~q->~p)
9: ((p->q)->(~q->~p))->((p<->q)->(~q->~p)) ; mp 1 8
10: (p<->q)->(~q->~p) ; mp 4 9
11: ((p<->q)->(~p->~q))->(((p<->q)->(~q->~p))->((p<->q)->((~p->~q)&(~q->~p)))) ; thm INT/pair p=(p<->q) q=(~p->~q) r=(~q->~p)
12: ((p<->q)->(~q->~p))->((p<->q)->((~p->~q)&(~q->~p))) ; mp 7 11
13: (p<->q)->(~p<->~q) ; mp 10 12
)"},

    {"INT/iff_trans", R"(calculus INT
mode proof
1: (p<->q)->(p->q) ; ax A0.3 phi=(p->q) psi=(q->p)
2: (q<->r)->(q->r) ; ax A0.3 phi=(q->r) psi=(r->q)
3: (p->q)->((q->r)->(p->r)) ; thm INT/imp_trans p=p q=q r=r
4: ((p<->q)->(p->q))->(((p->q)->((q->r)->(p->r)))->((p<->q)->((q->r)->(p->r)))) ; thm INT/imp_trans p=(p<->q) q=(p->q) r=((q->r)->(p->r))
5: ((p->q)->((q->r)->(p->r)))->((p<->q)->((q->r)->(p->r))) ; mp 1 4
6: (p<->q)->((q->r)->(p->r)) ; mp 3 5
7: ((p<->q)->((q->r)->(p->r)))->((q->r)->((p<->q)->(p->r))) ; thm INT/swap p=(p<->q) q=(q->r) r=(p->r)
8: (q->r)->((p<->q)->(p->r)) ; mp 6 7
9: ((q<->r)->(q->r))->(((q->r)->((p<->q)->(p->r)))->((q<->r)->((p<->q)->(p->r)))) ; thm INT/imp_trans p=(q<->r) q=(q->r) r=((p<->q)->(p->r))
10: ((q->r)->((p<->q)->(p->r)))->((q<->r)->((p<->q)->(p->r))) ; mp 2 9
11: (q<->r)->((p<->q)->(p->r)) ; mp 8 10
12: ((q<->r)->((p<->q)->(p->r)))->((p<->q)->((q<->r)->(p->r))) ; thm INT/swap p=(q<->r) q=(p<->q) r=(p->r)
13: (p<->q)->((q<->r)->(p->r)) ; mp 11 12
14: (p<->q)->(q->p) ; ax A0.4 phi=(p->q) psi=(q->p)
15: (q<->r)->(r->q) ; ax A0.4 phi=(q->r) psi=(r->q)
16: (r->q)->((q->p)->(r->p)) ; thm INT/imp_trans p=r q=q r=p
17: ((q<->r)->(r->q))->(((r->q)->((q->p)->(r->p)))->((q<->r)->((q->p)->(r->p)))) ; thm INT/imp_trans p=(q<->r) q=(r->q) r=((q->p)->(r->p))
18: ((r->q)->((q->p)->(r->p)))->((q<->r)->((q->p)->(r->p))) ; mp 15 17
19: (q<->r)->((q->p)->(r->p)) ; mp 16 18
20: ((q<->r)->((q->p)->(r->p)))->((q->p)->((q<->r)->(r->p))) ; thm INT/swap p=(q<->r) q=(q->p) r=(r->p)
21: (q->p)->((q<->r)->(r->p)) ; mp 19 20
22: ((p<->q)->(q->p))->(((q->p)->((q<->r)->(r->p)))->((p<->q)->((q<->r)->(r->p)))) ; thm INT/imp_trans p=(p<->q) q=(q->p) r=((q<->r)->(r->p))
23: ((q->p)->((q<->r)->(r->p)))->((p<->q)->((q<->r)->(r->p))) ; mp 14 22
24: (p<->q)->((q<->r)->(r->p)) ; mp 21 23
25: ((q<->r)->(p->r))->(((q<->r)->(r->p))->((q<->r)->((p->r)&(r->p)))) ; thm INT/pair p=(q<->r) q=(p->r) r=(r->p)
26: ((p<->q)->((q<->r)->(p->r)))->((((q<->r)->(p->r))->(((q<->r)->(r->p))->((q<->r)->((p->r)&(r->p)))))->((p<->q)->(((q<->r)->(r->p))->((q<->r)->((p->r)&(r->p)))))) ; thm INT/imp_trans p=(p<->q) q=((q<->r)->(p->r)) r=(((q<->r)->(r->p))->((q<->r)->((p->r)&(r->p))))
27: (((q<->r)->(p->r))->(((q<->r)->(r->p))->((q<->r)->((p->r)&(r->p)))))->((p<->q)->(((q<->r)->(r->p))->((q<->r)->((p->r)&(r->p))))) ; mp 13 26
28: (p<->q)->(((q<->r)->(r->p))->((q<->r)->((p->r)&(r->p)))) ; mp 25 27
29: ((p<->q)->(((q<->r)->(r->p))->((q<->r)->((p->r)&(r->p)))))->(((p<->q)->((q<->r)->(r->p)))->((p<->q)->((q<->r)->((p->r)&(r->p))))) ; ax A0.2 phi=(p<->q) psi=((q<->r)->(r->p)) chi=((q<->r)->((p->r)&(r->p)))
30: ((p<->q)->((q<->r)->(r->p)))->((p<->q)->((q<->r)->((p->r)&(r->p)))) ; mp 28 29
31: (p<->q)->((q<->r)->(p<->r)) ; mp 24 30
)"},

    {"INT/and_absorb", R"(calculus INT
mode proof
1: p->p ; thm INT/id p=p
2: (p->p)->((p->q)->(p->(p&q))) ; thm INT/pair p=p q=p r=q
3: (p->q)->(p->(p&q)) ; mp 1 2
4: (p&q)->p ; ax A0.3 phi=p psi=q
5: ((p&q)->p)->((p->q)->((p&q)->p)) ; ax A0.1 phi=((p&q)->p) psi=(p->q)
6: (p->q)->((p&q)->p) ; mp 4 5
7: ((p->q)->((p&q)->p))->(((p->q)->(p->(p&q)))->((p->q)->(((p&q)->p)&(p->(p&q))))) ; thm INT/pair p=(p->q) q=((p&q)->p) r=(p->(p&q))
8: ((p->q)->(p->(p&q)))->((p->q)->(((p&q)->p)&(p->(p&q)))) ; mp 6 7
9: (p->q)->((p&q)<->p) ; mp 3 8
)"},

    {"INT/or_absorb", R"(calculus INT
mode proof
1: q->q ; thm INT/id p=q
2: (p->q)->((q->q)->((p|q)->q)) ; ax A0.8 phi=p psi=q chi=q
3: ((p->q)->((q->q)->((p|q)->q)))->((q->q)->((p->q)->((p|q)->q))) ; thm INT/swap p=(p->q) q=(q->q) r=((p|q)->q)
4: (q->q)->((p->q)->((p|q)->q)) ; mp 2 3
5: (p->q)->((p|q)->q) ; mp 1 4
6: q->(p|q) ; ax A0.7 phi=p psi=q
7: (q->(p|q))->((p->q)->(q->(p|q))) ; ax A0.1 phi=(q->(p|q)) psi=(p->q)
8: (p->q)->(q->(p|q)) ; mp 6 7
9: ((p->q)->((p|q)->q))->(((p->q)->(q->(p|q)))->((p->q)->(((p|q)->q)&(q->(p|q))))) ; thm INT/pair p=(p->q) q=((p|q)->q) r=(q->(p|q))
10: ((p->q)->(q->(p|q)))->((p->q)->(((p|q)->q)&(q->(p|q)))) ; mp 5 9
11: (p->q)->((p|q)<->q) ; mp 8 10
)"},

    {"INT/demorgan_or", R"(calculus INT
mode proof
1: p->(p|q) ; ax A0.6 phi=p psi=q
2: (p->(p|q))->(~(p|q)->~p) ; thm INT/imp_trans p=p q=(p|q) r=F
3: ~(p|q)->~p ; mp 1 2
4: q->(p|q) ; ax A0.7 phi=p psi=q
5: (q->(p|q))->(~(p|q)->~q) ; thm INT/imp_trans p=q q=(p|q) r=F
6: ~(p|q)->~q ; mp 4 5
7: (~(p|q)->~p)->((~(p|q)->~q)->(~(p|q)->(~p&~q))) ; thm INT/pair p=~(p|q) q=~p r=~q
8: (~(p|q)->~q)->(~(p|q)->(~p&~q)) ; mp 3 7
9: ~(p|q)->(~p&~q) ; mp 6 8
10: (~p&~q)->~p ; ax A0.3 phi=~p psi=~q
11: (~p&~q)->~q ; ax A0.4 phi=~p psi=~q
12: ~p->(~q->~(p|q)) ; ax A0.8 phi=p psi=q chi=F
13: ((~p&~q)->~p)->((~p->(~q->~(p|q)))->((~p&~q)->(~q->~(p|q)))) ; thm INT/imp_trans p=(~p&~q) q=~p r=(~q->~(p|q))
14: (~p->(~q->~(p|q)))->((~p&~q)->(~q->~(p|q))) ; mp 10 13
15: (~p&~q)->(~q->~(p|q)) ; mp 12 14
16: ((~p&~q)->(~q->~(p|q)))->(((~p&~q)->~q)->((~p&~q)->~(p|q))) ; ax A0.2 phi=(~p&~q) psi=~q chi=~(p|q)
17: ((~p&~q)->~q)->((~p&~q)->~(p|q)) ; mp 15 16
18: (~p&~q)->~(p|q) ; mp 11 17
19: (~(p|q)->(~p&~q))->(((~p&~q)->~(p|q))->((~(p|q)->(~p&~q))&((~p&~q)->~(p|q)))) ; ax A0.5 phi=(~(p|q)->(~p&~q)) psi=((~p&~q)->~(p|q))
20: ((~p&~q)->~(p|q))->((~(p|q)->(~p&~q))&((~p&~q)->~(p|q))) ; mp 9 19
21: ~(p|q)<->(~p&~q) ; mp 18 20
)"},

    {"INTCK/Nec", R"(calculus INTCK
mode derived_rule
premise p
1: p ; pre 1
2: p->(T->p) ; ax A0.1 phi=p psi=T
3: T->p ; mp 1 2
4: p->T ; ax A0.10 phi=p
5: (p->T)->((T->p)->((p->T)&(T->p))) ; ax A0.5 phi=(p->T) psi=(T->p)
6: (T->p)->((p->T)&(T->p)) ; mp 4 5
7: p<->T ; mp 3 6
8: (q=>p)<->(q=>T) ; rule RCbox 7
9: ((q=>p)<->(q=>T))->((q=>T)->(q=>p)) ; ax A0.4 phi=((q=>p)->(q=>T)) psi=((q=>T)->(q=>p))
10: (q=>T)->(q=>p) ; mp 8 9
11: q=>T ; ax A5 phi=q
12: q=>p ; mp 11 10
)"},

    {"INTCK/RMbox", R"(calculus INTCK
mode derived_rule
premise p->q
1: p->q ; pre 1
2: (p->q)->((p&q)<->p) ; thm INT/and_absorb p=p q=q
3: (p&q)<->p ; mp 1 2
4: (r=>(p&q))<->(r=>p) ; rule RCbox 3
5: ((r=>(p&q))<->(r=>p))->((r=>p)->(r=>(p&q))) ; ax A0.4 phi=((r=>(p&q))->(r=>p)) psi=((r=>p)->(r=>(p&q)))
6: (r=>p)->(r=>(p&q)) ; mp 4 5
7: ((r=>p)&(r=>q))<->(r=>(p&q)) ; ax A1 phi=r psi=p chi=q
8: (((r=>p)&(r=>q))<->(r=>(p&q)))->((r=>(p&q))->((r=>p)&(r=>q))) ; ax A0.4 phi=(((r=>p)&(r=>q))->(r=>(p&q))) psi=((r=>(p&q))->((r=>p)&(r=>q)))
9: (r=>(p&q))->((r=>p)&(r=>q)) ; mp 7 8
10: ((r=>p)&(r=>q))->(r=>q) ; ax A0.4 phi=(r=>p) psi=(r=>q)
11: ((r=>p)->(r=>(p&q)))->(((r=>(p&q))->((r=>p)&(r=>q)))->((r=>p)->((r=>p)&(r=>q)))) ; thm INT/imp_trans p=(r=>p) q=(r=>(p&q)) r=((r=>p)&(r=>q))
12: ((r=>(p&q))->((r=>p)&(r=>q)))->((r=>p)->((r=>p)&(r=>q))) ; mp 6 11
13: (r=>p)->((r=>p)&(r=>q)) ; mp 9 12
14: ((r=>p)->((r=>p)&(r=>q)))->((((r=>p)&(r=>q))->(r=>q))->((r=>p)->(r=>q))) ; thm INT/imp_trans p=(r=>p) q=((r=>p)&(r=>q)) r=(r=>q)
15: (((r=>p)&(r=>q))->(r=>q))->((r=>p)->(r=>q)) ; mp 13 14
16: (r=>p)->(r=>q) ; mp 10 15
)"},

    {"INTCK/RMdia", R"(calculus INTCK
mode derived_rule
premise p->q
1: p->q ; pre 1
2: (p->q)->((p|q)<->q) ; thm INT/or_absorb p=p q=q
3: (p|q)<->q ; mp 1 2
4: (r~>(p|q))<->(r~>q) ; rule RCdia 3
5: ((r~>(p|q))<->(r~>q))->((r~>(p|q))->(r~>q)) ; ax A0.3 phi=((r~>(p|q))->(r~>q)) psi=((r~>q)->(r~>(p|q)))
6: (r~>(p|q))->(r~>q) ; mp 4 5
7: (r~>p)->((r~>p)|(r~>q)) ; ax A0.6 phi=(r~>p) psi=(r~>q)
8: (r~>(p|q))<->((r~>p)|(r~>q)) ; ax A3 phi=r psi=p chi=q
9: ((r~>(p|q))<->((r~>p)|(r~>q)))->(((r~>p)|(r~>q))->(r~>(p|q))) ; ax A0.4 phi=((r~>(p|q))->((r~>p)|(r~>q))) psi=(((r~>p)|(r~>q))->(r~>(p|q)))
10: ((r~>p)|(r~>q))->(r~>(p|q)) ; mp 8 9
11: ((r~>p)->((r~>p)|(r~>q)))->((((r~>p)|(r~>q))->(r~>(p|q)))->((r~>p)->(r~>(p|q)))) ; thm INT/imp_trans p=(r~>p) q=((r~>p)|(r~>q)) r=(r~>(p|q))
12: (((r~>p)|(r~>q))->(r~>(p|q)))->((r~>p)->(r~>(p|q))) ; mp 7 11
13: (r~>p)->(r~>(p|q)) ; mp 10 12
14: ((r~>p)->(r~>(p|q)))->(((r~>(p|q))->(r~>q))->((r~>p)->(r~>q))) ; thm INT/imp_trans p=(r~>p) q=(r~>(p|q)) r=(r~>q)
15: ((r~>(p|q))->(r~>q))->((r~>p)->(r~>q)) ; mp 13 14
16: (r~>p)->(r~>q) ; mp 6 15
)"},

    {"INTCK/T1", R"(calculus INTCK
mode proof
1: (q&(q->r))->q ; ax A0.3 phi=q psi=(q->r)
2: (q&(q->r))->(q->r) ; ax A0.4 phi=q psi=(q->r)
3: ((q&(q->r))->(q->r))->(((q&(q->r))->q)->((q&(q->r))->r)) ; ax A0.2 phi=(q&(q->r)) psi=q chi=r
4: ((q&(q->r))->q)->((q&(q->r))->r) ; mp 2 3
5: (q&(q->r))->r ; mp 1 4
6: ((q&(q->r))->r)->(((q&(q->r))&r)<->(q&(q->r))) ; thm INT/and_absorb p=(q&(q->r)) q=r
7: ((q&(q->r))&r)<->(q&(q->r)) ; mp 5 6
8: (p=>((q&(q->r))&r))<->(p=>(q&(q->r))) ; rule RCbox 7
9: ((p=>((q&(q->r))&r))<->(p=>(q&(q->r))))->((p=>(q&(q->r)))->(p=>((q&(q->r))&r))) ; ax A0.4 phi=((p=>((q&(q->r))&r))->(p=>(q&(q->r)))) psi=((p=>(q&(q->r)))->(p=>((q&(q->r))&r)))
10: (p=>(q&(q->r)))->(p=>((q&(q->r))&r)) ; mp 8 9
11: ((p=>(q&(q->r)))&(p=>r))<->(p=>((q&(q->r))&r)) ; ax A1 phi=p psi=(q&(q->r)) chi=r
12: (((p=>(q&(q->r)))&(p=>r))<->(p=>((q&(q->r))&r)))->((p=>((q&(q->r))&r))->((p=>(q&(q->r)))&(p=>r))) ; ax A0.4 phi=(((p=>(q&(q->r)))&(p=>r))->(p=>((q&(q->r))&r))) psi=((p=>((q&(q->r))&r))->((p=>(q&(q->r)))&(p=>r)))
13: (p=>((q&(q->r))&r))->((p=>(q&(q->r)))&(p=>r)) ; mp 11 12
14: ((p=>(q&(q->r)))&(p=>r))->(p=>r) ; ax A0.4 phi=(p=>(q&(q->r))) psi=(p=>r)
15: ((p=>(q&(q->r)))->(p=>((q&(q->r))&r)))->(((p=>((q&(q->r))&r))->((p=>(q&(q->r)))&(p=>r)))->((p=>(q&(q->r)))->((p=>(q&(q->r)))&(p=>r)))) ; thm INT/imp_trans p=(p=>(q&(q->r))) q=(p=>((q&(q->r))&r)) r=((p=>(q&(q->r)))&(p=>r))
16: ((p=>((q&(q->r))&r))->((p=>(q&(q->r)))&(p=>r)))->((p=>(q&(q->r)))->((p=>(q&(q->r)))&(p=>r))) ; mp 10 15
17: (p=>(q&(q->r)))->((p=>(q&(q->r)))&(p=>r)) ; mp 13 16
18: ((p=>(q&(q->r)))->((p=>(q&(q->r)))&(p=>r)))->((((p=>(q&(q->r)))&(p=>r))->(p=>r))->((p=>(q&(q->r)))->(p=>r))) ; thm INT/imp_trans p=(p=>(q&(q->r))) q=((p=>(q&(q->r)))&(p=>r)) r=(p=>r)
19: (((p=>(q&(q->r)))&(p=>r))->(p=>r))->((p=>(q&(q->r)))->(p=>r)) ; mp 17 18
20: (p=>(q&(q->r)))->(p=>r) ; mp 14 19
21: ((p=>q)&(p=>(q->r)))<->(p=>(q&(q->r))) ; ax A1 phi=p psi=q chi=(q->r)
22: (((p=>q)&(p=>(q->r)))<->(p=>(q&(q->r))))->(((p=>q)&(p=>(q->r)))->(p=>(q&(q->r)))) ; ax A0.3 phi=(((p=>q)&(p=>(q->r)))->(p=>(q&(q->r)))) psi=((p=>(q&(q->r)))->((p=>q)&(p=>(q->r))))
23: ((p=>q)&(p=>(q->r)))->(p=>(q&(q->r))) ; mp 21 22
24: (((p=>q)&(p=>(q->r)))->(p=>(q&(q->r))))->(((p=>(q&(q->r)))->(p=>r))->(((p=>q)&(p=>(q->r)))->(p=>r))) ; thm INT/imp_trans p=((p=>q)&(p=>(q->r))) q=(p=>(q&(q->r))) r=(p=>r)
25: ((p=>(q&(q->r)))->(p=>r))->(((p=>q)&(p=>(q->r)))->(p=>r)) ; mp 23 24
26: ((p=>q)&(p=>(q->r)))->(p=>r) ; mp 20 25
27: (((p=>q)&(p=>(q->r)))->(p=>r))->((p=>q)->((p=>(q->r))->(p=>r))) ; thm INT/exp p=(p=>q) q=(p=>(q->r)) r=(p=>r)
28: (p=>q)->((p=>(q->r))->(p=>r)) ; mp 26 27
29: ((p=>q)->((p=>(q->r))->(p=>r)))->((p=>(q->r))->((p=>q)->(p=>r))) ; thm INT/swap p=(p=>q) q=(p=>(q->r)) r=(p=>r)
30: (p=>(q->r))->((p=>q)->(p=>r)) ; mp 28 29
)"},

    {"INTCK/T2", R"(calculus INTCK
mode proof
1: ((p~>q)&(p=>(q->r)))->(p~>(q&(q->r))) ; ax A2 phi=p psi=q chi=(q->r)
2: (q&(q->r))->q ; ax A0.3 phi=q psi=(q->r)
3: (q&(q->r))->(q->r) ; ax A0.4 phi=q psi=(q->r)
4: ((q&(q->r))->(q->r))->(((q&(q->r))->q)->((q&(q->r))->r)) ; ax A0.2 phi=(q&(q->r)) psi=q chi=r
5: ((q&(q->r))->q)->((q&(q->r))->r) ; mp 3 4
6: (q&(q->r))->r ; mp 2 5
7: ((q&(q->r))->r)->(((q&(q->r))|r)<->r) ; thm INT/or_absorb p=(q&(q->r)) q=r
8: ((q&(q->r))|r)<->r ; mp 6 7
9: (p~>((q&(q->r))|r))<->(p~>r) ; rule RCdia 8
10: ((p~>((q&(q->r))|r))<->(p~>r))->((p~>((q&(q->r))|r))->(p~>r)) ; ax A0.3 phi=((p~>((q&(q->r))|r))->(p~>r)) psi=((p~>r)->(p~>((q&(q->r))|r)))
11: (p~>((q&(q->r))|r))->(p~>r) ; mp 9 10
12: (p~>(q&(q->r)))->((p~>(q&(q->r)))|(p~>r)) ; ax A0.6 phi=(p~>(q&(q->r))) psi=(p~>r)
13: (p~>((q&(q->r))|r))<->((p~>(q&(q->r)))|(p~>r)) ; ax A3 phi=p psi=(q&(q->r)) chi=r
14: ((p~>((q&(q->r))|r))<->((p~>(q&(q->r)))|(p~>r)))->(((p~>(q&(q->r)))|(p~>r))->(p~>((q&(q->r))|r))) ; ax A0.4 phi=((p~>((q&(q->r))|r))->((p~>(q&(q->r)))|(p~>r))) psi=(((p~>(q&(q->r)))|(p~>r))->(p~>((q&(q->r))|r)))
15: ((p~>(q&(q->r)))|(p~>r))->(p~>((q&(q->r))|r)) ; mp 13 14
16: ((p~>(q&(q->r)))->((p~>(q&(q->r)))|(p~>r)))->((((p~>(q&(q->r)))|(p~>r))->(p~>((q&(q->r))|r)))->((p~>(q&(q->r)))->(p~>((q&(q->r))|r)))) ; thm INT/imp_trans p=(p~>(q&(q->r))) q=((p~>(q&(q->r)))|(p~>r)) r=(p~>((q&(q->r))|r))
17: (((p~>(q&(q->r)))|(p~>r))->(p~>((q&(q->r))|r)))->((p~>(q&(q->r)))->(p~>((q&(q->r))|r))) ; mp 12 16
18: (p~>(q&(q->r)))->(p~>((q&(q->r))|r)) ; mp 15 17
19: ((p~>(q&(q->r)))->(p~>((q&(q->r))|r)))->(((p~>((q&(q->r))|r))->(p~>r))->((p~>(q&(q->r)))->(p~>r))) ; thm INT/imp_trans p=(p~>(q&(q->r))) q=(p~>((q&(q->r))|r)) r=(p~>r)
20: ((p~>((q&(q->r))|r))->(p~>r))->((p~>(q&(q->r)))->(p~>r)) ; mp 18 19
21: (p~>(q&(q->r)))->(p~>r) ; mp 11 20
22: (((p~>q)&(p=>(q->r)))->(p~>(q&(q->r))))->(((p~>(q&(q->r)))->(p~>r))->(((p~>q)&(p=>(q->r)))->(p~>r))) ; thm INT/imp_trans p=((p~>q)&(p=>(q->r))) q=(p~>(q&(q->r))) r=(p~>r)
23: ((p~>(q&(q->r)))->(p~>r))->(((p~>q)&(p=>(q->r)))->(p~>r)) ; mp 1 22
24: ((p~>q)&(p=>(q->r)))->(p~>r) ; mp 21 23
25: (((p~>q)&(p=>(q->r)))->(p~>r))->((p~>q)->((p=>(q->r))->(p~>r))) ; thm INT/exp p=(p~>q) q=(p=>(q->r)) r=(p~>r)
26: (p~>q)->((p=>(q->r))->(p~>r)) ; mp 24 25
27: ((p~>q)->((p=>(q->r))->(p~>r)))->((p=>(q->r))->((p~>q)->(p~>r))) ; thm INT/swap p=(p~>q) q=(p=>(q->r)) r=(p~>r)
28: (p=>(q->r))->((p~>q)->(p~>r)) ; mp 26 27
)"},

    {"INTCK/T3", R"(calculus INTCK
mode proof
1: (q->r)->(q->r) ; thm INT/id p=(q->r)
2: ((q->r)->(q->r))->(q->((q->r)->r)) ; thm INT/swap p=(q->r) q=q r=r
3: q->((q->r)->r) ; mp 1 2
4: (q->((q->r)->r))->((q&((q->r)->r))<->q) ; thm INT/and_absorb p=q q=((q->r)->r)
5: (q&((q->r)->r))<->q ; mp 3 4
6: (p=>(q&((q->r)->r)))<->(p=>q) ; rule RCbox 5
7: ((p=>(q&((q->r)->r)))<->(p=>q))->((p=>q)->(p=>(q&((q->r)->r)))) ; ax A0.4 phi=((p=>(q&((q->r)->r)))->(p=>q)) psi=((p=>q)->(p=>(q&((q->r)->r))))
8: (p=>q)->(p=>(q&((q->r)->r))) ; mp 6 7
9: ((p=>q)&(p=>((q->r)->r)))<->(p=>(q&((q->r)->r))) ; ax A1 phi=p psi=q chi=((q->r)->r)
10: (((p=>q)&(p=>((q->r)->r)))<->(p=>(q&((q->r)->r))))->((p=>(q&((q->r)->r)))->((p=>q)&(p=>((q->r)->r)))) ; ax A0.4 phi=(((p=>q)&(p=>((q->r)->r)))->(p=>(q&((q->r)->r)))) psi=((p=>(q&((q->r)->r)))->((p=>q)&(p=>((q->r)->r))))
11: (p=>(q&((q->r)->r)))->((p=>q)&(p=>((q->r)->r))) ; mp 9 10
12: ((p=>q)&(p=>((q->r)->r)))->(p=>((q->r)->r)) ; ax A0.4 phi=(p=>q) psi=(p=>((q->r)->r))
13: ((p=>q)->(p=>(q&((q->r)->r))))->(((p=>(q&((q->r)->r)))->((p=>q)&(p=>((q->r)->r))))->((p=>q)->((p=>q)&(p=>((q->r)->r))))) ; thm INT/imp_trans p=(p=>q) q=(p=>(q&((q->r)->r))) r=((p=>q)&(p=>((q->r)->r)))
14: ((p=>(q&((q->r)->r)))->((p=>q)&(p=>((q->r)->r))))->((p=>q)->((p=>q)&(p=>((q->r)->r)))) ; mp 8 13
15: (p=>q)->((p=>q)&(p=>((q->r)->r))) ; mp 11 14
16: ((p=>q)->((p=>q)&(p=>((q->r)->r))))->((((p=>q)&(p=>((q->r)->r)))->(p=>((q->r)->r)))->((p=>q)->(p=>((q->r)->r)))) ; thm INT/imp_trans p=(p=>q) q=((p=>q)&(p=>((q->r)->r))) r=(p=>((q->r)->r))
17: (((p=>q)&(p=>((q->r)->r)))->(p=>((q->r)->r)))->((p=>q)->(p=>((q->r)->r))) ; mp 15 16
18: (p=>q)->(p=>((q->r)->r)) ; mp 12 17
19: (p=>((q->r)->r))->((p~>(q->r))->(p~>r)) ; thm INTCK/T2 p=p q=(q->r) r=r
20: ((p=>q)->(p=>((q->r)->r)))->(((p=>((q->r)->r))->((p~>(q->r))->(p~>r)))->((p=>q)->((p~>(q->r))->(p~>r)))) ; thm INT/imp_trans p=(p=>q) q=(p=>((q->r)->r)) r=((p~>(q->r))->(p~>r))
21: ((p=>((q->r)->r))->((p~>(q->r))->(p~>r)))->((p=>q)->((p~>(q->r))->(p~>r))) ; mp 18 20
22: (p=>q)->((p~>(q->r))->(p~>r)) ; mp 19 21
)"},

    {"INTCK/T4_fwd", R"(calculus INTCK
mode proof
1: F->(p=>F) ; ax A0.9 phi=(p=>F)
2: (F->(p=>F))->(~(p~>q)->((p~>q)->(p=>F))) ; thm INT/b p=(p~>q) q=F r=(p=>F)
3: ~(p~>q)->((p~>q)->(p=>F)) ; mp 1 2
4: ((p~>q)->(p=>F))->(p=>~q) ; ax A4 phi=p psi=q chi=F
5: (~(p~>q)->((p~>q)->(p=>F)))->((((p~>q)->(p=>F))->(p=>~q))->(~(p~>q)->(p=>~q))) ; thm INT/imp_trans p=~(p~>q) q=((p~>q)->(p=>F)) r=(p=>~q)
6: (((p~>q)->(p=>F))->(p=>~q))->(~(p~>q)->(p=>~q)) ; mp 3 5
7: ~(p~>q)->(p=>~q) ; mp 4 6
)"},

    {"INTCK/T4_bwd", R"(calculus INTCK
mode proof
1: (p=>~q)->((p~>q)->(p~>F)) ; thm INTCK/T2 p=p q=q r=F
2: ~(p~>F) ; ax A6 phi=p
3: ~(p~>F)->(((p~>q)->(p~>F))->~(p~>q)) ; thm INT/b p=(p~>q) q=(p~>F) r=F
4: ((p~>q)->(p~>F))->~(p~>q) ; mp 2 3
5: ((p=>~q)->((p~>q)->(p~>F)))->((((p~>q)->(p~>F))->~(p~>q))->((p=>~q)->~(p~>q))) ; thm INT/imp_trans p=(p=>~q) q=((p~>q)->(p~>F)) r=~(p~>q)
6: (((p~>q)->(p~>F))->~(p~>q))->((p=>~q)->~(p~>q)) ; mp 1 5
7: (p=>~q)->~(p~>q) ; mp 4 6
)"},

    {"INTCK/T4", R"(calculus INTCK
mode proof
1: ~(p~>q)->(p=>~q) ; thm INTCK/T4_fwd p=p q=q
2: (p=>~q)->~(p~>q) ; thm INTCK/T4_bwd p=p q=q
3: (~(p~>q)->(p=>~q))->(((p=>~q)->~(p~>q))->((~(p~>q)->(p=>~q))&((p=>~q)->~(p~>q)))) ; ax A0.5 phi=(~(p~>q)->(p=>~q)) psi=((p=>~q)->~(p~>q))
4: ((p=>~q)->~(p~>q))->((~(p~>q)->(p=>~q))&((p=>~q)->~(p~>q))) ; mp 1 3
5: ~(p~>q)<->(p=>~q) ; mp 2 4
)"},

    {"INTCK/dia_or_fwd", R"(calculus INTCK
mode proof
1: (p~>(q|r))<->((p~>q)|(p~>r)) ; ax A3 phi=p psi=q chi=r
2: ((p~>(q|r))<->((p~>q)|(p~>r)))->((p~>(q|r))->((p~>q)|(p~>r))) ; ax A0.3 phi=((p~>(q|r))->((p~>q)|(p~>r))) psi=(((p~>q)|(p~>r))->(p~>(q|r)))
3: (p~>(q|r))->((p~>q)|(p~>r)) ; mp 1 2
)"},

    {"INTCK/ick_nn", R"(calculus INTCK
mode proof
1: ~(T~>T)<->(T=>~T) ; thm INTCK/T4 p=T q=T
2: T ; thm INT/top
3: ~T->~T ; thm INT/id p=~T
4: (~T->~T)->(T->~~T) ; thm INT/swap p=~T q=T r=F
5: T->~~T ; mp 3 4
6: ~~T ; mp 2 5
7: F->~T ; ax A0.9 phi=~T
8: ~~T->((F->~T)->(~~T&(F->~T))) ; ax A0.5 phi=~~T psi=(F->~T)
9: (F->~T)->(~~T&(F->~T)) ; mp 6 8
10: ~T<->F ; mp 7 9
11: (T=>~T)<->(T=>F) ; rule RCbox 10
12: (~(T~>T)<->(T=>~T))->(((T=>~T)<->(T=>F))->(~(T~>T)<->(T=>F))) ; thm INT/iff_trans p=~(T~>T) q=(T=>~T) r=(T=>F)
13: ((T=>~T)<->(T=>F))->(~(T~>T)<->(T=>F)) ; mp 1 12
14: ~(T~>T)<->(T=>F) ; mp 11 13
15: (~(T~>T)<->(T=>F))->(~~(T~>T)<->~(T=>F)) ; thm INT/neg_cong p=~(T~>T) q=(T=>F)
16: ~~(T~>T)<->~(T=>F) ; mp 14 15
17: (~~(T~>T)<->~(T=>F))->(~~~(T~>T)<->~~(T=>F)) ; thm INT/neg_cong p=~~(T~>T) q=~(T=>F)
18: ~~~(T~>T)<->~~(T=>F) ; mp 16 17
19: (~~~(T~>T)<->~~(T=>F))->(~~(T=>F)<->~~~(T~>T)) ; thm INT/iff_sym p=~~~(T~>T) q=~~(T=>F)
20: ~~(T=>F)<->~~~(T~>T) ; mp 18 19
21: ~~~(T~>T)<->~(T~>T) ; thm INT/tneg p=(T~>T)
22: (~~(T=>F)<->~~~(T~>T))->((~~~(T~>T)<->~(T~>T))->(~~(T=>F)<->~(T~>T))) ; thm INT/iff_trans p=~~(T=>F) q=~~~(T~>T) r=~(T~>T)
23: (~~~(T~>T)<->~(T~>T))->(~~(T=>F)<->~(T~>T)) ; mp 20 22
24: ~~(T=>F)<->~(T~>T) ; mp 21 23
25: ((T~>T)->(T=>F))->(T=>~T) ; ax A4 phi=T psi=T chi=F
26: ((T=>~T)<->(T=>F))->((T=>~T)->(T=>F)) ; ax A0.3 phi=((T=>~T)->(T=>F)) psi=((T=>F)->(T=>~T))
27: (T=>~T)->(T=>F) ; mp 11 26
28: (((T~>T)->(T=>F))->(T=>~T))->(((T=>~T)->(T=>F))->(((T~>T)->(T=>F))->(T=>F))) ; thm INT/imp_trans p=((T~>T)->(T=>F)) q=(T=>~T) r=(T=>F)
29: ((T=>~T)->(T=>F))->(((T~>T)->(T=>F))->(T=>F)) ; mp 25 28
30: ((T~>T)->(T=>F))->(T=>F) ; mp 27 29
31: (~~(T=>F)<->~(T~>T))->(~~(T=>F)->~(T~>T)) ; ax A0.3 phi=(~~(T=>F)->~(T~>T)) psi=(~(T~>T)->~~(T=>F))
32: ~~(T=>F)->~(T~>T) ; mp 24 31
33: F->(T=>F) ; ax A0.9 phi=(T=>F)
34: (F->(T=>F))->(~(T~>T)->((T~>T)->(T=>F))) ; thm INT/b p=(T~>T) q=F r=(T=>F)
35: ~(T~>T)->((T~>T)->(T=>F)) ; mp 33 34
36: (~~(T=>F)->~(T~>T))->((~(T~>T)->((T~>T)->(T=>F)))->(~~(T=>F)->((T~>T)->(T=>F)))) ; thm INT/imp_trans p=~~(T=>F) q=~(T~>T) r=((T~>T)->(T=>F))
37: (~(T~>T)->((T~>T)->(T=>F)))->(~~(T=>F)->((T~>T)->(T=>F))) ; mp 32 36
38: ~~(T=>F)->((T~>T)->(T=>F)) ; mp 35 37
39: (~~(T=>F)->((T~>T)->(T=>F)))->((((T~>T)->(T=>F))->(T=>F))->(~~(T=>F)->(T=>F))) ; thm INT/imp_trans p=~~(T=>F) q=((T~>T)->(T=>F)) r=(T=>F)
40: (((T~>T)->(T=>F))->(T=>F))->(~~(T=>F)->(T=>F)) ; mp 38 39
41: ~~(T=>F)->(T=>F) ; mp 30 40
)"},

    {"CK/T1", R"(calculus CK
mode proof
1: (q&(q->r))->q ; ax A0.3 phi=q psi=(q->r)
2: (q&(q->r))->(q->r) ; ax A0.4 phi=q psi=(q->r)
3: ((q&(q->r))->(q->r))->(((q&(q->r))->q)->((q&(q->r))->r)) ; ax A0.2 phi=(q&(q->r)) psi=q chi=r
4: ((q&(q->r))->q)->((q&(q->r))->r) ; mp 2 3
5: (q&(q->r))->r ; mp 1 4
6: ((q&(q->r))->r)->(((q&(q->r))&r)<->(q&(q->r))) ; thm INT/and_absorb p=(q&(q->r)) q=r
7: ((q&(q->r))&r)<->(q&(q->r)) ; mp 5 6
8: (p=>((q&(q->r))&r))<->(p=>(q&(q->r))) ; rule RCbox 7
9: ((p=>((q&(q->r))&r))<->(p=>(q&(q->r))))->((p=>(q&(q->r)))->(p=>((q&(q->r))&r))) ; ax A0.4 phi=((p=>((q&(q->r))&r))->(p=>(q&(q->r)))) psi=((p=>(q&(q->r)))->(p=>((q&(q->r))&r)))
10: (p=>(q&(q->r)))->(p=>((q&(q->r))&r)) ; mp 8 9
11: ((p=>(q&(q->r)))&(p=>r))<->(p=>((q&(q->r))&r)) ; ax A1 phi=p psi=(q&(q->r)) chi=r
12: (((p=>(q&(q->r)))&(p=>r))<->(p=>((q&(q->r))&r)))->((p=>((q&(q->r))&r))->((p=>(q&(q->r)))&(p=>r))) ; ax A0.4 phi=(((p=>(q&(q->r)))&(p=>r))->(p=>((q&(q->r))&r))) psi=((p=>((q&(q->r))&r))->((p=>(q&(q->r)))&(p=>r)))
13: (p=>((q&(q->r))&r))->((p=>(q&(q->r)))&(p=>r)) ; mp 11 12
14: ((p=>(q&(q->r)))&(p=>r))->(p=>r) ; ax A0.4 phi=(p=>(q&(q->r))) psi=(p=>r)
15: ((p=>(q&(q->r)))->(p=>((q&(q->r))&r)))->(((p=>((q&(q->r))&r))->((p=>(q&(q->r)))&(p=>r)))->((p=>(q&(q->r)))->((p=>(q&(q->r)))&(p=>r)))) ; thm INT/imp_trans p=(p=>(q&(q->r))) q=(p=>((q&(q->r))&r)) r=((p=>(q&(q->r)))&(p=>r))
16: ((p=>((q&(q->r))&r))->((p=>(q&(q->r)))&(p=>r)))->((p=>(q&(q->r)))->((p=>(q&(q->r)))&(p=>r))) ; mp 10 15
17: (p=>(q&(q->r)))->((p=>(q&(q->r)))&(p=>r)) ; mp 13 16
18: ((p=>(q&(q->r)))->((p=>(q&(q->r)))&(p=>r)))->((((p=>(q&(q->r)))&(p=>r))->(p=>r))->((p=>(q&(q->r)))->(p=>r))) ; thm INT/imp_trans p=(p=>(q&(q->r))) q=((p=>(q&(q->r)))&(p=>r)) r=(p=>r)
19: (((p=>(q&(q->r)))&(p=>r))->(p=>r))->((p=>(q&(q->r)))->(p=>r)) ; mp 17 18
20: (p=>(q&(q->r)))->(p=>r) ; mp 14 19
21: ((p=>q)&(p=>(q->r)))<->(p=>(q&(q->r))) ; ax A1 phi=p psi=q chi=(q->r)
22: (((p=>q)&(p=>(q->r)))<->(p=>(q&(q->r))))->(((p=>q)&(p=>(q->r)))->(p=>(q&(q->r)))) ; ax A0.3 phi=(((p=>q)&(p=>(q->r)))->(p=>(q&(q->r)))) psi=((p=>(q&(q->r)))->((p=>q)&(p=>(q->r))))
23: ((p=>q)&(p=>(q->r)))->(p=>(q&(q->r))) ; mp 21 22
24: (((p=>q)&(p=>(q->r)))->(p=>(q&(q->r))))->(((p=>(q&(q->r)))->(p=>r))->(((p=>q)&(p=>(q->r)))->(p=>r))) ; thm INT/imp_trans p=((p=>q)&(p=>(q->r))) q=(p=>(q&(q->r))) r=(p=>r)
25: ((p=>(q&(q->r)))->(p=>r))->(((p=>q)&(p=>(q->r)))->(p=>r)) ; mp 23 24
26: ((p=>q)&(p=>(q->r)))->(p=>r) ; mp 20 25
27: (((p=>q)&(p=>(q->r)))->(p=>r))->((p=>q)->((p=>(q->r))->(p=>r))) ; thm INT/exp p=(p=>q) q=(p=>(q->r)) r=(p=>r)
28: (p=>q)->((p=>(q->r))->(p=>r)) ; mp 26 27
29: ((p=>q)->((p=>(q->r))->(p=>r)))->((p=>(q->r))->((p=>q)->(p=>r))) ; thm INT/swap p=(p=>q) q=(p=>(q->r)) r=(p=>r)
30: (p=>(q->r))->((p=>q)->(p=>r)) ; mp 28 29
)"},

    {"CK/demorgan_and", R"(calculus CK
mode proof
1: ~(p&q)->(p->~q) ; thm INT/exp p=p q=q r=F
2: ~q->(~p|~q) ; ax A0.7 phi=~p psi=~q
3: (~q->(~p|~q))->((p->~q)->(p->(~p|~q))) ; thm INT/b p=p q=~q r=(~p|~q)
4: (p->~q)->(p->(~p|~q)) ; mp 2 3
5: (~(p&q)->(p->~q))->(((p->~q)->(p->(~p|~q)))->(~(p&q)->(p->(~p|~q)))) ; thm INT/imp_trans p=~(p&q) q=(p->~q) r=(p->(~p|~q))
6: ((p->~q)->(p->(~p|~q)))->(~(p&q)->(p->(~p|~q))) ; mp 1 5
7: ~(p&q)->(p->(~p|~q)) ; mp 4 6
8: ~p->(~p|~q) ; ax A0.6 phi=~p psi=~q
9: (p->(~p|~q))->((~p->(~p|~q))->((p|~p)->(~p|~q))) ; ax A0.8 phi=p psi=~p chi=(~p|~q)
10: (~(p&q)->(p->(~p|~q)))->(((p->(~p|~q))->((~p->(~p|~q))->((p|~p)->(~p|~q))))->(~(p&q)->((~p->(~p|~q))->((p|~p)->(~p|~q))))) ; thm INT/imp_trans p=~(p&q) q=(p->(~p|~q)) r=((~p->(~p|~q))->((p|~p)->(~p|~q)))
11: ((p->(~p|~q))->((~p->(~p|~q))->((p|~p)->(~p|~q))))->(~(p&q)->((~p->(~p|~q))->((p|~p)->(~p|~q)))) ; mp 7 10
12: ~(p&q)->((~p->(~p|~q))->((p|~p)->(~p|~q))) ; mp 9 11
13: (~(p&q)->((~p->(~p|~q))->((p|~p)->(~p|~q))))->((~(p&q)->(~p->(~p|~q)))->(~(p&q)->((p|~p)->(~p|~q)))) ; ax A0.2 phi=~(p&q) psi=(~p->(~p|~q)) chi=((p|~p)->(~p|~q))
14: (~(p&q)->(~p->(~p|~q)))->(~(p&q)->((p|~p)->(~p|~q))) ; mp 12 13
15: (~p->(~p|~q))->(~(p&q)->(~p->(~p|~q))) ; ax A0.1 phi=(~p->(~p|~q)) psi=~(p&q)
16: ~(p&q)->(~p->(~p|~q)) ; mp 8 15
17: ~(p&q)->((p|~p)->(~p|~q)) ; mp 16 14
18: (~(p&q)->((p|~p)->(~p|~q)))->((p|~p)->(~(p&q)->(~p|~q))) ; thm INT/swap p=~(p&q) q=(p|~p) r=(~p|~q)
19: (p|~p)->(~(p&q)->(~p|~q)) ; mp 17 18
20: p|~p ; ax Ax0 phi=p
21: ~(p&q)->(~p|~q) ; mp 20 19
22: (p&q)->p ; ax A0.3 phi=p psi=q
23: ((p&q)->p)->(~p->~(p&q)) ; thm INT/imp_trans p=(p&q) q=p r=F
24: ~p->~(p&q) ; mp 22 23
25: (p&q)->q ; ax A0.4 phi=p psi=q
26: ((p&q)->q)->(~q->~(p&q)) ; thm INT/imp_trans p=(p&q) q=q r=F
27: ~q->~(p&q) ; mp 25 26
28: (~p->~(p&q))->((~q->~(p&q))->((~p|~q)->~(p&q))) ; ax A0.8 phi=~p psi=~q chi=~(p&q)
29: (~q->~(p&q))->((~p|~q)->~(p&q)) ; mp 24 28
30: (~p|~q)->~(p&q) ; mp 27 29
31: (~(p&q)->(~p|~q))->(((~p|~q)->~(p&q))->((~(p&q)->(~p|~q))&((~p|~q)->~(p&q)))) ; ax A0.5 phi=(~(p&q)->(~p|~q)) psi=((~p|~q)->~(p&q))
32: ((~p|~q)->~(p&q))->((~(p&q)->(~p|~q))&((~p|~q)->~(p&q))) ; mp 21 31
33: ~(p&q)<->(~p|~q) ; mp 30 32
)"},

    {"CK/box_k", R"(calculus CK
mode proof
1: r->(q->r) ; ax A0.1 phi=r psi=q
2: (r->(q->r))->((r&(q->r))<->r) ; thm INT/and_absorb p=r q=(q->r)
3: (r&(q->r))<->r ; mp 1 2
4: (p=>(r&(q->r)))<->(p=>r) ; rule RCbox 3
5: ((p=>(r&(q->r)))<->(p=>r))->((p=>r)->(p=>(r&(q->r)))) ; ax A0.4 phi=((p=>(r&(q->r)))->(p=>r)) psi=((p=>r)->(p=>(r&(q->r))))
6: (p=>r)->(p=>(r&(q->r))) ; mp 4 5
7: ((p=>r)&(p=>(q->r)))<->(p=>(r&(q->r))) ; ax A1 phi=p psi=r chi=(q->r)
8: (((p=>r)&(p=>(q->r)))<->(p=>(r&(q->r))))->((p=>(r&(q->r)))->((p=>r)&(p=>(q->r)))) ; ax A0.4 phi=(((p=>r)&(p=>(q->r)))->(p=>(r&(q->r)))) psi=((p=>(r&(q->r)))->((p=>r)&(p=>(q->r))))
9: (p=>(r&(q->r)))->((p=>r)&(p=>(q->r))) ; mp 7 8
10: ((p=>r)&(p=>(q->r)))->(p=>(q->r)) ; ax A0.4 phi=(p=>r) psi=(p=>(q->r))
11: ((p=>r)->(p=>(r&(q->r))))->(((p=>(r&(q->r)))->((p=>r)&(p=>(q->r))))->((p=>r)->((p=>r)&(p=>(q->r))))) ; thm INT/imp_trans p=(p=>r) q=(p=>(r&(q->r))) r=((p=>r)&(p=>(q->r)))
12: ((p=>(r&(q->r)))->((p=>r)&(p=>(q->r))))->((p=>r)->((p=>r)&(p=>(q->r)))) ; mp 6 11
13: (p=>r)->((p=>r)&(p=>(q->r))) ; mp 9 12
14: ((p=>r)->((p=>r)&(p=>(q->r))))->((((p=>r)&(p=>(q->r)))->(p=>(q->r)))->((p=>r)->(p=>(q->r)))) ; thm INT/imp_trans p=(p=>r) q=((p=>r)&(p=>(q->r))) r=(p=>(q->r))
15: (((p=>r)&(p=>(q->r)))->(p=>(q->r)))->((p=>r)->(p=>(q->r))) ; mp 13 14
16: (p=>r)->(p=>(q->r)) ; mp 10 15
)"},

    {"CK/box_nimp", R"(calculus CK
mode proof
1: ~q->(q->r) ; thm INT/nimp p=q q=r
2: (~q->(q->r))->((~q&(q->r))<->~q) ; thm INT/and_absorb p=~q q=(q->r)
3: (~q&(q->r))<->~q ; mp 1 2
4: (p=>(~q&(q->r)))<->(p=>~q) ; rule RCbox 3
5: ((p=>(~q&(q->r)))<->(p=>~q))->((p=>~q)->(p=>(~q&(q->r)))) ; ax A0.4 phi=((p=>(~q&(q->r)))->(p=>~q)) psi=((p=>~q)->(p=>(~q&(q->r))))
6: (p=>~q)->(p=>(~q&(q->r))) ; mp 4 5
7: ((p=>~q)&(p=>(q->r)))<->(p=>(~q&(q->r))) ; ax A1 phi=p psi=~q chi=(q->r)
8: (((p=>~q)&(p=>(q->r)))<->(p=>(~q&(q->r))))->((p=>(~q&(q->r)))->((p=>~q)&(p=>(q->r)))) ; ax A0.4 phi=(((p=>~q)&(p=>(q->r)))->(p=>(~q&(q->r)))) psi=((p=>(~q&(q->r)))->((p=>~q)&(p=>(q->r))))
9: (p=>(~q&(q->r)))->((p=>~q)&(p=>(q->r))) ; mp 7 8
10: ((p=>~q)&(p=>(q->r)))->(p=>(q->r)) ; ax A0.4 phi=(p=>~q) psi=(p=>(q->r))
11: ((p=>~q)->(p=>(~q&(q->r))))->(((p=>(~q&(q->r)))->((p=>~q)&(p=>(q->r))))->((p=>~q)->((p=>~q)&(p=>(q->r))))) ; thm INT/imp_trans p=(p=>~q) q=(p=>(~q&(q->r))) r=((p=>~q)&(p=>(q->r)))
12: ((p=>(~q&(q->r)))->((p=>~q)&(p=>(q->r))))->((p=>~q)->((p=>~q)&(p=>(q->r)))) ; mp 6 11
13: (p=>~q)->((p=>~q)&(p=>(q->r))) ; mp 9 12
14: ((p=>~q)->((p=>~q)&(p=>(q->r))))->((((p=>~q)&(p=>(q->r)))->(p=>(q->r)))->((p=>~q)->(p=>(q->r)))) ; thm INT/imp_trans p=(p=>~q) q=((p=>~q)&(p=>(q->r))) r=(p=>(q->r))
15: (((p=>~q)&(p=>(q->r)))->(p=>(q->r)))->((p=>~q)->(p=>(q->r))) ; mp 13 14
16: (p=>~q)->(p=>(q->r)) ; mp 10 15
)"},

    {"CK/A2", R"(calculus CK
mode proof
1: q->(r->(q&r)) ; ax A0.5 phi=q psi=r
2: (q->(r->(q&r)))->(r->(q->(q&r))) ; thm INT/swap p=q q=r r=(q&r)
3: r->(q->(q&r)) ; mp 1 2
4: (q->(q&r))->(~(q&r)->~q) ; thm INT/imp_trans p=q q=(q&r) r=F
5: (r->(q->(q&r)))->(((q->(q&r))->(~(q&r)->~q))->(r->(~(q&r)->~q))) ; thm INT/imp_trans p=r q=(q->(q&r)) r=(~(q&r)->~q)
6: ((q->(q&r))->(~(q&r)->~q))->(r->(~(q&r)->~q)) ; mp 3 5
7: r->(~(q&r)->~q) ; mp 4 6
8: (r->(~(q&r)->~q))->((r&(~(q&r)->~q))<->r) ; thm INT/and_absorb p=r q=(~(q&r)->~q)
9: (r&(~(q&r)->~q))<->r ; mp 7 8
10: (p=>(r&(~(q&r)->~q)))<->(p=>r) ; rule RCbox 9
11: ((p=>(r&(~(q&r)->~q)))<->(p=>r))->((p=>r)->(p=>(r&(~(q&r)->~q)))) ; ax A0.4 phi=((p=>(r&(~(q&r)->~q)))->(p=>r)) psi=((p=>r)->(p=>(r&(~(q&r)->~q))))
12: (p=>r)->(p=>(r&(~(q&r)->~q))) ; mp 10 11
13: ((p=>r)&(p=>(~(q&r)->~q)))<->(p=>(r&(~(q&r)->~q))) ; ax A1 phi=p psi=r chi=(~(q&r)->~q)
14: (((p=>r)&(p=>(~(q&r)->~q)))<->(p=>(r&(~(q&r)->~q))))->((p=>(r&(~(q&r)->~q)))->((p=>r)&(p=>(~(q&r)->~q)))) ; ax A0.4 phi=(((p=>r)&(p=>(~(q&r)->~q)))->(p=>(r&(~(q&r)->~q)))) psi=((p=>(r&(~(q&r)->~q)))->((p=>r)&(p=>(~(q&r)->~q))))
15: (p=>(r&(~(q&r)->~q)))->((p=>r)&(p=>(~(q&r)->~q))) ; mp 13 14
16: ((p=>r)&(p=>(~(q&r)->~q)))->(p=>(~(q&r)->~q)) ; ax A0.4 phi=(p=>r) psi=(p=>(~(q&r)->~q))
17: ((p=>r)->(p=>(r&(~(q&r)->~q))))->(((p=>(r&(~(q&r)->~q)))->((p=>r)&(p=>(~(q&r)->~q))))->((p=>r)->((p=>r)&(p=>(~(q&r)->~q))))) ; thm INT/imp_trans p=(p=>r) q=(p=>(r&(~(q&r)->~q))) r=((p=>r)&(p=>(~(q&r)->~q)))
18: ((p=>(r&(~(q&r)->~q)))->((p=>r)&(p=>(~(q&r)->~q))))->((p=>r)->((p=>r)&(p=>(~(q&r)->~q)))) ; mp 12 17
19: (p=>r)->((p=>r)&(p=>(~(q&r)->~q))) ; mp 15 18
20: ((p=>r)->((p=>r)&(p=>(~(q&r)->~q))))->((((p=>r)&(p=>(~(q&r)->~q)))->(p=>(~(q&r)->~q)))->((p=>r)->(p=>(~(q&r)->~q)))) ; thm INT/imp_trans p=(p=>r) q=((p=>r)&(p=>(~(q&r)->~q))) r=(p=>(~(q&r)->~q))
21: (((p=>r)&(p=>(~(q&r)->~q)))->(p=>(~(q&r)->~q)))->((p=>r)->(p=>(~(q&r)->~q))) ; mp 19 20
22: (p=>r)->(p=>(~(q&r)->~q)) ; mp 16 21
23: (p=>(~(q&r)->~q))->((p=>~(q&r))->(p=>~q)) ; thm CK/T1 p=p q=~(q&r) r=~q
24: ((p=>r)->(p=>(~(q&r)->~q)))->(((p=>(~(q&r)->~q))->((p=>~(q&r))->(p=>~q)))->((p=>r)->((p=>~(q&r))->(p=>~q)))) ; thm INT/imp_trans p=(p=>r) q=(p=>(~(q&r)->~q)) r=((p=>~(q&r))->(p=>~q))
25: ((p=>(~(q&r)->~q))->((p=>~(q&r))->(p=>~q)))->((p=>r)->((p=>~(q&r))->(p=>~q))) ; mp 22 24
26: (p=>r)->((p=>~(q&r))->(p=>~q)) ; mp 23 25
27: ((p=>~(q&r))->(p=>~q))->(~(p=>~q)->~(p=>~(q&r))) ; thm INT/imp_trans p=(p=>~(q&r)) q=(p=>~q) r=F
28: ((p=>r)->((p=>~(q&r))->(p=>~q)))->((((p=>~(q&r))->(p=>~q))->(~(p=>~q)->~(p=>~(q&r))))->((p=>r)->(~(p=>~q)->~(p=>~(q&r))))) ; thm INT/imp_trans p=(p=>r) q=((p=>~(q&r))->(p=>~q)) r=(~(p=>~q)->~(p=>~(q&r)))
29: (((p=>~(q&r))->(p=>~q))->(~(p=>~q)->~(p=>~(q&r))))->((p=>r)->(~(p=>~q)->~(p=>~(q&r)))) ; mp 26 28
30: (p=>r)->(~(p=>~q)->~(p=>~(q&r))) ; mp 27 29
31: (p~>q)<->~(p=>~q) ; ax Ax1 phi=p psi=q
32: ((p~>q)<->~(p=>~q))->((p~>q)->~(p=>~q)) ; ax A0.3 phi=((p~>q)->~(p=>~q)) psi=(~(p=>~q)->(p~>q))
33: (p~>q)->~(p=>~q) ; mp 31 32
34: (p~>(q&r))<->~(p=>~(q&r)) ; ax Ax1 phi=p psi=(q&r)
35: ((p~>(q&r))<->~(p=>~(q&r)))->(~(p=>~(q&r))->(p~>(q&r))) ; ax A0.4 phi=((p~>(q&r))->~(p=>~(q&r))) psi=(~(p=>~(q&r))->(p~>(q&r)))
36: ~(p=>~(q&r))->(p~>(q&r)) ; mp 34 35
37: ((p~>q)->~(p=>~q))->((~(p=>~q)->~(p=>~(q&r)))->((p~>q)->~(p=>~(q&r)))) ; thm INT/imp_trans p=(p~>q) q=~(p=>~q) r=~(p=>~(q&r))
38: (~(p=>~q)->~(p=>~(q&r)))->((p~>q)->~(p=>~(q&r))) ; mp 33 37
39: ((p=>r)->(~(p=>~q)->~(p=>~(q&r))))->(((~(p=>~q)->~(p=>~(q&r)))->((p~>q)->~(p=>~(q&r))))->((p=>r)->((p~>q)->~(p=>~(q&r))))) ; thm INT/imp_trans p=(p=>r) q=(~(p=>~q)->~(p=>~(q&r))) r=((p~>q)->~(p=>~(q&r)))
40: ((~(p=>~q)->~(p=>~(q&r)))->((p~>q)->~(p=>~(q&r))))->((p=>r)->((p~>q)->~(p=>~(q&r)))) ; mp 30 39
41: (p=>r)->((p~>q)->~(p=>~(q&r))) ; mp 38 40
42: (~(p=>~(q&r))->(p~>(q&r)))->(((p~>q)->~(p=>~(q&r)))->((p~>q)->(p~>(q&r)))) ; thm INT/b p=(p~>q) q=~(p=>~(q&r)) r=(p~>(q&r))
43: ((p~>q)->~(p=>~(q&r)))->((p~>q)->(p~>(q&r))) ; mp 36 42
44: ((p=>r)->((p~>q)->~(p=>~(q&r))))->((((p~>q)->~(p=>~(q&r)))->((p~>q)->(p~>(q&r))))->((p=>r)->((p~>q)->(p~>(q&r))))) ; thm INT/imp_trans p=(p=>r) q=((p~>q)->~(p=>~(q&r))) r=((p~>q)->(p~>(q&r)))
45: (((p~>q)->~(p=>~(q&r)))->((p~>q)->(p~>(q&r))))->((p=>r)->((p~>q)->(p~>(q&r)))) ; mp 41 44
46: (p=>r)->((p~>q)->(p~>(q&r))) ; mp 43 45
47: ((p=>r)->((p~>q)->(p~>(q&r))))->(((p=>r)&(p~>q))->(p~>(q&r))) ; thm INT/imp2 p=(p=>r) q=(p~>q) r=(p~>(q&r))
48: ((p=>r)&(p~>q))->(p~>(q&r)) ; mp 46 47
49: ((p~>q)&(p=>r))->((p=>r)&(p~>q)) ; thm INT/and_comm p=(p~>q) q=(p=>r)
50: (((p~>q)&(p=>r))->((p=>r)&(p~>q)))->((((p=>r)&(p~>q))->(p~>(q&r)))->(((p~>q)&(p=>r))->(p~>(q&r)))) ; thm INT/imp_trans p=((p~>q)&(p=>r)) q=((p=>r)&(p~>q)) r=(p~>(q&r))
51: (((p=>r)&(p~>q))->(p~>(q&r)))->(((p~>q)&(p=>r))->(p~>(q&r))) ; mp 49 50
52: ((p~>q)&(p=>r))->(p~>(q&r)) ; mp 48 51
)"},

    {"CK/A4", R"(calculus CK
mode proof
1: (p~>q)<->~(p=>~q) ; ax Ax1 phi=p psi=q
2: ((p~>q)<->~(p=>~q))->(~(p=>~q)->(p~>q)) ; ax A0.4 phi=((p~>q)->~(p=>~q)) psi=(~(p=>~q)->(p~>q))
3: ~(p=>~q)->(p~>q) ; mp 1 2
4: (~(p=>~q)->(p~>q))->(((p~>q)->(p=>r))->(~(p=>~q)->(p=>r))) ; thm INT/imp_trans p=~(p=>~q) q=(p~>q) r=(p=>r)
5: ((p~>q)->(p=>r))->(~(p=>~q)->(p=>r)) ; mp 3 4
6: (p=>r)->(p=>(q->r)) ; thm CK/box_k p=p q=q r=r
7: ((p=>r)->(p=>(q->r)))->((~(p=>~q)->(p=>r))->(~(p=>~q)->(p=>(q->r)))) ; thm INT/b p=~(p=>~q) q=(p=>r) r=(p=>(q->r))
8: (~(p=>~q)->(p=>r))->(~(p=>~q)->(p=>(q->r))) ; mp 6 7
9: (((p~>q)->(p=>r))->(~(p=>~q)->(p=>r)))->(((~(p=>~q)->(p=>r))->(~(p=>~q)->(p=>(q->r))))->(((p~>q)->(p=>r))->(~(p=>~q)->(p=>(q->r))))) ; thm INT/imp_trans p=((p~>q)->(p=>r)) q=(~(p=>~q)->(p=>r)) r=(~(p=>~q)->(p=>(q->r)))
10: ((~(p=>~q)->(p=>r))->(~(p=>~q)->(p=>(q->r))))->(((p~>q)->(p=>r))->(~(p=>~q)->(p=>(q->r)))) ; mp 5 9
11: ((p~>q)->(p=>r))->(~(p=>~q)->(p=>(q->r))) ; mp 8 10
12: (p=>~q)->(p=>(q->r)) ; thm CK/box_nimp p=p q=q r=r
13: ((p=>~q)->(p=>(q->r)))->(((p~>q)->(p=>r))->((p=>~q)->(p=>(q->r)))) ; ax A0.1 phi=((p=>~q)->(p=>(q->r))) psi=((p~>q)->(p=>r))
14: ((p~>q)->(p=>r))->((p=>~q)->(p=>(q->r))) ; mp 12 13
15: ((p=>~q)->(p=>(q->r)))->((~(p=>~q)->(p=>(q->r)))->(((p=>~q)|~(p=>~q))->(p=>(q->r)))) ; ax A0.8 phi=(p=>~q) psi=~(p=>~q) chi=(p=>(q->r))
16: (((p~>q)->(p=>r))->((p=>~q)->(p=>(q->r))))->((((p=>~q)->(p=>(q->r)))->((~(p=>~q)->(p=>(q->r)))->(((p=>~q)|~(p=>~q))->(p=>(q->r)))))->(((p~>q)->(p=>r))->((~(p=>~q)->(p=>(q->r)))->(((p=>~q)|~(p=>~q))->(p=>(q->r)))))) ; thm INT/imp_trans p=((p~>q)->(p=>r)) q=((p=>~q)->(p=>(q->r))) r=((~(p=>~q)->(p=>(q->r)))->(((p=>~q)|~(p=>~q))->(p=>(q->r))))
17: (((p=>~q)->(p=>(q->r)))->((~(p=>~q)->(p=>(q->r)))->(((p=>~q)|~(p=>~q))->(p=>(q->r)))))->(((p~>q)->(p=>r))->((~(p=>~q)->(p=>(q->r)))->(((p=>~q)|~(p=>~q))->(p=>(q->r))))) ; mp 14 16
18: ((p~>q)->(p=>r))->((~(p=>~q)->(p=>(q->r)))->(((p=>~q)|~(p=>~q))->(p=>(q->r)))) ; mp 15 17
19: (((p~>q)->(p=>r))->((~(p=>~q)->(p=>(q->r)))->(((p=>~q)|~(p=>~q))->(p=>(q->r)))))->((((p~>q)->(p=>r))->(~(p=>~q)->(p=>(q->r))))->(((p~>q)->(p=>r))->(((p=>~q)|~(p=>~q))->(p=>(q->r))))) ; ax A0.2 phi=((p~>q)->(p=>r)) psi=(~(p=>~q)->(p=>(q->r))) chi=(((p=>~q)|~(p=>~q))->(p=>(q->r)))
20: (((p~>q)->(p=>r))->(~(p=>~q)->(p=>(q->r))))->(((p~>q)->(p=>r))->(((p=>~q)|~(p=>~q))->(p=>(q->r)))) ; mp 18 19
21: ((p~>q)->(p=>r))->(((p=>~q)|~(p=>~q))->(p=>(q->r))) ; mp 11 20
22: (((p~>q)->(p=>r))->(((p=>~q)|~(p=>~q))->(p=>(q->r))))->(((p=>~q)|~(p=>~q))->(((p~>q)->(p=>r))->(p=>(q->r)))) ; thm INT/swap p=((p~>q)->(p=>r)) q=((p=>~q)|~(p=>~q)) r=(p=>(q->r))
23: ((p=>~q)|~(p=>~q))->(((p~>q)->(p=>r))->(p=>(q->r))) ; mp 21 22
24: (p=>~q)|~(p=>~q) ; ax Ax0 phi=(p=>~q)
25: ((p~>q)->(p=>r))->(p=>(q->r)) ; mp 24 23
)"},

    {"CK/A3", R"(calculus CK
mode proof
1: (p~>(q|r))<->~(p=>~(q|r)) ; ax Ax1 phi=p psi=(q|r)
2: ~(q|r)<->(~q&~r) ; thm INT/demorgan_or p=q q=r
3: (p=>~(q|r))<->(p=>(~q&~r)) ; rule RCbox 2
4: ((p=>~q)&(p=>~r))<->(p=>(~q&~r)) ; ax A1 phi=p psi=~q chi=~r
5: (((p=>~q)&(p=>~r))<->(p=>(~q&~r)))->((p=>(~q&~r))<->((p=>~q)&(p=>~r))) ; thm INT/iff_sym p=((p=>~q)&(p=>~r)) q=(p=>(~q&~r))
6: (p=>(~q&~r))<->((p=>~q)&(p=>~r)) ; mp 4 5
7: ((p=>~(q|r))<->(p=>(~q&~r)))->(((p=>(~q&~r))<->((p=>~q)&(p=>~r)))->((p=>~(q|r))<->((p=>~q)&(p=>~r)))) ; thm INT/iff_trans p=(p=>~(q|r)) q=(p=>(~q&~r)) r=((p=>~q)&(p=>~r))
8: ((p=>(~q&~r))<->((p=>~q)&(p=>~r)))->((p=>~(q|r))<->((p=>~q)&(p=>~r))) ; mp 3 7
9: (p=>~(q|r))<->((p=>~q)&(p=>~r)) ; mp 6 8
10: ((p=>~(q|r))<->((p=>~q)&(p=>~r)))->(~(p=>~(q|r))<->~((p=>~q)&(p=>~r))) ; thm INT/neg_cong p=(p=>~(q|r)) q=((p=>~q)&(p=>~r))
11: ~(p=>~(q|r))<->~((p=>~q)&(p=>~r)) ; mp 9 10
12: ((p~>(q|r))<->~(p=>~(q|r)))->((~(p=>~(q|r))<->~((p=>~q)&(p=>~r)))->((p~>(q|r))<->~((p=>~q)&(p=>~r)))) ; thm INT/iff_trans p=(p~>(q|r)) q=~(p=>~(q|r)) r=~((p=>~q)&(p=>~r))
13: (~(p=>~(q|r))<->~((p=>~q)&(p=>~r)))->((p~>(q|r))<->~((p=>~q)&(p=>~r))) ; mp 1 12
14: (p~>(q|r))<->~((p=>~q)&(p=>~r)) ; mp 11 13
15: ~((p=>~q)&(p=>~r))<->(~(p=>~q)|~(p=>~r)) ; thm CK/demorgan_and p=(p=>~q) q=(p=>~r)
16: ((p~>(q|r))<->~((p=>~q)&(p=>~r)))->((~((p=>~q)&(p=>~r))<->(~(p=>~q)|~(p=>~r)))->((p~>(q|r))<->(~(p=>~q)|~(p=>~r)))) ; thm INT/iff_trans p=(p~>(q|r)) q=~((p=>~q)&(p=>~r)) r=(~(p=>~q)|~(p=>~r))
17: (~((p=>~q)&(p=>~r))<->(~(p=>~q)|~(p=>~r)))->((p~>(q|r))<->(~(p=>~q)|~(p=>~r))) ; mp 14 16
18: (p~>(q|r))<->(~(p=>~q)|~(p=>~r)) ; mp 15 17
19: (p~>q)<->~(p=>~q) ; ax Ax1 phi=p psi=q
20: ((p~>q)<->~(p=>~q))->(~(p=>~q)->(p~>q)) ; ax A0.4 phi=((p~>q)->~(p=>~q)) psi=(~(p=>~q)->(p~>q))
21: ~(p=>~q)->(p~>q) ; mp 19 20
22: (p~>q)->((p~>q)|(p~>r)) ; ax A0.6 phi=(p~>q) psi=(p~>r)
23: (~(p=>~q)->(p~>q))->(((p~>q)->((p~>q)|(p~>r)))->(~(p=>~q)->((p~>q)|(p~>r)))) ; thm INT/imp_trans p=~(p=>~q) q=(p~>q) r=((p~>q)|(p~>r))
24: ((p~>q)->((p~>q)|(p~>r)))->(~(p=>~q)->((p~>q)|(p~>r))) ; mp 21 23
25: ~(p=>~q)->((p~>q)|(p~>r)) ; mp 22 24
26: (p~>r)<->~(p=>~r) ; ax Ax1 phi=p psi=r
27: ((p~>r)<->~(p=>~r))->(~(p=>~r)->(p~>r)) ; ax A0.4 phi=((p~>r)->~(p=>~r)) psi=(~(p=>~r)->(p~>r))
28: ~(p=>~r)->(p~>r) ; mp 26 27
29: (p~>r)->((p~>q)|(p~>r)) ; ax A0.7 phi=(p~>q) psi=(p~>r)
30: (~(p=>~r)->(p~>r))->(((p~>r)->((p~>q)|(p~>r)))->(~(p=>~r)->((p~>q)|(p~>r)))) ; thm INT/imp_trans p=~(p=>~r) q=(p~>r) r=((p~>q)|(p~>r))
31: ((p~>r)->((p~>q)|(p~>r)))->(~(p=>~r)->((p~>q)|(p~>r))) ; mp 28 30
32: ~(p=>~r)->((p~>q)|(p~>r)) ; mp 29 31
33: (~(p=>~q)->((p~>q)|(p~>r)))->((~(p=>~r)->((p~>q)|(p~>r)))->((~(p=>~q)|~(p=>~r))->((p~>q)|(p~>r)))) ; ax A0.8 phi=~(p=>~q) psi=~(p=>~r) chi=((p~>q)|(p~>r))
34: (~(p=>~r)->((p~>q)|(p~>r)))->((~(p=>~q)|~(p=>~r))->((p~>q)|(p~>r))) ; mp 25 33
35: (~(p=>~q)|~(p=>~r))->((p~>q)|(p~>r)) ; mp 32 34
36: ((p~>q)<->~(p=>~q))->((p~>q)->~(p=>~q)) ; ax A0.3 phi=((p~>q)->~(p=>~q)) psi=(~(p=>~q)->(p~>q))
37: (p~>q)->~(p=>~q) ; mp 19 36
38: ~(p=>~q)->(~(p=>~q)|~(p=>~r)) ; ax A0.6 phi=~(p=>~q) psi=~(p=>~r)
39: ((p~>q)->~(p=>~q))->((~(p=>~q)->(~(p=>~q)|~(p=>~r)))->((p~>q)->(~(p=>~q)|~(p=>~r)))) ; thm INT/imp_trans p=(p~>q) q=~(p=>~q) r=(~(p=>~q)|~(p=>~r))
40: (~(p=>~q)->(~(p=>~q)|~(p=>~r)))->((p~>q)->(~(p=>~q)|~(p=>~r))) ; mp 37 39
41: (p~>q)->(~(p=>~q)|~(p=>~r)) ; mp 38 40
42: ((p~>r)<->~(p=>~r))->((p~>r)->~(p=>~r)) ; ax A0.3 phi=((p~>r)->~(p=>~r)) psi=(~(p=>~r)->(p~>r))
43: (p~>r)->~(p=>~r) ; mp 26 42
44: ~(p=>~r)->(~(p=>~q)|~(p=>~r)) ; ax A0.7 phi=~(p=>~q) psi=~(p=>~r)
45: ((p~>r)->~(p=>~r))->((~(p=>~r)->(~(p=>~q)|~(p=>~r)))->((p~>r)->(~(p=>~q)|~(p=>~r)))) ; thm INT/imp_trans p=(p~>r) q=~(p=>~r) r=(~(p=>~q)|~(p=>~r))
46: (~(p=>~r)->(~(p=>~q)|~(p=>~r)))->((p~>r)->(~(p=>~q)|~(p=>~r))) ; mp 43 45
47: (p~>r)->(~(p=>~q)|~(p=>~r)) ; mp 44 46
48: ((p~>q)->(~(p=>~q)|~(p=>~r)))->(((p~>r)->(~(p=>~q)|~(p=>~r)))->(((p~>q)|(p~>r))->(~(p=>~q)|~(p=>~r)))) ; ax A0.8 phi=(p~>q) psi=(p~>r) chi=(~(p=>~q)|~(p=>~r))
49: ((p~>r)->(~(p=>~q)|~(p=>~r)))->(((p~>q)|(p~>r))->(~(p=>~q)|~(p=>~r))) ; mp 41 48
50: ((p~>q)|(p~>r))->(~(p=>~q)|~(p=>~r)) ; mp 47 49
51: ((~(p=>~q)|~(p=>~r))->((p~>q)|(p~>r)))->((((p~>q)|(p~>r))->(~(p=>~q)|~(p=>~r)))->(((~(p=>~q)|~(p=>~r))->((p~>q)|(p~>r)))&(((p~>q)|(p~>r))->(~(p=>~q)|~(p=>~r))))) ; ax A0.5 phi=((~(p=>~q)|~(p=>~r))->((p~>q)|(p~>r))) psi=(((p~>q)|(p~>r))->(~(p=>~q)|~(p=>~r)))
52: (((p~>q)|(p~>r))->(~(p=>~q)|~(p=>~r)))->(((~(p=>~q)|~(p=>~r))->((p~>q)|(p~>r)))&(((p~>q)|(p~>r))->(~(p=>~q)|~(p=>~r)))) ; mp 35 51
53: (~(p=>~q)|~(p=>~r))<->((p~>q)|(p~>r)) ; mp 50 52
54: ((p~>(q|r))<->(~(p=>~q)|~(p=>~r)))->(((~(p=>~q)|~(p=>~r))<->((p~>q)|(p~>r)))->((p~>(q|r))<->((p~>q)|(p~>r)))) ; thm INT/iff_trans p=(p~>(q|r)) q=(~(p=>~q)|~(p=>~r)) r=((p~>q)|(p~>r))
55: ((~(p=>~q)|~(p=>~r))<->((p~>q)|(p~>r)))->((p~>(q|r))<->((p~>q)|(p~>r))) ; mp 18 54
56: (p~>(q|r))<->((p~>q)|(p~>r)) ; mp 53 55
)"},

    {"CK/A6", R"(calculus CK
mode proof
1: F->F ; thm INT/id p=F
2: (F->F)->(T->(F->F)) ; ax A0.1 phi=(F->F) psi=T
3: T->(F->F) ; mp 1 2
4: (F->F)->T ; ax A0.10 phi=(F->F)
5: (T->(F->F))->(((F->F)->T)->((T->(F->F))&((F->F)->T))) ; ax A0.5 phi=(T->(F->F)) psi=((F->F)->T)
6: ((F->F)->T)->((T->(F->F))&((F->F)->T)) ; mp 3 5
7: T<->~F ; mp 4 6
8: (p=>T)<->(p=>~F) ; rule RCbox 7
9: ((p=>T)<->(p=>~F))->((p=>T)->(p=>~F)) ; ax A0.3 phi=((p=>T)->(p=>~F)) psi=((p=>~F)->(p=>T))
10: (p=>T)->(p=>~F) ; mp 8 9
11: p=>T ; ax A5 phi=p
12: p=>~F ; mp 11 10
13: (p~>F)<->~(p=>~F) ; ax Ax1 phi=p psi=F
14: ((p~>F)<->~(p=>~F))->((p~>F)->~(p=>~F)) ; ax A0.3 phi=((p~>F)->~(p=>~F)) psi=(~(p=>~F)->(p~>F))
15: (p~>F)->~(p=>~F) ; mp 13 14
16: ((p~>F)->((p=>~F)->F))->(((p~>F)->(p=>~F))->((p~>F)->F)) ; ax A0.2 phi=(p~>F) psi=(p=>~F) chi=F
17: ((p~>F)->(p=>~F))->~(p~>F) ; mp 15 16
18: (p=>~F)->((p~>F)->(p=>~F)) ; ax A0.1 phi=(p=>~F) psi=(p~>F)
19: (p~>F)->(p=>~F) ; mp 12 18
20: ~(p~>F) ; mp 19 17
)"},

    {"CK/RAdia", R"(calculus CK
mode derived_rule
premise p<->q
1: p<->q ; pre 1
2: (p=>~r)<->(q=>~r) ; rule RAbox 1
3: ((p=>~r)<->(q=>~r))->(~(p=>~r)<->~(q=>~r)) ; thm INT/neg_cong p=(p=>~r) q=(q=>~r)
4: ~(p=>~r)<->~(q=>~r) ; mp 2 3
5: (p~>r)<->~(p=>~r) ; ax Ax1 phi=p psi=r
6: (q~>r)<->~(q=>~r) ; ax Ax1 phi=q psi=r
7: ((q~>r)<->~(q=>~r))->(~(q=>~r)<->(q~>r)) ; thm INT/iff_sym p=(q~>r) q=~(q=>~r)
8: ~(q=>~r)<->(q~>r) ; mp 6 7
9: ((p~>r)<->~(p=>~r))->((~(p=>~r)<->~(q=>~r))->((p~>r)<->~(q=>~r))) ; thm INT/iff_trans p=(p~>r) q=~(p=>~r) r=~(q=>~r)
10: (~(p=>~r)<->~(q=>~r))->((p~>r)<->~(q=>~r)) ; mp 5 9
11: (p~>r)<->~(q=>~r) ; mp 4 10
12: ((p~>r)<->~(q=>~r))->((~(q=>~r)<->(q~>r))->((p~>r)<->(q~>r))) ; thm INT/iff_trans p=(p~>r) q=~(q=>~r) r=(q~>r)
13: (~(q=>~r)<->(q~>r))->((p~>r)<->(q~>r)) ; mp 11 12
14: (p~>r)<->(q~>r) ; mp 8 13
)"},

    {"CK/RCdia", R"(calculus CK
mode derived_rule
premise p<->q
1: p<->q ; pre 1
2: (p<->q)->(~p<->~q) ; thm INT/neg_cong p=p q=q
3: ~p<->~q ; mp 1 2
4: (r=>~p)<->(r=>~q) ; rule RCbox 3
5: ((r=>~p)<->(r=>~q))->(~(r=>~p)<->~(r=>~q)) ; thm INT/neg_cong p=(r=>~p) q=(r=>~q)
6: ~(r=>~p)<->~(r=>~q) ; mp 4 5
7: (r~>p)<->~(r=>~p) ; ax Ax1 phi=r psi=p
8: (r~>q)<->~(r=>~q) ; ax Ax1 phi=r psi=q
9: ((r~>q)<->~(r=>~q))->(~(r=>~q)<->(r~>q)) ; thm INT/iff_sym p=(r~>q) q=~(r=>~q)
10: ~(r=>~q)<->(r~>q) ; mp 8 9
11: ((r~>p)<->~(r=>~p))->((~(r=>~p)<->~(r=>~q))->((r~>p)<->~(r=>~q))) ; thm INT/iff_trans p=(r~>p) q=~(r=>~p) r=~(r=>~q)
12: (~(r=>~p)<->~(r=>~q))->((r~>p)<->~(r=>~q)) ; mp 7 11
13: (r~>p)<->~(r=>~q) ; mp 6 12
14: ((r~>p)<->~(r=>~q))->((~(r=>~q)<->(r~>q))->((r~>p)<->(r~>q))) ; thm INT/iff_trans p=(r~>p) q=~(r=>~q) r=(r~>q)
15: (~(r=>~q)<->(r~>q))->((r~>p)<->(r~>q)) ; mp 13 14
16: (r~>p)<->(r~>q) ; mp 10 15
)"},

    {"INTCK_AX0/dne", R"(calculus INTCK_AX0
mode proof
1: p->(~~p->p) ; ax A0.1 phi=p psi=~~p
2: ~~p->~~p ; thm INT/id p=~~p
3: (~~p->~~p)->(~p->~~~p) ; thm INT/swap p=~~p q=~p r=F
4: ~p->~~~p ; mp 2 3
5: F->p ; ax A0.9 phi=p
6: (F->p)->(~~~p->(~~p->p)) ; thm INT/b p=~~p q=F r=p
7: ~~~p->(~~p->p) ; mp 5 6
8: (~p->~~~p)->((~~~p->(~~p->p))->(~p->(~~p->p))) ; thm INT/imp_trans p=~p q=~~~p r=(~~p->p)
9: (~~~p->(~~p->p))->(~p->(~~p->p)) ; mp 4 8
10: ~p->(~~p->p) ; mp 7 9
11: (p->(~~p->p))->((~p->(~~p->p))->((p|~p)->(~~p->p))) ; ax A0.8 phi=p psi=~p chi=(~~p->p)
12: (~p->(~~p->p))->((p|~p)->(~~p->p)) ; mp 1 11
13: (p|~p)->(~~p->p) ; mp 10 12
14: p|~p ; ax Ax0 phi=p
15: ~~p->p ; mp 14 13
)"},

    {"INTCK_AX0/Ax1", R"(calculus INTCK_AX0
mode proof
1: (p=>~q)->~(p~>q) ; thm INTCK/T4_bwd p=p q=q
2: ((p=>~q)->~(p~>q))->((p~>q)->~(p=>~q)) ; thm INT/swap p=(p=>~q) q=(p~>q) r=F
3: (p~>q)->~(p=>~q) ; mp 1 2
4: ~(p~>q)->(p=>~q) ; thm INTCK/T4_fwd p=p q=q
5: (~(p~>q)->(p=>~q))->(~(p=>~q)->~~(p~>q)) ; thm INT/imp_trans p=~(p~>q) q=(p=>~q) r=F
6: ~(p=>~q)->~~(p~>q) ; mp 4 5
7: ~~(p~>q)->(p~>q) ; thm INTCK_AX0/dne p=(p~>q)
8: (~(p=>~q)->~~(p~>q))->((~~(p~>q)->(p~>q))->(~(p=>~q)->(p~>q))) ; thm INT/imp_trans p=~(p=>~q) q=~~(p~>q) r=(p~>q)
9: (~~(p~>q)->(p~>q))->(~(p=>~q)->(p~>q)) ; mp 6 8
10: ~(p=>~q)->(p~>q) ; mp 7 9
11: ((p~>q)->~(p=>~q))->((~(p=>~q)->(p~>q))->(((p~>q)->~(p=>~q))&(~(p=>~q)->(p~>q)))) ; ax A0.5 phi=((p~>q)->~(p=>~q)) psi=(~(p=>~q)->(p~>q))
12: (~(p=>~q)->(p~>q))->(((p~>q)->~(p=>~q))&(~(p=>~q)->(p~>q))) ; mp 3 11
13: (p~>q)<->~(p=>~q) ; mp 10 12
)"},

    {"IK/t4", R"(calculus IK
mode proof
1: T ; thm INT/top
2: []T ; rule nec 1
)"},

    {"IK/r1", R"(calculus IK
mode derived_rule
premise p->q
1: p->q ; pre 1
2: [](p->q) ; rule nec 1
3: [](p->q)->([]p->[]q) ; ax a1 phi=p psi=q
4: []p->[]q ; mp 2 3
)"},

    {"IK/r2", R"(calculus IK
mode derived_rule
premise p->q
1: p->q ; pre 1
2: [](p->q) ; rule nec 1
3: [](p->q)->(<>p-><>q) ; ax a2 phi=p psi=q
4: <>p-><>q ; mp 2 3
)"},

    {"IK/r3", R"(calculus IK
mode derived_rule
premise p<->q
1: p<->q ; pre 1
2: (p<->q)->(p->q) ; ax A0.3 phi=(p->q) psi=(q->p)
3: p->q ; mp 1 2
4: (p<->q)->(q->p) ; ax A0.4 phi=(p->q) psi=(q->p)
5: q->p ; mp 1 4
6: [](p->q) ; rule nec 3
7: [](p->q)->([]p->[]q) ; ax a1 phi=p psi=q
8: []p->[]q ; mp 6 7
9: [](q->p) ; rule nec 5
10: [](q->p)->([]q->[]p) ; ax a1 phi=q psi=p
11: []q->[]p ; mp 9 10
12: ([]p->[]q)->(([]q->[]p)->(([]p->[]q)&([]q->[]p))) ; ax A0.5 phi=([]p->[]q) psi=([]q->[]p)
13: ([]q->[]p)->(([]p->[]q)&([]q->[]p)) ; mp 8 12
14: []p<->[]q ; mp 11 13
)"},

    {"IK/r4", R"(calculus IK
mode derived_rule
premise p<->q
1: p<->q ; pre 1
2: (p<->q)->(p->q) ; ax A0.3 phi=(p->q) psi=(q->p)
3: p->q ; mp 1 2
4: (p<->q)->(q->p) ; ax A0.4 phi=(p->q) psi=(q->p)
5: q->p ; mp 1 4
6: [](p->q) ; rule nec 3
7: [](p->q)->(<>p-><>q) ; ax a2 phi=p psi=q
8: <>p-><>q ; mp 6 7
9: [](q->p) ; rule nec 5
10: [](q->p)->(<>q-><>p) ; ax a2 phi=q psi=p
11: <>q-><>p ; mp 9 10
12: (<>p-><>q)->((<>q-><>p)->((<>p-><>q)&(<>q-><>p))) ; ax A0.5 phi=(<>p-><>q) psi=(<>q-><>p)
13: (<>q-><>p)->((<>p-><>q)&(<>q-><>p)) ; mp 8 12
14: <>p<-><>q ; mp 11 13
)"},

    {"IK/t1", R"(calculus IK
mode proof
1: p->(q->(p&q)) ; ax A0.5 phi=p psi=q
2: [](p->(q->(p&q))) ; rule nec 1
3: [](p->(q->(p&q)))->([]p->[](q->(p&q))) ; ax a1 phi=p psi=(q->(p&q))
4: []p->[](q->(p&q)) ; mp 2 3
5: [](q->(p&q))->([]q->[](p&q)) ; ax a1 phi=q psi=(p&q)
6: ([]p->[](q->(p&q)))->(([](q->(p&q))->([]q->[](p&q)))->([]p->([]q->[](p&q)))) ; thm INT/imp_trans p=[]p q=[](q->(p&q)) r=([]q->[](p&q))
7: ([](q->(p&q))->([]q->[](p&q)))->([]p->([]q->[](p&q))) ; mp 4 6
8: []p->([]q->[](p&q)) ; mp 5 7
9: ([]p->([]q->[](p&q)))->(([]p&[]q)->[](p&q)) ; thm INT/imp2 p=[]p q=[]q r=[](p&q)
10: ([]p&[]q)->[](p&q) ; mp 8 9
11: (p&q)->p ; ax A0.3 phi=p psi=q
12: []((p&q)->p) ; rule nec 11
13: []((p&q)->p)->([](p&q)->[]p) ; ax a1 phi=(p&q) psi=p
14: [](p&q)->[]p ; mp 12 13
15: (p&q)->q ; ax A0.4 phi=p psi=q
16: []((p&q)->q) ; rule nec 15
17: []((p&q)->q)->([](p&q)->[]q) ; ax a1 phi=(p&q) psi=q
18: [](p&q)->[]q ; mp 16 17
19: ([](p&q)->[]p)->(([](p&q)->[]q)->([](p&q)->([]p&[]q))) ; thm INT/pair p=[](p&q) q=[]p r=[]q
20: ([](p&q)->[]q)->([](p&q)->([]p&[]q)) ; mp 14 19
21: [](p&q)->([]p&[]q) ; mp 18 20
22: (([]p&[]q)->[](p&q))->(([](p&q)->([]p&[]q))->((([]p&[]q)->[](p&q))&([](p&q)->([]p&[]q)))) ; ax A0.5 phi=(([]p&[]q)->[](p&q)) psi=([](p&q)->([]p&[]q))
23: ([](p&q)->([]p&[]q))->((([]p&[]q)->[](p&q))&([](p&q)->([]p&[]q))) ; mp 10 22
24: ([]p&[]q)<->[](p&q) ; mp 21 23
)"},

    {"IK/t2", R"(calculus IK
mode proof
1: p->(q->(p&q)) ; ax A0.5 phi=p psi=q
2: (p->(q->(p&q)))->(q->(p->(p&q))) ; thm INT/swap p=p q=q r=(p&q)
3: q->(p->(p&q)) ; mp 1 2
4: [](q->(p->(p&q))) ; rule nec 3
5: [](q->(p->(p&q)))->([]q->[](p->(p&q))) ; ax a1 phi=q psi=(p->(p&q))
6: []q->[](p->(p&q)) ; mp 4 5
7: [](p->(p&q))->(<>p-><>(p&q)) ; ax a2 phi=p psi=(p&q)
8: ([]q->[](p->(p&q)))->(([](p->(p&q))->(<>p-><>(p&q)))->([]q->(<>p-><>(p&q)))) ; thm INT/imp_trans p=[]q q=[](p->(p&q)) r=(<>p-><>(p&q))
9: ([](p->(p&q))->(<>p-><>(p&q)))->([]q->(<>p-><>(p&q))) ; mp 6 8
10: []q->(<>p-><>(p&q)) ; mp 7 9
11: ([]q->(<>p-><>(p&q)))->(([]q&<>p)-><>(p&q)) ; thm INT/imp2 p=[]q q=<>p r=<>(p&q)
12: ([]q&<>p)-><>(p&q) ; mp 10 11
13: (<>p&[]q)->([]q&<>p) ; thm INT/and_comm p=<>p q=[]q
14: ((<>p&[]q)->([]q&<>p))->((([]q&<>p)-><>(p&q))->((<>p&[]q)-><>(p&q))) ; thm INT/imp_trans p=(<>p&[]q) q=([]q&<>p) r=<>(p&q)
15: (([]q&<>p)-><>(p&q))->((<>p&[]q)-><>(p&q)) ; mp 13 14
16: (<>p&[]q)-><>(p&q) ; mp 12 15
)"},

    {"IK/t3", R"(calculus IK
mode proof
1: <>(p|q)->(<>p|<>q) ; ax a4 phi=p psi=q
2: p->(p|q) ; ax A0.6 phi=p psi=q
3: [](p->(p|q)) ; rule nec 2
4: [](p->(p|q))->(<>p-><>(p|q)) ; ax a2 phi=p psi=(p|q)
5: <>p-><>(p|q) ; mp 3 4
6: q->(p|q) ; ax A0.7 phi=p psi=q
7: [](q->(p|q)) ; rule nec 6
8: [](q->(p|q))->(<>q-><>(p|q)) ; ax a2 phi=q psi=(p|q)
9: <>q-><>(p|q) ; mp 7 8
10: (<>p-><>(p|q))->((<>q-><>(p|q))->((<>p|<>q)-><>(p|q))) ; ax A0.8 phi=<>p psi=<>q chi=<>(p|q)
11: (<>q-><>(p|q))->((<>p|<>q)-><>(p|q)) ; mp 5 10
12: (<>p|<>q)-><>(p|q) ; mp 9 11
13: (<>(p|q)->(<>p|<>q))->(((<>p|<>q)-><>(p|q))->((<>(p|q)->(<>p|<>q))&((<>p|<>q)-><>(p|q)))) ; ax A0.5 phi=(<>(p|q)->(<>p|<>q)) psi=((<>p|<>q)-><>(p|q))
14: ((<>p|<>q)-><>(p|q))->((<>(p|q)->(<>p|<>q))&((<>p|<>q)-><>(p|q))) ; mp 1 13
15: <>(p|q)<->(<>p|<>q) ; mp 12 14
)"},
};

struct CorpusState {
  std::vector<CorpusItem> items;
  CorpusReport report;
  std::map<std::string, const CorpusItem*> verified;
};

const CorpusState& corpus_state() {
  static const CorpusState state = [] {
    CorpusState s;
    s.items.reserve(std::size(kRaw));
    for (const RawItem& raw : kRaw) {
      CorpusItem item;
      item.name = raw.name;
      item.script = parse_proof(raw.text);
      item.statement = item.script.conclusion();
      std::string name(raw.name);
      if (name.substr(0, name.find('/')) != item.script.calculus)
        throw std::logic_error("corpus name " + name + " does not match its calculus");
      s.items.push_back(std::move(item));
    }
    for (const CorpusItem& item : s.items) {
      Verdict v = detail::check_resolved(item.script, s.verified);
      if (v.ok)
        s.verified.emplace(item.name, &item);
      else
        s.report.all_ok = false;
      s.report.entries.emplace_back(item.name, std::move(v));
    }
    return s;
  }();
  return state;
}

}  // namespace

const std::vector<CorpusItem>& corpus_items() { return corpus_state().items; }

CorpusReport verify_corpus() { return corpus_state().report; }

const CorpusItem* find_corpus_item(const std::string& name) {
  const auto& verified = corpus_state().verified;
  auto it = verified.find(name);
  return it == verified.end() ? nullptr : it->second;
}

namespace detail {

const std::map<std::string, const CorpusItem*>& verified_corpus() {
  return corpus_state().verified;
}

}  // namespace detail

}  // namespace intck
