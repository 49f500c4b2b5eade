"""Two ways of filling the gaps: Born values in [0, 1], or supervaluations
over the admissible completions of the partial valuation."""
from fractions import Fraction

from kslogic.model import build_set_O, parse_state_spec
from kslogic.valuation import (
    Atom,
    born,
    disjunction,
    entailment_check,
    lukasiewicz,
    state_induced,
    supervaluate,
)

S = build_set_O()
psi = parse_state_spec("z+z+")

b = born(psi, S)
for c in S.contexts:
    vals = [b.value(lbl) for lbl in c.labels]
    rep = entailment_check(b, c)
    print(c.name, [str(x) for x in vals], "sum", sum(vals), "->", rep.verdict)

# Lukasiewicz connectives on the Born values of two C_x members
a, c = b.value("P_x++"), b.value("P_x+-")
print("and:", lukasiewicz(a, c, "and"), " or:", lukasiewicz(a, c, "or"),
      " not:", lukasiewicz(a, None, "not"))
print("or(1/4, 1/4) =", lukasiewicz(Fraction(1, 4), Fraction(1, 4), "or"))

v = state_induced(psi, S)
cx = S.context("C_x")
d = supervaluate(v, cx, disjunction(cx))
print("disjunction over C_x:", d.verdict, f"({d.completions_examined} completions)")
for lbl in cx.labels:
    print(f"  {lbl}:", supervaluate(v, cx, Atom(lbl)).verdict)
