"""Truth values induced by a prepared state.

A projector is valued 1 when the state lies in its range, 0 when it lies in
its kernel, and is left without a value otherwise. No product state of the
two particles values all twelve projectors.
"""
from collections import Counter

from kslogic.model import all_states, build_set_O, parse_state_spec
from kslogic.valuation import connectives, entailment_check, is_total, state_induced

S = build_set_O()

psi = parse_state_spec("z+z+")
v = state_induced(psi, S)
print("state", psi.spec, "vector", psi.vector.to_strings())
for p in S.projectors:
    x = v.value(p.label)
    print(f"  {p.label}: {'gap' if x is None else int(x)}")
print("total?", is_total(v, S).total)

for c in S.contexts:
    print(c.name, entailment_check(v, c).verdict)

rep = connectives(v, S.context("C_z"))
print("C_z conjunctions all 0:", all(e.product == 0 for e in rep.conjunctions),
      " disjunction:", rep.disjunction.total)

# an uncorrelated state: nothing is true, though a few kernel memberships occur
u = state_induced(parse_state_spec("z+x+"), S)
print("z+x+ assigned:", {k: int(x) for k, x in u.assignments.items()})

# over all 36 product states
tally = Counter()
for s in all_states():
    w = state_induced(s, S)
    tally[(s.correlated, len(w.true_labels()), len(is_total(w, S).gaps))] += 1
for (corr, ones, gaps), n in sorted(tally.items()):
    print(f"correlated={corr}: {n} states with {ones} true and {gaps} gaps")
