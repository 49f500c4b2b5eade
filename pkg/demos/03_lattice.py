"""Projectors as lattice elements: order by range inclusion, meet by
intersection, join by span, complement by 1 - P."""
from kslogic.lattice import classify_constant, element, join, leq, meet, orthocomplement
from kslogic.model import build_set_O

S = build_set_O()
el = {p.label: element(p) for p in S.projectors}

m = meet(el["P_z++"], el["P_z+-"])
print("P_z++ meet P_z+- :", classify_constant(m), "rank", m.range.dim)

j = join(el[lbl] for lbl in S.context("C_z").labels)
print("join over C_z    :", classify_constant(j))

print("P_z++ <= 1 - P_z+- :", leq(el["P_z++"], orthocomplement(el["P_z+-"])))
print("P_z++ <= P_x++     :", leq(el["P_z++"], el["P_x++"]))

# outside one context the meet is still defined as the range intersection
x = meet(el["P_z++"], el["P_x++"])
print("P_z++ meet P_x++ :", classify_constant(x))

y = join([el["P_y++"], el["P_y+-"]])
print("P_y++ join P_y+- =")
for row in y.matrix.to_strings():
    print("   ", row)
