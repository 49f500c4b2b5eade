"""The twelve two-particle projectors and their three contexts.

P_{j,a,b} = |j a><j a| (x) |j b><j b| for the Pauli axis j and signs a, b.
Within one axis the four projectors resolve the identity and are mutually
orthogonal; projectors from different axes never commute.
"""
from kslogic.model import build_set_O, commutation_report, validate_context

S = build_set_O()

for c in S.contexts:
    print(c.name, c.labels)

# one matrix from each context
for label in ("P_z++", "P_x+-", "P_y++"):
    print(label)
    for row in S.projector(label).matrix.to_strings():
        print("   ", row)

for c in S.contexts:
    rep = validate_context(c)
    print(f"{c.name}: projectors={rep.all_projectors} sum=1: {rep.sums_to_identity} "
          f"orthogonal={rep.pairwise_orthogonal}")

pairs = commutation_report(S)
print(len(pairs), "cross-context pairs,", sum(not e.commutes for e in pairs), "do not commute")
