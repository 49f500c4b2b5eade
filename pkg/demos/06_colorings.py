"""Searching for noncontextual 0/1 assignments.

The twelve-projector set shares no projector between contexts, so it has
4 * 4 * 4 colorings. A set whose rays are shared between contexts can have
none: the 18-ray set in data/cabello_18.json puts every ray in exactly two
of nine bases.
"""
from pathlib import Path

from kslogic.coloring import build_problem, solve, verify_coloring
from kslogic.documents import parse_set
from kslogic.model import build_set_O

p = build_problem(build_set_O())
res = solve(p, "enumerate")
print("twelve projectors:", res.status, res.count, "colorings,", res.nodes_explored, "nodes")
print("witness valid:", verify_coloring(p, res.witness))

here = Path(__file__).parent
ks = parse_set((here / "data" / "cabello_18.json").read_text())
q = build_problem(ks)
r = solve(q, "decide")
print(f"18-ray set: {len(q.variables)} variables in {len(q.contexts)} contexts ->",
      r.status, f"after {r.nodes_explored} nodes")
