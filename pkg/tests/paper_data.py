"""Literal matrices of the twelve projectors, typed in entry by entry.

Entries of the x and y contexts are given as numerators over 4; ``i`` is
the imaginary unit.
"""
from fractions import Fraction

from kslogic.linalg import Matrix
from kslogic.scalar import GaussianRational

_UNITS = {"1": (1, 0), "-1": (-1, 0), "i": (0, 1), "-i": (0, -1), "0": (0, 0)}


def _quarter(rows):
    q = Fraction(1, 4)
    return Matrix(
        [GaussianRational(_UNITS[e][0] * q, _UNITS[e][1] * q) for e in r.split()] for r in rows
    )


def _unit(k):
    return Matrix([[1 if (i == j == k) else 0 for j in range(4)] for i in range(4)])


LITERAL = {
    "P_z++": _unit(0),
    "P_z+-": _unit(1),
    "P_z-+": _unit(2),
    "P_z--": _unit(3),
    "P_x++": _quarter(["1 1 1 1", "1 1 1 1", "1 1 1 1", "1 1 1 1"]),
    "P_x+-": _quarter(["1 -1 1 -1", "-1 1 -1 1", "1 -1 1 -1", "-1 1 -1 1"]),
    "P_x-+": _quarter(["1 1 -1 -1", "1 1 -1 -1", "-1 -1 1 1", "-1 -1 1 1"]),
    "P_x--": _quarter(["1 -1 -1 1", "-1 1 1 -1", "-1 1 1 -1", "1 -1 -1 1"]),
    "P_y++": _quarter(["1 -i -i -1", "i 1 1 -i", "i 1 1 -i", "-1 i i 1"]),
    "P_y+-": _quarter(["1 i -i 1", "-i 1 -1 -i", "i -1 1 i", "1 i -i 1"]),
    "P_y-+": _quarter(["1 -i i 1", "i 1 -1 i", "-i -1 1 -i", "1 -i i 1"]),
    "P_y--": _quarter(["1 i i -1", "-i 1 1 i", "-i 1 1 i", "-1 -i -i 1"]),
}

LABELS = list(LITERAL)
CONTEXT_LABELS = {
    "C_z": LABELS[0:4],
    "C_x": LABELS[4:8],
    "C_y": LABELS[8:12],
}
