"""The lattice of projector ranges.

Order is range inclusion, meet is range intersection and join is the span
of the union. Every element carries its projector, rebuilt from the range
when needed, so the two descriptions never drift apart.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .linalg import (
    DimensionError,
    Matrix,
    SubspaceBasis,
    intersect,
    is_projector,
    member,
    projector_onto,
    range_basis,
    span,
)
from .model import Projector

__all__ = [
    "LatticeElement",
    "Constant",
    "element",
    "top",
    "bottom",
    "leq",
    "meet",
    "join",
    "orthocomplement",
    "classify_constant",
]


class Constant(str, enum.Enum):
    TAUTOLOGY = "tautology"
    CONTRADICTION = "contradiction"
    CONTINGENT = "contingent"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class LatticeElement:
    matrix: Matrix
    range: SubspaceBasis
    label: str = ""

    @property
    def ambient_dim(self) -> int:
        return self.range.ambient_dim

    @property
    def is_bottom(self) -> bool:
        return self.range.is_zero()

    @property
    def is_top(self) -> bool:
        return self.range.is_full()

    def __eq__(self, other):
        if not isinstance(other, LatticeElement):
            return NotImplemented
        return self.range == other.range

    def __hash__(self):
        return hash(self.range)


def element(p: Projector | Matrix, label: str | None = None) -> LatticeElement:
    if isinstance(p, Projector):
        m, lbl = p.matrix, p.label
    else:
        m, lbl = p, ""
        if not is_projector(m):
            raise ValueError("lattice elements must be projectors")
    return LatticeElement(m, range_basis(m), lbl if label is None else label)


def _from_subspace(s: SubspaceBasis, label: str) -> LatticeElement:
    return LatticeElement(projector_onto(s), s, label)


def top(n: int) -> LatticeElement:
    return element(Matrix.identity(n), "1")


def bottom(n: int) -> LatticeElement:
    return element(Matrix.zeros(n), "0")


def _check(a: LatticeElement, b: LatticeElement):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError("lattice elements live in different spaces")


def leq(a: LatticeElement, b: LatticeElement) -> bool:
    _check(a, b)
    return all(member(v, b.range) for v in a.range.vectors)


def meet(a: LatticeElement, b: LatticeElement) -> LatticeElement:
    _check(a, b)
    return _from_subspace(intersect(a.range, b.range), f"({a.label} meet {b.label})")


def join(elems: Iterable[LatticeElement]) -> LatticeElement:
    elems = list(elems)
    if not elems:
        raise ValueError("join of an empty family")
    for e in elems[1:]:
        _check(elems[0], e)
    if len(elems) == 1:
        return elems[0]
    vecs = [v for e in elems for v in e.range.vectors]
    label = "(" + " join ".join(e.label for e in elems) + ")"
    return _from_subspace(span(elems[0].ambient_dim, vecs), label)


def orthocomplement(a: LatticeElement) -> LatticeElement:
    m = Matrix.identity(a.ambient_dim) - a.matrix
    return LatticeElement(m, range_basis(m), f"~{a.label}")


def classify_constant(a: LatticeElement) -> Constant:
    if a.is_top:
        return Constant.TAUTOLOGY
    if a.is_bottom:
        return Constant.CONTRADICTION
    return Constant.CONTINGENT
