"""Noncontextual bivalent colorings of an operator set.

A coloring gives every projector a single value in {0, 1}, whatever
context it appears in, such that each context has exactly one true
member and no two orthogonal projectors are both true. Projectors with
exactly equal matrices share one variable.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Mapping

from .linalg import Matrix, matmul
from .model import OperatorSet, validate_context

__all__ = [
    "ColoringProblem",
    "ColoringResult",
    "Status",
    "build_problem",
    "solve",
    "verify_coloring",
]


@dataclass(frozen=True)
class ColoringProblem:
    """Variables are named by the label of their first occurrence.

    ``identification`` maps every projector label to its variable,
    ``contexts`` holds variable indices per context, and ``edges`` lists
    index pairs (i < j) whose projectors multiply to zero.
    """

    set: OperatorSet
    variables: tuple[str, ...]
    matrices: tuple[Matrix, ...]
    identification: Mapping[str, str]
    contexts: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def shared(self) -> dict[str, list[str]]:
        """Variables occurring in more than one context, with those contexts."""
        out = {}
        for k, var in enumerate(self.variables):
            names = [c.name for c, idx in zip(self.set.contexts, self.contexts) if k in idx]
            if len(names) > 1:
                out[var] = names
        return out


class Status(str, enum.Enum):
    COLORABLE = "colorable"
    UNCOLORABLE = "uncolorable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ColoringResult:
    status: Status
    witness: dict[str, int] | None
    count: int | None
    nodes_explored: int
    solutions: tuple[dict[str, int], ...] | None = None


def build_problem(s: OperatorSet) -> ColoringProblem:
    for c in s.contexts:
        rep = validate_context(c)
        if not rep.ok:
            raise ValueError(f"context {c.name} is invalid: {'; '.join(rep.failures)}")
    names: list[str] = []
    mats: list[Matrix] = []
    index: dict[Matrix, int] = {}
    ident: dict[str, str] = {}
    contexts = []
    for c in s.contexts:
        idx = []
        for p in c.projectors:
            if p.matrix not in index:
                index[p.matrix] = len(names)
                names.append(p.label)
                mats.append(p.matrix)
            k = index[p.matrix]
            ident[p.label] = names[k]
            idx.append(k)
        contexts.append(tuple(idx))
    edges = tuple(
        (i, j)
        for i, j in itertools.combinations(range(len(mats)), 2)
        if matmul(mats[i], mats[j]).is_zero()
    )
    return ColoringProblem(s, tuple(names), tuple(mats), ident, tuple(contexts), edges)


def _order(p: ColoringProblem) -> list[int]:
    seen: list[int] = []
    for ctx in p.contexts:
        for k in ctx:
            if k not in seen:
                seen.append(k)
    return seen


def solve(
    p: ColoringProblem, mode: str = "decide", limit: int | None = None, collect: bool = False
) -> ColoringResult:
    """Chronological backtracking search.

    ``mode`` is ``"decide"`` (stop at the first coloring), ``"enumerate"``
    (count all) or ``"enumerate_up_to"`` (count at most ``limit``).
    Variables are visited contexts-first in listed order, trying 1 before 0.
    ``nodes_explored`` counts tentative assignments. With ``collect`` every
    coloring found is returned in ``solutions``.
    """
    if mode == "decide":
        cap = 1
    elif mode == "enumerate":
        cap = None
    elif mode == "enumerate_up_to":
        if limit is None or limit < 1:
            raise ValueError("enumerate_up_to needs a positive limit")
        cap = limit
    else:
        raise ValueError(f"unknown mode {mode!r}")

    order = _order(p)
    n = len(p.variables)
    neighbours: list[list[int]] = [[] for _ in range(n)]
    for i, j in p.edges:
        neighbours[i].append(j)
        neighbours[j].append(i)
    ctx_of: list[list[int]] = [[] for _ in range(n)]
    for ci, ctx in enumerate(p.contexts):
        for k in set(ctx):
            ctx_of[k].append(ci)
    members = [sorted(set(ctx)) for ctx in p.contexts]

    value: list[int | None] = [None] * n
    ones = [0] * len(p.contexts)
    open_ = [len(m) for m in members]
    nodes = 0
    count = 0
    witness: dict[str, int] | None = None
    found: list[dict[str, int]] = []

    def ok(k: int, x: int) -> bool:
        for ci in ctx_of[k]:
            o = ones[ci] + x
            if o > 1:
                return False
            if open_[ci] == 1 and o == 0:
                return False
        if x:
            return all(value[m] != 1 for m in neighbours[k])
        return True

    def rec(depth: int) -> bool:
        nonlocal nodes, count, witness
        if depth == len(order):
            count += 1
            sol = {p.variables[k]: value[k] for k in range(n)}
            if witness is None:
                witness = sol
            if collect:
                found.append(sol)
            return cap is not None and count >= cap
        k = order[depth]
        for x in (1, 0):
            nodes += 1
            if not ok(k, x):
                continue
            value[k] = x
            for ci in ctx_of[k]:
                ones[ci] += x
                open_[ci] -= 1
            stop = rec(depth + 1)
            for ci in ctx_of[k]:
                ones[ci] -= x
                open_[ci] += 1
            value[k] = None
            if stop:
                return True
        return False

    rec(0)
    status = Status.COLORABLE if count else Status.UNCOLORABLE
    return ColoringResult(
        status,
        witness,
        None if mode == "decide" else count,
        nodes,
        tuple(found) if collect else None,
    )


def verify_coloring(p: ColoringProblem, witness: Mapping[str, int]) -> bool:
    """Check a full assignment of variables directly against the constraints."""
    missing = [v for v in p.variables if v not in witness]
    if missing:
        raise ValueError(f"unassigned variables: {missing}")
    vals = [witness[v] for v in p.variables]
    if any(x not in (0, 1) for x in vals):
        return False
    for ctx in p.contexts:
        if sum(vals[k] for k in set(ctx)) != 1:
            return False
    return not any(vals[i] and vals[j] for i, j in p.edges)
