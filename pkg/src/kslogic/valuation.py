"""Truth valuations of projectors induced by a pure state.

Three readings are provided:

* :func:`state_induced` -- partial bivalent: 1 when the state is in the
  range, 0 when it is in the kernel, and no value (a gap) otherwise.
* :func:`born` -- many-valued: ``<psi|P|psi> / <psi|psi>`` in [0, 1].
* :func:`supervaluate` -- a formula over one context is supertrue or
  superfalse when every admissible completion of a partial valuation
  agrees, and has a gap otherwise.

Gaps are the absence of a key in ``assignments``; they are never encoded
as a third truth value.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from . import lattice
from .linalg import DimensionError, Matrix, kernel_basis, member, range_basis
from .model import Context, OperatorSet, State, validate_context

__all__ = [
    "TruthValue",
    "Membership",
    "PartialBivalentValuation",
    "ManyValuedValuation",
    "TotalityReport",
    "Verdict",
    "EntailmentReport",
    "ConjunctionEntry",
    "DisjunctionEntry",
    "ConnectiveReport",
    "Atom",
    "And",
    "Or",
    "Formula",
    "atoms",
    "evaluate",
    "disjunction",
    "SuperVerdict",
    "SupervaluationVerdict",
    "membership",
    "state_induced",
    "is_total",
    "entailment_check",
    "connectives",
    "born",
    "born_value",
    "lukasiewicz",
    "completions",
    "supervaluate",
]


class TruthValue(enum.IntEnum):
    FALSE = 0
    TRUE = 1


@dataclass(frozen=True)
class Membership:
    in_ran: bool
    in_ker: bool


@dataclass(frozen=True)
class PartialBivalentValuation:
    assignments: Mapping[str, TruthValue]
    source_state: State | None = None
    memberships: Mapping[str, Membership] = field(default_factory=dict)

    def value(self, label: str) -> TruthValue | None:
        return self.assignments.get(label)

    def true_labels(self) -> list[str]:
        return [k for k, v in self.assignments.items() if v == TruthValue.TRUE]


@dataclass(frozen=True)
class ManyValuedValuation:
    assignments: Mapping[str, Fraction]
    source_state: State | None = None

    def __post_init__(self):
        for k, v in self.assignments.items():
            if not 0 <= v <= 1:
                raise ValueError(f"{k}: value {v} outside [0, 1]")

    def value(self, label: str) -> Fraction:
        return self.assignments[label]


Valuation = Union[PartialBivalentValuation, ManyValuedValuation]


def _check_state(state: State, n: int):
    if state.vector.is_zero():
        raise ValueError("the null vector is not a state")
    if state.vector.dim != n:
        raise DimensionError(f"state of dim {state.vector.dim} vs operators of dim {n}")


def membership(state: State, p: Matrix) -> Membership:
    return Membership(
        member(state.vector, range_basis(p)),
        member(state.vector, kernel_basis(p)),
    )


def _bivalent_of(m: Membership) -> TruthValue | None:
    if m.in_ran:
        return TruthValue.TRUE
    if m.in_ker:
        return TruthValue.FALSE
    return None


def state_induced(state: State, s: OperatorSet) -> PartialBivalentValuation:
    """Assign 1 on range membership, 0 on kernel membership, else leave a gap."""
    _check_state(state, s.ambient_dim)
    assignments: dict[str, TruthValue] = {}
    evidence: dict[str, Membership] = {}
    for p in s.projectors:
        m = membership(state, p.matrix)
        # a nonzero vector cannot lie in both
        assert not (m.in_ran and m.in_ker)
        evidence[p.label] = m
        tv = _bivalent_of(m)
        if tv is not None:
            assignments[p.label] = tv
    return PartialBivalentValuation(assignments, state, evidence)


@dataclass(frozen=True)
class TotalityReport:
    total: bool
    gaps: tuple[str, ...]


def is_total(v: PartialBivalentValuation, s: OperatorSet) -> TotalityReport:
    gaps = tuple(lbl for lbl in s.labels if lbl not in v.assignments)
    return TotalityReport(not gaps, gaps)


# -- entailment -------------------------------------------------------


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    FAILS_BY_GAP = "fails-by-gap"
    FAILS_BY_EXCESS = "fails-by-excess"
    FAILS_BY_DEFICIT = "fails-by-deficit"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EntailmentReport:
    """Whether v(sum P) = 1 carries over to sum v(P) = 1 on one context.

    ``rhs`` is the exact sum of the assigned values. ``nonzero`` lists the
    members with a nonzero value; for a many-valued valuation its length is
    the right-hand side under the bivalent reading (nonzero counts as true).
    """

    context: str
    lhs: Fraction | None
    rhs: Fraction
    assigned: int
    gaps: tuple[str, ...]
    nonzero: tuple[str, ...]
    verdict: Verdict


def _sum_matrix(c: Context) -> Matrix:
    total = Matrix.zeros(c.projectors[0].dim)
    for p in c.projectors:
        total = total + p.matrix
    return total


def entailment_check(v: Valuation, c: Context) -> EntailmentReport:
    report = validate_context(c)
    if not report.ok:
        raise ValueError(f"context {c.name} is not a resolution of the identity")
    whole = _sum_matrix(c)
    state = v.source_state

    if isinstance(v, ManyValuedValuation):
        lhs = born_value(state, whole) if state is not None else Fraction(1)
        values = [v.assignments[p.label] for p in c.projectors]
        rhs = sum(values, Fraction(0))
        nonzero = tuple(p.label for p, x in zip(c.projectors, values) if x)
        if len(nonzero) == 1 and rhs == 1:
            verdict = Verdict.HOLDS
        elif len(nonzero) > 1:
            verdict = Verdict.FAILS_BY_EXCESS
        else:
            verdict = Verdict.FAILS_BY_DEFICIT
        return EntailmentReport(c.name, lhs, rhs, len(values), (), nonzero, verdict)

    if state is not None:
        tv = _bivalent_of(membership(state, whole))
        lhs = None if tv is None else Fraction(int(tv))
    else:
        lhs = Fraction(1)
    assigned = [p.label for p in c.projectors if p.label in v.assignments]
    gaps = tuple(p.label for p in c.projectors if p.label not in v.assignments)
    rhs = Fraction(sum(int(v.assignments[lbl]) for lbl in assigned))
    nonzero = tuple(lbl for lbl in assigned if v.assignments[lbl])
    if rhs > 1:
        verdict = Verdict.FAILS_BY_EXCESS
    elif gaps:
        verdict = Verdict.FAILS_BY_GAP
    elif rhs == 1:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.FAILS_BY_DEFICIT
    return EntailmentReport(c.name, lhs, rhs, len(assigned), gaps, nonzero, verdict)


# -- connectives within a context --------------------------------------


@dataclass(frozen=True)
class ConjunctionEntry:
    first: str
    second: str
    product: int
    minimum: int
    operator_level: int | None
    agree: bool


@dataclass(frozen=True)
class DisjunctionEntry:
    total: int
    maximum: int
    operator_level: int | None
    agree: bool


@dataclass(frozen=True)
class ConnectiveReport:
    context: str
    abstained: bool
    gaps: tuple[str, ...]
    conjunctions: tuple[ConjunctionEntry, ...] = ()
    disjunction: DisjunctionEntry | None = None

    @property
    def consistent(self) -> bool:
        if self.abstained:
            return False
        return all(e.agree for e in self.conjunctions) and self.disjunction.agree


def _operator_value(v: PartialBivalentValuation, e: lattice.LatticeElement) -> int | None:
    if v.source_state is not None:
        tv = _bivalent_of(membership(v.source_state, e.matrix))
        return None if tv is None else int(tv)
    kind = lattice.classify_constant(e)
    if kind is lattice.Constant.TAUTOLOGY:
        return 1
    if kind is lattice.Constant.CONTRADICTION:
        return 0
    return None


def connectives(v: PartialBivalentValuation, c: Context) -> ConnectiveReport:
    """Conjunctions of member pairs and the disjunction over ``c``.

    Value-level forms (product/min, sum/max) are cross-checked against the
    value of the meet/join projector itself. Abstains when any member is
    gapped.
    """
    gaps = tuple(p.label for p in c.projectors if p.label not in v.assignments)
    if gaps:
        return ConnectiveReport(c.name, True, gaps)
    elems = [lattice.element(p) for p in c.projectors]
    vals = [int(v.assignments[p.label]) for p in c.projectors]
    conj = []
    for (i, a), (j, b) in itertools.combinations(enumerate(elems), 2):
        prod, mn = vals[i] * vals[j], min(vals[i], vals[j])
        op = _operator_value(v, lattice.meet(a, b))
        conj.append(ConjunctionEntry(a.label, b.label, prod, mn, op, prod == mn == op))
    total, mx = sum(vals), max(vals)
    op = _operator_value(v, lattice.join(elems))
    disj = DisjunctionEntry(total, mx, op, total == mx == op)
    return ConnectiveReport(c.name, False, (), tuple(conj), disj)


# -- many-valued ----------------------------------------------------------


def born_value(state: State, p: Matrix) -> Fraction:
    """<psi|P|psi> / <psi|psi> as an exact rational."""
    q = state.vector.inner(p.apply(state.vector))
    if not q.is_real():
        raise ValueError("quadratic form is not real; operator is not Hermitian")
    return q.re / state.norm_sq


def born(state: State, s: OperatorSet) -> ManyValuedValuation:
    _check_state(state, s.ambient_dim)
    return ManyValuedValuation(
        {p.label: born_value(state, p.matrix) for p in s.projectors}, state
    )


def lukasiewicz(a: Fraction, b: Fraction | None, op: str) -> Fraction:
    """Lukasiewicz connectives on [0, 1]: and = max(0, a+b-1),
    or = min(1, a+b), not = 1-a (``b`` is ignored for ``not``)."""
    a = Fraction(a)
    if not 0 <= a <= 1:
        raise ValueError(f"operand {a} outside [0, 1]")
    if op == "not":
        return 1 - a
    if b is None:
        raise ValueError(f"{op!r} needs two operands")
    b = Fraction(b)
    if not 0 <= b <= 1:
        raise ValueError(f"operand {b} outside [0, 1]")
    if op == "and":
        return max(Fraction(0), a + b - 1)
    if op == "or":
        return min(Fraction(1), a + b)
    raise ValueError(f"unknown connective {op!r}")


# -- supervaluation -------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    label: str

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class And:
    operands: tuple

    def __str__(self):
        return "(" + " & ".join(map(str, self.operands)) + ")"


@dataclass(frozen=True)
class Or:
    operands: tuple

    def __str__(self):
        return "(" + " | ".join(map(str, self.operands)) + ")"


Formula = Union[Atom, And, Or]


def atoms(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {f.label}
    return set().union(*(atoms(g) for g in f.operands))


def evaluate(f: Formula, assignment: Mapping[str, int]) -> int:
    if isinstance(f, Atom):
        return int(assignment[f.label])
    vals = [evaluate(g, assignment) for g in f.operands]
    if isinstance(f, And):
        return min(vals)
    return max(vals)


def disjunction(c: Context) -> Or:
    return Or(tuple(Atom(lbl) for lbl in c.labels))


class SuperVerdict(str, enum.Enum):
    SUPERTRUE = "supertrue"
    SUPERFALSE = "superfalse"
    GAP = "gap"
    INCONSISTENT = "inconsistent"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SupervaluationVerdict:
    target: Formula
    verdict: SuperVerdict
    completions_examined: int


def completions(v: PartialBivalentValuation, c: Context) -> list[dict[str, int]]:
    """Total assignments on ``c`` with exactly one member true that agree
    with every value ``v`` already gives to a member of ``c``."""
    out = []
    for chosen in c.labels:
        cand = {lbl: int(lbl == chosen) for lbl in c.labels}
        if all(int(v.assignments[lbl]) == x for lbl, x in cand.items() if lbl in v.assignments):
            out.append(cand)
    return out


def supervaluate(v: PartialBivalentValuation, c: Context, target: Formula) -> SupervaluationVerdict:
    unknown = atoms(target) - set(c.labels)
    if unknown:
        raise ValueError(f"formula mentions labels outside {c.name}: {sorted(unknown)}")
    comps = completions(v, c)
    if not comps:
        return SupervaluationVerdict(target, SuperVerdict.INCONSISTENT, 0)
    vals = {evaluate(target, a) for a in comps}
    if vals == {1}:
        verdict = SuperVerdict.SUPERTRUE
    elif vals == {0}:
        verdict = SuperVerdict.SUPERFALSE
    else:
        verdict = SuperVerdict.GAP
    return SupervaluationVerdict(target, verdict, len(comps))
