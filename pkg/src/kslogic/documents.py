"""JSON documents for operator sets and states.

Set document::

    {
      "dimension": 4,
      "metadata": {"name": "..."},
      "contexts": [
        {"name": "C_z", "members": [
          {"label": "P_z++", "matrix": [["1", "0", ...], ...]},
          {"label": "e2", "ray": ["0", "1", "0", "0"]}
        ]}
      ]
    }

State document: ``{"builtin": {"j": "z", "alpha": "+", "k": "x", "beta": "+"}}``
or ``{"name": "psi", "vector": ["1", "1i", "0", "0"]}``.

Every scalar is a string in the canonical Gaussian-rational encoding of
:mod:`kslogic.scalar`. Writers emit keys in a fixed order with two-space
indentation and a trailing newline, so output is byte-stable.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .linalg import DimensionError, Matrix, Vector
from .model import (
    Context,
    OperatorSet,
    Projector,
    Ray,
    State,
    build_set_O,
    build_state,
)
from .scalar import parse_scalar

__all__ = [
    "DocumentError",
    "Member",
    "ContextDoc",
    "SetDocument",
    "StateDocument",
    "dumps",
    "parse_set_document",
    "parse_set",
    "parse_state_document",
    "set_to_document",
    "paper_set_document",
    "bundled_set_path",
    "BUNDLED_SETS",
]

BUNDLED_SETS = ("paper_set_O",)


class DocumentError(ValueError):
    """Malformed or invalid input document."""


def _emit(obj: Any, indent: int) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{pad}  {json.dumps(k)}: {_emit(v, indent + 1)}" for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(not isinstance(e, (dict, list)) for e in obj):
            return "[" + ", ".join(json.dumps(e) for e in obj) + "]"
        items = [f"{pad}  {_emit(e, indent + 1)}" for e in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return json.dumps(obj)


def dumps(obj: Any) -> str:
    """Deterministic JSON: two-space indent, flat lists kept on one line."""
    return _emit(obj, 0) + "\n"


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _scalars(items, where: str) -> list:
    if not isinstance(items, list) or not items:
        raise DocumentError(f"{where}: expected a nonempty list of scalar strings")
    out = []
    for n, s in enumerate(items):
        if not isinstance(s, str):
            raise DocumentError(f"{where}[{n}]: scalar must be a string, got {s!r}")
        try:
            out.append(parse_scalar(s))
        except ValueError as exc:
            raise DocumentError(f"{where}[{n}]: {exc}") from None
    return out


@dataclass(frozen=True)
class Member:
    label: str
    ray: tuple[str, ...] | None = None
    matrix: tuple[tuple[str, ...], ...] | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"label": self.label}
        if self.ray is not None:
            out["ray"] = list(self.ray)
        else:
            out["matrix"] = [list(r) for r in self.matrix]
        return out


@dataclass(frozen=True)
class ContextDoc:
    name: str
    members: tuple[Member, ...]

    def to_json(self) -> dict:
        return {"name": self.name, "members": [m.to_json() for m in self.members]}


@dataclass(frozen=True)
class SetDocument:
    dimension: int
    contexts: tuple[ContextDoc, ...]
    metadata: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "metadata": dict(self.metadata),
            "contexts": [c.to_json() for c in self.contexts],
        }

    def dumps(self) -> str:
        return dumps(self.to_json())

    def build(self) -> OperatorSet:
        """Construct the operator set, checking rays and projectors.

        Context completeness and orthogonality are not checked here; see
        :func:`kslogic.model.validate_context`.
        """
        n = self.dimension
        contexts = []
        seen: dict[str, Matrix] = {}
        for c in self.contexts:
            projs = []
            for m in c.members:
                where = f"context {c.name!r}, member {m.label!r}"
                try:
                    if m.ray is not None:
                        v = Vector(parse_scalar(x) for x in m.ray)
                        if v.dim != n:
                            raise DimensionError(f"ray has dimension {v.dim}, expected {n}")
                        if v.is_zero():
                            raise ValueError("ray is the null vector")
                        projs.append(Projector(Ray(v).projector(), m.label))
                    else:
                        mat = Matrix([parse_scalar(x) for x in r] for r in m.matrix)
                        if mat.shape != (n, n):
                            raise DimensionError(f"matrix has shape {mat.shape}, expected ({n}, {n})")
                        projs.append(Projector(mat, m.label))
                except ValueError as exc:
                    msg = str(exc)
                    if msg.startswith(m.label + ": "):
                        msg = msg[len(m.label) + 2:]
                    raise DocumentError(f"{where}: {msg}") from None
                if seen.setdefault(m.label, projs[-1].matrix) != projs[-1].matrix:
                    raise DocumentError(f"{where}: label reused for a different operator")
            contexts.append(Context(c.name, tuple(projs)))
        return OperatorSet(tuple(contexts), n)


def parse_set_document(text: str) -> SetDocument:
    raw = _loads(text)
    if not isinstance(raw, dict):
        raise DocumentError("set document must be a JSON object")
    dim = raw.get("dimension")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise DocumentError("'dimension' must be a positive integer")
    meta = raw.get("metadata", {})
    if not isinstance(meta, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in meta.items()
    ):
        raise DocumentError("'metadata' must map strings to strings")
    ctxs = raw.get("contexts")
    if not isinstance(ctxs, list):
        raise DocumentError("'contexts' must be a list")
    out = []
    for ci, c in enumerate(ctxs):
        if not isinstance(c, dict) or not isinstance(c.get("members"), list):
            raise DocumentError(f"contexts[{ci}]: expected an object with a 'members' list")
        name = c.get("name", f"C{ci}")
        if not isinstance(name, str):
            raise DocumentError(f"contexts[{ci}]: 'name' must be a string")
        members = []
        for mi, m in enumerate(c["members"]):
            where = f"context {name!r}, members[{mi}]"
            if not isinstance(m, dict):
                raise DocumentError(f"{where}: expected an object")
            label = m.get("label", f"{name}[{mi}]")
            if not isinstance(label, str):
                raise DocumentError(f"{where}: 'label' must be a string")
            where = f"context {name!r}, member {label!r}"
            if ("ray" in m) == ("matrix" in m):
                raise DocumentError(f"{where}: give exactly one of 'ray' or 'matrix'")
            if "ray" in m:
                _scalars(m["ray"], f"{where} ray")
                members.append(Member(label, ray=tuple(m["ray"])))
            else:
                rows = m["matrix"]
                if not isinstance(rows, list) or not rows:
                    raise DocumentError(f"{where}: 'matrix' must be a list of rows")
                for ri, r in enumerate(rows):
                    _scalars(r, f"{where} matrix[{ri}]")
                members.append(Member(label, matrix=tuple(tuple(r) for r in rows)))
        out.append(ContextDoc(name, tuple(members)))
    return SetDocument(dim, tuple(out), dict(meta))


def parse_set(text: str) -> OperatorSet:
    return parse_set_document(text).build()


def set_to_document(s: OperatorSet, metadata: dict[str, str] | None = None) -> SetDocument:
    ctxs = tuple(
        ContextDoc(c.name, tuple(Member(p.label, matrix=tuple(map(tuple, p.matrix.to_strings()))) for p in c))
        for c in s.contexts
    )
    return SetDocument(s.ambient_dim, ctxs, dict(metadata or {}))


def paper_set_document() -> SetDocument:
    """Document for the 12-projector set, generated from the model builder."""
    return set_to_document(
        build_set_O(),
        {
            "name": "paper_set_O",
            "description": "two spin-1/2 particles: contexts C_z, C_x, C_y, members ++, +-, -+, --",
        },
    )


def bundled_set_path(name: str) -> Path:
    if name not in BUNDLED_SETS:
        raise KeyError(name)
    return Path(str(resources.files("kslogic") / "data" / f"{name}.json"))


# -- states -----------------------------------------------------------------


@dataclass(frozen=True)
class StateDocument:
    builtin: tuple[str, str, str, str] | None = None
    vector: tuple[str, ...] | None = None
    name: str = "psi"

    def to_json(self) -> dict:
        if self.builtin is not None:
            j, a, k, b = self.builtin
            return {"builtin": {"j": j, "alpha": a, "k": k, "beta": b}}
        return {"name": self.name, "vector": list(self.vector)}

    def build(self) -> State:
        if self.builtin is not None:
            try:
                return build_state(*self.builtin)
            except ValueError as exc:
                raise DocumentError(f"builtin state: {exc}") from None
        v = Vector(parse_scalar(x) for x in self.vector)
        if v.is_zero():
            raise DocumentError(f"state {self.name!r}: the null vector is not a state")
        return State(v, self.name)


def parse_state_document(text: str) -> StateDocument:
    raw = _loads(text)
    if not isinstance(raw, dict):
        raise DocumentError("state document must be a JSON object")
    if ("builtin" in raw) == ("vector" in raw):
        raise DocumentError("state document needs exactly one of 'builtin' or 'vector'")
    if "builtin" in raw:
        b = raw["builtin"]
        if not isinstance(b, dict) or set(b) != {"j", "alpha", "k", "beta"}:
            raise DocumentError("'builtin' needs keys j, alpha, k, beta")
        return StateDocument(builtin=(b["j"], b["alpha"], b["k"], b["beta"]))
    _scalars(raw["vector"], "vector")
    name = raw.get("name", "psi")
    if not isinstance(name, str):
        raise DocumentError("'name' must be a string")
    return StateDocument(vector=tuple(raw["vector"]), name=name)

