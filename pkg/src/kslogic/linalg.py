"""Dense exact linear algebra over Q(i).

Matrices and vectors are immutable tuples of :class:`GaussianRational`.
Subspaces are held as :class:`SubspaceBasis` objects whose vectors are the
nonzero rows of a reduced row-echelon form, so two equal subspaces always
carry identical bases.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, GaussianRational, ScalarLike, as_scalar, format_scalar

__all__ = [
    "Vector",
    "Matrix",
    "SubspaceBasis",
    "DimensionError",
    "matmul",
    "adjoint",
    "tensor",
    "rref",
    "rank",
    "kernel_basis",
    "range_basis",
    "span",
    "member",
    "intersect",
    "is_projector",
    "inverse",
    "outer",
    "projector_onto",
]


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


def _row(entries: Iterable) -> tuple[GaussianRational, ...]:
    return tuple(as_scalar(e) for e in entries)


class Vector:
    """Column vector with exact entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[ScalarLike | str]):
        ents = _row(entries)
        if not ents:
            raise DimensionError("vector must have positive dimension")
        object.__setattr__(self, "entries", ents)

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def inner(self, other: "Vector") -> GaussianRational:
        """<self|other>, conjugate-linear in the first slot."""
        if other.dim != self.dim:
            raise DimensionError(f"inner product of dims {self.dim} and {other.dim}")
        acc = ZERO
        for a, b in zip(self.entries, other.entries):
            acc = acc + a.conjugate() * b
        return acc

    def norm_sq(self):
        return self.inner(self).re

    def scale(self, c: ScalarLike) -> "Vector":
        c = as_scalar(c)
        return Vector(c * e for e in self.entries)

    def __add__(self, other: "Vector") -> "Vector":
        if other.dim != self.dim:
            raise DimensionError("vector dims differ")
        return Vector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "Vector") -> "Vector":
        if other.dim != self.dim:
            raise DimensionError("vector dims differ")
        return Vector(a - b for a, b in zip(self.entries, other.entries))

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(("Vector", self.entries))

    def to_strings(self) -> list[str]:
        return [format_scalar(e) for e in self.entries]

    def __repr__(self):
        return f"Vector({self.to_strings()})"

    @classmethod
    def basis(cls, dim: int, k: int) -> "Vector":
        return cls(ONE if i == k else ZERO for i in range(dim))


class Matrix:
    """Dense row-major matrix with exact entries."""

    __slots__ = ("entries", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[ScalarLike | str]]):
        ents = tuple(_row(r) for r in rows)
        if not ents or not ents[0]:
            raise DimensionError("matrix must have positive shape")
        width = len(ents[0])
        if any(len(r) != width for r in ents):
            raise DimensionError("ragged matrix rows")
        object.__setattr__(self, "entries", ents)
        object.__setattr__(self, "nrows", len(ents))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _from_tuples(cls, ents) -> "Matrix":
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", ents)
        object.__setattr__(obj, "nrows", len(ents))
        object.__setattr__(obj, "ncols", len(ents[0]))
        return obj

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls((ONE if i == j else ZERO for j in range(n)) for i in range(n))

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        return cls([ZERO] * (n if m is None else m) for _ in range(n))

    @classmethod
    def diag(cls, values: Sequence[ScalarLike]) -> "Matrix":
        n = len(values)
        return cls((values[i] if i == j else 0 for j in range(n)) for i in range(n))

    @classmethod
    def from_columns(cls, columns: Sequence[Vector]) -> "Matrix":
        if not columns:
            raise DimensionError("need at least one column")
        return cls(zip(*(c.entries for c in columns)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return Vector(self.entries[i])

    def column(self, j: int) -> Vector:
        return Vector(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.entries for e in r)

    def transpose(self) -> "Matrix":
        return Matrix._from_tuples(tuple(zip(*self.entries)))

    def adjoint(self) -> "Matrix":
        return Matrix._from_tuples(
            tuple(tuple(e.conjugate() for e in col) for col in zip(*self.entries))
        )

    def scale(self, c: ScalarLike) -> "Matrix":
        c = as_scalar(c)
        return Matrix._from_tuples(tuple(tuple(c * e for e in r) for r in self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix._from_tuples(
            tuple(
                tuple(a + b for a, b in zip(r, s))
                for r, s in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        return Matrix._from_tuples(
            tuple(
                tuple(a - b for a, b in zip(r, s))
                for r, s in zip(self.entries, other.entries)
            )
        )

    def __neg__(self):
        return self.scale(-1)

    def __matmul__(self, other):
        if isinstance(other, Vector):
            return self.apply(other)
        if isinstance(other, Matrix):
            return matmul(self, other)
        return NotImplemented

    def apply(self, v: Vector) -> Vector:
        if v.dim != self.ncols:
            raise DimensionError(f"cannot apply {self.shape} matrix to dim {v.dim}")
        out = []
        for r in self.entries:
            acc = ZERO
            for a, b in zip(r, v.entries):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return Vector(out)

    def trace(self) -> GaussianRational:
        acc = ZERO
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.entries[i][i]
        return acc

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(("Matrix", self.entries))

    def to_strings(self) -> list[list[str]]:
        return [[format_scalar(e) for e in r] for r in self.entries]

    def __repr__(self):
        return f"Matrix({self.to_strings()})"


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    bt = tuple(zip(*b.entries))
    out = []
    for r in a.entries:
        row = []
        for c in bt:
            acc = ZERO
            for x, y in zip(r, c):
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return Matrix._from_tuples(tuple(out))


def adjoint(a: Matrix) -> Matrix:
    return a.adjoint()


def tensor(a, b):
    """Kronecker product of two matrices or of two vectors."""
    if isinstance(a, Vector) and isinstance(b, Vector):
        return Vector(x * y for x in a.entries for y in b.entries)
    if isinstance(a, Matrix) and isinstance(b, Matrix):
        rows = []
        for ra in a.entries:
            for rb in b.entries:
                rows.append(tuple(x * y for x in ra for y in rb))
        return Matrix._from_tuples(tuple(rows))
    raise TypeError("tensor expects two matrices or two vectors")


def outer(v: Vector, w: Vector | None = None) -> Matrix:
    """|v><w| (w defaults to v)."""
    w = v if w is None else w
    return Matrix((x * y.conjugate() for y in w.entries) for x in v.entries)


# -- elimination ------------------------------------------------------


def rref(rows: Sequence[Sequence[GaussianRational]]):
    """Reduced row-echelon form.

    Pivots are the first nonzero entry in column order. Returns the list of
    nonzero reduced rows and the list of pivot columns.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        p = next((k for k in range(r, len(work)) if work[k][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        inv = work[r][c].inverse()
        if inv != ONE:
            work[r] = [x * inv for x in work[r]]
        for k in range(len(work)):
            if k != r and work[k][c]:
                f = work[k][c]
                work[k] = [x - f * y for x, y in zip(work[k], work[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in work[:r]], pivots


def rank(a: Matrix) -> int:
    return len(rref(a.entries)[1])


@dataclass(frozen=True)
class SubspaceBasis:
    """Canonical basis of a subspace of Q(i)^n.

    ``vectors`` are the rows of a reduced row-echelon form; build instances
    with :func:`span` rather than directly.
    """

    ambient_dim: int
    vectors: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def is_zero(self) -> bool:
        return not self.vectors

    def is_full(self) -> bool:
        return len(self.vectors) == self.ambient_dim

    def __contains__(self, x: Vector) -> bool:
        return member(x, self)


def span(ambient_dim: int, vectors: Iterable[Vector]) -> SubspaceBasis:
    vs = list(vectors)
    for v in vs:
        if v.dim != ambient_dim:
            raise DimensionError(f"vector of dim {v.dim} in ambient dim {ambient_dim}")
    rows, _ = rref([v.entries for v in vs])
    return SubspaceBasis(ambient_dim, tuple(Vector(r) for r in rows))


def kernel_basis(a: Matrix) -> SubspaceBasis:
    """Basis of {x : a x = 0}."""
    rows, pivots = rref(a.entries)
    free = [c for c in range(a.ncols) if c not in pivots]
    vecs = []
    for f in free:
        x = [ZERO] * a.ncols
        x[f] = ONE
        for row, p in zip(rows, pivots):
            x[p] = -row[f]
        vecs.append(Vector(x))
    return span(a.ncols, vecs)


def range_basis(a: Matrix) -> SubspaceBasis:
    """Basis of the column space of ``a``."""
    return span(a.nrows, a.columns())


def _reduce(x: Sequence[GaussianRational], s: SubspaceBasis) -> list[GaussianRational]:
    out = list(x)
    for b in s.vectors:
        p = next(k for k, e in enumerate(b.entries) if e)
        c = out[p]
        if c:
            out = [xi - c * bi for xi, bi in zip(out, b.entries)]
    return out


def member(x: Vector, s: SubspaceBasis) -> bool:
    """True iff ``x`` is a linear combination of ``s.vectors``."""
    if x.dim != s.ambient_dim:
        raise DimensionError(f"vector dim {x.dim} vs ambient dim {s.ambient_dim}")
    return all(not e for e in _reduce(x.entries, s))


def intersect(s: SubspaceBasis, t: SubspaceBasis) -> SubspaceBasis:
    """Intersection of two subspaces (Zassenhaus)."""
    if s.ambient_dim != t.ambient_dim:
        raise DimensionError("ambient dimensions differ")
    n = s.ambient_dim
    zero = (ZERO,) * n
    block = [v.entries + v.entries for v in s.vectors]
    block += [v.entries + zero for v in t.vectors]
    rows, _ = rref(block)
    found = [Vector(r[n:]) for r in rows if not any(r[:n])]
    return span(n, found)


def is_projector(a: Matrix) -> bool:
    """Exact test of a @ a == a and a^dagger == a."""
    if not a.is_square():
        raise DimensionError("is_projector needs a square matrix")
    return a.adjoint() == a and matmul(a, a) == a


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises ZeroDivisionError when singular."""
    if not a.is_square():
        raise DimensionError("only square matrices have inverses")
    n = a.nrows
    ident = Matrix.identity(n).entries
    rows, pivots = rref([r + e for r, e in zip(a.entries, ident)])
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise ZeroDivisionError("matrix is singular")
    return Matrix(r[n:] for r in rows)


def projector_onto(s: SubspaceBasis) -> Matrix:
    """Orthogonal projector B (B^dagger B)^-1 B^dagger onto ``s``."""
    n = s.ambient_dim
    if s.is_zero():
        return Matrix.zeros(n)
    b = Matrix.from_columns(list(s.vectors))
    bh = b.adjoint()
    return matmul(matmul(b, inverse(matmul(bh, b))), bh)
