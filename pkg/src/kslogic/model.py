"""Two spin-1/2 particles: Pauli eigenvectors, product states and the
twelve-projector operator set split into the z, x and y contexts.

All rays are kept unnormalized over Q(i); a rank-one projector is
``v v^dagger / (v^dagger v)`` so square roots never appear.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import DimensionError, Matrix, Vector, is_projector, matmul, outer, tensor
from .scalar import I

__all__ = [
    "Axis",
    "Sign",
    "Ray",
    "Projector",
    "Context",
    "OperatorSet",
    "State",
    "PreparedState",
    "ContextValidation",
    "CommutationEntry",
    "SIGN_PAIRS",
    "pauli_eigenvector",
    "pauli_matrix",
    "build_projector",
    "build_context",
    "build_set_O",
    "build_state",
    "all_states",
    "parse_state_spec",
    "validate_context",
    "commutes",
    "commutation_report",
]


class Axis(str, enum.Enum):
    Z = "z"
    X = "x"
    Y = "y"

    def __str__(self):
        return self.value


class Sign(str, enum.Enum):
    PLUS = "+"
    MINUS = "-"

    def __str__(self):
        return self.value


SIGN_PAIRS = (
    (Sign.PLUS, Sign.PLUS),
    (Sign.PLUS, Sign.MINUS),
    (Sign.MINUS, Sign.PLUS),
    (Sign.MINUS, Sign.MINUS),
)
AXIS_ORDER = (Axis.Z, Axis.X, Axis.Y)


@dataclass(frozen=True)
class Ray:
    vector: Vector
    norm_sq: Fraction = field(default=None)

    def __post_init__(self):
        if self.vector.is_zero():
            raise ValueError("a ray cannot be the null vector")
        n = self.vector.norm_sq()
        if self.norm_sq is None:
            object.__setattr__(self, "norm_sq", n)
        elif Fraction(self.norm_sq) != n:
            raise ValueError(f"norm_sq {self.norm_sq} does not match v^dagger v = {n}")

    def projector(self) -> Matrix:
        return outer(self.vector).scale(Fraction(1) / self.norm_sq)


@dataclass(frozen=True)
class Projector:
    """A labelled projection operator; construction checks P^2 = P = P^dagger."""

    matrix: Matrix
    label: str

    def __post_init__(self):
        if not self.matrix.is_square():
            raise DimensionError(f"{self.label}: projector must be square")
        if not is_projector(self.matrix):
            raise ValueError(f"{self.label}: matrix is not a projector")

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    @classmethod
    def from_ray(cls, ray: Ray | Vector, label: str) -> "Projector":
        if isinstance(ray, Vector):
            ray = Ray(ray)
        return cls(ray.projector(), label)


@dataclass(frozen=True)
class Context:
    """An ordered group of projectors meant to resolve the identity.

    The resolution and orthogonality properties are checked by
    :func:`validate_context`, not at construction.
    """

    name: str
    projectors: tuple[Projector, ...]

    def __post_init__(self):
        object.__setattr__(self, "projectors", tuple(self.projectors))

    @property
    def labels(self) -> list[str]:
        return [p.label for p in self.projectors]

    def __iter__(self):
        return iter(self.projectors)

    def __len__(self):
        return len(self.projectors)


@dataclass(frozen=True)
class OperatorSet:
    contexts: tuple[Context, ...]
    ambient_dim: int

    def __post_init__(self):
        object.__setattr__(self, "contexts", tuple(self.contexts))
        for c in self.contexts:
            for p in c.projectors:
                if p.matrix.shape != (self.ambient_dim, self.ambient_dim):
                    raise DimensionError(
                        f"{c.name}/{p.label}: shape {p.matrix.shape} in ambient "
                        f"dimension {self.ambient_dim}"
                    )

    @property
    def projectors(self) -> list[Projector]:
        return [p for c in self.contexts for p in c.projectors]

    @property
    def labels(self) -> list[str]:
        return [p.label for p in self.projectors]

    def projector(self, label: str) -> Projector:
        for p in self.projectors:
            if p.label == label:
                return p
        raise KeyError(label)

    def context(self, name: str) -> Context:
        for c in self.contexts:
            if c.name == name:
                return c
        raise KeyError(name)

    def restrict(self, *names: str) -> "OperatorSet":
        return OperatorSet(tuple(self.context(n) for n in names), self.ambient_dim)


@dataclass(frozen=True)
class State:
    """A pure state given by an unnormalized nonzero vector."""

    vector: Vector
    name: str = "psi"

    def __post_init__(self):
        if self.vector.is_zero():
            raise ValueError(f"state {self.name}: the null vector is not a state")

    @property
    def norm_sq(self) -> Fraction:
        return self.vector.norm_sq()

    @property
    def correlated(self) -> bool | None:
        return None


@dataclass(frozen=True)
class PreparedState(State):
    j: Axis = Axis.Z
    alpha: Sign = Sign.PLUS
    k: Axis = Axis.Z
    beta: Sign = Sign.PLUS

    @property
    def correlated(self) -> bool:
        return self.j == self.k

    @property
    def spec(self) -> str:
        return f"{self.j}{self.alpha}{self.k}{self.beta}"


def pauli_matrix(axis: Axis) -> Matrix:
    axis = Axis(axis)
    if axis is Axis.Z:
        return Matrix([[1, 0], [0, -1]])
    if axis is Axis.X:
        return Matrix([[0, 1], [1, 0]])
    return Matrix([[0, -I], [I, 0]])


def pauli_eigenvector(axis: Axis, sign: Sign) -> Ray:
    """Unnormalized eigenvector whose first nonzero component is 1."""
    axis, sign = Axis(axis), Sign(sign)
    s = 1 if sign is Sign.PLUS else -1
    if axis is Axis.Z:
        v = (1, 0) if s == 1 else (0, 1)
    elif axis is Axis.X:
        v = (1, s)
    else:
        v = (1, I * s)
    return Ray(Vector(v))


def projector_label(axis: Axis, alpha: Sign, beta: Sign) -> str:
    return f"P_{Axis(axis)}{Sign(alpha)}{Sign(beta)}"


def build_projector(axis: Axis, alpha: Sign, beta: Sign) -> Projector:
    """|a><a| (x) |b><b| for the axis eigenrays a (sign alpha) and b (sign beta).

    The cross form |a><b| in each factor is not Hermitian for alpha != beta,
    so the product of the two rank-one single-particle projectors is used.
    """
    first = pauli_eigenvector(axis, alpha).projector()
    second = pauli_eigenvector(axis, beta).projector()
    return Projector(tensor(first, second), projector_label(axis, alpha, beta))


def build_context(axis: Axis) -> Context:
    axis = Axis(axis)
    return Context(f"C_{axis}", tuple(build_projector(axis, a, b) for a, b in SIGN_PAIRS))


def build_set_O() -> OperatorSet:
    """The twelve projectors in contexts C_z, C_x, C_y (members ++, +-, -+, --)."""
    return OperatorSet(tuple(build_context(a) for a in AXIS_ORDER), 4)


def build_state(j: Axis, alpha: Sign, k: Axis, beta: Sign) -> PreparedState:
    j, alpha, k, beta = Axis(j), Sign(alpha), Axis(k), Sign(beta)
    v = tensor(pauli_eigenvector(j, alpha).vector, pauli_eigenvector(k, beta).vector)
    return PreparedState(v, f"{j}{alpha}{k}{beta}", j, alpha, k, beta)


def all_states() -> list[PreparedState]:
    """All 36 product states, axes in z, x, y order and signs + before -."""
    return [
        build_state(j, a, k, b)
        for j, a, k, b in itertools.product(AXIS_ORDER, Sign, AXIS_ORDER, Sign)
    ]


def parse_state_spec(spec: str) -> PreparedState:
    """``"z+x-"`` -> build_state(z, +, x, -)."""
    if len(spec) != 4:
        raise ValueError(f"state spec must look like 'z+x-', got {spec!r}")
    try:
        return build_state(Axis(spec[0]), Sign(spec[1]), Axis(spec[2]), Sign(spec[3]))
    except ValueError:
        raise ValueError(f"bad state spec {spec!r}") from None


# -- structural checks ------------------------------------------------


@dataclass(frozen=True)
class ContextValidation:
    context: str
    all_projectors: bool
    sums_to_identity: bool
    pairwise_orthogonal: bool
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.all_projectors and self.sums_to_identity and self.pairwise_orthogonal


def validate_context(c: Context) -> ContextValidation:
    failures = []
    if not c.projectors:
        return ContextValidation(c.name, True, False, True, ("context is empty",))
    n = c.projectors[0].dim
    all_proj = True
    for p in c.projectors:
        if p.dim != n or not is_projector(p.matrix):
            all_proj = False
            failures.append(f"{p.label} is not a {n}x{n} projector")
    if not all_proj:
        return ContextValidation(c.name, False, False, False, tuple(failures))

    total = Matrix.zeros(n)
    for p in c.projectors:
        total = total + p.matrix
    complete = total == Matrix.identity(n)
    if not complete:
        failures.append("members do not sum to the identity")

    orthogonal = True
    for p, q in itertools.combinations(c.projectors, 2):
        if not matmul(p.matrix, q.matrix).is_zero():
            orthogonal = False
            failures.append(f"{p.label}*{q.label} != 0")
    return ContextValidation(c.name, True, complete, orthogonal, tuple(failures))


@dataclass(frozen=True)
class CommutationEntry:
    first: str
    second: str
    same_context: bool
    commutes: bool


def commutes(p: Matrix, q: Matrix) -> bool:
    return matmul(p, q) == matmul(q, p)


def commutation_report(s: OperatorSet, within: bool = False) -> list[CommutationEntry]:
    """Commutation of every unordered pair from distinct contexts.

    With ``within=True`` the within-context pairs are reported as well.
    """
    out = []
    ctxs = s.contexts
    if within:
        for c in ctxs:
            for p, q in itertools.combinations(c.projectors, 2):
                out.append(CommutationEntry(p.label, q.label, True, commutes(p.matrix, q.matrix)))
    for a, b in itertools.combinations(range(len(ctxs)), 2):
        for p in ctxs[a].projectors:
            for q in ctxs[b].projectors:
                out.append(CommutationEntry(p.label, q.label, False, commutes(p.matrix, q.matrix)))
    return out
