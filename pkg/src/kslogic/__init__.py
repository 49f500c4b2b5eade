"""Exact verification of state-induced truth valuations on projector sets."""
from .scalar import GaussianRational, format_scalar, parse_scalar
from .linalg import Matrix, SubspaceBasis, Vector
from .model import (
    Axis,
    Context,
    OperatorSet,
    PreparedState,
    Projector,
    Sign,
    State,
    build_projector,
    build_set_O,
    build_state,
)

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "format_scalar",
    "parse_scalar",
    "Matrix",
    "SubspaceBasis",
    "Vector",
    "Axis",
    "Context",
    "OperatorSet",
    "PreparedState",
    "Projector",
    "Sign",
    "State",
    "build_projector",
    "build_set_O",
    "build_state",
]
