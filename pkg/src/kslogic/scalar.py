"""Exact arithmetic over the Gaussian rationals Q(i).

Every scalar in the package is a :class:`GaussianRational`, a pair of
:class:`fractions.Fraction` values kept in canonical (reduced) form.

Text encoding, shared by all file formats and reports::

    "0"  "3/4"  "-1"  "1i"  "-1/4i"  "1/4-1/4i"  "1+1i"

The real part is omitted when zero, the imaginary part when zero, the
sign between them is always explicit, and ``d`` is dropped from ``n/d``
when ``d == 1``. Parsing only accepts this canonical spelling so that
``format_scalar(parse_scalar(s)) == s`` holds for every accepted ``s``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

__all__ = [
    "GaussianRational",
    "ScalarLike",
    "as_scalar",
    "arith",
    "conjugate",
    "format_rational",
    "parse_rational",
    "format_scalar",
    "parse_scalar",
    "ZERO",
    "ONE",
    "I",
]

ScalarLike = Union["GaussianRational", int, Fraction]


class GaussianRational:
    """Immutable ``re + im*i`` with rational parts."""

    __slots__ = ("_re", "_im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        if not isinstance(re, (int, _RationalABC)) or not isinstance(
            im, (int, _RationalABC)
        ):
            raise TypeError("GaussianRational parts must be int or Fraction")
        object.__setattr__(self, "_re", Fraction(re))
        object.__setattr__(self, "_im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_re", re)
        object.__setattr__(obj, "_im", im)
        return obj

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def is_real(self) -> bool:
        return not self._im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------

    def __neg__(self):
        return GaussianRational._raw(-self._re, -self._im)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._raw(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._raw(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self._re, self._im, o._re, o._im
        if not b and not d:
            return GaussianRational._raw(a * c, b)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def inverse(self) -> "GaussianRational":
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational._raw(self._re / n, -self._im / n)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._re, -self._im)

    def norm_sq(self) -> Fraction:
        """|z|^2 as an exact rational."""
        return self._re * self._re + self._im * self._im

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return GaussianRational._raw(Fraction(x), Fraction(0))
    return NotImplemented


def as_scalar(x: ScalarLike | str) -> GaussianRational:
    """Coerce an int, Fraction, canonical string or GaussianRational."""
    if isinstance(x, str):
        return parse_scalar(x)
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")
    return out


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def arith(a: ScalarLike, b: ScalarLike, op: str) -> GaussianRational:
    """Apply one of ``add``, ``sub``, ``mul``, ``div``.

    Raises ZeroDivisionError for ``div`` by zero and ValueError for an
    unknown operation name.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(as_scalar(a), as_scalar(b))


def conjugate(a: ScalarLike) -> GaussianRational:
    return as_scalar(a).conjugate()


# -- text encoding ----------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_URAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<re>{_RAT})(?P<im>[+-]{_URAT})i"
    rf"|(?P<im_only>{_RAT})i"
    rf"|(?P<re_only>{_RAT}))$"
)
_RATIONAL_RE = re.compile(rf"^{_RAT}$")


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _parse_rational_token(tok: str) -> Fraction:
    if "/" in tok:
        num, den = tok.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {tok!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(tok))


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    q = _parse_rational_token(text)
    if format_rational(q) != text:
        raise ValueError(f"non-canonical rational literal {text!r}")
    return q


def format_scalar(z: ScalarLike) -> str:
    z = as_scalar(z)
    if not z.im:
        return format_rational(z.re)
    im = format_rational(z.im)
    if not z.re:
        return f"{im}i"
    sign = "-" if z.im < 0 else "+"
    return f"{format_rational(z.re)}{sign}{format_rational(abs(z.im))}i"


def parse_scalar(text: str) -> GaussianRational:
    """Parse the canonical text encoding; raise ValueError otherwise."""
    m = _SCALAR_RE.match(text)
    if not m:
        raise ValueError(f"not a Gaussian rational literal: {text!r}")
    if m.group("re_only") is not None:
        z = GaussianRational(_parse_rational_token(m.group("re_only")))
    elif m.group("im_only") is not None:
        z = GaussianRational(0, _parse_rational_token(m.group("im_only")))
    else:
        z = GaussianRational(
            _parse_rational_token(m.group("re")),
            _parse_rational_token(m.group("im")),
        )
    if format_scalar(z) != text:
        raise ValueError(f"non-canonical scalar literal {text!r}")
    return z
