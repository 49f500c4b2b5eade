"""Exact scalars and subspaces over Q(i).

Everything in kslogic is computed with Gaussian rationals, so a membership
question like "is this vector in the range of P?" gets a yes/no answer with
no rounding involved.
"""
from fractions import Fraction

from kslogic.linalg import Matrix, Vector, kernel_basis, member, range_basis
from kslogic.scalar import GaussianRational, I, format_scalar, parse_scalar

# scalars behave like numbers and print in a canonical text form
z = (1 + I) * (1 - I)
print("(1+i)(1-i) =", z)
w = GaussianRational(Fraction(1, 4), Fraction(-1, 4))
print("w =", format_scalar(w), " conj(w) =", w.conjugate(), " 1/w =", 1 / w)
assert parse_scalar(format_scalar(w)) == w

# a rank-one projector built from an unnormalized ray (1, i): v v^dagger / 2
v = Vector([1, I])
P = Matrix([[1, -I], [I, 1]]).scale(Fraction(1, 2))
print("P =", P.to_strings())
print("P v == v:", P.apply(v) == v)

# range and kernel come back as canonical (reduced echelon) bases
print("ran(P) =", [b.to_strings() for b in range_basis(P).vectors])
print("ker(P) =", [b.to_strings() for b in kernel_basis(P).vectors])
print("(1, 0) in ran(P)?", member(Vector([1, 0]), range_basis(P)))
print("(1, 0) in ker(P)?", member(Vector([1, 0]), kernel_basis(P)))
