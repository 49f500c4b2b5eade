import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paper_data import LITERAL
from kslogic.linalg import (
    DimensionError,
    Matrix,
    Vector,
    adjoint,
    intersect,
    inverse,
    is_projector,
    kernel_basis,
    matmul,
    member,
    projector_onto,
    range_basis,
    rank,
    span,
    tensor,
)
from kslogic.scalar import GaussianRational, I

small = st.integers(-3, 3)
entries = st.builds(GaussianRational, small, small)


def matrices(rows, cols):
    return st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(Matrix)


def to_np(m: Matrix) -> np.ndarray:
    return np.array([[complex(float(e.re), float(e.im)) for e in r] for r in m.entries])


Z = Matrix.zeros(4)
ONE4 = Matrix.identity(4)


def test_matmul_examples():
    assert matmul(LITERAL["P_z++"], LITERAL["P_z+-"]) == Z
    m = LITERAL["P_y+-"]
    assert matmul(ONE4, m) == m
    with pytest.raises(DimensionError):
        matmul(Matrix.zeros(2, 3), Matrix.zeros(2, 3))


def test_noncommuting_pair_against_float_oracle():
    a, b = LITERAL["P_z++"], LITERAL["P_x++"]
    na, nb = to_np(a), to_np(b)
    assert not np.allclose(na @ nb, nb @ na)
    assert matmul(a, b) != matmul(b, a)
    assert np.allclose(to_np(matmul(a, b)), na @ nb)


def test_adjoint_examples():
    assert adjoint(LITERAL["P_y++"]) == LITERAL["P_y++"]
    assert adjoint(Z) == Z
    assert adjoint(Matrix([[0, 1], [0, 0]])) == Matrix([[0, 0], [1, 0]])


def test_tensor_examples():
    e = Vector([1, 0])
    assert tensor(e, e) == Vector([1, 0, 0, 0])
    d = Matrix.diag([1, 0])
    assert tensor(d, d) == LITERAL["P_z++"]
    half = Matrix([[1, 1], [1, 1]]).scale(GaussianRational(1) / 2)
    assert tensor(half, half) == LITERAL["P_x++"]


def test_kernel_examples():
    e = [Vector.basis(4, k) for k in range(4)]
    assert kernel_basis(LITERAL["P_z+-"]) == span(4, [e[0], e[2], e[3]])
    assert kernel_basis(ONE4).is_zero()
    k = kernel_basis(LITERAL["P_y++"])
    assert k.dim == 3
    # (ia + ib + c, a, b, c) at a, b, c = unit vectors
    params = [Vector([I, 1, 0, 0]), Vector([I, 0, 1, 0]), Vector([1, 0, 0, 1])]
    assert all(member(v, k) for v in params)
    assert k == span(4, params)


def test_range_examples():
    assert range_basis(LITERAL["P_z++"]) == span(4, [Vector([1, 0, 0, 0])])
    assert range_basis(LITERAL["P_y++"]).vectors == (Vector([1, I, I, -1]),)
    assert range_basis(Z).is_zero()


def test_member_examples():
    e1 = Vector([1, 0, 0, 0])
    assert member(e1, range_basis(LITERAL["P_z++"]))
    assert not member(e1, range_basis(LITERAL["P_y++"]))
    assert not member(e1, kernel_basis(LITERAL["P_y++"]))
    with pytest.raises(DimensionError):
        member(Vector([1, 0]), range_basis(LITERAL["P_z++"]))


def test_is_projector_examples():
    assert all(is_projector(m) for m in LITERAL.values())
    assert is_projector(ONE4) and is_projector(Z)
    s = LITERAL["P_z++"] + LITERAL["P_x++"]
    ns = to_np(s)
    assert not np.allclose(ns @ ns, ns)
    assert not is_projector(s)


@given(matrices(3, 4))
@settings(max_examples=40, deadline=None)
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).dim == m.ncols
    assert rank(m) == range_basis(m).dim
    assert rank(m) == np.linalg.matrix_rank(to_np(m))


@given(matrices(2, 2), matrices(2, 2), matrices(2, 2), matrices(2, 2))
@settings(max_examples=25, deadline=None)
def test_tensor_mixed_product(a, b, c, d):
    assert matmul(tensor(a, b), tensor(c, d)) == tensor(matmul(a, c), matmul(b, d))


@given(matrices(4, 4))
@settings(max_examples=30, deadline=None)
def test_kernel_vectors_are_annihilated(m):
    for v in kernel_basis(m).vectors:
        assert m.apply(v).is_zero()


vectors4 = st.lists(entries, min_size=4, max_size=4).map(Vector).filter(lambda v: not v.is_zero())


@given(st.sampled_from(sorted(LITERAL)), vectors4)
@settings(max_examples=60, deadline=None)
def test_membership_matches_matrix_action(label, x):
    p = LITERAL[label]
    px = p.apply(x)
    in_ran = member(x, range_basis(p))
    in_ker = member(x, kernel_basis(p))
    assert in_ran == (px == x)
    assert in_ker == px.is_zero()
    assert not (in_ran and in_ker)


@given(st.sampled_from(sorted(LITERAL)))
def test_basis_vectors_of_literal_projectors(label):
    p = LITERAL[label]
    for v in range_basis(p).vectors:
        assert p.apply(v) == v
        assert not member(v, kernel_basis(p))


def test_intersect_and_projector_onto():
    a = span(4, [Vector([1, 0, 0, 0]), Vector([0, 1, 0, 0])])
    b = span(4, [Vector([1, 1, 0, 0]), Vector([0, 0, 1, 0])])
    both = intersect(a, b)
    assert both == span(4, [Vector([1, 1, 0, 0])])
    p = projector_onto(b)
    assert is_projector(p) and range_basis(p) == b
    assert projector_onto(span(4, [])) == Z


def test_inverse():
    m = Matrix([[1, I], [2, 3]])
    assert matmul(m, inverse(m)) == Matrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        inverse(Matrix([[1, 2], [2, 4]]))


def test_subspace_canonical_form_identifies_equal_spans():
    u = [Vector([1, I, 0, 0]), Vector([0, 0, 1, 1])]
    w = [u[0] + u[1], u[0].scale(3) - u[1]]
    assert span(4, u) == span(4, w)
