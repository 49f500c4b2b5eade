import itertools
from collections import Counter
from pathlib import Path

import pytest

from random_sets import brute_force_colorings, random_set
from kslogic.documents import parse_set
from kslogic.coloring import Status, build_problem, solve, verify_coloring
from kslogic.linalg import Vector
from kslogic.model import Context, OperatorSet, Projector


def _ray_set(contexts, dim):
    return OperatorSet(
        tuple(
            Context(name, tuple(Projector.from_ray(Vector(v), lbl) for lbl, v in members))
            for name, members in contexts
        ),
        dim,
    )


SHARED = _ray_set(
    [
        ("A", [("e1", [1, 0, 0]), ("e2", [0, 1, 0]), ("e3", [0, 0, 1])]),
        ("B", [("e1", [1, 0, 0]), ("f+", [0, 1, 1]), ("f-", [0, 1, -1])]),
    ],
    3,
)


def test_build_problem_set_O(set_O):
    p = build_problem(set_O)
    assert len(p.variables) == 12
    assert not p.shared
    assert len(p.edges) == 18
    within = {
        (i, j) for ctx in p.contexts for i, j in itertools.combinations(sorted(ctx), 2)
    }
    assert within == set(p.edges)


def test_build_problem_identifies_duplicates(set_O):
    twice = OperatorSet((set_O.context("C_z"), set_O.context("C_z")), 4)
    p = build_problem(twice)
    assert len(p.variables) == 4
    single = build_problem(set_O.restrict("C_x"))
    assert len(single.variables) == 4 and len(single.edges) == 6


def test_build_problem_rejects_invalid_context(set_O):
    c = set_O.context("C_z")
    with pytest.raises(ValueError):
        build_problem(OperatorSet((Context("half", c.projectors[:2]),), 4))


def test_solve_set_O(set_O):
    p = build_problem(set_O)
    res = solve(p, "enumerate")
    assert res.status is Status.COLORABLE and res.count == 64
    n, sols = brute_force_colorings(set_O)
    assert n == 12 and len(sols) == 64 == 4 ** 3
    assert verify_coloring(p, res.witness)


def test_solve_single_context(set_O):
    assert solve(build_problem(set_O.restrict("C_y")), "enumerate").count == 4


def test_shared_projector_reduces_count():
    p = build_problem(SHARED)
    assert len(p.variables) == 5 and p.shared == {"e1": ["A", "B"]}
    res = solve(p, "enumerate")
    _, sols = brute_force_colorings(SHARED)
    assert res.count == len(sols) == 5 < 3 * 3


def test_enumerate_up_to(set_O):
    p = build_problem(set_O)
    assert solve(p, "enumerate_up_to", 10).count == 10
    with pytest.raises(ValueError):
        solve(p, "enumerate_up_to")
    with pytest.raises(ValueError):
        solve(p, "guess")


def test_uncolorable_ks_set():
    path = Path(__file__).parents[1] / "demos" / "data" / "cabello_18.json"
    s = parse_set(path.read_text())
    p = build_problem(s)
    # parity oracle: 9 contexts, each variable in exactly two of them, so
    # the number of true memberships would be both 9 and even
    occurrences = Counter(k for ctx in p.contexts for k in ctx)
    assert len(p.contexts) % 2 == 1
    assert set(occurrences.values()) == {2}
    res = solve(p, "enumerate")
    assert res.status is Status.UNCOLORABLE and res.count == 0 and res.witness is None
    assert solve(p, "decide").status is Status.UNCOLORABLE


def test_verify_coloring_examples(set_O):
    p = build_problem(set_O)
    good = {lbl: 0 for lbl in p.variables}
    good.update({"P_z++": 1, "P_x--": 1, "P_y+-": 1})
    assert verify_coloring(p, good)
    assert not verify_coloring(p, {lbl: 0 for lbl in p.variables})
    two = dict(good, **{"P_z+-": 1})
    assert not verify_coloring(p, two)
    with pytest.raises(ValueError):
        verify_coloring(p, {"P_z++": 1})


@pytest.mark.parametrize("seed", range(20))
def test_random_sets_match_oracle(seed):
    s = random_set(seed)
    p = build_problem(s)
    res = solve(p, "enumerate")
    n, sols = brute_force_colorings(s)
    assert n == len(p.variables) <= 16
    assert res.count == len(sols)
    assert (solve(p, "decide").status is Status.COLORABLE) == (res.count > 0)
    if res.witness is not None:
        assert verify_coloring(p, res.witness)


@pytest.mark.parametrize("seed", range(5))
def test_enumeration_witnesses_are_valid_and_distinct(seed):
    s = random_set(100 + seed)
    p = build_problem(s)
    res = solve(p, "enumerate", collect=True)
    keys = [tuple(w[v] for v in p.variables) for w in res.solutions]
    assert len(keys) == len(set(keys)) == res.count
    assert all(verify_coloring(p, w) for w in res.solutions)
    _, sols = brute_force_colorings(s)
    assert set(keys) == set(sols)


def test_deterministic(set_O):
    p = build_problem(set_O)
    a, b = solve(p, "enumerate"), solve(build_problem(set_O), "enumerate")
    assert a == b
