"""Random small operator sets and a brute-force coloring oracle."""
import itertools
import random

from kslogic.linalg import Matrix, Vector, matmul
from kslogic.model import Context, OperatorSet, Projector, Ray
from kslogic.scalar import GaussianRational


def _rand_gauss(rng):
    while True:
        z = GaussianRational(rng.randint(-2, 2), rng.randint(-2, 2))
        if z:
            return z


def random_context(rng, dim, name):
    vecs = [[1 if i == k else 0 for i in range(dim)] for k in range(dim)]
    coords = list(range(dim))
    rng.shuffle(coords)
    for a, b in zip(coords[0::2], coords[1::2]):
        if rng.random() < 0.6:
            x, y = _rand_gauss(rng), _rand_gauss(rng)
            u = [0] * dim
            w = [0] * dim
            u[a], u[b] = x, y
            w[a], w[b] = -y.conjugate(), x.conjugate()
            vecs[a], vecs[b] = u, w
    mats = [Ray(Vector(v)).projector() for v in vecs]
    rng.shuffle(mats)
    if dim > 2 and rng.random() < 0.3:
        mats = [mats[0] + mats[1]] + mats[2:]
    return Context(name, tuple(Projector(m, f"{name}.{i}") for i, m in enumerate(mats)))


def random_set(seed):
    rng = random.Random(seed)
    dim = rng.randint(2, 5)
    n = rng.randint(1, 3)
    return OperatorSet(tuple(random_context(rng, dim, f"C{c}") for c in range(n)), dim)


def brute_force_colorings(s: OperatorSet):
    """All admissible 0/1 maps on distinct matrices, by exhaustive 2^n search."""
    distinct: list[Matrix] = []
    for p in s.projectors:
        if all(p.matrix != m for m in distinct):
            distinct.append(p.matrix)
    n = len(distinct)
    idx = {p.label: next(i for i, m in enumerate(distinct) if m == p.matrix) for p in s.projectors}
    ortho = [
        (i, j)
        for i, j in itertools.combinations(range(n), 2)
        if matmul(distinct[i], distinct[j]).is_zero()
    ]
    sols = []
    for bits in itertools.product((0, 1), repeat=n):
        if any(bits[i] and bits[j] for i, j in ortho):
            continue
        if all(sum(bits[k] for k in {idx[p.label] for p in c}) == 1 for c in s.contexts):
            sols.append(bits)
    return n, sols
