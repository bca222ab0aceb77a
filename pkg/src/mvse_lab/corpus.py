"""Named instances and seeded random generators shared by the tests, the
self-test runner and the demo scripts."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .core import RationalMatrix, det, rank
from .zonotope import Zonotope, canonicalize

Y3 = RationalMatrix([[1, 0], [0, 1], [1, 1]])
Y4 = RationalMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])

SQUARE = Zonotope([(1, 0), (0, 1)])
HEXAGON = Zonotope([(1, 0), (0, 1), (1, 1)])
OCTAGON = Zonotope([(1, 0), (0, 1), (1, 1), (1, -1)])


def cube(d: int) -> Zonotope:
    return Zonotope([[int(i == j) for j in range(d)] for i in range(d)])


def random_rational(rng: random.Random, num: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_matrix(rng: random.Random, rows: int, cols: int, num: int = 5, den: int = 4) -> RationalMatrix:
    return RationalMatrix([[random_rational(rng, num, den) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_full_rank(rng: random.Random, rows: int, cols: int) -> RationalMatrix:
    while True:
        M = random_matrix(rng, rows, cols)
        if rank(M) == min(rows, cols):
            return M


def random_invertible(rng: random.Random, d: int, num: int = 3, den: int = 3) -> RationalMatrix:
    while True:
        C = random_matrix(rng, d, d, num, den)
        if det(C) != 0:
            return C


def random_signed_permutation(rng: random.Random, n: int) -> RationalMatrix:
    perm = list(range(n))
    rng.shuffle(perm)
    return RationalMatrix([[rng.choice((-1, 1)) if perm[i] == j else 0 for j in range(n)] for i in range(n)])


def givens(n: int, i: int, j: int, c=Fraction(3, 5), s=Fraction(4, 5)) -> RationalMatrix:
    rows = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    rows[i][i], rows[i][j], rows[j][i], rows[j][j] = c, s, -s, c
    return RationalMatrix(rows)


def random_orthogonal(rng: random.Random, n: int, rotations: int = 2) -> RationalMatrix:
    """Signed permutation times a few 3-4-5 rotations; exactly orthogonal."""
    Q = random_signed_permutation(rng, n)
    for _ in range(rotations):
        i, j = rng.sample(range(n), 2)
        Q = Q @ givens(n, i, j)
    return Q


def random_sign_matrix(rng: random.Random, rows: int, cols: int) -> RationalMatrix:
    return RationalMatrix([[rng.choice((-1, 0, 1)) for _ in range(cols)] for _ in range(rows)], cols=cols)


def interval_matrix(d: int) -> RationalMatrix:
    """All intervals of ``1..d`` as 0/1 columns (consecutive ones, hence TU)."""
    cols = [[int(a <= i <= b) for i in range(d)] for a in range(d) for b in range(a, d)]
    cols.sort(key=lambda c: (sum(c), [-x for x in c]))
    return RationalMatrix.from_columns(cols)


def random_td_zonotope(rng: random.Random, d: int, min_extra: int = 0) -> Zonotope:
    """Random linear image of positively weighted columns of a TU matrix."""
    T = interval_matrix(d)
    cols = T.columns()
    unit, other = cols[:d], cols[d:]
    extra = rng.sample(other, rng.randint(min(min_extra, len(other)), len(other)))
    C = random_invertible(rng, d)
    gens = []
    for tau in unit + extra:
        a = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        sign = rng.choice((-1, 1))
        g = [sign * a * sum(C[i, k] * tau[k] for k in range(d)) for i in range(d)]
        gens.append(g)
    rng.shuffle(gens)
    return Zonotope(gens, d)


def random_hexagon(rng: random.Random) -> Zonotope:
    return random_td_zonotope(rng, 2, min_extra=1)


def random_parallelogram(rng: random.Random) -> Zonotope:
    C = random_invertible(rng, 2)
    return Zonotope([C.col(0), C.col(1)])


def random_zonogon(rng: random.Random, classes: int) -> Zonotope:
    """Planar zonotope with exactly ``classes`` pairwise non-parallel generators."""
    while True:
        gens = [(random_rational(rng), random_rational(rng)) for _ in range(classes)]
        Z = canonicalize(gens)
        if Z.m == classes:
            return Zonotope(gens)


def simplex_points(n: int, d: int = 2, den: int = 12) -> list[tuple[Fraction, ...]]:
    """First ``n`` rational points ``k / den`` of the closed standard simplex."""
    pts = []
    for k in itertools.product(range(den + 1), repeat=d):
        if sum(k) <= den:
            pts.append(tuple(Fraction(x, den) for x in k))
    return pts[:n]
