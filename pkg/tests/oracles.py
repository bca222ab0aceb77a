"""Independent reference computations used only by the tests.

Nothing here imports the library's algorithms; only plain tuples and
Fractions go in and out.
"""

import itertools
from fractions import Fraction

import numpy as np


def det_cofactor(M):
    """Determinant by cofactor expansion along the first row."""
    M = [list(r) for r in M]
    n = len(M)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(M[0][0])
    total = Fraction(0)
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in M[1:]]
        total += (-1) ** j * Fraction(M[0][j]) * det_cofactor(minor)
    return total


def permutation_sign(seq):
    """Parity via inversion counting."""
    inv = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def det_leibniz(M):
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = permutation_sign(perm)
        for i, j in enumerate(perm):
            term *= M[i][j]
            if term == 0:
                break
        total += term
    return total


def tu_oracle(M):
    """All square minors in {-1, 0, 1}, by Leibniz on every submatrix."""
    rows, cols = len(M), len(M[0])
    for k in range(1, min(rows, cols) + 1):
        for R in itertools.combinations(range(rows), k):
            for C in itertools.combinations(range(cols), k):
                if det_leibniz([[M[i][j] for j in C] for i in R]) not in (-1, 0, 1):
                    return False
    return True


def minors_by_cofactor(M, d):
    m = len(M)
    return [det_cofactor([M[i] for i in S]) for S in itertools.combinations(range(m), d)]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Andrew's monotone chain; counterclockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def zonotope_vertices_bruteforce(gens):
    """Hull of all sign combinations of the generators."""
    pts = []
    for signs in itertools.product((-1, 1), repeat=len(gens)):
        pts.append(tuple(sum((s * Fraction(g[i]) for s, g in zip(signs, gens)), Fraction(0)) for i in range(2)))
    return convex_hull(pts)


def polygon_area(vs):
    n = len(vs)
    return abs(sum(vs[i][0] * vs[(i + 1) % n][1] - vs[(i + 1) % n][0] * vs[i][1] for i in range(n))) / 2


def hull_location(vs, p):
    """'interior' / 'boundary' / 'outside' for a counterclockwise convex polygon."""
    crosses = [_cross(vs[i], vs[(i + 1) % len(vs)], p) for i in range(len(vs))]
    if any(c < 0 for c in crosses):
        return "outside"
    if any(c == 0 for c in crosses):
        return "boundary"
    return "interior"


def support_by_vertices(vertices, x):
    return max(sum(Fraction(a) * Fraction(b) for a, b in zip(v, x)) for v in vertices)


def dense_sweep_bm(gens1, gens2, n):
    """Float sup/inf of h1/h2 over ``n`` equally spaced planar directions."""
    t = np.pi * np.arange(n) / n
    U = np.stack([np.cos(t), np.sin(t)], axis=1)
    h1 = np.abs(U @ np.array(gens1, dtype=float).T).sum(axis=1)
    h2 = np.abs(U @ np.array(gens2, dtype=float).T).sum(axis=1)
    r = h1 / h2
    return float(r.max() / r.min())


def cover_count_bruteforce(vertices, basis, p, reach):
    """Translates ``Z + k1 b1 + k2 b2`` (|k| <= reach) containing ``p``.

    Returns ``None`` when ``p`` lies on some translate's boundary.
    """
    count = 0
    for k1 in range(-reach, reach + 1):
        for k2 in range(-reach, reach + 1):
            shift = (k1 * basis[0][0] + k2 * basis[1][0], k1 * basis[0][1] + k2 * basis[1][1])
            loc = hull_location(vertices, (p[0] - shift[0], p[1] - shift[1]))
            if loc == "boundary":
                return None
            count += loc == "interior"
    return count
