"""Upper bounds for the Banach-Mazur distance between two zonotopes at a fixed
position, from extremes of the ratio of their support functions:

    d(Z1, Z2) <= sup_u h1(u)/h2(u) * sup_u h2(u)/h1(u).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .core import PreconditionError
from .zonotope import Zonotope, canonicalize, hrep, support


@dataclass(frozen=True)
class BMBound:
    upper_bound: Fraction
    max_ratio: Fraction
    min_ratio: Fraction
    max_ratio_direction: tuple[Fraction, ...]
    min_ratio_direction: tuple[Fraction, ...]
    exact: bool


def _breakpoints_2d(*zonotopes: Zonotope) -> list[tuple[Fraction, ...]]:
    dirs = []
    seen = set()
    for Z in zonotopes:
        for g in canonicalize(Z).generators:
            n = (-g[1], g[0])
            if n not in seen:
                seen.add(n)
                dirs.append(n)
    return dirs


def _sample_directions(d: int, n: int, seed: int) -> list[tuple[Fraction, ...]]:
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        v = tuple(Fraction(rng.randint(-1000, 1000), 1000) for _ in range(d))
        if any(x != 0 for x in v):
            out.append(v)
    return out


def bm_upper_bound(Z1: Zonotope, Z2: Zonotope, n_samples: int = 2000, seed: int = 0) -> BMBound:
    """Product of the largest and the inverse of the smallest ratio ``h1/h2``.

    In the plane both support functions are linear between consecutive
    directions orthogonal to generators, so the ratio is monotone there and
    its extremes sit at those breakpoints: the bound is exact.  In dimension
    3 the ratio is evaluated on facet normals of both bodies plus seeded
    random directions, giving a heuristic (lower) estimate of the product.
    """
    if Z1.d != Z2.d:
        raise PreconditionError(f"dimension mismatch: {Z1.d} vs {Z2.d}")
    for Z in (Z1, Z2):
        if not Z.is_full_dimensional():
            raise PreconditionError("both zonotopes must be full-dimensional")
    d = Z1.d
    if d == 2:
        dirs = _breakpoints_2d(Z1, Z2)
        exact = True
    else:
        dirs = []
        if d == 3:
            dirs = [f.normal for f in hrep(Z1)] + [f.normal for f in hrep(Z2)]
        dirs += _sample_directions(d, n_samples, seed)
        exact = False
    best_hi = best_lo = None
    for u in dirs:
        r = support(Z1, u) / support(Z2, u)
        if best_hi is None or r > best_hi[0]:
            best_hi = (r, tuple(Fraction(x) for x in u))
        if best_lo is None or r < best_lo[0]:
            best_lo = (r, tuple(Fraction(x) for x in u))
    return BMBound(
        upper_bound=best_hi[0] / best_lo[0],
        max_ratio=best_hi[0],
        min_ratio=best_lo[0],
        max_ratio_direction=best_hi[1],
        min_ratio_direction=best_lo[1],
        exact=exact,
    )
