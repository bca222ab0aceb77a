"""Zonotopes ``Z = sum_i [-z_i, z_i]`` with exact rational generators."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from .core import PreconditionError, RationalMatrix, det, rank, to_fraction

Vector = tuple[Fraction, ...]


class DegenerateError(PreconditionError):
    """The generators do not span the ambient space."""

    def __init__(self, rank: int, d: int):
        super().__init__(f"zonotope is degenerate: generators have rank {rank} < {d}")
        self.rank = rank
        self.d = d


def _vec(v) -> Vector:
    return tuple(to_fraction(x) for x in v)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class Zonotope:
    """Minkowski sum of the segments ``[-z, z]`` for ``z`` in ``generators``.

    The generator list is kept as given; call :func:`canonicalize` for the
    merged form.
    """

    d: int
    generators: tuple[Vector, ...]

    def __init__(self, generators: Sequence[Sequence], d: int | None = None):
        gens = tuple(_vec(g) for g in generators)
        if d is None:
            if not gens:
                raise ValueError("cannot infer dimension of an empty generator list")
            d = len(gens[0])
        if any(len(g) != d for g in gens):
            raise ValueError(f"all generators must have length {d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "generators", gens)

    @property
    def m(self) -> int:
        return len(self.generators)

    def matrix(self) -> RationalMatrix:
        """Generators as the columns of a ``d x m`` matrix."""
        return RationalMatrix.from_columns(self.generators)

    def rank(self) -> int:
        return rank(self.matrix()) if self.generators else 0

    def is_full_dimensional(self) -> bool:
        return self.rank() == self.d

    def scale(self, t) -> "Zonotope":
        t = to_fraction(t)
        return Zonotope([[t * x for x in g] for g in self.generators], self.d)

    def linear_map(self, C) -> "Zonotope":
        C = C if isinstance(C, RationalMatrix) else RationalMatrix(C)
        return Zonotope([tuple(dot(r, g) for r in C.data) for g in self.generators], C.rows)

    def __add__(self, other: "Zonotope") -> "Zonotope":
        if self.d != other.d:
            raise ValueError("dimension mismatch")
        return Zonotope(self.generators + other.generators, self.d)


def _direction_key(v: Vector) -> Vector:
    """Representative of the line through ``v``: first nonzero coordinate is 1."""
    lead = next(x for x in v if x != 0)
    return tuple(x / lead for x in v)


def canonicalize(generators) -> Zonotope:
    """Merge parallel generators and drop zero ones.

    Each direction class is represented by the member orientation whose
    leading nonzero coordinate is positive; its length is the sum of the
    lengths of the merged generators.  Classes keep first-appearance order.
    """
    if isinstance(generators, Zonotope):
        d, gens = generators.d, generators.generators
    else:
        gens = tuple(_vec(g) for g in generators)
        d = len(gens[0]) if gens else 0
    merged: dict[Vector, Vector] = {}
    for g in gens:
        if all(x == 0 for x in g):
            continue
        key = _direction_key(g)
        lead = next(x for x in g if x != 0)
        oriented = g if lead > 0 else tuple(-x for x in g)
        if key in merged:
            merged[key] = tuple(a + b for a, b in zip(merged[key], oriented))
        else:
            merged[key] = oriented
    return Zonotope(list(merged.values()), d)


def support(Z: Zonotope, x: Sequence) -> Fraction:
    """``h_Z(x) = sum_i |<x, z_i>|``."""
    x = _vec(x)
    return sum((abs(dot(x, g)) for g in Z.generators), Fraction(0))


def volume(Z: Zonotope) -> Fraction:
    """``2^d`` times the sum of ``|det|`` over all ``d``-subsets of generators."""
    r = Z.rank()
    if r < Z.d:
        raise DegenerateError(r, Z.d)
    total = Fraction(0)
    for S in itertools.combinations(Z.generators, Z.d):
        total += abs(det(RationalMatrix.from_columns(S)))
    return 2 ** Z.d * total


# -- planar structure ---------------------------------------------------------

def _upper(v: Vector) -> Vector:
    """Orient a planar vector into the half-plane of angles ``[0, pi)``."""
    x, y = v
    return v if (y > 0 or (y == 0 and x > 0)) else (-x, -y)


def _cross(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _angle_sort_upper(vs: list[Vector]) -> list[Vector]:
    # all vectors lie in the half-plane [0, pi) so cross-product comparison is a total order
    import functools

    def cmp(a, b):
        c = _cross(a, b)
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(vs, key=functools.cmp_to_key(cmp))


def vertices2d(Z: Zonotope) -> list[Vector]:
    """Counterclockwise vertex list of a planar zonotope.

    Generators are merged, oriented into the upper half-plane and sorted by
    angle; the walk starts at their sum and subtracts then adds twice each
    generator in turn.
    """
    if Z.d != 2:
        raise PreconditionError(f"vertices2d needs d = 2, got d = {Z.d}")
    C = canonicalize(Z)
    r = C.rank()
    if r < 2:
        raise DegenerateError(r, 2)
    gens = _angle_sort_upper([_upper(g) for g in C.generators])
    v = (sum(g[0] for g in gens), sum(g[1] for g in gens))
    out = [v]
    for sign in (-2, 2):
        for g in gens:
            v = (v[0] + sign * g[0], v[1] + sign * g[1])
            out.append(v)
    out.pop()
    return out


def shoelace_area(vertices: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(vertices)
    twice = sum((_cross(vertices[i], vertices[(i + 1) % n]) for i in range(n)), Fraction(0))
    return abs(twice) / 2


# -- facets and membership ----------------------------------------------------

@dataclass(frozen=True)
class Facet:
    """Half-space ``<normal, x> <= offset``."""

    normal: tuple[int, ...]
    offset: Fraction


def primitive_integer(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Integer vector with gcd 1 on the same ray as ``v``."""
    v = [to_fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        raise ValueError("zero vector has no direction")
    return tuple(x // g for x in ints)


def generalized_cross(vectors: Sequence[Sequence[Fraction]]) -> Vector:
    """Vector orthogonal to ``d - 1`` vectors in ``R^d`` (cofactor expansion)."""
    d = len(vectors) + 1
    rows = [_vec(v) for v in vectors]
    out = []
    for i in range(d):
        minor = RationalMatrix([[r[j] for j in range(d) if j != i] for r in rows], cols=d - 1)
        out.append((-1) ** i * det(minor) if d > 1 else Fraction(1))
    return tuple(out)


def hrep(Z: Zonotope) -> list[Facet]:
    """Facets of a full-dimensional zonotope in dimension 2 or 3.

    Normals are primitive integer vectors; each normal appears with both signs.
    """
    if Z.d not in (2, 3):
        raise PreconditionError(f"hrep is limited to d in (2, 3), got d = {Z.d}")
    C = canonicalize(Z)
    r = C.rank()
    if r < Z.d:
        raise DegenerateError(r, Z.d)
    normals: dict[tuple[int, ...], None] = {}
    for sub in itertools.combinations(C.generators, Z.d - 1):
        n = generalized_cross(sub)
        if all(x == 0 for x in n):
            continue
        n = primitive_integer(n)
        lead = next(x for x in n if x != 0)
        if lead < 0:
            n = tuple(-x for x in n)
        normals.setdefault(n)
    facets = []
    for n in normals:
        h = support(C, n)
        facets.append(Facet(n, h))
        facets.append(Facet(tuple(-x for x in n), h))
    return facets


class Location(str, enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def contains(Z: Zonotope, p: Sequence, facets: Sequence[Facet] | None = None) -> Location:
    """Exact location of ``p`` relative to ``Z``."""
    if facets is None:
        facets = hrep(Z)
    p = _vec(p)
    worst = max(dot(f.normal, p) - f.offset for f in facets)
    if worst < 0:
        return Location.INTERIOR
    if worst == 0:
        return Location.BOUNDARY
    return Location.OUTSIDE


def is_parallelepiped(Z: Zonotope) -> bool:
    r = Z.rank()
    if r < Z.d:
        raise DegenerateError(r, Z.d)
    return canonicalize(Z).m == Z.d


# -- hexagons -----------------------------------------------------------------

class HexagonKind(str, enum.Enum):
    PARALLELOGRAM = "parallelogram"
    HEXAGON_AFFINELY_REGULAR = "hexagon_affinely_regular"
    HEXAGON_OTHER = "hexagon_other"
    NOT_HEXAGON = "not_hexagon"


@dataclass(frozen=True)
class HexagonClassification:
    kind: HexagonKind
    ordered_vertices: tuple[Vector, ...]


def classify_polygon(vertices: Sequence[Sequence]) -> HexagonClassification:
    """Classify a centrally symmetric convex polygon given by its cyclic vertices.

    A symmetric hexagon is a linear image of the regular one exactly when
    every consecutive triple ``(a, b, c)`` satisfies ``b = a + c``.
    """
    vs = tuple(_vec(v) for v in vertices)
    n = len(vs)
    if n == 4:
        kind = HexagonKind.PARALLELOGRAM
    elif n == 6:
        regular = all(
            tuple(a + c for a, c in zip(vs[i - 1], vs[(i + 1) % n])) == vs[i] for i in range(n)
        )
        kind = HexagonKind.HEXAGON_AFFINELY_REGULAR if regular else HexagonKind.HEXAGON_OTHER
    else:
        kind = HexagonKind.NOT_HEXAGON
    return HexagonClassification(kind, vs)


def classify_hexagon(Z: Zonotope) -> HexagonClassification:
    return classify_polygon(vertices2d(Z))


def slab_polygon(rows: Sequence[Sequence]) -> list[Vector]:
    """Counterclockwise vertices of ``{x in R^2 : |<r, x>| <= 1 for all rows r}``.

    The rows must span the plane so that the region is bounded.
    """
    rs = [_vec(r) for r in rows if any(to_fraction(x) != 0 for x in r)]
    if rank(RationalMatrix(rs, cols=2)) < 2:
        raise PreconditionError("slab rows do not span the plane; region is unbounded")
    lines = []
    for r in rs:
        lines.append((r, Fraction(1)))
        lines.append((r, Fraction(-1)))
    pts: set[Vector] = set()
    for (a, s), (b, t) in itertools.combinations(lines, 2):
        D = _cross(a, b)
        if D == 0:
            continue
        x = ((s * b[1] - t * a[1]) / D, (a[0] * t - b[0] * s) / D)
        if all(abs(dot(r, x)) <= 1 for r in rs):
            pts.add(x)
    # sort counterclockwise around the origin (an interior point)
    upper = [p for p in pts if p[1] > 0 or (p[1] == 0 and p[0] > 0)]
    lower = [p for p in pts if p not in upper]
    ordered = _angle_sort_upper(upper) + [tuple(-x for x in p) for p in _angle_sort_upper([tuple(-x for x in q) for q in lower])]
    return _drop_collinear(ordered)


def _drop_collinear(vs: list[Vector]) -> list[Vector]:
    n = len(vs)
    out = []
    for i in range(n):
        a, b, c = vs[i - 1], vs[i], vs[(i + 1) % n]
        if _cross((b[0] - a[0], b[1] - a[1]), (c[0] - b[0], c[1] - b[1])) != 0:
            out.append(b)
    return out
