"""Lattice tilings by zonotopes in dimensions 2 and 3.

Tiling is checked pointwise and exactly: a random rational point is reduced
into the fundamental cell of the lattice, and each lattice translate of the
zonotope that could contain it is tested against the facet inequalities in
integer arithmetic.  A point on some translate's boundary is discarded.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np

from .core import PreconditionError, RationalMatrix, as_matrix, det, inverse
from .tumat import Refusal, TUWitness, td_membership
from .zonotope import Zonotope, canonicalize, dot, hrep, support, volume


@dataclass(frozen=True)
class Lattice:
    """Lattice spanned by the columns of ``basis``."""

    basis: RationalMatrix
    determinant: Fraction = field(init=False)

    def __post_init__(self):
        B = as_matrix(self.basis)
        if not B.is_square():
            raise PreconditionError(f"lattice basis must be square, got {B.shape}")
        D = abs(det(B))
        if D == 0:
            raise PreconditionError("lattice basis is singular")
        object.__setattr__(self, "basis", B)
        object.__setattr__(self, "determinant", D)

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence]) -> "Lattice":
        return cls(RationalMatrix.from_columns(vectors))

    @property
    def d(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[tuple[Fraction, ...]]:
        return self.basis.columns()


@dataclass(frozen=True)
class TileVerdict:
    passed: bool
    samples_tested: int
    failure_point: tuple[Fraction, ...] | None = None
    failure_count: int | None = None
    discarded: int = 0
    trace_digest: str = ""


def _integer_span_basis(vectors: list[list[int]]) -> list[list[int]]:
    """Basis of the Z-span of integer vectors by Euclidean row reduction."""
    rows = [v[:] for v in vectors if any(v)]
    d = len(vectors[0]) if vectors else 0
    basis = []
    for c in range(d):
        while True:
            live = [r for r in rows if r[c] != 0]
            if len(live) <= 1:
                break
            piv = min(live, key=lambda r: abs(r[c]))
            for r in live:
                if r is not piv:
                    q = r[c] // piv[c]
                    for j in range(d):
                        r[j] -= q * piv[j]
            rows = [r for r in rows if any(r)]
        live = [r for r in rows if r[c] != 0]
        if live:
            basis.append(live[0])
            rows = [r for r in rows if r is not live[0]]
    return basis


def lll_reduce(vectors: Sequence[Sequence[Fraction]], delta=Fraction(3, 4)) -> list[tuple[Fraction, ...]]:
    """LLL-reduced basis of the lattice spanned by linearly independent ``vectors``."""
    b = [[Fraction(x) for x in v] for v in vectors]
    n = len(b)

    def gso():
        bstar, mu = [], [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            v = b[i][:]
            for j in range(i):
                mu[i][j] = dot(b[i], bstar[j]) / dot(bstar[j], bstar[j])
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
        return bstar, mu

    bstar, mu = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                bstar, mu = gso()
        if dot(bstar[k], bstar[k]) >= (delta - mu[k][k - 1] ** 2) * dot(bstar[k - 1], bstar[k - 1]):
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            bstar, mu = gso()
            k = max(k - 1, 1)
    return [tuple(v) for v in b]


def lattice_from_generators(vectors: Sequence[Sequence]) -> Lattice | None:
    """Reduced basis of the lattice generated by rational ``vectors``; ``None``
    if they do not span."""
    vs = [[Fraction(x) for x in v] for v in vectors]
    if not vs:
        return None
    s = _lcm_den([x for v in vs for x in v])
    basis = _integer_span_basis([[int(x * s) for x in v] for v in vs])
    if len(basis) < len(vs[0]):
        return None
    return Lattice.from_vectors(lll_reduce([[Fraction(x, s) for x in v] for v in basis]))


def det_volume_check(Z: Zonotope, lattice: Lattice) -> bool:
    """Necessary condition for a lattice tiling: ``d(lattice) == vol(Z)``."""
    return lattice.determinant == volume(Z)


def _lcm_den(values) -> int:
    return reduce(math.lcm, (Fraction(v).denominator for v in values), 1)


class _CoverCounter:
    """Integer-arithmetic cover counting for one (zonotope, lattice) pair."""

    def __init__(self, Z: Zonotope, lattice: Lattice, denominator: int):
        d = Z.d
        C = canonicalize(Z)
        L = lattice.basis
        # the integer scale is fixed by the original basis; reduction keeps denominators
        self.scale = _lcm_den([x for g in C.generators for x in g] + [x for r in L.data for x in r])
        self.Q = denominator
        s = self.scale
        facets = [f for f in hrep(C) if next(x for x in f.normal if x != 0) > 0]
        self.normals = np.array([f.normal for f in facets], dtype=object)
        self.offsets = np.array([int(f.offset * s) for f in facets], dtype=object)
        L = RationalMatrix.from_columns(lll_reduce(L.columns()))
        self.Linv = inverse(L)
        self.L = L
        # translates that can reach a point of the fundamental cell
        half = [support(C, [int(i == j) for j in range(d)]) for i in range(d)]
        reach = [sum(abs(self.Linv[i, j]) * half[j] for j in range(d)) for i in range(d)]
        ranges = [range(math.floor(-reach[i]), math.ceil(1 + reach[i]) + 1) for i in range(d)]
        self.ks = [k for k in itertools.product(*ranges)]
        lam = [[int(sum(L[i, j] * k[j] for j in range(d)) * s) for i in range(d)] for k in self.ks]
        lam = np.array(lam, dtype=object)
        # F x K table of <n, lambda>, pre-multiplied by the sample denominator
        self.NL = (self.normals.dot(lam.T)) * self.Q
        self.H = (self.offsets * self.Q)[:, None]

    def reduce(self, p: Sequence[Fraction]) -> tuple[Fraction, ...]:
        d = len(p)
        x = [sum(self.Linv[i, j] * p[j] for j in range(d)) for i in range(d)]
        k0 = [math.floor(v) for v in x]
        return tuple(p[i] - sum(self.L[i, j] * k0[j] for j in range(d)) for i in range(d))

    def count(self, p: Sequence[Fraction]) -> int | None:
        """Number of translates whose interior contains ``p``; ``None`` if ``p``
        lies on the boundary of some translate."""
        q = self.reduce(p)
        N = [int(v * self.scale * self.Q) for v in q]
        if any(Fraction(n, self.Q) != v * self.scale for n, v in zip(N, q)):
            raise ValueError("sample denominator does not divide the configured denominator")
        a = self.normals.dot(np.array(N, dtype=object))[:, None]
        excess = np.abs(a - self.NL) - self.H
        worst = excess.max(axis=0)
        if any(w == 0 for w in worst):
            return None
        return int(sum(1 for w in worst if w < 0))


def tile_verify(
    Z: Zonotope, lattice: Lattice, region_radius=4, n_samples: int = 1000, seed: int = 0,
    denominator: int = 10 ** 6,
) -> TileVerdict:
    """Sample rational points in ``[-R, R]^d`` and require each to lie in the
    interior of exactly one lattice translate of ``Z``.

    Points with coordinates ``k / denominator`` are drawn from
    ``random.Random(seed)``; boundary points are discarded and replaced.
    """
    if Z.d not in (2, 3):
        raise PreconditionError(f"tile_verify supports d in (2, 3), got {Z.d}")
    if lattice.d != Z.d:
        raise PreconditionError("lattice and zonotope dimensions differ")
    counter = _CoverCounter(Z, lattice, denominator)
    rng = random.Random(seed)
    R = int(Fraction(region_radius) * denominator)
    digest = hashlib.sha256()
    kept = discarded = 0
    max_draws = 20 * n_samples + 100
    for _ in range(max_draws):
        if kept >= n_samples:
            break
        p = tuple(Fraction(rng.randint(-R, R), denominator) for _ in range(Z.d))
        digest.update(",".join(map(str, p)).encode() + b";")
        c = counter.count(p)
        if c is None:
            discarded += 1
            continue
        kept += 1
        if c != 1:
            return TileVerdict(False, kept, p, c, discarded, digest.hexdigest())
    if kept < n_samples:
        raise RuntimeError(f"only {kept} of {n_samples} samples avoided translate boundaries")
    if not det_volume_check(Z, lattice):
        raise AssertionError("sampling accepted a lattice whose determinant differs from the volume")
    return TileVerdict(True, kept, None, None, discarded, digest.hexdigest())


# -- lattice search -----------------------------------------------------------

@dataclass(frozen=True)
class SearchBudget:
    """Fixed limits for :func:`lattice_search`; exhausting them is inconclusive."""

    coefficient_bounds: tuple[int, ...] = (2, 3)
    max_vectors: int = 120
    max_subsets: int = 60000
    max_tile_checks: int = 30
    samples: int = 200


def facet_vectors(Z: Zonotope) -> list[tuple[tuple[int, ...], tuple[Fraction, ...]]]:
    """For each facet normal ``n`` (up to sign), the vector
    ``2 * sum_i sign<n, z_i> z_i``, i.e. twice the centre of the facet.

    Returned as (coefficients on the canonical generators, vector).
    """
    C = canonicalize(Z)
    out = []
    seen = set()
    for f in hrep(C):
        if next(x for x in f.normal if x != 0) < 0:
            continue
        coeffs = []
        for g in C.generators:
            s = dot(f.normal, g)
            coeffs.append(2 if s > 0 else (-2 if s < 0 else 0))
        coeffs = tuple(coeffs)
        if coeffs in seen:
            continue
        seen.add(coeffs)
        out.append((coeffs, _combine(C, coeffs)))
    return out


def _combine(C: Zonotope, coeffs) -> tuple[Fraction, ...]:
    return tuple(sum((c * g[i] for c, g in zip(coeffs, C.generators)), Fraction(0)) for i in range(C.d))


def _small_combinations(C: Zonotope, bound: int, limit: int):
    """Coefficient vectors with entries in ``[-bound, bound]`` and positive
    leading entry, ordered by (max |c|, sum |c|, lexicographic)."""
    vecs = []
    for c in itertools.product(range(-bound, bound + 1), repeat=C.m):
        nz = [x for x in c if x != 0]
        if not nz or nz[0] < 0:
            continue
        vecs.append(c)
    vecs.sort(key=lambda c: (max(abs(x) for x in c), sum(abs(x) for x in c), c))
    out = []
    for c in vecs:
        v = _combine(C, c)
        if any(x != 0 for x in v):
            out.append((c, v))
        if len(out) >= limit:
            break
    return out


def lattice_search(Z: Zonotope, budget: SearchBudget = SearchBudget(), seed: int = 0) -> Lattice | None:
    """Look for a tiling lattice among small integer combinations of generators.

    Candidates are tried in a fixed order: first the lattice generated by
    the doubled facet centres, then ``d``-subsets of those centres, then
    combinations with coefficients bounded by each entry of
    ``budget.coefficient_bounds``.  A basis must match the volume exactly and
    then pass :func:`tile_verify` with ``budget.samples`` points.  ``None``
    means the budget ran out, not that no tiling exists.
    """
    if Z.d not in (2, 3):
        raise PreconditionError(f"lattice_search supports d in (2, 3), got {Z.d}")
    C = canonicalize(Z)
    vol = volume(C)
    tried: set[frozenset] = set()
    checks = 0
    spanned = lattice_from_generators([v for _, v in facet_vectors(C)])
    if spanned is not None and spanned.determinant == vol:
        checks += 1
        if tile_verify(C, spanned, _region_radius(spanned), budget.samples, seed).passed:
            return spanned
    stages = [facet_vectors(C)] + [_small_combinations(C, b, budget.max_vectors) for b in budget.coefficient_bounds]
    for cands in stages:
        n_subsets = 0
        for combo in itertools.combinations(range(len(cands)), C.d):
            n_subsets += 1
            if n_subsets > budget.max_subsets:
                break
            vectors = [cands[i][1] for i in combo]
            key = frozenset(vectors)
            if key in tried:
                continue
            tried.add(key)
            if abs(det(RationalMatrix.from_columns(vectors))) != vol:
                continue
            lattice = Lattice.from_vectors(lll_reduce(vectors))
            checks += 1
            radius = _region_radius(lattice)
            if tile_verify(C, lattice, radius, budget.samples, seed).passed:
                return lattice
            if checks >= budget.max_tile_checks:
                return None
    return None


def _region_radius(lattice: Lattice) -> Fraction:
    """A cube radius covering a few fundamental cells."""
    return max(sum(abs(x) for x in r) for r in lattice.basis.data)


@dataclass(frozen=True)
class TilingReport:
    member: bool
    membership: TUWitness | Refusal
    lattice: Lattice | None
    det_volume_ok: bool | None
    verdict: TileVerdict | None

    @property
    def tiles(self) -> bool:
        return self.verdict is not None and self.verdict.passed


def td_tiling_pipeline(
    Z: Zonotope, n_samples: int = 1000, seed: int = 0, budget: SearchBudget = SearchBudget(),
    search_non_members: bool = True,
) -> TilingReport:
    """Membership in T_d, then a lattice search and a full tiling verification."""
    if Z.d not in (2, 3):
        raise PreconditionError(f"tiling pipeline supports d in (2, 3), got {Z.d}")
    result = td_membership(Z)
    member = isinstance(result, TUWitness)
    lattice = None
    if member or search_non_members:
        lattice = lattice_search(Z, budget, seed)
    if lattice is None:
        return TilingReport(member, result, None, None, None)
    ok = det_volume_check(Z, lattice)
    verdict = tile_verify(Z, lattice, _region_radius(lattice), n_samples, seed)
    return TilingReport(member, result, lattice, ok, verdict)
