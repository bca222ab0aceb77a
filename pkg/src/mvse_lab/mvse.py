"""Projections of ``l_inf^m`` onto a polyhedral subspace and the volume of
their images.

A ``d``-dimensional polyhedral space is given by an ``m x d`` matrix ``Y`` of
full column rank; its norm is the restriction of the max-norm.  A projection
onto it is encoded by a ``d x m`` matrix ``A`` with ``A @ Y == I``: in the
coordinates of the basis ``Y`` the image of the unit cube is the zonotope
spanned by the columns of ``A``.

With ``u`` the maximal minors of ``Y`` and ``w`` those of ``A.T`` the
Cauchy-Binet pairing gives ``sum(u * w) == det(A @ Y) == 1``, and

    vol(image) / vol(minimal sufficient enlargement) = max|u| * sum|w| >= 1.

Volumes are measured in ``Y``-basis coordinates; the ratio does not depend on
that choice.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import (
    PluckerVector,
    PreconditionError,
    RationalMatrix,
    ShapeError,
    as_matrix,
    cauchy_binet,
    det,
    independent_subset,
    inverse,
    left_nullspace,
    plucker,
    rank,
    subsets,
    to_fraction,
)
from .zonotope import (
    HexagonClassification,
    HexagonKind,
    Zonotope,
    canonicalize,
    classify_polygon,
    slab_polygon,
)


@dataclass(frozen=True)
class PolyhedralSpace:
    Y: RationalMatrix
    u: PluckerVector = field(repr=False)

    @property
    def m(self) -> int:
        return self.Y.rows

    @property
    def d(self) -> int:
        return self.Y.cols


def make_space(Y) -> PolyhedralSpace:
    Y = as_matrix(Y)
    if Y.rows < Y.cols:
        raise ShapeError(f"Y must be m x d with m >= d, got {Y.shape}")
    r = rank(Y)
    if r < Y.cols:
        raise PreconditionError(f"Y has rank {r} < {Y.cols}")
    return PolyhedralSpace(Y, plucker(Y))


@dataclass(frozen=True)
class ProjectionSpec:
    A: RationalMatrix
    w: PluckerVector = field(repr=False)

    def image(self) -> Zonotope:
        """Image of the unit cube in ``Y``-coordinates, canonicalized."""
        return canonicalize(self.A.columns())


class ProjectionError(PreconditionError):
    def __init__(self, i: int, j: int, value: Fraction):
        super().__init__(f"A @ Y is not the identity: entry ({i}, {j}) equals {value}")
        self.entry = (i, j)
        self.value = value


def make_projection(space: PolyhedralSpace, A) -> ProjectionSpec:
    A = as_matrix(A)
    if A.shape != (space.d, space.m):
        raise ShapeError(f"A must be {(space.d, space.m)}, got {A.shape}")
    P = A @ space.Y
    for i in range(space.d):
        for j in range(space.d):
            if P[i, j] != (i == j):
                raise ProjectionError(i, j, P[i, j])
    return ProjectionSpec(A, plucker(A.T))


def volume_ratio(space: PolyhedralSpace, proj: ProjectionSpec) -> Fraction:
    """``max|u| * sum|w|``: image volume over the minimal enlargement volume."""
    return space.u.max_abs() * proj.w.abs_sum()


def mvse_volume(space: PolyhedralSpace) -> Fraction:
    return Fraction(2 ** space.d) / space.u.max_abs()


def normalize_laa(space: PolyhedralSpace, pivot: Sequence[int] | None = None) -> PolyhedralSpace:
    """Change basis so the rows ``pivot`` of ``Y`` become the identity.

    By default ``pivot`` is the first subset whose minor has maximal absolute
    value; then every maximal minor of the new matrix is at most 1 in absolute
    value.
    """
    if pivot is None:
        top = space.u.max_abs()
        pivot = next(S for S, x in space.u.items() if abs(x) == top)
    Ys = space.Y.submatrix(pivot)
    if det(Ys) == 0:
        raise PreconditionError(f"rows {tuple(pivot)} of Y are singular")
    return make_space(space.Y @ inverse(Ys))


def coordinate_projection(space: PolyhedralSpace, S: Sequence[int]) -> ProjectionSpec:
    """Projection with kernel spanned by the coordinate vectors outside ``S``."""
    S = tuple(S)
    Ys = space.Y.submatrix(S)
    if det(Ys) == 0:
        raise PreconditionError(f"rows {S} of Y are singular")
    Yinv = inverse(Ys)
    cols = {s: k for k, s in enumerate(S)}
    A = RationalMatrix(
        [[Yinv[i, cols[j]] if j in cols else 0 for j in range(space.m)] for i in range(space.d)],
        cols=space.m,
    )
    return make_projection(space, A)


def enumerate_parallelepiped_mvse(space: PolyhedralSpace) -> list[tuple[int, ...]]:
    """All subsets whose coordinate projection attains the minimal volume."""
    top = space.u.max_abs()
    return [S for S, x in space.u.items() if abs(x) == top]


def _base_projection(space: PolyhedralSpace) -> ProjectionSpec:
    return coordinate_projection(space, enumerate_parallelepiped_mvse(space)[0])


def random_projection(space: PolyhedralSpace, seed: int, max_num: int = 6, max_den: int = 6) -> ProjectionSpec:
    """``A = A0 + C @ W`` with ``W`` spanning the left null space of ``Y``.

    ``C`` has entries ``p/q`` with ``|p| <= max_num`` and ``1 <= q <= max_den``
    drawn from ``random.Random(seed)``.
    """
    A0 = _base_projection(space).A
    if space.m == space.d:
        return make_projection(space, A0)
    W = left_nullspace(space.Y)
    rng = random.Random(seed)
    C = RationalMatrix(
        [
            [Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)) for _ in range(W.rows)]
            for _ in range(space.d)
        ]
    )
    return make_projection(space, A0 + C @ W)


def plucker_relation_check(
    M, gammas: Sequence[int], kappas: Sequence[int], allow_repeats: bool = False
) -> Fraction:
    """Evaluate ``t12 t34 - t14 t32 + t24 t31`` where ``t_ab`` is the
    determinant of the rows ``gammas + (kappa_a, kappa_b)`` of ``M``, in that
    order.  The value is zero for every matrix.
    """
    M = as_matrix(M)
    m, d = M.shape
    gammas, kappas = tuple(gammas), tuple(kappas)
    if len(gammas) != d - 2 or len(kappas) != 4:
        raise ShapeError(f"need {d - 2} gamma rows and 4 kappa rows")
    idx = gammas + kappas
    if any(not 0 <= i < m for i in idx):
        raise PreconditionError(f"row index out of range({m})")
    if not allow_repeats and len(set(idx)) != len(idx):
        raise PreconditionError(f"row indices {idx} collide")

    def t(a, b):
        return det(M.submatrix(gammas + (kappas[a - 1], kappas[b - 1])))

    return t(1, 2) * t(3, 4) - t(1, 4) * t(3, 2) + t(2, 4) * t(3, 1)


def minimize_ratio_search(
    space: PolyhedralSpace, restarts: int = 4, seed: int = 0, steps: int = 40
) -> ProjectionSpec:
    """Best projection found among all coordinate projections and a seeded
    descent over the affine family ``A0 + C @ W``.

    The descent perturbs one entry of ``C`` at a time by shrinking rational
    steps and keeps strict improvements.  Coordinate projections at maximal
    minors reach ratio 1, so the result never exceeds that floor.
    """
    best = None
    best_ratio = None
    for S in subsets(space.m, space.d):
        if space.u[S] == 0:
            continue
        p = coordinate_projection(space, S)
        r = volume_ratio(space, p)
        if best_ratio is None or r < best_ratio:
            best, best_ratio = p, r
    if space.m == space.d:
        return best
    A0 = _base_projection(space).A
    W = left_nullspace(space.Y)
    rng = random.Random(seed)
    for _ in range(restarts):
        C = [[Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(W.rows)] for _ in range(space.d)]

        def ratio_of(Cm):
            return volume_ratio(space, make_projection(space, A0 + RationalMatrix(Cm) @ W))

        cur = ratio_of(C)
        step = Fraction(1)
        for _ in range(steps):
            improved = False
            for i, j in itertools.product(range(space.d), range(W.rows)):
                for delta in (step, -step):
                    trial = [row[:] for row in C]
                    trial[i][j] += delta
                    r = ratio_of(trial)
                    if r < cur:
                        C, cur, improved = trial, r, True
            if not improved:
                step /= 2
        if cur < best_ratio:
            best = make_projection(space, A0 + RationalMatrix(C) @ W)
            best_ratio = cur
    return best


# -- circuits and the hexagonal subspace ---------------------------------------

def _class_representatives(A: RationalMatrix) -> list[int]:
    """Column indices of ``A`` keeping the first column of each parallel class."""
    reps: list[int] = []
    seen = []
    for j, c in enumerate(A.columns()):
        if all(x == 0 for x in c):
            continue
        if any(rank(RationalMatrix.from_columns([c, A.col(k)])) < 2 for k in seen):
            continue
        seen.append(j)
        reps.append(j)
    return reps


def find_circuit(proj: ProjectionSpec) -> tuple[int, ...] | None:
    """Smallest minimal dependent set of image generators (columns of ``A``).

    Parallel columns are treated as one generator (the first one represents
    the class), so circuits have at least three members.  Ties go to the
    lexicographically least index tuple.  ``None`` when the image is a
    parallelepiped.
    """
    A = proj.A
    reps = _class_representatives(A)
    d = A.rows
    if len(reps) <= d:
        return None
    for k in range(3, d + 2):
        for T in itertools.combinations(reps, k):
            M = RationalMatrix.from_columns([A.col(j) for j in T])
            if rank(M) == k - 1 and all(
                rank(RationalMatrix.from_columns([A.col(j) for j in T if j != drop])) == k - 1 for drop in T
            ):
                return T
    return None


@dataclass(frozen=True)
class HexagonReport:
    basis_pair: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]
    normalized_matrix: RationalMatrix
    row_order: tuple[int, ...]
    circuit: tuple[int, ...]
    b_c_rows: tuple[tuple[Fraction, Fraction], ...]
    checks: dict
    hexagon: HexagonClassification

    @property
    def passed(self) -> bool:
        return all(self.checks.values()) and self.hexagon.kind is HexagonKind.HEXAGON_AFFINELY_REGULAR


def hexagonal_subspace(space: PolyhedralSpace, witness: ProjectionSpec) -> HexagonReport:
    """Extract a two-dimensional subspace isometric to the plane with norm
    ``max(|a|, |b|, |a + b|)`` from a minimal-volume projection whose image is
    not a parallelepiped.

    Steps: take a circuit ``K`` of image generators; complete ``K`` minus its
    last member to a basis ``B`` of the generators; re-express ``Y`` so that
    its rows ``B`` form the identity (those rows carry a maximal minor because
    the ratio is 1); flip the signs of the first two columns so that the row of
    the remaining circuit member starts ``(1, 1)``.  The first two columns then
    span the required subspace.
    """
    if volume_ratio(space, witness) != 1:
        raise PreconditionError("witness projection does not have minimal volume (ratio != 1)")
    K = find_circuit(witness)
    if K is None:
        raise PreconditionError("witness image is a parallelepiped; no circuit of size >= 3")
    A = witness.A
    lead, r = K[:-1], K[-1]
    gens = A.columns()
    basis = independent_subset(gens, start=lead)
    if len(basis) != space.d:
        raise AssertionError("image generators do not span")
    B = tuple(basis)
    if abs(space.u[tuple(sorted(B))]) != space.u.max_abs():
        raise AssertionError("basis rows do not carry a maximal minor although the ratio is 1")
    X = space.Y @ inverse(space.Y.submatrix(B))
    flips = []
    for k in (0, 1):
        x = X[r, k]
        if abs(x) != 1:
            raise AssertionError(f"circuit row entry {x} is not +-1; contradicts minimality")
        flips.append(x)
    X = RationalMatrix(
        [[x * (flips[k] if k < 2 else 1) for k, x in enumerate(row)] for row in X.data], cols=space.d
    )
    rest = tuple(i for i in range(space.m) if i not in B and i != r)
    order = B + (r,) + rest
    normalized = X.submatrix(order)
    bc = tuple((X[i, 0], X[i, 1]) for i in rest)
    checks = {
        "abs_b_le_1": all(abs(b) <= 1 for b, _ in bc),
        "abs_c_le_1": all(abs(c) <= 1 for _, c in bc),
        "abs_b_minus_c_le_1": all(abs(b - c) <= 1 for b, c in bc),
    }
    ball = slab_polygon([X.row(i)[:2] for i in range(space.m)])
    return HexagonReport(
        basis_pair=(X.col(0), X.col(1)),
        normalized_matrix=normalized,
        row_order=order,
        circuit=K,
        b_c_rows=bc,
        checks=checks,
        hexagon=classify_polygon(ball),
    )


def simplex_projection(space: PolyhedralSpace, t: Sequence) -> ProjectionSpec:
    """``A(t) = [e_1 - t | ... | e_d - t | t]`` for ``Y = [I; 1 ... 1]``.

    This is the family of projections used for ``Y3`` and ``Y4``: ratio 1
    exactly when ``t`` lies in the standard simplex.
    """
    d = space.d
    if space.m != d + 1:
        raise ShapeError("simplex family needs m = d + 1")
    t = [to_fraction(x) for x in t]
    cols = [[int(i == j) - t[i] for i in range(d)] for j in range(d)] + [t]
    return make_projection(space, RationalMatrix.from_columns(cols))


def pairing(space: PolyhedralSpace, proj: ProjectionSpec) -> Fraction:
    """``sum_S u_S w_S``; equal to 1 for every valid projection."""
    return cauchy_binet(space.u, proj.w)


def find_hexagon_witness(space: PolyhedralSpace, max_group: int = 4) -> ProjectionSpec | None:
    """Look for a minimal-volume projection whose image is not a parallelepiped.

    Candidates are averages of coordinate projections at maximal minors: all
    of them first, then groups of size 2 up to ``max_group``.  The first
    average with ratio 1 and a circuit of size at least 3 is returned.
    Finding nothing does not prove that none exists.
    """
    tops = enumerate_parallelepiped_mvse(space)
    if len(tops) < 2:
        return None
    As = [coordinate_projection(space, S).A for S in tops]
    groups = [tuple(range(len(As)))] + [
        g for k in range(2, min(max_group, len(As)) + 1) for g in itertools.combinations(range(len(As)), k)
    ]
    for g in groups:
        total = As[g[0]]
        for i in g[1:]:
            total = total + As[i]
        proj = make_projection(space, total * Fraction(1, len(g)))
        if volume_ratio(space, proj) == 1 and find_circuit(proj) is not None:
            return proj
    return None
