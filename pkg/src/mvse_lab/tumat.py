"""Totally unimodular matrices and membership of zonotopes in the class T_d.

A zonotope is in T_d when, after an invertible linear map, its generators
are positive multiples of the columns of a totally unimodular (TU) matrix.
Recognition is brute force over square minors, which is fine for the
desk-scale sizes used here (``min(rows, cols) <= 6``).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import PreconditionError, RationalMatrix, as_matrix, det, independent_subset, inverse, rank
from .zonotope import Zonotope, canonicalize

MAX_TU_DIM = 6


class SizeError(PreconditionError):
    """Input exceeds the brute-force size contract."""


def _int_matrix(M) -> list[list[int]]:
    M = as_matrix(M)
    out = []
    for r in M.data:
        row = []
        for x in r:
            if x not in (-1, 0, 1):
                raise PreconditionError(f"entry {x} is not in {{-1, 0, 1}}")
            row.append(int(x))
        out.append(row)
    return out


def _int_det(a: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of a small integer matrix."""
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class Violation:
    """Square submatrix whose determinant lies outside ``{-1, 0, 1}``."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    det: int


def tu_violation(M) -> Violation | None:
    """Smallest square submatrix with ``|det| >= 2``.

    Orders are searched ascending; within an order the lexicographically least
    ``(rows, cols)`` pair wins.  Returns ``None`` for TU input.
    """
    a = _int_matrix(M)
    nr = len(a)
    nc = len(a[0]) if a else 0
    if min(nr, nc) > MAX_TU_DIM:
        raise SizeError(f"brute-force TU check limited to min dimension {MAX_TU_DIM}, got {min(nr, nc)}")
    for k in range(2, min(nr, nc) + 1):
        for rows in itertools.combinations(range(nr), k):
            sub = [a[i] for i in rows]
            for cols in itertools.combinations(range(nc), k):
                D = _int_det([[r[j] for j in cols] for r in sub])
                if abs(D) >= 2:
                    return Violation(rows, cols, D)
    return None


def is_tu(M) -> bool:
    """True iff every square minor of ``M`` is -1, 0 or 1."""
    return tu_violation(M) is None


# -- Gomory certificate -------------------------------------------------------

@dataclass(frozen=True)
class GomoryCertificate:
    """``d + 2`` columns of a non-TU matrix: joining ``x_cols`` with any two of
    ``p_cols`` gives a nonsingular ``d x d`` submatrix."""

    x_cols: tuple[int, ...]
    p_cols: tuple[int, int, int, int]

    @property
    def column_indices(self) -> tuple[int, ...]:
        return self.x_cols + self.p_cols

    def minors(self, D) -> list[Fraction]:
        D = as_matrix(D)
        out = []
        for pair in itertools.combinations(self.p_cols, 2):
            cols = sorted(self.x_cols + pair)
            out.append(det(D.submatrix(range(D.rows), cols)))
        return out

    def verify(self, D) -> bool:
        D = as_matrix(D)
        if len(set(self.column_indices)) != D.rows + 2:
            return False
        return all(x != 0 for x in self.minors(D))


def _unit_index(col: Sequence[int]) -> int | None:
    nz = [i for i, x in enumerate(col) if x != 0]
    if len(nz) == 1 and col[nz[0]] == 1:
        return nz[0]
    return None


def gomory_certificate(D) -> GomoryCertificate:
    """Find ``d + 2`` columns certifying that ``D`` is not totally unimodular.

    ``D`` is ``d x J`` with entries in ``{-1, 0, 1}`` and contains all unit
    columns.  Starting from a basis of columns whose determinant has absolute
    value at least 2, pivots that keep the entries in ``{-1, 0, 1}`` turn basis
    columns into unit vectors one at a time.  The basis determinant is invariant
    under these pivots, so eventually a pivot is blocked by a 2x2 submatrix of
    determinant +-2; its two columns and the two unit columns on its rows,
    together with the remaining unit columns, form the certificate.
    """
    a = _int_matrix(D)
    d = len(a)
    J = len(a[0]) if a else 0
    cols = [[a[i][j] for i in range(d)] for j in range(J)]
    if any(not any(_unit_index(c) == i for c in cols) for i in range(d)):
        raise PreconditionError("D must contain a d x d identity submatrix")
    viol = tu_violation(D)
    if viol is None:
        raise PreconditionError("D is totally unimodular; no certificate exists")

    # initial basis: violating block plus unit columns on the other rows
    basis = list(viol.cols)
    for i in range(d):
        if i not in viol.rows:
            basis.append(next(j for j, c in enumerate(cols) if _unit_index(c) == i))

    # working copy as a list of columns; row ops act on every column
    W = [c[:] for c in cols]

    def unit_col(i):
        return next(j for j, c in enumerate(W) if _unit_index(c) == i)

    for _ in range(d + 1):
        basis_units = {_unit_index(W[j]) for j in basis} - {None}
        r = next(j for j in basis if _unit_index(W[j]) is None)
        support = [i for i, x in enumerate(W[r]) if x != 0]
        i1 = next(i for i in support if i not in basis_units)
        others = [i for i in support if i != i1]
        # row i_s <- row i_s - (W[r][i_s] / W[r][i1]) * row i1, coefficient +-1
        factors = {s: W[r][s] * W[r][i1] for s in others}
        for t, c in enumerate(W):
            for s in others:
                if abs(c[s] - factors[s] * c[i1]) > 1:
                    # blocked pivot: |det [[c_r(i1), c_t(i1)], [c_r(s), c_t(s)]]| == 2
                    p_cols = (r, t, unit_col(i1), unit_col(s))
                    x_cols = tuple(unit_col(i) for i in range(d) if i not in (i1, s))
                    cert = GomoryCertificate(x_cols, p_cols)
                    if not cert.verify(D):
                        raise AssertionError("Gomory certificate failed its minor check")
                    return cert
        for c in W:
            for s in others:
                c[s] -= factors[s] * c[i1]
        if W[r][i1] == -1:
            W[r] = [-x for x in W[r]]
    raise AssertionError("pivoting terminated without a certificate; input contradicts Gomory's lemma")


# -- forest scaling -----------------------------------------------------------

@dataclass(frozen=True)
class ScalingRecord:
    row_scales: tuple[Fraction, ...]
    col_scales: tuple[Fraction, ...]
    forest_edges: tuple[tuple[int, int], ...]


def forest_scaling(G) -> tuple[RationalMatrix, ScalingRecord]:
    """Scale rows and columns by positive numbers so that every edge of a
    spanning forest of the support graph carries an entry of absolute value 1.

    The support graph is bipartite on rows and columns, with an edge wherever
    ``G`` is nonzero.  The forest is grown breadth first from the lowest
    unvisited row, scanning neighbours in ascending order.
    """
    G = as_matrix(G)
    d, J = G.shape
    if rank(G) < d:
        raise PreconditionError(f"forest_scaling needs rank {d}, got rank {rank(G)}")
    row_s: list[Fraction | None] = [None] * d
    col_s: list[Fraction | None] = [None] * J
    edges = []
    for root in range(d):
        if row_s[root] is not None:
            continue
        row_s[root] = Fraction(1)
        queue = deque([("r", root)])
        while queue:
            kind, k = queue.popleft()
            if kind == "r":
                for c in range(J):
                    if G[k, c] != 0 and col_s[c] is None:
                        col_s[c] = 1 / (abs(G[k, c]) * row_s[k])
                        edges.append((k, c))
                        queue.append(("c", c))
            else:
                for r in range(d):
                    if G[r, k] != 0 and row_s[r] is None:
                        row_s[r] = 1 / (abs(G[r, k]) * col_s[k])
                        edges.append((r, k))
                        queue.append(("r", r))
    col_s = [Fraction(1) if s is None else s for s in col_s]
    scaled = RationalMatrix(
        [[row_s[i] * G[i, j] * col_s[j] for j in range(J)] for i in range(d)], cols=J
    )
    return scaled, ScalingRecord(tuple(row_s), tuple(col_s), tuple(edges))


# -- T_d membership -----------------------------------------------------------

@dataclass(frozen=True)
class TUWitness:
    """``basis_change @ generator_i == generator_scales[i] * tu_matrix[:, i]``."""

    basis_change: RationalMatrix
    generator_scales: tuple[Fraction, ...]
    tu_matrix: RationalMatrix
    generators: tuple[tuple[Fraction, ...], ...]

    def verify(self) -> bool:
        if not is_tu(self.tu_matrix):
            return False
        for a, g, tau in zip(self.generator_scales, self.generators, self.tu_matrix.columns()):
            if a <= 0:
                return False
            img = (self.basis_change @ RationalMatrix.from_columns([g])).col(0)
            if img != tuple(a * t for t in tau) and img != tuple(-a * t for t in tau):
                return False
        return True


@dataclass(frozen=True)
class Refusal:
    """Sound negative answer from :func:`td_membership`."""

    reason: str
    entry: tuple[int, int] | None = None
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return False


def td_membership(Z: Zonotope) -> TUWitness | Refusal:
    """Decide whether ``Z`` is a linear image of a zonotope spanned by positive
    multiples of the columns of a TU matrix.

    Pipeline: canonicalize, express all generators in the basis of the first
    ``d`` independent ones, forest-scale, then require entries in
    ``{-1, 0, 1}`` and total unimodularity.  Returns a :class:`TUWitness` or a
    falsy :class:`Refusal` naming the obstruction.
    """
    C = canonicalize(Z)
    d = Z.d
    if C.rank() < d:
        raise PreconditionError(f"zonotope is not full-dimensional (rank {C.rank()} < {d})")
    if d > MAX_TU_DIM:
        raise SizeError(f"membership limited to d <= {MAX_TU_DIM}")
    basis = independent_subset(C.generators)
    B = RationalMatrix.from_columns([C.generators[i] for i in basis])
    Binv = inverse(B)
    G = Binv @ C.matrix()
    Ghat, rec = forest_scaling(G)
    for i in range(d):
        for j in range(C.m):
            if Ghat[i, j] not in (-1, 0, 1):
                return Refusal(f"scaled entry ({i}, {j}) equals {Ghat[i, j]}", entry=(i, j))
    viol = tu_violation(Ghat)
    if viol is not None:
        return Refusal(
            f"submatrix rows {viol.rows} cols {viol.cols} has determinant {viol.det}", violation=viol
        )
    basis_change = RationalMatrix([[rec.row_scales[i] * x for x in Binv.row(i)] for i in range(d)])
    scales = tuple(1 / s for s in rec.col_scales)
    return TUWitness(basis_change, scales, Ghat, C.generators)
