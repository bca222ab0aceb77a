"""Exact rational linear algebra.

Every quantity is a :class:`fractions.Fraction`; nothing in this module
touches floating point.  Row subsets are 0-based, strictly increasing
tuples, and whenever all ``d``-subsets of ``range(m)`` are enumerated the
order is the lexicographic order of :func:`itertools.combinations`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


class ShapeError(ValueError):
    """Raised when matrix dimensions are incompatible with an operation."""


class PreconditionError(ValueError):
    """Raised when an input violates a documented precondition."""


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/5"`` to a Fraction.

    Floats are refused so that inexact values cannot sneak in.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError(f"floating point value {x!r} is not allowed; pass a string or Fraction")
    # numpy integers and the like
    try:
        return Fraction(int(x)) if int(x) == x else Fraction(x)
    except (TypeError, ValueError):
        raise TypeError(f"cannot interpret {x!r} as a rational number") from None


def fmt(x: Fraction) -> str:
    """Serialize a rational as ``"p/q"`` or ``"p"``."""
    return str(x)


class RationalMatrix:
    """Immutable dense matrix over the rationals.

    >>> RationalMatrix([[1, 2], [3, 4]]).T.data
    ((Fraction(1, 1), Fraction(3, 1)), (Fraction(2, 1), Fraction(4, 1)))
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(to_fraction(x) for x in row) for row in entries)
        if data:
            ncols = len(data[0])
            if any(len(r) != ncols for r in data):
                raise ShapeError("ragged rows")
        else:
            ncols = cols or 0
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    # -- construction -----------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "RationalMatrix":
        columns = [list(c) for c in columns]
        if not columns:
            raise ShapeError("no columns")
        n = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(n)])

    # -- access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.data[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.data]

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.data), cols=self.rows) if self.rows else RationalMatrix.zeros(self.cols, 0)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int] | None = None) -> "RationalMatrix":
        if cols is None:
            cols = range(self.cols)
        return RationalMatrix([[self.data[i][j] for j in cols] for i in rows], cols=len(cols))

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic -------------------------------------------------------
    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        return RationalMatrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ocols] for r in self.data],
            cols=other.cols,
        )

    def __mul__(self, scalar) -> "RationalMatrix":
        s = to_fraction(scalar)
        return RationalMatrix([[s * x for x in r] for r in self.data], cols=self.cols)

    __rmul__ = __mul__

    def __neg__(self) -> "RationalMatrix":
        return self * -1

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return RationalMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], cols=self.cols
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise ShapeError("row counts differ")
        return RationalMatrix([a + b for a, b in zip(self.data, other.data)], cols=self.cols + other.cols)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(fmt(x) for x in r) + "]" for r in self.data)
        return f"RationalMatrix([{body}])"


def as_matrix(M) -> RationalMatrix:
    return M if isinstance(M, RationalMatrix) else RationalMatrix(M)


# -- elimination --------------------------------------------------------------

def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int], int]:
    """Reduced row echelon form in place; returns (rows, pivot columns, swap parity)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    swaps = 0
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            swaps += 1
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots, swaps


def det(M) -> Fraction:
    """Exact determinant by Gaussian elimination."""
    M = as_matrix(M)
    if not M.is_square():
        raise ShapeError(f"determinant of non-square {M.shape} matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    a = [list(r) for r in M.data]
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = -result
        piv = a[c][c]
        result *= piv
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / piv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def rank(M) -> int:
    M = as_matrix(M)
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(_echelon([list(r) for r in M.data])[1])


def inverse(M) -> RationalMatrix:
    M = as_matrix(M)
    if not M.is_square():
        raise ShapeError("inverse of non-square matrix")
    n = M.rows
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M.data)]
    rows, pivots, _ = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise PreconditionError("matrix is singular")
    return RationalMatrix([r[n:] for r in rows])


def left_nullspace(M) -> RationalMatrix:
    """Rows spanning ``{w : w M = 0}``, one row per dimension of the space."""
    M = as_matrix(M)
    return nullspace(M.T)


def nullspace(M) -> RationalMatrix:
    """Rows spanning ``{x : M x = 0}`` (basis from the reduced echelon form)."""
    M = as_matrix(M)
    n = M.cols
    if M.rows == 0:
        return RationalMatrix.identity(n)
    rows, pivots, _ = _echelon([list(r) for r in M.data])
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return RationalMatrix(basis, cols=n)


def independent_subset(vectors: Sequence[Sequence[Fraction]], start: Sequence[int] = ()) -> list[int]:
    """Greedy maximal independent subset of ``vectors``, scanning in index order.

    Indices in ``start`` are taken first (they must be independent).
    """
    chosen: list[int] = []
    basis: list[list[Fraction]] = []

    def try_add(i):
        v = [to_fraction(x) for x in vectors[i]]
        for b in basis:
            p = next(k for k, x in enumerate(b) if x != 0)
            if v[p] != 0:
                f = v[p] / b[p]
                v = [x - f * y for x, y in zip(v, b)]
        if any(x != 0 for x in v):
            basis.append(v)
            chosen.append(i)
            return True
        return False

    for i in start:
        if not try_add(i):
            raise PreconditionError(f"starting vectors {list(start)} are dependent")
    for i in range(len(vectors)):
        if i not in chosen:
            try_add(i)
    return chosen


# -- minors -------------------------------------------------------------------

def subsets(m: int, d: int) -> list[tuple[int, ...]]:
    """All ``d``-subsets of ``range(m)`` in the library-wide lexicographic order."""
    return list(itertools.combinations(range(m), d))


@dataclass(frozen=True)
class PluckerVector:
    """Ordered maximal minors of an ``m x d`` matrix."""

    m: int
    d: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != comb(self.m, self.d):
            raise ShapeError(f"expected {comb(self.m, self.d)} minors, got {len(self.values)}")

    def subsets(self) -> list[tuple[int, ...]]:
        return subsets(self.m, self.d)

    def items(self):
        return zip(self.subsets(), self.values)

    def __getitem__(self, S) -> Fraction:
        return self.values[self.subsets().index(tuple(S))]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def max_abs(self) -> Fraction:
        return max(abs(x) for x in self.values)

    def abs_sum(self) -> Fraction:
        return sum((abs(x) for x in self.values), Fraction(0))

    def scale(self, c) -> "PluckerVector":
        c = to_fraction(c)
        return PluckerVector(self.m, self.d, tuple(c * x for x in self.values))


def plucker(M) -> PluckerVector:
    """All ``d x d`` minors of an ``m x d`` matrix, rows taken in lexicographic order."""
    M = as_matrix(M)
    m, d = M.shape
    if m < d:
        raise ShapeError(f"need rows >= cols, got {M.shape}")
    vals = tuple(det(M.submatrix(S)) for S in subsets(m, d))
    return PluckerVector(m, d, vals)


def laplace_sign(S: Sequence[int], m: int) -> int:
    """Sign of the permutation listing ``S`` (ascending) then its complement.

    Equivalently ``(-1) ** sum(s - k for k, s in enumerate(S))`` for 0-based
    indices.
    """
    S = tuple(S)
    if any(b <= a for a, b in zip(S, S[1:])) or (S and (S[0] < 0 or S[-1] >= m)):
        raise PreconditionError(f"{S} is not a strictly increasing subset of range({m})")
    return -1 if sum(s - k for k, s in enumerate(S)) % 2 else 1


def complement(S: Sequence[int], m: int) -> tuple[int, ...]:
    s = set(S)
    return tuple(i for i in range(m) if i not in s)


def laplace_expand(F, G) -> Fraction:
    """``det([F G])`` expanded along the first ``d`` columns.

    Sums ``theta_S * u_S * v_S`` where ``u`` are the maximal minors of ``F``
    and ``v_S`` is the minor of ``G`` on the complementary rows.
    """
    F, G = as_matrix(F), as_matrix(G)
    m, d = F.shape
    if G.rows != m or G.cols != m - d:
        raise ShapeError(f"F is {F.shape}, G must be {(m, m - d)}, got {G.shape}")
    total = Fraction(0)
    for S, u in plucker(F).items():
        if u == 0:
            continue
        v = det(G.submatrix(complement(S, m)))
        total += laplace_sign(S, m) * u * v
    return total


def cauchy_binet(u: PluckerVector, w: PluckerVector) -> Fraction:
    """Pairing ``sum_S u_S w_S``; equals ``det(A Y)`` for ``u = plucker(Y)``, ``w = plucker(A.T)``."""
    if (u.m, u.d) != (w.m, w.d):
        raise ShapeError(f"Plücker vectors of shape {(u.m, u.d)} and {(w.m, w.d)}")
    return sum((a * b for a, b in zip(u.values, w.values)), Fraction(0))


@dataclass(frozen=True)
class ComplementaryReport:
    sigma: int
    relation_holds: bool
    sum_w2: Fraction
    sum_v2: Fraction
    mismatches: tuple[tuple[int, ...], ...] = ()

    @property
    def passed(self) -> bool:
        return self.relation_holds and self.sum_w2 == 1 and self.sum_v2 == 1


def is_orthogonal(Q) -> bool:
    Q = as_matrix(Q)
    return Q.is_square() and Q @ Q.T == RationalMatrix.identity(Q.rows)


def complementary_check(Q_full, d: int) -> ComplementaryReport:
    """Compare the minors of the first ``d`` columns of an orthogonal matrix with
    the complementary minors of the remaining columns.

    For orthogonal ``Q`` one has ``w_S = sigma * theta_S * v_S`` with
    ``sigma = det(Q)`` and both minor vectors of unit Euclidean length.
    """
    Q = as_matrix(Q_full)
    if not is_orthogonal(Q):
        raise PreconditionError("Q_full is not orthogonal: Q Q^T != I")
    m = Q.rows
    if not 0 < d < m:
        raise PreconditionError(f"d must satisfy 0 < d < {m}")
    W = Q.submatrix(range(m), range(d))
    V = Q.submatrix(range(m), range(d, m))
    w = plucker(W)
    v = [det(V.submatrix(complement(S, m))) for S in w.subsets()]
    sigma = 1 if det(Q) > 0 else -1
    bad = tuple(S for (S, ws), vs in zip(w.items(), v) if ws != sigma * laplace_sign(S, m) * vs)
    return ComplementaryReport(
        sigma=sigma,
        relation_holds=not bad,
        sum_w2=sum((x * x for x in w.values), Fraction(0)),
        sum_v2=sum((x * x for x in v), Fraction(0)),
        mismatches=bad,
    )


def sqnorm(x: Sequence) -> Fraction:
    return sum((to_fraction(a) ** 2 for a in x), Fraction(0))


def det_perturb_bound(x_list: Sequence[Sequence], z: Sequence, l, m_bound) -> tuple[Fraction, Fraction, bool]:
    """Check ``|det[z, x2..xd] - det[x1..xd]| <= l * m_bound**(d-1)``.

    Vectors are columns.  The norm preconditions ``|x_i| <= m_bound`` (i >= 2)
    and ``|z - x_1| <= l`` are verified on squared norms, so no square roots
    are taken.
    """
    xs = [[to_fraction(a) for a in x] for x in x_list]
    z = [to_fraction(a) for a in z]
    l, m_bound = to_fraction(l), to_fraction(m_bound)
    d = len(xs)
    if any(len(x) != d for x in xs) or len(z) != d:
        raise ShapeError("need d vectors of length d")
    if l < 0 or m_bound < 0:
        raise PreconditionError("bounds must be non-negative")
    for i, x in enumerate(xs[1:], start=2):
        if sqnorm(x) > m_bound ** 2:
            raise PreconditionError(f"|x_{i}| exceeds m_bound")
    if sqnorm([a - b for a, b in zip(z, xs[0])]) > l ** 2:
        raise PreconditionError("|z - x_1| exceeds l")
    lhs = abs(det(RationalMatrix.from_columns([z] + xs[1:])) - det(RationalMatrix.from_columns(xs)))
    rhs = l * m_bound ** (d - 1)
    return lhs, rhs, lhs <= rhs
