import itertools
import random
from fractions import Fraction as F

import pytest

from mvse_lab import tumat
from mvse_lab.core import PreconditionError, RationalMatrix, inverse
from mvse_lab.corpus import HEXAGON, OCTAGON, interval_matrix, random_sign_matrix, random_td_zonotope
from mvse_lab.zonotope import Zonotope, canonicalize

from oracles import det_leibniz, tu_oracle


def test_is_tu_examples():
    assert tumat.is_tu(RationalMatrix.identity(4))
    assert not tumat.is_tu([[1, 1], [-1, 1]])
    assert tumat.is_tu([[1, 0, 1], [0, 1, 1]])


def test_is_tu_rejects_bad_entries():
    with pytest.raises(PreconditionError):
        tumat.is_tu([[2, 0], [0, 1]])


def test_size_limit():
    with pytest.raises(tumat.SizeError):
        tumat.is_tu(RationalMatrix.identity(7))


@pytest.mark.parametrize("seed", range(8))
def test_is_tu_matches_oracle(seed):
    rng = random.Random(seed)
    for _ in range(25):
        M = random_sign_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
        assert tumat.is_tu(M) == tu_oracle(M.tolist())


def test_interval_matrices_are_tu():
    for d in range(1, 5):
        assert tumat.is_tu(interval_matrix(d))


def test_violation_example():
    v = tumat.tu_violation([[1, 0, 1, 1], [0, 1, 1, -1]])
    assert (v.rows, v.cols, v.det) == ((0, 1), (2, 3), -2)
    assert tumat.tu_violation(RationalMatrix.identity(3)) is None


def test_violation_is_minimal_and_lex_first():
    rng = random.Random(42)
    for _ in range(100):
        M = random_sign_matrix(rng, 4, 5).tolist()
        v = tumat.tu_violation(M)
        if v is None:
            continue
        k = len(v.rows)
        assert det_leibniz([[M[i][j] for j in v.cols] for i in v.rows]) == v.det
        found = [
            (R, C)
            for R in itertools.combinations(range(4), k)
            for C in itertools.combinations(range(5), k)
            if abs(det_leibniz([[M[i][j] for j in C] for i in R])) >= 2
        ]
        assert found[0] == (v.rows, v.cols)
        for kk in range(2, k):
            for R in itertools.combinations(range(4), kk):
                for C in itertools.combinations(range(5), kk):
                    assert abs(det_leibniz([[M[i][j] for j in C] for i in R])) <= 1


def test_gomory_example():
    D = [[1, 0, 1, 1], [0, 1, 1, -1]]
    cert = tumat.gomory_certificate(D)
    assert sorted(cert.column_indices) == [0, 1, 2, 3]
    assert sorted(cert.minors(D)) == [-2, -1, -1, -1, 1, 1]
    assert cert.verify(D)


def test_gomory_rejects_tu():
    with pytest.raises(PreconditionError):
        tumat.gomory_certificate([[1, 0, 1], [0, 1, 1]])


def _random_non_tu_with_identity(rng, d, extra):
    while True:
        cols = [[int(i == j) for i in range(d)] for j in range(d)]
        cols += [[rng.choice((-1, 0, 1)) for _ in range(d)] for _ in range(extra)]
        rng.shuffle(cols)
        D = RationalMatrix.from_columns(cols)
        if not tumat.is_tu(D):
            return D


@pytest.mark.parametrize("seed", range(10))
def test_gomory_random_certificates(seed):
    rng = random.Random(seed)
    D = _random_non_tu_with_identity(rng, rng.randint(2, 4), rng.randint(2, 4))
    cert = tumat.gomory_certificate(D)
    assert len(set(cert.column_indices)) == D.rows + 2
    A = D.tolist()
    for pair in itertools.combinations(cert.p_cols, 2):
        cols = sorted(cert.x_cols + pair)
        assert det_leibniz([[A[i][j] for j in cols] for i in range(D.rows)]) != 0


def test_forest_scaling_example():
    G = [[1, 0, 1], [0, 1, 2]]
    Ghat, rec = tumat.forest_scaling(G)
    assert Ghat == RationalMatrix([[1, 0, 1], [0, 1, 1]])
    assert rec.row_scales == (1, F(1, 2))
    assert rec.col_scales == (1, 2, 1)


def test_forest_scaling_unit_input_unchanged():
    G = [[1, 0, 1], [0, 1, -1]]
    Ghat, rec = tumat.forest_scaling(G)
    assert Ghat == RationalMatrix(G)
    assert set(rec.row_scales) == {1} and set(rec.col_scales) == {1}


def test_forest_scaling_permuted_columns():
    G = RationalMatrix([[1, 0, 1], [0, 1, 2]])
    perm = (2, 0, 1)
    Gp = G.submatrix(range(2), perm)
    Ghat, _ = tumat.forest_scaling(G)
    Ghat_p, _ = tumat.forest_scaling(Gp)
    # same support-normalized matrix up to an overall row rescaling
    assert [[abs(x) for x in r] for r in Ghat_p.tolist()] == [[1, 1, 0], [1, 0, 1]]
    assert Ghat.submatrix(range(2), perm) == Ghat_p


@pytest.mark.parametrize("seed", range(15))
def test_forest_scaling_properties(seed):
    rng = random.Random(seed)
    d, J = rng.randint(2, 4), rng.randint(4, 7)
    G = RationalMatrix([[F(rng.randint(-6, 6), rng.randint(1, 4)) if rng.random() < 0.7 else 0 for _ in range(J)] for _ in range(d)])
    G = RationalMatrix.identity(d).hstack(G)
    Ghat, rec = tumat.forest_scaling(G)
    assert all(s > 0 for s in rec.row_scales + rec.col_scales)
    for r, c in rec.forest_edges:
        assert abs(Ghat[r, c]) == 1
    # the forest has no cycle: edges = nodes touched - components
    assert len(rec.forest_edges) < d + G.cols
    back = [[Ghat[i, j] / (rec.row_scales[i] * rec.col_scales[j]) for j in range(G.cols)] for i in range(d)]
    assert RationalMatrix(back) == G


def test_forest_scaling_rank_deficient():
    with pytest.raises(PreconditionError):
        tumat.forest_scaling([[1, 2], [2, 4]])


def test_membership_examples():
    w = tumat.td_membership(HEXAGON)
    assert w and w.tu_matrix == RationalMatrix([[1, 0, 1], [0, 1, 1]])
    w = tumat.td_membership(Zonotope([(1, 0), (0, 1), (1, 2)]))
    assert w and w.generator_scales == (1, F(1, 2), 1)
    r = tumat.td_membership(OCTAGON)
    assert not r and isinstance(r, tumat.Refusal)
    assert r.violation is not None and abs(r.violation.det) == 2


def _check_witness(Z, w):
    Cinv = inverse(w.basis_change)
    gens = {tuple(g) for g in Z.generators}
    for a, tau in zip(w.generator_scales, w.tu_matrix.columns()):
        g = (Cinv @ RationalMatrix.from_columns([[a * t for t in tau]])).col(0)
        assert g in gens or tuple(-x for x in g) in gens


@pytest.mark.parametrize("seed", range(20))
def test_membership_witness_soundness(seed):
    rng = random.Random(seed)
    Z = random_td_zonotope(rng, rng.randint(2, 4))
    w = tumat.td_membership(Z)
    assert w
    assert w.verify()
    assert tu_oracle(w.tu_matrix.tolist())
    # witness generators are the canonical ones; compare after merging
    _check_witness(canonicalize(Z), w)


def test_membership_refuses_entry_two():
    # (1,0),(0,1),(1,1),(2,1): forest-scaled matrix keeps an entry of 2
    r = tumat.td_membership(Zonotope([(1, 0), (0, 1), (1, 1), (2, 1)]))
    assert not r
    assert r.entry is not None or r.violation is not None


def test_membership_requires_full_dimension():
    with pytest.raises(PreconditionError):
        tumat.td_membership(Zonotope([(1, 0), (2, 0)]))
