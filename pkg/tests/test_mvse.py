import itertools
import random
from fractions import Fraction as F

import pytest

from mvse_lab import mvse
from mvse_lab.core import PreconditionError, RationalMatrix, ShapeError, inverse
from mvse_lab.corpus import Y3, Y4, random_full_rank, random_invertible, simplex_points
from mvse_lab.zonotope import HexagonKind

from oracles import minors_by_cofactor, polygon_area, zonotope_vertices_bruteforce

I3 = RationalMatrix.identity(3)


def test_space_plucker_vectors():
    assert mvse.make_space(I3).u.values == (1,)
    assert mvse.make_space(Y3).u.values == (1, 1, -1)
    assert mvse.make_space(Y4).u.values == (1, 1, -1, 1)


def test_space_rejects_rank_deficient():
    with pytest.raises(PreconditionError):
        mvse.make_space([[1, 2], [2, 4], [3, 6]])
    with pytest.raises(ShapeError):
        mvse.make_space([[1, 2, 3]])


def test_projection_validation():
    s = mvse.make_space(Y3)
    with pytest.raises(mvse.ProjectionError) as exc:
        mvse.make_projection(s, [[1, 0, 0], [0, 1, 1]])
    assert exc.value.entry == (1, 0)


def test_mvse_volumes():
    for d in (1, 2, 3):
        assert mvse.mvse_volume(mvse.make_space(RationalMatrix.identity(d))) == 2 ** d
    assert mvse.mvse_volume(mvse.make_space(Y3)) == 4
    assert mvse.mvse_volume(mvse.make_space(Y4)) == 8


def test_mvse_volume_basis_scaling():
    # scaling the basis by 2 shrinks coordinate volumes by 2^d
    assert mvse.mvse_volume(mvse.make_space(Y3 * 2)) == 1


def test_ratio_examples():
    s = mvse.make_space(I3)
    assert mvse.volume_ratio(s, mvse.make_projection(s, I3)) == 1
    s3 = mvse.make_space(Y3)
    assert mvse.volume_ratio(s3, mvse.make_projection(s3, [[0, -1, 1], [-1, 0, 1]])) == 3


def test_simplex_family_minors():
    s = mvse.make_space(Y3)
    t1, t2 = F(1, 5), F(2, 7)
    p = mvse.simplex_projection(s, (t1, t2))
    assert p.w.values == (1 - t1 - t2, t2, -t1)
    assert mvse.volume_ratio(s, p) == 1
    outside = mvse.simplex_projection(s, (F(2, 3), F(2, 3)))
    assert mvse.volume_ratio(s, outside) > 1


@pytest.mark.parametrize("t", simplex_points(40, 3, den=6))
def test_simplex_family_y4(t):
    s = mvse.make_space(Y4)
    assert mvse.volume_ratio(s, mvse.simplex_projection(s, t)) == 1


@pytest.mark.parametrize("seed", range(20))
def test_ratio_matches_area_oracle(seed):
    s = mvse.make_space(Y3)
    p = mvse.random_projection(s, seed)
    area = polygon_area(zonotope_vertices_bruteforce(p.A.columns()))
    mvse_vol = F(4) / max(abs(x) for x in minors_by_cofactor(Y3.tolist(), 2))
    assert mvse.volume_ratio(s, p) == area / mvse_vol
    assert mvse.pairing(s, p) == 1


@pytest.mark.parametrize("seed", range(10))
def test_ratio_invariant_under_basis_change(seed):
    rng = random.Random(seed)
    Y = random_full_rank(rng, 5, 3)
    s = mvse.make_space(Y)
    p = mvse.random_projection(s, seed)
    C = random_invertible(rng, 3)
    s2 = mvse.make_space(Y @ C)
    p2 = mvse.make_projection(s2, inverse(C) @ p.A)
    assert mvse.volume_ratio(s2, p2) == mvse.volume_ratio(s, p)
    assert mvse.volume_ratio(s, p) >= 1


def test_coordinate_projection_examples():
    s3 = mvse.make_space(Y3)
    p = mvse.coordinate_projection(s3, (0, 1))
    assert p.w.values == (1, 0, 0) and mvse.volume_ratio(s3, p) == 1
    p = mvse.coordinate_projection(s3, (1, 2))
    assert p.A == RationalMatrix([[0, -1, 1], [0, 1, 0]])
    assert p.w[(1, 2)] == -1 and mvse.volume_ratio(s3, p) == 1
    s4 = mvse.make_space(Y4)
    assert mvse.volume_ratio(s4, mvse.coordinate_projection(s4, (0, 1, 2))) == 1


def test_coordinate_projection_singular():
    s = mvse.make_space([[1, 0], [2, 0], [0, 1]])
    with pytest.raises(PreconditionError):
        mvse.coordinate_projection(s, (0, 1))


@pytest.mark.parametrize("seed", range(10))
def test_argmax_coordinate_projections_are_minimal(seed):
    rng = random.Random(seed)
    s = mvse.make_space(random_full_rank(rng, rng.randint(3, 6), rng.randint(1, 3)))
    for S in mvse.enumerate_parallelepiped_mvse(s):
        assert mvse.volume_ratio(s, mvse.coordinate_projection(s, S)) == 1
    for S, x in s.u.items():
        if x != 0 and abs(x) < s.u.max_abs():
            assert mvse.volume_ratio(s, mvse.coordinate_projection(s, S)) > 1


def test_enumerate_examples():
    assert mvse.enumerate_parallelepiped_mvse(mvse.make_space(I3)) == [(0, 1, 2)]
    assert mvse.enumerate_parallelepiped_mvse(mvse.make_space(Y3)) == [(0, 1), (0, 2), (1, 2)]


def test_normalize_laa():
    rng = random.Random(4)
    for _ in range(10):
        s = mvse.normalize_laa(mvse.make_space(random_full_rank(rng, 5, 2)))
        assert s.u.max_abs() == 1
        assert all(abs(x) <= 1 for row in s.Y.data for x in row)


def test_random_projection_square_space():
    s = mvse.make_space(I3)
    assert mvse.random_projection(s, 9).A == I3


def test_random_projection_deterministic():
    s = mvse.make_space(Y4)
    assert mvse.random_projection(s, 5).A == mvse.random_projection(s, 5).A
    assert mvse.random_projection(s, 5).A != mvse.random_projection(s, 6).A


@pytest.mark.parametrize("seed", range(10))
def test_plucker_relations_vanish(seed):
    rng = random.Random(seed)
    d = rng.randint(2, 4)
    M = random_full_rank(rng, d + 2, d)
    for rows in itertools.permutations(range(d + 2), d + 2):
        assert mvse.plucker_relation_check(M, rows[: d - 2], rows[d - 2:]) == 0


def test_plucker_relation_repeats():
    M = random_full_rank(random.Random(0), 4, 2)
    with pytest.raises(PreconditionError):
        mvse.plucker_relation_check(M, (), (0, 0, 1, 2))
    assert mvse.plucker_relation_check(M, (), (0, 0, 1, 2), allow_repeats=True) == 0


@pytest.mark.parametrize("Y", [I3, Y3, Y4], ids=["I3", "Y3", "Y4"])
def test_minimize_ratio_search_reaches_one(Y):
    s = mvse.make_space(Y)
    assert mvse.volume_ratio(s, mvse.minimize_ratio_search(s, restarts=2, seed=1)) == 1


def test_find_circuit():
    s = mvse.make_space(Y3)
    assert mvse.find_circuit(mvse.simplex_projection(s, ("1/3", "1/3"))) == (0, 1, 2)
    assert mvse.find_circuit(mvse.coordinate_projection(s, (0, 1))) is None


@pytest.mark.parametrize("Y,t", [(Y3, ["1/3"] * 2), (Y4, ["1/3"] * 3)], ids=["Y3", "Y4"])
def test_hexagonal_subspace_simplex_centre(Y, t):
    s = mvse.make_space(Y)
    rep = mvse.hexagonal_subspace(s, mvse.simplex_projection(s, t))
    assert rep.passed
    assert rep.hexagon.kind is HexagonKind.HEXAGON_AFFINELY_REGULAR
    # leading block: diag(+-1, +-1) after the sign flips, then the (1, 1) row
    N = rep.normalized_matrix
    assert [tuple(abs(x) for x in N.row(i)[:2]) for i in range(2)] == [(1, 0), (0, 1)]
    assert N.row(s.d)[:2] == (1, 1)


@pytest.mark.parametrize(
    "Y",
    [
        [[1, 0], [0, 1], [1, 1], ["1/2", "-1/2"]],
        [[1, 0], [0, 1], [1, -1]],
        [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, "1/2", "1/2"]],
    ],
)
def test_hexagonal_subspace_found_witness(Y):
    s = mvse.make_space(Y)
    w = mvse.find_hexagon_witness(s)
    assert w is not None
    rep = mvse.hexagonal_subspace(s, w)
    assert rep.passed


def test_hexagonal_subspace_preconditions():
    s = mvse.make_space(Y3)
    with pytest.raises(PreconditionError):
        mvse.hexagonal_subspace(s, mvse.make_projection(s, [[0, -1, 1], [-1, 0, 1]]))
    with pytest.raises(PreconditionError):
        mvse.hexagonal_subspace(s, mvse.coordinate_projection(s, (0, 1)))


def test_cube_control():
    s = mvse.make_space(I3)
    assert mvse.enumerate_parallelepiped_mvse(s) == [(0, 1, 2)]
    assert mvse.find_hexagon_witness(s) is None
