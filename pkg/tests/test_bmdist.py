import random
from fractions import Fraction as F

import pytest

from mvse_lab import bmdist
from mvse_lab.core import PreconditionError
from mvse_lab.corpus import HEXAGON, OCTAGON, SQUARE, cube, random_invertible, random_zonogon
from mvse_lab.zonotope import Zonotope

from oracles import dense_sweep_bm


def test_identity_and_scaling():
    assert bmdist.bm_upper_bound(HEXAGON, HEXAGON).upper_bound == 1
    assert bmdist.bm_upper_bound(HEXAGON, HEXAGON.scale(2)).upper_bound == 1


def test_square_vs_hexagon_value():
    # h_sq(u) = |u1| + |u2|, h_hex(u) = |u1| + |u2| + |u1 + u2|
    b = bmdist.bm_upper_bound(SQUARE, HEXAGON)
    assert b.exact
    assert (b.max_ratio, b.min_ratio) == (1, F(1, 2))
    assert b.upper_bound == 2


@pytest.mark.parametrize("seed", range(10))
def test_matches_dense_sweep(seed):
    rng = random.Random(seed)
    Z1, Z2 = random_zonogon(rng, rng.randint(2, 5)), random_zonogon(rng, rng.randint(2, 5))
    b = bmdist.bm_upper_bound(Z1, Z2)
    sweep = dense_sweep_bm(Z1.generators, Z2.generators, 20000)
    assert float(b.upper_bound) >= sweep * (1 - 1e-12)
    assert float(b.upper_bound) == pytest.approx(sweep, rel=1e-3)


@pytest.mark.parametrize("seed", range(5))
def test_linear_invariance_2d(seed):
    rng = random.Random(seed)
    Z1, Z2 = random_zonogon(rng, 3), random_zonogon(rng, 4)
    C = random_invertible(rng, 2)
    assert bmdist.bm_upper_bound(Z1.linear_map(C), Z2.linear_map(C)).upper_bound == bmdist.bm_upper_bound(Z1, Z2).upper_bound


def test_symmetry_2d():
    a = bmdist.bm_upper_bound(SQUARE, OCTAGON).upper_bound
    assert a == bmdist.bm_upper_bound(OCTAGON, SQUARE).upper_bound


def test_three_dimensional_is_heuristic():
    b = bmdist.bm_upper_bound(cube(3), Zonotope([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]), n_samples=200)
    assert not b.exact
    assert b.upper_bound >= 1
    assert bmdist.bm_upper_bound(cube(3), cube(3).scale(3), n_samples=50).upper_bound == 1


def test_three_dimensional_deterministic():
    Z = Zonotope([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0)])
    a = bmdist.bm_upper_bound(cube(3), Z, n_samples=100, seed=4)
    b = bmdist.bm_upper_bound(cube(3), Z, n_samples=100, seed=4)
    assert a == b


def test_preconditions():
    with pytest.raises(PreconditionError):
        bmdist.bm_upper_bound(SQUARE, cube(3))
    with pytest.raises(PreconditionError):
        bmdist.bm_upper_bound(SQUARE, Zonotope([(1, 0), (2, 0)]))
