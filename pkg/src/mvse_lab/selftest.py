"""Bundled self-test corpus: worked examples plus seeded invariant suites."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bmdist, core, corpus, mvse, tiling, tumat, zonotope
from .core import RationalMatrix


class CheckFailure(AssertionError):
    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


def expect(cond: bool, message: str, counterexample=None):
    if not cond:
        raise CheckFailure(message, counterexample)


@dataclass
class CheckResult:
    name: str
    passed: bool
    message: str = ""
    counterexample: object = None


CHECKS: list[tuple[str, Callable[[], None]]] = []


def check(name: str):
    def register(fn):
        CHECKS.append((name, fn))
        return fn

    return register


F = Fraction


@check("core: determinant examples")
def _det_examples():
    expect(core.det(RationalMatrix.identity(3)) == 1, "det(I3) != 1")
    expect(core.det([[1, 1], [-1, 1]]) == 2, "det [[1,1],[-1,1]] != 2")


@check("core: Plücker vector of Y3")
def _plucker_y3():
    expect(core.plucker(corpus.Y3).values == (1, 1, -1), "plucker(Y3) != (1, 1, -1)")


@check("core: Laplace signs")
def _laplace_signs():
    expect(core.laplace_sign((0, 1), 2) == 1, "theta of leading subset")
    expect(core.laplace_sign((0, 2), 3) == -1, "theta({1,3}) in m=3")


@check("core: Laplace expansion equals determinant (seeded)")
def _laplace_random():
    rng = random.Random(11)
    for _ in range(40):
        m = rng.randint(2, 6)
        d = rng.randint(1, min(3, m - 1))
        M = corpus.random_matrix(rng, m, m)
        F = M.submatrix(range(m), range(d))
        G = M.submatrix(range(m), range(d, m))
        expect(core.laplace_expand(F, G) == core.det(M), "Laplace mismatch", M)


@check("core: Cauchy-Binet pairing (seeded)")
def _cauchy_binet_random():
    rng = random.Random(12)
    for _ in range(40):
        m = rng.randint(2, 6)
        d = rng.randint(1, min(3, m))
        Y = corpus.random_matrix(rng, m, d)
        A = corpus.random_matrix(rng, d, m)
        expect(core.cauchy_binet(core.plucker(Y), core.plucker(A.T)) == core.det(A @ Y), "pairing", (Y, A))


@check("core: orthogonal compound identities (seeded)")
def _orthogonal():
    rng = random.Random(13)
    for _ in range(10):
        n = rng.randint(2, 5)
        Q = corpus.random_orthogonal(rng, n)
        rep = core.complementary_check(Q, rng.randint(1, n - 1))
        expect(rep.passed, "complementary minors", Q)


@check("zonotope: volume and vertices of the hexagon")
def _hexagon_basic():
    Z = corpus.HEXAGON
    expect(zonotope.volume(Z) == 12, "hexagon volume != 12")
    expect(zonotope.vertices2d(Z) == [(2, 2), (0, 2), (-2, 0), (-2, -2), (0, -2), (2, 0)], "hexagon vertices")
    expect(len(zonotope.hrep(Z)) == 6, "hexagon facets != 6")


@check("zonotope: volume by minors equals shoelace area (seeded)")
def _shoelace():
    rng = random.Random(21)
    for _ in range(30):
        Z = corpus.random_zonogon(rng, rng.randint(2, 5))
        area = zonotope.shoelace_area(zonotope.vertices2d(Z))
        expect(zonotope.volume(Z) == area, "volume != shoelace area", Z)


@check("zonotope: hexagon classification")
def _classify():
    K = zonotope.HexagonKind
    expect(zonotope.classify_hexagon(corpus.HEXAGON).kind is K.HEXAGON_AFFINELY_REGULAR, "regular hexagon")
    half = zonotope.Zonotope([(1, 0), (0, 1), (F(1, 2), F(1, 2))])
    expect(zonotope.classify_hexagon(half).kind is K.HEXAGON_OTHER, "non-regular hexagon")
    expect(zonotope.classify_hexagon(corpus.SQUARE).kind is K.PARALLELOGRAM, "square")


@check("tumat: TU examples and Gomory certificate")
def _tu():
    expect(tumat.is_tu([[1, 0, 1], [0, 1, 1]]), "[[1,0,1],[0,1,1]] is TU")
    expect(not tumat.is_tu([[1, 1], [-1, 1]]), "[[1,1],[-1,1]] is not TU")
    D = [[1, 0, 1, 1], [0, 1, 1, -1]]
    cert = tumat.gomory_certificate(D)
    expect(cert.verify(D), "certificate minors")


@check("tumat: T_2 membership")
def _td():
    expect(bool(tumat.td_membership(corpus.HEXAGON)), "hexagon accepted")
    expect(bool(tumat.td_membership(zonotope.Zonotope([(1, 0), (0, 1), (1, 2)]))), "skew hexagon accepted")
    expect(not tumat.td_membership(corpus.OCTAGON), "octagon refused")


@check("mvse: ratios and volumes on Y3 / Y4")
def _mvse_examples():
    s3, s4 = mvse.make_space(corpus.Y3), mvse.make_space(corpus.Y4)
    expect(mvse.mvse_volume(s3) == 4 and mvse.mvse_volume(s4) == 8, "MVSE volumes")
    A = mvse.make_projection(s3, [[0, -1, 1], [-1, 0, 1]])
    expect(mvse.volume_ratio(s3, A) == 3, "t=(1,1) ratio")
    for t in corpus.simplex_points(30):
        expect(mvse.volume_ratio(s3, mvse.simplex_projection(s3, t)) == 1, "simplex ratio", t)


@check("mvse: ratio >= 1 on random projections (seeded)")
def _ratio_floor():
    for Y in (corpus.Y3, corpus.Y4):
        s = mvse.make_space(Y)
        for seed in range(100):
            p = mvse.random_projection(s, seed)
            expect(mvse.volume_ratio(s, p) >= 1, "ratio below 1", p.A)
            expect(mvse.pairing(s, p) == 1, "pairing != 1", p.A)


@check("mvse: Plücker relations (seeded)")
def _plucker_rel():
    rng = random.Random(31)
    for _ in range(20):
        d = rng.randint(2, 3)
        m = rng.randint(d + 2, 6)
        M = corpus.random_matrix(rng, m, d)
        for rows in itertools.permutations(range(m), d + 2):
            if rows[: d - 2] != tuple(sorted(rows[: d - 2])):
                continue
            val = mvse.plucker_relation_check(M, rows[: d - 2], rows[d - 2:])
            expect(val == 0, "Plücker relation nonzero", (M, rows))
            break


@check("mvse: hexagonal subspace for Y3 and Y4")
def _hexfind():
    for Y, t in ((corpus.Y3, ["1/3", "1/3"]), (corpus.Y4, ["1/3"] * 3)):
        s = mvse.make_space(Y)
        rep = mvse.hexagonal_subspace(s, mvse.simplex_projection(s, t))
        expect(rep.passed, "hexagon report", Y)
    expect(mvse.find_hexagon_witness(mvse.make_space(RationalMatrix.identity(3))) is None, "l_inf^3 control")


@check("tiling: hexagon tiles with lattice (4,2),(2,4)")
def _tiling():
    L = tiling.Lattice.from_vectors([(4, 2), (2, 4)])
    expect(tiling.det_volume_check(corpus.HEXAGON, L), "det != volume")
    expect(tiling.tile_verify(corpus.HEXAGON, L, 6, 300, seed=0).passed, "tile_verify")
    bad = tiling.tile_verify(corpus.SQUARE, tiling.Lattice.from_vectors([(3, 0), (0, 3)]), 4, 300, seed=0)
    expect(not bad.passed, "3I_2 must fail for the square")


@check("bmdist: identity and scaling")
def _bm():
    expect(bmdist.bm_upper_bound(corpus.HEXAGON, corpus.HEXAGON).upper_bound == 1, "BM(Z,Z)")
    expect(bmdist.bm_upper_bound(corpus.HEXAGON, corpus.HEXAGON.scale(2)).upper_bound == 1, "BM(Z,2Z)")


def run_all() -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        try:
            fn()
        except CheckFailure as exc:
            results.append(CheckResult(name, False, str(exc), exc.counterexample))
        except Exception as exc:  # a crash is a failed check, reported like one
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
        else:
            results.append(CheckResult(name, True))
    return results


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'check'.ljust(width)}  result"]
    for r in results:
        lines.append(f"{r.name.ljust(width)}  {'PASS' if r.passed else 'FAIL'}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
