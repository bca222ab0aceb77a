"""
Lattice tilings by zonotopes
============================

Members of T_d tile space by translations.  The pipeline checks membership,
searches for a lattice, compares its determinant with the volume, and then
counts covers at random rational points with exact arithmetic.
"""

import random
import tempfile
from pathlib import Path

from mvse_lab import svg, tiling
from mvse_lab.corpus import HEXAGON, OCTAGON, cube, random_td_zonotope

L = tiling.Lattice.from_vectors([(4, 2), (2, 4)])
verdict = tiling.tile_verify(HEXAGON, L, region_radius=6, n_samples=500)
print("hexagon with (4,2),(2,4):", verdict.passed, "samples", verdict.samples_tested)

bad = tiling.tile_verify(cube(2), tiling.Lattice.from_vectors([(3, 0), (0, 3)]), n_samples=200)
print("square with 3I: passed", bad.passed, "point", [str(x) for x in bad.failure_point], "covers", bad.failure_count)

rng = random.Random(1)
for Z in (cube(3), random_td_zonotope(rng, 3, min_extra=2), OCTAGON):
    rep = tiling.td_tiling_pipeline(Z, n_samples=300)
    basis = None if rep.lattice is None else [[str(x) for x in v] for v in rep.lattice.vectors()]
    print(f"d={Z.d} m={Z.m}: member={rep.member} tiles={rep.tiles} lattice={basis}")

out = Path(tempfile.gettempdir()) / "hexagon_tiling.svg"
out.write_text(svg.tiling_svg(HEXAGON, L))
print("wrote", out)
