"""Static SVG drawings of planar zonotopes and their lattice tilings."""

from __future__ import annotations

import itertools

from .tiling import Lattice
from .zonotope import Zonotope, vertices2d

_HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
    'viewBox="{x0} {y0} {vw} {vh}">\n'
)


def _polygon(points, stroke="black", fill="none", width=0.02) -> str:
    pts = " ".join(f"{float(x):.6g},{float(-y):.6g}" for x, y in points)
    return f'  <polygon points="{pts}" fill="{fill}" stroke="{stroke}" stroke-width="{width}"/>\n'


def _frame(points, pad=0.5, size=480) -> str:
    xs = [float(p[0]) for p in points]
    ys = [-float(p[1]) for p in points]
    x0, x1, y0, y1 = min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad
    return _HEADER.format(w=size, h=size, x0=f"{x0:.6g}", y0=f"{y0:.6g}", vw=f"{x1 - x0:.6g}", vh=f"{y1 - y0:.6g}")


def zonotope_svg(Z: Zonotope) -> str:
    vs = vertices2d(Z)
    return _frame(vs) + _polygon(vs, fill="#cde") + "</svg>\n"


def tiling_svg(Z: Zonotope, lattice: Lattice, reach: int = 2) -> str:
    """Outline of ``Z`` and of its translates by ``sum k_i x_i`` with ``|k_i| <= reach``."""
    vs = vertices2d(Z)
    (a, b), (c, e) = lattice.vectors()
    shapes = []
    for i, j in itertools.product(range(-reach, reach + 1), repeat=2):
        t = (i * a + j * c, i * b + j * e)
        shapes.append([(x + t[0], y + t[1]) for x, y in vs])
    body = "".join(_polygon(s, stroke="#555") for s in shapes if s != vs)
    body += _polygon(vs, stroke="black", fill="#cde", width=0.04)
    return _frame([p for s in shapes for p in s], pad=0.2) + body + "</svg>\n"
