"""Command line front end.

Reads matrix / zonotope / lattice JSON from files (``-`` for standard input),
writes JSON to standard output.  Exit codes: 0 ok, 2 refused (a sound
negative answer), 1 error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from . import bmdist, core, formats, mvse, selftest, svg, tiling, tumat, zonotope
from .core import fmt


@dataclass
class CommandResult:
    status: str
    payload: Any
    exit_code: int


def ok(payload) -> CommandResult:
    return CommandResult("ok", payload, 0)


def refused(payload) -> CommandResult:
    return CommandResult("refused", payload, 2)


def error(message: str, module: str = "cli") -> CommandResult:
    return CommandResult("error", {"error": message, "module": module}, 1)


def threads() -> int | None:
    """Parallelism cap from ``MVSE_LAB_THREADS``; evaluation is serial, so the
    value is only validated and echoed in reports."""
    raw = os.environ.get("MVSE_LAB_THREADS")
    if raw is None:
        return None
    n = int(raw)
    if n < 1:
        raise ValueError("MVSE_LAB_THREADS must be a positive integer")
    return n


# -- input --------------------------------------------------------------------

def _read_text(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def read_matrix(path: str, fmt_name: str = "json") -> core.RationalMatrix:
    text = _read_text(path)
    if fmt_name == "csv":
        return formats.matrix_from_csv(text)
    return formats.matrix_from_json(_loads(text, path))


def _loads(text: str, path: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise formats.FormatError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc


def read_zonotope(path: str) -> zonotope.Zonotope:
    return formats.zonotope_from_json(_loads(_read_text(path), path))


def read_lattice(path: str) -> tiling.Lattice:
    return formats.lattice_from_json(_loads(_read_text(path), path))


def read_projection(path: str, space_path: str | None, fmt_name: str):
    """Return (space, projection); the projection file may name its space under ``"space"``."""
    doc = _loads(_read_text(path), path)
    A = formats.matrix_from_json(doc)
    if space_path is None:
        ref = doc.get("space") if isinstance(doc, dict) else None
        if ref is None:
            raise formats.FormatError("no --space given and projection JSON has no 'space' reference")
        space_path = str((Path(path).parent / ref) if path != "-" else Path(ref))
    space = mvse.make_space(read_matrix(space_path, fmt_name))
    return space, mvse.make_projection(space, A)


def _subset(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


# -- payload helpers ----------------------------------------------------------

def _witness_payload(w: tumat.TUWitness) -> dict:
    return {
        "C": formats.matrix_to_json(w.basis_change),
        "a": [fmt(x) for x in w.generator_scales],
        "tau": formats.matrix_to_json(w.tu_matrix),
    }


def _verdict_payload(v: tiling.TileVerdict) -> dict:
    return {
        "passed": v.passed,
        "samples_tested": v.samples_tested,
        "discarded": v.discarded,
        "failure_point": None if v.failure_point is None else formats.vector_to_json(v.failure_point),
        "failure_count": v.failure_count,
        "trace_digest": v.trace_digest,
    }


def _projection_payload(space, proj) -> dict:
    return {
        "A": formats.matrix_to_json(proj.A),
        "ratio": fmt(mvse.volume_ratio(space, proj)),
        "image": formats.zonotope_to_json(proj.image()),
    }


def _write_svg(path: str | None, text: str):
    if path:
        Path(path).write_text(text)


# -- commands -----------------------------------------------------------------

def cmd_plucker(args):
    u = core.plucker(read_matrix(args.matrix, args.format))
    return ok({"m": u.m, "d": u.d, "subsets": [list(S) for S in u.subsets()], "values": [fmt(x) for x in u.values]})


def cmd_tu_check(args):
    M = read_matrix(args.matrix, args.format)
    v = tumat.tu_violation(M)
    payload = {"tu": v is None}
    if v is not None:
        payload["violation"] = {"rows": list(v.rows), "cols": list(v.cols), "det": v.det}
    return ok(payload)


def cmd_tu_certificate(args):
    D = read_matrix(args.matrix, args.format)
    cert = tumat.gomory_certificate(D)
    return ok({
        "x_cols": list(cert.x_cols),
        "p_cols": list(cert.p_cols),
        "minors": [fmt(x) for x in cert.minors(D)],
    })


def cmd_td_member(args):
    res = tumat.td_membership(read_zonotope(args.zonotope))
    if isinstance(res, tumat.TUWitness):
        return ok({"member": True, "witness": _witness_payload(res)})
    return refused({"member": False, "reason": res.reason})


def cmd_zonotope(args):
    Z = read_zonotope(args.zonotope)
    if args.action == "volume":
        return ok({"volume": fmt(zonotope.volume(Z))})
    if args.action == "vertices":
        return ok({"vertices": [formats.vector_to_json(v) for v in zonotope.vertices2d(Z)]})
    text = svg.zonotope_svg(Z)
    _write_svg(args.svg, text)
    return ok({"svg": args.svg or text})


def cmd_mvse(args):
    if args.action == "ratio":
        space, proj = read_projection(args.proj, args.space, args.format)
        return ok({"ratio": fmt(mvse.volume_ratio(space, proj))})
    if args.space is None:
        return error("--space is required", "mvse")
    space = mvse.make_space(read_matrix(args.space, args.format))
    if args.action == "volume":
        return ok({"mvse_volume": fmt(mvse.mvse_volume(space)), "max_minor": fmt(space.u.max_abs())})
    if args.action == "enumerate":
        return ok({"subsets": [list(S) for S in mvse.enumerate_parallelepiped_mvse(space)]})
    proj = mvse.minimize_ratio_search(space, restarts=args.restarts, seed=args.seed)
    return ok(_projection_payload(space, proj))


def cmd_project(args):
    space = mvse.make_space(read_matrix(args.space, args.format))
    if args.action == "coordinate":
        proj = mvse.coordinate_projection(space, _subset(args.subset))
    else:
        proj = mvse.random_projection(space, args.seed)
    return ok(_projection_payload(space, proj))


def cmd_hexfind(args):
    if args.proj:
        space, proj = read_projection(args.proj, args.space, args.format)
    else:
        if args.space is None:
            return error("--space is required", "mvse")
        space = mvse.make_space(read_matrix(args.space, args.format))
        proj = mvse.find_hexagon_witness(space)
        if proj is None:
            return refused({"witness": None, "reason": "no minimal-volume projection with non-parallelepiped image found"})
    rep = mvse.hexagonal_subspace(space, proj)
    return ok({
        "witness": formats.matrix_to_json(proj.A),
        "circuit": list(rep.circuit),
        "basis_pair": [formats.vector_to_json(v) for v in rep.basis_pair],
        "row_order": list(rep.row_order),
        "normalized_matrix": formats.matrix_to_json(rep.normalized_matrix),
        "b_c_rows": [[fmt(b), fmt(c)] for b, c in rep.b_c_rows],
        "checks": rep.checks,
        "hexagon": {
            "kind": rep.hexagon.kind.value,
            "vertices": [formats.vector_to_json(v) for v in rep.hexagon.ordered_vertices],
        },
    })


def cmd_tile(args):
    Z = read_zonotope(args.zonotope)
    if args.action == "verify":
        if not args.lattice:
            return error("--lattice is required", "tiling")
        L = read_lattice(args.lattice)
        radius = args.radius if args.radius is not None else tiling._region_radius(L)
        v = tiling.tile_verify(Z, L, radius, args.samples, args.seed)
        _write_svg(args.svg, svg.tiling_svg(Z, L) if args.svg else "")
        payload = {"det_volume_ok": tiling.det_volume_check(Z, L), "verdict": _verdict_payload(v)}
        return ok(payload) if v.passed else refused(payload)
    if args.action == "search":
        L = tiling.lattice_search(Z, seed=args.seed)
        if L is None:
            return refused({"lattice": None})
        _write_svg(args.svg, svg.tiling_svg(Z, L) if args.svg else "")
        return ok({"lattice": formats.lattice_to_json(L)})
    rep = tiling.td_tiling_pipeline(Z, n_samples=args.samples, seed=args.seed)
    payload = {
        "member": rep.member,
        "witness": _witness_payload(rep.membership) if rep.member else None,
        "reason": None if rep.member else rep.membership.reason,
        "lattice": formats.lattice_to_json(rep.lattice) if rep.lattice else None,
        "det_volume_ok": rep.det_volume_ok,
        "verdict": _verdict_payload(rep.verdict) if rep.verdict else None,
        "tiles": rep.tiles,
    }
    if rep.lattice is not None and args.svg:
        _write_svg(args.svg, svg.tiling_svg(Z, rep.lattice))
    return ok(payload) if rep.member and rep.tiles else refused(payload)


def cmd_bm(args):
    b = bmdist.bm_upper_bound(read_zonotope(args.z1), read_zonotope(args.z2), seed=args.seed)
    return ok({
        "upper_bound": fmt(b.upper_bound),
        "exact": b.exact,
        "witnesses": {
            "max_ratio": fmt(b.max_ratio),
            "max_ratio_direction": formats.vector_to_json(b.max_ratio_direction),
            "min_ratio": fmt(b.min_ratio),
            "min_ratio_direction": formats.vector_to_json(b.min_ratio_direction),
        },
    })


def cmd_selftest(args):
    results = selftest.run_all()
    table = selftest.format_table(results)
    payload = {"table": table, "results": [{"name": r.name, "passed": r.passed} for r in results]}
    failed = [r for r in results if not r.passed]
    if failed:
        payload["first_failure"] = {
            "name": failed[0].name,
            "message": failed[0].message,
            "counterexample": formats.jsonable(failed[0].counterexample),
        }
        return CommandResult("error", payload, 1)
    return ok(payload)


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mvse-lab", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "csv"), default="json", help="matrix input format")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--svg", metavar="PATH", help="write a d=2 rendering here")
    sub = p.add_subparsers(dest="command", required=True)

    # options shared by leaf commands, so they may also follow the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--svg", metavar="PATH", default=argparse.SUPPRESS)

    s = sub.add_parser("plucker", parents=[common], help="ordered maximal minors")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_plucker)

    tu = sub.add_parser("tu", help="totally unimodular matrices").add_subparsers(dest="action", required=True)
    s = tu.add_parser("check", parents=[common])
    s.add_argument("matrix")
    s.set_defaults(func=cmd_tu_check)
    s = tu.add_parser("certificate", parents=[common])
    s.add_argument("matrix")
    s.set_defaults(func=cmd_tu_certificate)

    td = sub.add_parser("td", help="membership in T_d").add_subparsers(dest="action", required=True)
    s = td.add_parser("member", parents=[common])
    s.add_argument("zonotope")
    s.set_defaults(func=cmd_td_member)

    s = sub.add_parser("zonotope", parents=[common], help="zonotope volume, vertices, svg")
    s.add_argument("action", choices=("volume", "vertices", "svg"))
    s.add_argument("zonotope")
    s.set_defaults(func=cmd_zonotope)

    s = sub.add_parser("mvse", parents=[common], help="minimal-volume enlargement computations")
    s.add_argument("action", choices=("volume", "enumerate", "ratio", "search"))
    s.add_argument("--space")
    s.add_argument("--proj")
    s.add_argument("--restarts", type=int, default=2)
    s.set_defaults(func=cmd_mvse)

    s = sub.add_parser("project", parents=[common], help="construct projections")
    s.add_argument("action", choices=("coordinate", "random"))
    s.add_argument("--space", required=True)
    s.add_argument("--subset", default="", help="comma-separated 0-based rows")
    s.set_defaults(func=cmd_project)

    s = sub.add_parser("hexfind", parents=[common], help="regular-hexagon subspace from a minimal projection")
    s.add_argument("--space")
    s.add_argument("--proj")
    s.set_defaults(func=cmd_hexfind)

    s = sub.add_parser("tile", parents=[common], help="lattice tilings")
    s.add_argument("action", choices=("verify", "search", "pipeline"))
    s.add_argument("zonotope")
    s.add_argument("--lattice")
    s.add_argument("--radius", type=formats._parse_scalar)
    s.add_argument("--samples", type=int, default=1000)
    s.set_defaults(func=cmd_tile)

    bm = sub.add_parser("bm", help="Banach-Mazur bound").add_subparsers(dest="action", required=True)
    s = bm.add_parser("bound", parents=[common])
    s.add_argument("z1")
    s.add_argument("z2")
    s.set_defaults(func=cmd_bm)

    s = sub.add_parser("selftest", parents=[common], help="run the bundled corpus")
    s.set_defaults(func=cmd_selftest)
    return p


_MODULE_OF = {
    cmd_plucker: "core", cmd_tu_check: "tumat", cmd_tu_certificate: "tumat", cmd_td_member: "tumat",
    cmd_zonotope: "zonotope", cmd_mvse: "mvse", cmd_project: "mvse", cmd_hexfind: "mvse",
    cmd_tile: "tiling", cmd_bm: "bmdist", cmd_selftest: "selftest",
}


def run(argv: list[str] | None = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return error("invalid arguments") if exc.code else ok({})
    try:
        threads()
        return args.func(args)
    except (formats.FormatError, OSError) as exc:
        return error(str(exc), "cli")
    except (core.PreconditionError, core.ShapeError, ValueError, TypeError, ZeroDivisionError) as exc:
        return error(f"{type(exc).__name__}: {exc}", _MODULE_OF.get(args.func, "cli"))


def main(argv: list[str] | None = None) -> int:
    res = run(argv)
    if isinstance(res.payload, dict) and "table" in res.payload:
        print(res.payload["table"], file=sys.stderr)
    print(formats.dumps(res.payload))
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
