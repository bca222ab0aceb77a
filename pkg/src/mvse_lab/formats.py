"""JSON and CSV encodings.  Rationals always travel as strings ``"p/q"``."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

from .core import RationalMatrix, ShapeError, fmt, to_fraction
from .tiling import Lattice
from .zonotope import Zonotope


class FormatError(ValueError):
    pass


def _parse_scalar(x) -> Fraction:
    if isinstance(x, float):
        raise FormatError(f"rational values must be strings or integers, got float {x!r}")
    try:
        return to_fraction(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"cannot parse rational {x!r}") from exc


def matrix_to_json(M: RationalMatrix) -> dict:
    return {"rows": M.rows, "cols": M.cols, "data": [[fmt(x) for x in r] for r in M.data]}


def matrix_from_json(doc: dict) -> RationalMatrix:
    try:
        rows, cols, data = doc["rows"], doc["cols"], doc["data"]
    except (KeyError, TypeError) as exc:
        raise FormatError("matrix JSON needs 'rows', 'cols' and 'data'") from exc
    if len(data) != rows or any(len(r) != cols for r in data):
        raise FormatError(f"data does not match declared shape {rows} x {cols}")
    return RationalMatrix([[_parse_scalar(x) for x in r] for r in data], cols=cols)


def matrix_from_csv(text: str) -> RationalMatrix:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    try:
        return RationalMatrix([[_parse_scalar(c) for c in r] for r in rows])
    except ShapeError as exc:
        raise FormatError(str(exc)) from exc


def zonotope_to_json(Z: Zonotope) -> dict:
    return {"d": Z.d, "generators": [[fmt(x) for x in g] for g in Z.generators]}


def zonotope_from_json(doc: dict) -> Zonotope:
    try:
        d, gens = doc["d"], doc["generators"]
    except (KeyError, TypeError) as exc:
        raise FormatError("zonotope JSON needs 'd' and 'generators'") from exc
    if any(len(g) != d for g in gens):
        raise FormatError(f"every generator must have {d} coordinates")
    return Zonotope([[_parse_scalar(x) for x in g] for g in gens], d)


def lattice_to_json(L: Lattice) -> dict:
    return {"basis": matrix_to_json(L.basis)}


def lattice_from_json(doc: dict) -> Lattice:
    try:
        return Lattice(matrix_from_json(doc["basis"]))
    except (KeyError, TypeError) as exc:
        raise FormatError("lattice JSON needs 'basis'") from exc


def vector_to_json(v) -> list[str]:
    return [fmt(Fraction(x)) for x in v]


def jsonable(obj: Any) -> Any:
    """Recursively convert Fractions, tuples and matrices to JSON-ready values."""
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, RationalMatrix):
        return matrix_to_json(obj)
    if isinstance(obj, Zonotope):
        return zonotope_to_json(obj)
    if isinstance(obj, Lattice):
        return lattice_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if hasattr(obj, "value") and isinstance(getattr(obj, "value"), str):
        return obj.value
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), indent=2)
