"""JSON reading and writing for bialgebroids, subspaces and reduction systems."""
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Mapping

from .algebroid import AXIOM_DESCRIPTIONS, LeftBialgebroid, bialgebroid, validate_bialgebroid
from .errors import AxiomError, DimensionMismatch, ParseError
from .exactla import QQ, Field, Subspace
from .rewrite import ReductionSystem

AXIOM_MESSAGES = dict(AXIOM_DESCRIPTIONS, counit_unital="ε(1_H) = 1_A")


def read_json(path) -> tuple[Any, str]:
    """Parsed JSON and the sha256 of the raw bytes."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    return data, hashlib.sha256(raw).hexdigest()


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def resolve_field(data: Mapping, override: Field | None) -> Field:
    """The file's field, or ``override`` when the two are compatible.

    Rational data may be read in any GF(p) whose p divides no denominator;
    data over GF(p) can only be read over GF(p).
    """
    try:
        own = Field.from_descriptor(data.get("field", {"type": "Q"}))
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"bad field descriptor: {exc}") from exc
    if override is None or override == own:
        return own
    if own.is_rational:
        return override
    raise ParseError(f"data over {own} cannot be read over {override}")


def scalar(F: Field, x):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"scalars must be integers or strings like 'a/b', got {x!r}")
    try:
        return F(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc)) from exc


def _matrix(F: Field, rows, nrows: int, ncols: int, name: str) -> list:
    if not isinstance(rows, list) or len(rows) != nrows:
        raise ParseError(f"{name} must have {nrows} rows")
    out = []
    for r in rows:
        if not isinstance(r, list) or len(r) != ncols:
            raise ParseError(f"every row of {name} must have {ncols} entries")
        out.append([scalar(F, x) for x in r])
    return out


def _structure(F: Field, mult, d: int, name: str) -> list:
    """Accept ``mult[i][j][k]`` nested or flattened to ``d*d`` rows of length d."""
    if not isinstance(mult, list):
        raise ParseError(f"{name} must be a list")
    nested = bool(mult) and isinstance(mult[0], list) and bool(mult[0]) and isinstance(mult[0][0], list)
    if not nested:
        rows = _matrix(F, mult, d * d, d, name)
        return [[rows[i * d + j] for j in range(d)] for i in range(d)]
    if len(mult) != d:
        raise ParseError(f"{name} must be a {d}x{d}x{d} array")
    return [_matrix(F, mult[i], d, d, f"{name}[{i}]") for i in range(d)]


def bialgebroid_from_json(data: Mapping, field: Field | None = None, check: bool = True) -> LeftBialgebroid:
    if not isinstance(data, Mapping):
        raise ParseError("a bialgebroid description must be a JSON object")
    F = resolve_field(data, field)
    try:
        n, m = int(data["baseDim"]), int(data["dim"])
        if n < 1 or m < 1:
            raise ParseError("dimensions must be positive")
        base = _structure(F, data["baseMult"], n, "baseMult")
        mult = _structure(F, data["mult"], m, "mult")
        source = _matrix(F, data["source"], m, n, "source")
        target = _matrix(F, data["target"], m, n, "target")
        comult = _matrix(F, data["comult"], m * m, m, "comult")
        counit = _matrix(F, data["counit"], n, m, "counit")
        unit = [scalar(F, x) for x in data["unit"]] if "unit" in data else None
        base_unit = [scalar(F, x) for x in data["baseUnit"]] if "baseUnit" in data else None
    except KeyError as exc:
        raise ParseError(f"missing key {exc}") from exc
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc
    try:
        b = bialgebroid(F, base, mult, source, target, comult, counit, base_unit=base_unit, unit=unit,
                        name=str(data.get("name", "")))
    except DimensionMismatch as exc:
        raise ParseError(str(exc)) from exc
    except ValueError as exc:
        raise AxiomError(str(exc)) from exc
    if check:
        rep = validate_bialgebroid(b)
        if not rep.ok:
            lines = [f"{c.name}: {AXIOM_MESSAGES.get(c.name, c.name)} fails at {c.witness}" for c in rep.checks
                     if not c.passed]
            raise AxiomError("; ".join(lines), rep)
    return b


def bialgebroid_to_json(b: LeftBialgebroid) -> dict:
    F = b.field
    enc = lambda rows: [[F.to_json(x) for x in r] for r in rows]
    return {
        "name": b.name,
        "field": F.descriptor(),
        "baseDim": b.base_dim,
        "baseMult": [enc(b.A.mult[i]) for i in range(b.base_dim)],
        "baseUnit": [F.to_json(x) for x in b.A.unit],
        "dim": b.dim,
        "mult": [enc(b.H.mult[i]) for i in range(b.dim)],
        "unit": [F.to_json(x) for x in b.H.unit],
        "source": enc(b.ring.source.rows),
        "target": enc(b.ring.target.rows),
        "comult": enc(b.comult.rows),
        "counit": enc(b.counit.rows),
    }


def load_bialgebroid(path, field: Field | None = None, check: bool = True) -> tuple[LeftBialgebroid, str]:
    data, digest = read_json(path)
    return bialgebroid_from_json(data, field, check), digest


def save_bialgebroid(b: LeftBialgebroid, path):
    Path(path).write_text(dumps(bialgebroid_to_json(b)))


def subspace_from_json(data: Mapping, F: Field, ambient: int | None = None) -> Subspace:
    try:
        n = int(data["ambientDim"])
        vectors = data.get("vectors", [])
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"malformed subspace: {exc}") from exc
    if ambient is not None and n != ambient:
        raise ParseError(f"subspace lives in dimension {n}, expected {ambient}")
    rows = _matrix(F, vectors, len(vectors), n, "vectors") if vectors else []
    return Subspace.span(F, n, rows)


def subspaces_from_json(data, F: Field, ambient: int | None = None) -> list:
    """One subspace object, a list of them, or ``{"subspaces": [...]}``."""
    if isinstance(data, Mapping) and "subspaces" in data:
        data = data["subspaces"]
    if isinstance(data, Mapping):
        return [subspace_from_json(data, F, ambient)]
    if isinstance(data, list):
        return [subspace_from_json(d, F, ambient) for d in data]
    raise ParseError("expected a subspace or a list of subspaces")


def load_subspaces(path, F: Field, ambient: int | None = None) -> tuple[list, str]:
    data, digest = read_json(path)
    return subspaces_from_json(data, F, ambient), digest


def subspace_to_json(S: Subspace) -> dict:
    return S.to_json()


def load_system(path, field: Field | None = None) -> tuple[ReductionSystem, str]:
    data, digest = read_json(path)
    if not isinstance(data, Mapping):
        raise ParseError("a reduction system must be a JSON object")
    F = resolve_field(data, field) if "field" in data or field else QQ
    return ReductionSystem.from_json(data, F), digest
