"""Fixture catalog: known triangles and sequences, recomputed from their definitions.

A fixture records a construction (which array, which generating functions,
which view of the result) and a finite prefix of values.  Verification
rebuilds the values from the construction and compares prefixes exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import RiordanError
from .exact import format_rational, rational
from .expr import parse_series
from .expriordan import ExponentialRiordan
from .riordan import OrdinaryRiordan

KINDS = ("sequence", "triangle")
ARRAYS = ("ordinary", "exponential", "series")
VIEWS = ("matrix", "reversal", "row_sums", "diagonal_sums", "first_column", "series")
MIN_PREFIX = 6


@dataclass(frozen=True)
class Fixture:
    id: str
    name: str
    kind: str
    construction: dict
    values: tuple

    @property
    def length(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class FixtureResult:
    id: str
    passed: bool
    length: int
    detail: str = ""


def _parse_values(kind: str, raw: list) -> tuple:
    if kind == "sequence":
        return tuple(rational(v) for v in raw)
    return tuple(tuple(rational(v) for v in row) for row in raw)


def _fixture(entry: dict[str, Any]) -> Fixture:
    kind = entry["kind"]
    if kind not in KINDS:
        raise ValueError(f"fixture {entry.get('id')!r}: unknown kind {kind!r}")
    c = entry["construction"]
    if c.get("array") not in ARRAYS or c.get("view") not in VIEWS:
        raise ValueError(f"fixture {entry['id']!r}: bad construction {c!r}")
    return Fixture(entry["id"], entry.get("name", ""), kind, dict(c), _parse_values(kind, entry["values"]))


def default_catalog_path():
    return resources.files("riordan_moments").joinpath("data/fixtures.json")


def load_catalog(path=None) -> dict[str, Fixture]:
    source = default_catalog_path() if path is None else Path(path)
    data = json.loads(source.read_text(encoding="utf-8"))
    fixtures = [_fixture(e) for e in data["fixtures"]]
    catalog = {f.id: f for f in fixtures}
    if len(catalog) != len(fixtures):
        raise ValueError("duplicate fixture ids in catalog")
    return dict(sorted(catalog.items()))


def compute(fixture: Fixture) -> tuple:
    """Rebuild the fixture's prefix from its construction."""
    c = fixture.construction
    n = fixture.length
    order = n
    g = parse_series(c["g"], order)
    if c["array"] == "series":
        values = list(g.coeffs[:n])
    else:
        f = parse_series(c["f"], order)
        cls = ExponentialRiordan if c["array"] == "exponential" else OrdinaryRiordan
        pair = cls(g, f)
        if c.get("invert"):
            pair = pair.inverse()
        m = pair.realize(n)
        view = c["view"]
        if view == "matrix":
            values = m.rows
        elif view == "reversal":
            values = m.reversal().rows
        elif view == "row_sums":
            values = m.row_sums()
        elif view == "diagonal_sums":
            values = m.diagonal_sums()
        elif view == "first_column":
            values = m.first_column()
        else:
            values = list(pair.g.coeffs[:n])
    if fixture.kind == "triangle":
        return tuple(tuple(row) for row in values)
    return tuple(Fraction(v) for v in values)


def _first_mismatch(expected: tuple, got: tuple, kind: str) -> str:
    for i, (a, b) in enumerate(zip(expected, got)):
        if a != b:
            if kind == "triangle":
                shown = [format_rational(v) for v in b]
                want = [format_rational(v) for v in a]
                return f"row {i}: expected {want}, got {shown}"
            return f"term {i}: expected {format_rational(a)}, got {format_rational(b)}"
    return f"length: expected {len(expected)}, got {len(got)}"


def verify(fixture: Fixture) -> FixtureResult:
    if fixture.length < MIN_PREFIX:
        return FixtureResult(fixture.id, False, fixture.length, f"prefix shorter than {MIN_PREFIX}")
    try:
        got = compute(fixture)
    except RiordanError as exc:
        return FixtureResult(fixture.id, False, fixture.length, f"{type(exc).__name__}: {exc}")
    if got[: fixture.length] == fixture.values:
        return FixtureResult(fixture.id, True, fixture.length)
    return FixtureResult(fixture.id, False, fixture.length, _first_mismatch(fixture.values, got, fixture.kind))


def verify_all(catalog: dict[str, Fixture], ids=None) -> list[FixtureResult]:
    chosen = sorted(catalog if ids is None else ids)
    return [verify(catalog[i]) for i in chosen]
