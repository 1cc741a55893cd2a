"""Text and JSON renderings of matrices, sequences and reports.

Rationals always appear as "p/q" strings (or "p" when q = 1), so JSON
output is exact and byte-stable across runs.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .exact import format_rational
from .matrix import ProductionMatrix, TriangularMatrix, TridiagonalVerdict
from .powerseries import PowerSeries
from .production import ThreeTermRecurrence


def strings(values: Iterable) -> list[str]:
    return [format_rational(v) for v in values]


def align(rows: Sequence[Sequence[str]], indent: str = "") -> str:
    """Right-align ragged rows column by column, two spaces apart."""
    width: dict[int, int] = {}
    for row in rows:
        for j, cell in enumerate(row):
            width[j] = max(width.get(j, 0), len(cell))
    lines = []
    for row in rows:
        lines.append(indent + "  ".join(cell.rjust(width[j]) for j, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def matrix_text(m: TriangularMatrix | ProductionMatrix) -> str:
    return align(m.to_strings())


def sequence_text(values: Iterable) -> str:
    return ", ".join(strings(values))


def matrix_json(m: TriangularMatrix) -> list[list[str]]:
    return m.to_strings()


def production_json(p: ProductionMatrix, verdict: TridiagonalVerdict | None = None) -> dict:
    verdict = p.tridiagonal_verdict() if verdict is None else verdict
    bands = p.bands()
    return {
        "size": p.size,
        "rows": p.to_strings(),
        "bands": {k: strings(bands[k]) for k in ("sub", "diag", "super")},
        "tridiagonal": verdict.tridiagonal,
        "witness": list(verdict.witness) if verdict.witness else None,
    }


def verdict_text(verdict: TridiagonalVerdict) -> str:
    if verdict:
        return "tridiagonal: yes"
    i, j = verdict.witness
    return f"tridiagonal: no (witness ({i}, {j}): {verdict.reason})"


def recurrence_json(rec: ThreeTermRecurrence) -> dict:
    return {"alpha": strings(rec.alphas), "beta": strings(rec.betas), "degenerate": rec.degenerate}


def recurrence_text(rec: ThreeTermRecurrence) -> str:
    lines = ["alpha: " + sequence_text(rec.alphas), "beta:  " + sequence_text(rec.betas)]
    if rec.degenerate:
        lines.append("beta vanishes at n = " + ", ".join(str(n) for n in rec.degenerate))
    return "\n".join(lines)


def hankel_json(values: Sequence, key: str = "h_n") -> list[dict]:
    return [{"n": n, key: format_rational(v)} for n, v in enumerate(values)]


def series_json(s: PowerSeries) -> dict:
    return {"order": s.order, "coefficients": s.to_strings()}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)
