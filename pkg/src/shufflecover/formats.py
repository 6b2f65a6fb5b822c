"""Text and JSON codecs for the on-disk formats.

Matrix text: first line ``n_rows n_cols``, then one line per row of
space-separated color ids.  Everything else is JSON with stable key order;
violations and witnesses carry a ``kind`` discriminator.
"""

from __future__ import annotations

import json
from typing import Any

from .core import (
    ColorMatrix,
    CoverageViolation,
    KPartiteCover,
    KPartiteCoverageViolation,
    KPartiteShuffleViolation,
    KPartiteWitness,
    LocalityViolation,
    Rectangle,
    RectangleCover,
    ShuffleViolation,
    Witness,
)


class FormatError(ValueError):
    """Input text does not parse as any supported format."""


# ---------------------------------------------------------------------------
# matrix text


def write_matrix(matrix: ColorMatrix) -> str:
    lines = [f"{matrix.n_rows} {matrix.n_cols}"]
    lines.extend(" ".join(str(c) for c in row) for row in matrix.cells)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> ColorMatrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError("matrix header must be 'n_rows n_cols'")
    try:
        n_rows, n_cols = int(header[0]), int(header[1])
    except ValueError as exc:
        raise FormatError(f"bad matrix header: {lines[0]!r}") from exc
    if n_rows < 1 or n_cols < 1:
        raise FormatError("matrix dimensions must be positive")
    if len(lines) != n_rows + 1:
        raise FormatError(f"expected {n_rows} matrix rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError as exc:
            raise FormatError(f"bad matrix row: {line!r}") from exc
        if len(row) != n_cols:
            raise FormatError(f"row has {len(row)} entries, expected {n_cols}")
        if any(c < 0 for c in row):
            raise FormatError("color ids must be non-negative")
        rows.append(row)
    return ColorMatrix(tuple(rows))


# ---------------------------------------------------------------------------
# JSON object builders (plain dicts; callers json.dumps them)


def rectangle_to_obj(rect: Rectangle) -> dict[str, Any]:
    return {"color": rect.color, "rows": sorted(rect.rows), "cols": sorted(rect.cols)}


def _rectangle_from_obj(obj: Any) -> Rectangle:
    if not isinstance(obj, dict) or not {"color", "rows", "cols"} <= set(obj):
        raise FormatError("rectangle objects need color, rows, cols")
    try:
        return Rectangle(color=obj["color"], rows=frozenset(obj["rows"]), cols=frozenset(obj["cols"]))
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad rectangle: {exc}") from exc


def cover_to_obj(cover: RectangleCover) -> dict[str, Any]:
    return {
        "n_rows": cover.n_rows,
        "n_cols": cover.n_cols,
        "rectangles": [rectangle_to_obj(r) for r in cover.rectangles],
    }


def cover_from_obj(obj: Any) -> RectangleCover:
    if not isinstance(obj, dict) or not {"n_rows", "n_cols", "rectangles"} <= set(obj):
        raise FormatError("cover objects need n_rows, n_cols, rectangles")
    try:
        return RectangleCover(
            n_rows=obj["n_rows"],
            n_cols=obj["n_cols"],
            rectangles=tuple(_rectangle_from_obj(r) for r in obj["rectangles"]),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"bad cover: {exc}") from exc


def kpartite_to_obj(cover: KPartiteCover) -> dict[str, Any]:
    return {
        "k": cover.k,
        "n": cover.n,
        "pairs": [
            {"parts": [a, b], "rectangles": [rectangle_to_obj(r) for r in rects]}
            for a, b, rects in cover.pairs
        ],
    }


def kpartite_from_obj(obj: Any) -> KPartiteCover:
    if not isinstance(obj, dict) or not {"k", "n", "pairs"} <= set(obj):
        raise FormatError("k-partite objects need k, n, pairs")
    try:
        pairs = tuple(
            (
                entry["parts"][0],
                entry["parts"][1],
                tuple(_rectangle_from_obj(r) for r in entry["rectangles"]),
            )
            for entry in obj["pairs"]
        )
        return KPartiteCover(k=obj["k"], n=obj["n"], pairs=pairs)
    except (LookupError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"bad k-partite cover: {exc}") from exc


def clique_family_to_obj(family: "CliqueFamily") -> dict[str, Any]:
    return {
        "n_vertices": family.n_vertices,
        "cliques": [
            {"color": color, "vertices": sorted(vertices)} for color, vertices in family.cliques
        ],
    }


def clique_family_from_obj(obj: Any) -> "CliqueFamily":
    from .detect import CliqueFamily

    if not isinstance(obj, dict) or not {"n_vertices", "cliques"} <= set(obj):
        raise FormatError("clique family objects need n_vertices, cliques")
    try:
        cliques = tuple(
            (entry["color"], frozenset(entry["vertices"])) for entry in obj["cliques"]
        )
        return CliqueFamily(n_vertices=obj["n_vertices"], cliques=cliques)
    except (LookupError, TypeError, ValueError) as exc:
        raise FormatError(f"bad clique family: {exc}") from exc


def violation_to_obj(violation: Any) -> dict[str, Any]:
    if isinstance(violation, ShuffleViolation):
        return {
            "kind": "shuffle",
            "u": violation.u,
            "u_prime": violation.u_prime,
            "v": violation.v,
            "v_prime": violation.v_prime,
            "color": violation.color,
        }
    if isinstance(violation, CoverageViolation):
        return {"kind": "coverage", "row": violation.row, "col": violation.col}
    if isinstance(violation, LocalityViolation):
        return {
            "kind": "locality",
            "side": violation.side,
            "index": violation.index,
            "count": violation.count,
            "limit": violation.limit,
        }
    if isinstance(violation, KPartiteShuffleViolation):
        return {
            "kind": "kpartite_shuffle",
            "color": violation.color,
            "part_u": violation.part_u,
            "u": violation.u,
            "part_v": violation.part_v,
            "v": violation.v,
        }
    if isinstance(violation, KPartiteCoverageViolation):
        return {
            "kind": "kpartite_coverage",
            "part_a": violation.part_a,
            "part_b": violation.part_b,
            "row": violation.row,
            "col": violation.col,
        }
    raise TypeError(f"not a violation: {violation!r}")


def witness_to_obj(witness: Any) -> dict[str, Any]:
    from .detect import SuperimposedWitness

    if isinstance(witness, Witness):
        return {
            "kind": "witness",
            "color": witness.color,
            "rows": sorted(witness.rows),
            "cols": sorted(witness.cols),
        }
    if isinstance(witness, KPartiteWitness):
        return {
            "kind": "kpartite_witness",
            "color": witness.color,
            "parts": [sorted(p) for p in witness.parts],
        }
    if isinstance(witness, SuperimposedWitness):
        return {
            "kind": "superimposed_witness",
            "colors": sorted(witness.colors),
            "vertices": sorted(witness.vertices),
        }
    raise TypeError(f"not a witness: {witness!r}")


# ---------------------------------------------------------------------------
# sniffing loader


def load_instance(text: str):
    """Parse matrix text or any of the JSON formats, deciding by content.

    Returns a ColorMatrix, RectangleCover, KPartiteCover, or CliqueFamily.
    """
    stripped = text.lstrip()
    if not stripped:
        raise FormatError("empty input")
    if stripped[0] != "{":
        return parse_matrix(text)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise FormatError("top-level JSON value must be an object")
    if "rectangles" in obj:
        return cover_from_obj(obj)
    if "pairs" in obj:
        return kpartite_from_obj(obj)
    if "cliques" in obj:
        return clique_family_from_obj(obj)
    raise FormatError("unrecognized JSON object (expected a cover, k-partite cover, or clique family)")
