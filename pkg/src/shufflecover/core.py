"""Core types and validators for shuffle-preserved colorings.

An edge coloring of a complete bipartite multigraph is *shuffle-preserved*
when every color class is closed under swapping endpoints: if (u, v) and
(u', v') both carry color c, then (u, v') and (u', v) do too.  Equivalently,
each color class is a combinatorial rectangle, a row set crossed with a
column set.  That rectangle view is the working representation here: a
simple coloring is a :class:`ColorMatrix`, a multigraph coloring (parallel
edges allowed) is a :class:`RectangleCover` whose rectangles may overlap.

Indices are 0-based throughout.  Color ids are arbitrary non-negative
integers and need not be contiguous.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class OverlapError(ValueError):
    """Two rectangles share a cell where a simple coloring was required."""


class NotShufflePreserved(ValueError):
    """Raised when an operation requires a shuffle-preserved input.

    Carries the offending :class:`ShuffleViolation` as ``.violation``.
    """

    def __init__(self, violation: "ShuffleViolation"):
        super().__init__(f"not shuffle-preserved: {violation}")
        self.violation = violation


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class ColorMatrix:
    """Simple coloring of a complete bipartite graph: one color per cell."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells:
            raise ValueError("matrix needs at least one row")
        width = len(cells[0])
        if width == 0:
            raise ValueError("matrix needs at least one column")
        for row in cells:
            if len(row) != width:
                raise ValueError("ragged matrix rows")
            for value in row:
                if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                    raise ValueError(f"color ids must be non-negative integers, got {value!r}")

    @property
    def n_rows(self) -> int:
        return len(self.cells)

    @property
    def n_cols(self) -> int:
        return len(self.cells[0])

    def colors(self) -> set[int]:
        return {c for row in self.cells for c in row}


@dataclass(frozen=True)
class Rectangle:
    """One color class: every (row, col) in rows x cols carries this color."""

    color: int
    rows: frozenset[int]
    cols: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "rows", frozenset(self.rows))
        object.__setattr__(self, "cols", frozenset(self.cols))
        if not isinstance(self.color, int) or isinstance(self.color, bool) or self.color < 0:
            raise ValueError(f"color ids must be non-negative integers, got {self.color!r}")
        if not self.rows or not self.cols:
            raise ValueError("rectangle sides must be nonempty")
        for idx in self.rows | self.cols:
            if not isinstance(idx, int) or isinstance(idx, bool) or idx < 0:
                raise ValueError(f"indices must be non-negative integers, got {idx!r}")

    @property
    def min_side(self) -> int:
        return min(len(self.rows), len(self.cols))

    def area(self) -> int:
        return len(self.rows) * len(self.cols)


@dataclass(frozen=True)
class RectangleCover:
    """Multigraph coloring: one rectangle per color, overlaps allowed.

    Overlapping rectangles are parallel edges of distinct colors.  Coverage
    of every cell is a semantic requirement checked by
    :func:`check_coverage`, not by the constructor, so partially built
    covers are representable.
    """

    n_rows: int
    n_cols: int
    rectangles: tuple[Rectangle, ...]

    def __post_init__(self):
        object.__setattr__(self, "rectangles", tuple(self.rectangles))
        if self.n_rows < 1 or self.n_cols < 1:
            raise ValueError("cover dimensions must be positive")
        seen: set[int] = set()
        for rect in self.rectangles:
            if rect.color in seen:
                raise ValueError(f"duplicate color {rect.color} in cover")
            seen.add(rect.color)
            if max(rect.rows) >= self.n_rows or max(rect.cols) >= self.n_cols:
                raise ValueError(f"rectangle for color {rect.color} exceeds the grid")

    def colors(self) -> set[int]:
        return {r.color for r in self.rectangles}


@dataclass(frozen=True)
class LocalProfile:
    """Per-vertex color counts for a cover, plus the two summary widths."""

    row_counts: tuple[int, ...]
    col_counts: tuple[int, ...]
    local_width: int
    global_colors: int


@dataclass(frozen=True)
class ShuffleViolation:
    """Concrete failure of the swap property.

    Edges (u, v) and (u_prime, v_prime) both carry ``color`` but at least
    one of (u, v_prime), (u_prime, v) does not.
    """

    u: int
    u_prime: int
    v: int
    v_prime: int
    color: int

    kind = "shuffle"


@dataclass(frozen=True)
class CoverageViolation:
    """A cell no rectangle covers."""

    row: int
    col: int

    kind = "coverage"


@dataclass(frozen=True)
class LocalityViolation:
    """A vertex that sees more colors than the allowed budget."""

    side: str  # "row" or "col"
    index: int
    count: int
    limit: int

    kind = "locality"


Violation = ShuffleViolation | CoverageViolation | LocalityViolation


@dataclass(frozen=True)
class Witness:
    """A monochromatic complete bipartite subgraph, truncated to p x p."""

    color: int
    rows: frozenset[int]
    cols: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "rows", frozenset(self.rows))
        object.__setattr__(self, "cols", frozenset(self.cols))

    kind = "witness"


@dataclass(frozen=True)
class KPartiteWitness:
    """A monochromatic complete k-partite subgraph, p vertices per part."""

    color: int
    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(frozenset(p) for p in self.parts))

    kind = "kpartite_witness"


@dataclass(frozen=True)
class KPartiteCover:
    """Coloring of a complete k-partite multigraph, all parts of size n.

    Edges between parts a < b are given as rectangles whose ``rows`` index
    part a and ``cols`` index part b.  Unlike :class:`RectangleCover`,
    colors may repeat across (and within) pairs: the same global color can
    touch many part pairs.
    """

    k: int
    n: int
    pairs: tuple[tuple[int, int, tuple[Rectangle, ...]], ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("need at least two parts")
        if self.n < 1:
            raise ValueError("parts must be nonempty")
        canon = []
        seen_pairs = set()
        for a, b, rects in self.pairs:
            if not (0 <= a < b < self.k):
                raise ValueError(f"bad part pair ({a}, {b})")
            if (a, b) in seen_pairs:
                raise ValueError(f"duplicate part pair ({a}, {b})")
            seen_pairs.add((a, b))
            rects = tuple(rects)
            for rect in rects:
                if max(rect.rows) >= self.n or max(rect.cols) >= self.n:
                    raise ValueError(f"rectangle exceeds part size in pair ({a}, {b})")
            canon.append((a, b, rects))
        canon.sort(key=lambda e: (e[0], e[1]))
        object.__setattr__(self, "pairs", tuple(canon))

    def rectangles_between(self, a: int, b: int) -> tuple[Rectangle, ...]:
        if a > b:
            raise ValueError("pairs are stored with a < b")
        for pa, pb, rects in self.pairs:
            if (pa, pb) == (a, b):
                return rects
        return ()

    def colors(self) -> set[int]:
        return {r.color for _, _, rects in self.pairs for r in rects}

    def touched_sets(self, color: int) -> list[set[int]]:
        """Per-part vertex sets incident to an edge of ``color``."""
        touched: list[set[int]] = [set() for _ in range(self.k)]
        for a, b, rects in self.pairs:
            for rect in rects:
                if rect.color == color:
                    touched[a].update(rect.rows)
                    touched[b].update(rect.cols)
        return touched


@dataclass(frozen=True)
class KPartiteShuffleViolation:
    """Color touches both endpoints' parts but the edge between them is missing."""

    color: int
    part_u: int
    u: int
    part_v: int
    v: int

    kind = "kpartite_shuffle"


@dataclass(frozen=True)
class KPartiteCoverageViolation:
    """A cross-part vertex pair no edge of any color connects."""

    part_a: int
    part_b: int
    row: int
    col: int

    kind = "kpartite_coverage"


# ---------------------------------------------------------------------------
# validators and conversions


def validate_shuffle_preserved(matrix: ColorMatrix) -> ShuffleViolation | None:
    """Check the swap property; return None if it holds.

    On failure returns a :class:`ShuffleViolation` whose four edges re-check
    against the matrix: (u, v) and (u_prime, v_prime) carry the color,
    (u, v_prime) does not.
    """
    spans: dict[int, tuple[set[int], set[int]]] = {}
    for r, row in enumerate(matrix.cells):
        for c, color in enumerate(row):
            rows, cols = spans.setdefault(color, (set(), set()))
            rows.add(r)
            cols.add(c)
    for color in sorted(spans):
        rows, cols = spans[color]
        for r in sorted(rows):
            row = matrix.cells[r]
            for c in sorted(cols):
                if row[c] != color:
                    # (r, c) is in the rectangle span but miscolored; pick
                    # witnesses from the same row and column.
                    v = next(x for x in sorted(cols) if row[x] == color)
                    u_prime = next(x for x in sorted(rows) if matrix.cells[x][c] == color)
                    return ShuffleViolation(u=r, u_prime=u_prime, v=v, v_prime=c, color=color)
    return None


def matrix_to_rectangles(matrix: ColorMatrix) -> RectangleCover:
    """Convert a shuffle-preserved matrix to its rectangle cover.

    Raises :class:`NotShufflePreserved` (carrying the violation) otherwise.
    Rectangles come out sorted by color id.
    """
    violation = validate_shuffle_preserved(matrix)
    if violation is not None:
        raise NotShufflePreserved(violation)
    spans: dict[int, tuple[set[int], set[int]]] = {}
    for r, row in enumerate(matrix.cells):
        for c, color in enumerate(row):
            rows, cols = spans.setdefault(color, (set(), set()))
            rows.add(r)
            cols.add(c)
    rects = tuple(
        Rectangle(color=color, rows=frozenset(spans[color][0]), cols=frozenset(spans[color][1]))
        for color in sorted(spans)
    )
    return RectangleCover(n_rows=matrix.n_rows, n_cols=matrix.n_cols, rectangles=rects)


def rectangles_to_matrix(cover: RectangleCover) -> ColorMatrix:
    """Flatten a disjoint, covering rectangle family back to a matrix.

    Raises :class:`OverlapError` if two rectangles share a cell and
    ValueError if some cell is uncovered (a multigraph or partial cover has
    no matrix form).
    """
    grid: list[list[int | None]] = [[None] * cover.n_cols for _ in range(cover.n_rows)]
    for rect in cover.rectangles:
        for r in rect.rows:
            row = grid[r]
            for c in rect.cols:
                if row[c] is not None:
                    raise OverlapError(
                        f"cell ({r}, {c}) lies in rectangles of colors {row[c]} and {rect.color}"
                    )
                row[c] = rect.color
    for r, row in enumerate(grid):
        for c, value in enumerate(row):
            if value is None:
                raise ValueError(f"cell ({r}, {c}) is uncovered; no matrix form exists")
    return ColorMatrix(tuple(tuple(row) for row in grid))  # type: ignore[arg-type]


def check_coverage(cover: RectangleCover) -> CoverageViolation | None:
    """Return the first (row-major) uncovered cell, or None if all covered."""
    row_hits = [0] * cover.n_rows
    covered = [[False] * cover.n_cols for _ in range(cover.n_rows)]
    for rect in cover.rectangles:
        for r in rect.rows:
            row_hits[r] += 1
            row = covered[r]
            for c in rect.cols:
                row[c] = True
    for r in range(cover.n_rows):
        if row_hits[r] == 0:
            return CoverageViolation(row=r, col=0)
        for c in range(cover.n_cols):
            if not covered[r][c]:
                return CoverageViolation(row=r, col=c)
    return None


def local_profile(cover: RectangleCover) -> LocalProfile:
    """Count how many colors each vertex sees.

    A row vertex sees the colors of exactly the rectangles whose row set
    contains it (colors are distinct per rectangle), so membership counts
    are color counts.
    """
    row_counts = [0] * cover.n_rows
    col_counts = [0] * cover.n_cols
    for rect in cover.rectangles:
        for r in rect.rows:
            row_counts[r] += 1
        for c in rect.cols:
            col_counts[c] += 1
    width = max(max(row_counts, default=0), max(col_counts, default=0))
    return LocalProfile(
        row_counts=tuple(row_counts),
        col_counts=tuple(col_counts),
        local_width=width,
        global_colors=len(cover.rectangles),
    )


def matrix_local_profile(matrix: ColorMatrix) -> LocalProfile:
    """Color counts per vertex for a plain matrix (no shuffle assumption)."""
    row_counts = tuple(len(set(row)) for row in matrix.cells)
    col_counts = tuple(
        len({matrix.cells[r][c] for r in range(matrix.n_rows)}) for c in range(matrix.n_cols)
    )
    return LocalProfile(
        row_counts=row_counts,
        col_counts=col_counts,
        local_width=max(max(row_counts), max(col_counts)),
        global_colors=len(matrix.colors()),
    )


def locality_violation(profile: LocalProfile, limit: int) -> LocalityViolation | None:
    """First vertex (rows before cols) exceeding ``limit`` colors, if any."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    for i, count in enumerate(profile.row_counts):
        if count > limit:
            return LocalityViolation(side="row", index=i, count=count, limit=limit)
    for i, count in enumerate(profile.col_counts):
        if count > limit:
            return LocalityViolation(side="col", index=i, count=count, limit=limit)
    return None


def triple_count(cover: RectangleCover) -> int:
    """Number of (u, v, c) triples with u and v both incident to color c.

    Equals the total rectangle area since a color is incident to row u and
    column v exactly when its rectangle contains the cell (u, v).
    """
    return sum(rect.area() for rect in cover.rectangles)


# ---------------------------------------------------------------------------
# k-partite validators


def _kpartite_edge_colors(cover: KPartiteCover) -> dict[tuple[int, int], dict[tuple[int, int], set[int]]]:
    edges: dict[tuple[int, int], dict[tuple[int, int], set[int]]] = {}
    for a, b, rects in cover.pairs:
        cellmap = edges.setdefault((a, b), {})
        for rect in rects:
            for u in rect.rows:
                for v in rect.cols:
                    cellmap.setdefault((u, v), set()).add(rect.color)
    return edges


def validate_kpartite(cover: KPartiteCover) -> KPartiteShuffleViolation | None:
    """Check the multipartite swap property.

    For every color c and every two parts a != b that c touches, every pair
    (u, v) with u in the touched set of a and v in the touched set of b must
    carry an edge of color c.  Returns the first missing pair found, or None.
    """
    edges = _kpartite_edge_colors(cover)
    for color in sorted(cover.colors()):
        touched = cover.touched_sets(color)
        for a in range(cover.k):
            if not touched[a]:
                continue
            for b in range(a + 1, cover.k):
                if not touched[b]:
                    continue
                cellmap = edges.get((a, b), {})
                for u in sorted(touched[a]):
                    for v in sorted(touched[b]):
                        if color not in cellmap.get((u, v), ()):
                            return KPartiteShuffleViolation(
                                color=color, part_u=a, u=u, part_v=b, v=v
                            )
    return None


def check_kpartite_coverage(cover: KPartiteCover) -> KPartiteCoverageViolation | None:
    """First cross-part vertex pair with no edge at all, or None if complete."""
    edges = _kpartite_edge_colors(cover)
    for a in range(cover.k):
        for b in range(a + 1, cover.k):
            cellmap = edges.get((a, b), {})
            for u in range(cover.n):
                for v in range(cover.n):
                    if (u, v) not in cellmap:
                        return KPartiteCoverageViolation(part_a=a, part_b=b, row=u, col=v)
    return None


# ---------------------------------------------------------------------------
# bound calculators


def guaranteed_p(n: int, m: int) -> int:
    """Largest p (capped at n) such that every m-local shuffle-preserved
    coloring of the n x n complete bipartite multigraph is forced to contain
    a monochromatic K_{p,p}.

    For m >= 2 this is the largest p <= n with 2(p-1)(m-1) < n.  A 1-local
    coloring collapses to a single color, so m = 1 gives n.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if m == 1:
        return n
    return min(n, (n - 1) // (2 * (m - 1)) + 1)


def avoidance_threshold(n: int, m: int) -> int:
    """ceil(n/m): the mod-m construction packs each color into at most this
    many rows, so monochromatic K_{p,p} with p above this value are avoidable
    by an m-coloring (hence also m-locally)."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    return -(-n // m)
