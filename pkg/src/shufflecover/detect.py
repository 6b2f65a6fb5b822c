"""Monochromatic-subgraph detectors and superimposed-clique counting.

The fast bipartite detector reads witnesses straight off rectangle sides;
the brute-force detector enumerates row subsets over column bitmasks with
no structural assumptions and serves as the oracle the fast path is checked
against.  The k-partite detector follows the inductive argument for
2-colorings literally: strip a part, recurse, pigeonhole two same-colored
sub-witnesses, and merge through the touched sets.

Superimposed cliques: given one clique of vertices per color on a shared
vertex set, a t-subset of colors is *t-superimposed* on the intersection of
its cliques.  :func:`superimposed_bound` gives the averaging lower bound
for the best t-subset; :func:`max_superimposed` finds it exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from .core import (
    ColorMatrix,
    KPartiteCover,
    KPartiteWitness,
    NotShufflePreserved,
    RectangleCover,
    Witness,
    check_kpartite_coverage,
    validate_kpartite,
)


class InstanceTooLarge(ValueError):
    """Brute-force input exceeds the documented size guard."""


class TooManySubsets(ValueError):
    """Exact superimposed search would enumerate too many color subsets."""


class NotTwoColored(ValueError):
    """The 2-coloring guarantee was invoked on a different color count."""


@dataclass(frozen=True)
class CliqueFamily:
    """One clique of vertices per color on a shared vertex set 0..n-1."""

    n_vertices: int
    cliques: tuple[tuple[int, frozenset[int]], ...]

    def __post_init__(self):
        if self.n_vertices < 1:
            raise ValueError("need at least one vertex")
        canon = []
        seen = set()
        for color, vertices in self.cliques:
            if not isinstance(color, int) or isinstance(color, bool) or color < 0:
                raise ValueError(f"color ids must be non-negative integers, got {color!r}")
            if color in seen:
                raise ValueError(f"duplicate color {color}")
            seen.add(color)
            vertices = frozenset(vertices)
            if not vertices:
                raise ValueError(f"clique for color {color} is empty")
            if not all(isinstance(v, int) and 0 <= v < self.n_vertices for v in vertices):
                raise ValueError(f"clique for color {color} has out-of-range vertices")
            canon.append((color, vertices))
        canon.sort(key=lambda e: e[0])
        object.__setattr__(self, "cliques", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.cliques)

    def membership_histogram(self) -> dict[int, int]:
        """d_i: how many vertices lie in exactly i cliques (i >= 1 only)."""
        per_vertex: dict[int, int] = {}
        for _, vertices in self.cliques:
            for v in vertices:
                per_vertex[v] = per_vertex.get(v, 0) + 1
        hist: dict[int, int] = {}
        for count in per_vertex.values():
            hist[count] = hist.get(count, 0) + 1
        return hist


@dataclass(frozen=True)
class SuperimposedWitness:
    """A color subset together with the vertices common to all its cliques."""

    colors: frozenset[int]
    vertices: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "colors", frozenset(self.colors))
        object.__setattr__(self, "vertices", frozenset(self.vertices))

    kind = "superimposed_witness"


# ---------------------------------------------------------------------------
# bipartite detectors

EdgeTriple = tuple[int, int, int]
BruteInput = Union[ColorMatrix, RectangleCover, Iterable[EdgeTriple]]


def find_mono_biclique_fast(cover: RectangleCover, p: int) -> Witness | None:
    """First rectangle (in cover order) with both sides >= p, truncated to
    its lowest p rows and columns.  Shuffle-preservation makes this scan
    complete: every monochromatic biclique sits inside its color's rectangle.
    """
    if p < 1:
        raise ValueError("p must be positive")
    for rect in cover.rectangles:
        if len(rect.rows) >= p and len(rect.cols) >= p:
            return Witness(
                color=rect.color,
                rows=frozenset(sorted(rect.rows)[:p]),
                cols=frozenset(sorted(rect.cols)[:p]),
            )
    return None


def _edge_triples(graph: BruteInput) -> tuple[int, int, int, list[EdgeTriple]]:
    """Normalize any brute-force input to (n_rows, n_cols, edges)."""
    if isinstance(graph, ColorMatrix):
        edges = [
            (r, c, color)
            for r, row in enumerate(graph.cells)
            for c, color in enumerate(row)
        ]
        return graph.n_rows, graph.n_cols, edges
    if isinstance(graph, RectangleCover):
        edges = [
            (r, c, rect.color)
            for rect in graph.rectangles
            for r in rect.rows
            for c in rect.cols
        ]
        return graph.n_rows, graph.n_cols, edges
    edges = list(graph)
    n_rows = n_cols = 0
    for u, v, color in edges:
        if u < 0 or v < 0 or color < 0:
            raise ValueError("edge triples must be non-negative (row, col, color)")
        n_rows = max(n_rows, u + 1)
        n_cols = max(n_cols, v + 1)
    return n_rows, n_cols, edges


def find_mono_biclique_brute(
    graph: BruteInput, p: int, *, max_n: int = 24, max_p: int = 6
) -> Witness | None:
    """Exhaustive monochromatic K_{p,p} search, no shuffle assumption.

    Accepts a matrix, a cover, or raw (row, col, color) triples.  Per color,
    rows carrying >= p edges of that color are enumerated as p-subsets and
    their column bitmasks intersected.  Colors ascend and subsets run in
    lexicographic order, so the returned witness is deterministic.

    p greater than either dimension returns None outright.  Beyond that the
    guard raises :class:`InstanceTooLarge` for sides > max_n (default 24,
    chosen so column masks fit comfortably in machine words) or p > max_p
    (default 6); both limits are overridable keywords.
    """
    if p < 1:
        raise ValueError("p must be positive")
    n_rows, n_cols, edges = _edge_triples(graph)
    if n_rows == 0 or n_cols == 0 or p > min(n_rows, n_cols):
        return None
    if max(n_rows, n_cols) > max_n:
        raise InstanceTooLarge(f"sides up to {max(n_rows, n_cols)} exceed the guard ({max_n})")
    if p > max_p:
        raise InstanceTooLarge(f"p={p} exceeds the guard ({max_p})")

    masks: dict[int, dict[int, int]] = {}
    for u, v, color in edges:
        rows = masks.setdefault(color, {})
        rows[u] = rows.get(u, 0) | (1 << v)
    for color in sorted(masks):
        candidate_rows = sorted(
            u for u, mask in masks[color].items() if mask.bit_count() >= p
        )
        if len(candidate_rows) < p:
            continue
        for subset in combinations(candidate_rows, p):
            common = masks[color][subset[0]]
            for u in subset[1:]:
                common &= masks[color][u]
                if common.bit_count() < p:
                    break
            else:
                cols = []
                while len(cols) < p:
                    low = common & -common
                    cols.append(low.bit_length() - 1)
                    common ^= low
                return Witness(color=color, rows=frozenset(subset), cols=frozenset(cols))
    return None


def verify_biclique_witness(graph: BruteInput, witness: Witness, p: int) -> bool:
    """Edge-by-edge check that the witness is a monochromatic K_{p,p}."""
    if len(witness.rows) < p or len(witness.cols) < p:
        return False
    _, _, edges = _edge_triples(graph)
    present = {(u, v) for u, v, color in edges if color == witness.color}
    return all((u, v) in present for u in witness.rows for v in witness.cols)


# ---------------------------------------------------------------------------
# k-partite detection


def _restrict(cover: KPartiteCover, drop: int) -> KPartiteCover:
    """Remove one part and relabel the rest, preserving order."""
    relabel = {old: new for new, old in enumerate(i for i in range(cover.k) if i != drop)}
    pairs = tuple(
        (relabel[a], relabel[b], rects)
        for a, b, rects in cover.pairs
        if a != drop and b != drop
    )
    return KPartiteCover(k=cover.k - 1, n=cover.n, pairs=pairs)


def _mono_kpartite(cover: KPartiteCover, p: int) -> KPartiteWitness | None:
    if cover.k == 2:
        by_color: dict[int, tuple[set[int], set[int]]] = {}
        for rect in cover.rectangles_between(0, 1):
            rows, cols = by_color.setdefault(rect.color, (set(), set()))
            rows.update(rect.rows)
            cols.update(rect.cols)
        for color in sorted(by_color):
            rows, cols = by_color[color]
            if len(rows) >= p and len(cols) >= p:
                return KPartiteWitness(
                    color=color,
                    parts=(frozenset(sorted(rows)[:p]), frozenset(sorted(cols)[:p])),
                )
        return None

    sub_witnesses: list[KPartiteWitness] = []
    for drop in range(cover.k):
        w = _mono_kpartite(_restrict(cover, drop), p)
        if w is None:
            return None
        sub_witnesses.append(w)
    # k >= 3 witnesses, 2 colors: some two dropped parts share a color.
    color = None
    for i in range(cover.k):
        for j in range(i + 1, cover.k):
            if sub_witnesses[i].color == sub_witnesses[j].color:
                color = sub_witnesses[i].color
                break
        if color is not None:
            break
    assert color is not None
    touched = cover.touched_sets(color)
    if any(len(t) < p for t in touched):
        raise RuntimeError("touched sets shrank below p on validated input")
    return KPartiteWitness(
        color=color, parts=tuple(frozenset(sorted(t)[:p]) for t in touched)
    )


def find_mono_kpartite(cover: KPartiteCover, p: int) -> KPartiteWitness | None:
    """Monochromatic complete k-partite subgraph with p vertices per part,
    for complete shuffle-preserved 2-colorings.

    Strips one part at a time, recurses down to the bipartite base (a
    rectangle-side scan), then pigeonholes two same-colored sub-witnesses;
    the swap property turns their union into p touched vertices in every
    part.  Guaranteed to succeed when 2(p-1) < n; may return None above
    that.  Raises :class:`NotTwoColored` or :class:`NotShufflePreserved`
    (also used for incomplete coverage) on bad input.
    """
    if p < 1:
        raise ValueError("p must be positive")
    colors = cover.colors()
    if len(colors) != 2:
        raise NotTwoColored(f"need exactly 2 colors, got {sorted(colors)}")
    violation = validate_kpartite(cover)
    if violation is not None:
        raise NotShufflePreserved(violation)  # type: ignore[arg-type]
    gap = check_kpartite_coverage(cover)
    if gap is not None:
        raise NotShufflePreserved(gap)  # type: ignore[arg-type]
    if p > cover.n:
        return None
    return _mono_kpartite(cover, p)


def find_mono_kpartite_brute(
    cover: KPartiteCover, p: int, *, max_combos: int = 10**6
) -> KPartiteWitness | None:
    """Exhaustive k-partite search by vertex enumeration, no assumptions.

    The independent oracle for :func:`find_mono_kpartite` and for the
    avoidance constructions: walks p-subsets part by part, checking every
    cross edge against the raw edge sets.  Any color count is fine.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if p > cover.n:
        return None
    per_part = math.comb(cover.n, p)
    if per_part**cover.k > max_combos:
        raise InstanceTooLarge(
            f"{per_part ** cover.k} vertex combinations exceed the guard ({max_combos})"
        )
    edges: dict[tuple[int, int], set[tuple[int, int]]] = {}
    for a, b, rects in cover.pairs:
        for rect in rects:
            per_color = edges.setdefault((a, b), set())
            for u in rect.rows:
                for v in rect.cols:
                    per_color.add((rect.color, u * cover.n + v))
    colors = sorted(cover.colors())

    def compatible(color: int, chosen: list[tuple[int, ...]], part: int, pick: tuple[int, ...]) -> bool:
        for a, prior in enumerate(chosen):
            pair_edges = edges.get((a, part), set())
            for u in prior:
                for v in pick:
                    if (color, u * cover.n + v) not in pair_edges:
                        return False
        return True

    def extend(color: int, chosen: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...] | None:
        part = len(chosen)
        if part == cover.k:
            return tuple(chosen)
        for pick in combinations(range(cover.n), p):
            if compatible(color, chosen, part, pick):
                chosen.append(pick)
                result = extend(color, chosen)
                if result is not None:
                    return result
                chosen.pop()
        return None

    for color in colors:
        result = extend(color, [])
        if result is not None:
            return KPartiteWitness(color=color, parts=tuple(frozenset(t) for t in result))
    return None


def verify_kpartite_witness(cover: KPartiteCover, witness: KPartiteWitness, p: int) -> bool:
    """Edge-by-edge check of a k-partite witness against the raw edges."""
    if len(witness.parts) != cover.k or any(len(part) < p for part in witness.parts):
        return False
    edges: dict[tuple[int, int], set[tuple[int, int]]] = {}
    for a, b, rects in cover.pairs:
        cells = edges.setdefault((a, b), set())
        for rect in rects:
            if rect.color == witness.color:
                cells.update((u, v) for u in rect.rows for v in rect.cols)
    for a in range(cover.k):
        for b in range(a + 1, cover.k):
            cells = edges.get((a, b), set())
            for u in witness.parts[a]:
                for v in witness.parts[b]:
                    if (u, v) not in cells:
                        return False
    return True


# ---------------------------------------------------------------------------
# superimposed cliques


def superimposed_bound(family: CliqueFamily, t: int) -> int:
    """Averaging lower bound on the best t-subset intersection.

    Counting (vertex, t-subset of covering colors) pairs two ways: a vertex
    in exactly i cliques contributes C(i, t), and the C(m, t) subsets share
    the total, so the best subset meets at least the ceiling of the mean.
    Exact integer arithmetic throughout.
    """
    m = family.m
    if not 1 <= t <= m:
        raise ValueError(f"t must be in 1..{m}, got {t}")
    total = sum(
        count * math.comb(i, t)
        for i, count in family.membership_histogram().items()
        if i >= t
    )
    return -(-total // math.comb(m, t))


def max_superimposed(
    family: CliqueFamily, t: int, *, max_subsets: int = 10**6
) -> SuperimposedWitness:
    """Exact best t-subset by enumeration, lexicographically smallest color
    set on ties.  Raises :class:`TooManySubsets` past the subset guard."""
    m = family.m
    if not 1 <= t <= m:
        raise ValueError(f"t must be in 1..{m}, got {t}")
    if math.comb(m, t) > max_subsets:
        raise TooManySubsets(f"C({m}, {t}) exceeds the guard ({max_subsets})")
    by_color = dict(family.cliques)
    best: tuple[frozenset[int], frozenset[int]] | None = None
    for subset in combinations(sorted(by_color), t):
        common = frozenset.intersection(*(by_color[c] for c in subset))
        if best is None or len(common) > len(best[1]):
            best = (frozenset(subset), common)
    assert best is not None
    return SuperimposedWitness(colors=best[0], vertices=best[1])
