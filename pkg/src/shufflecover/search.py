"""Exhaustive search for colorings that avoid a monochromatic K_{p,p}.

An m-local shuffle-preserved multigraph coloring of the n x n grid with no
monochromatic K_{p,p} exists exactly when the grid has a rectangle cover in
which every rectangle's thin side is at most p-1 and every row and column
lies in at most m rectangles.  The search runs over that cover space:
depth-first, branching on the lexicographically first uncovered cell,
enumerating candidate rectangles through it in a fixed thin-side-first
order.

Pruning is dominance-based and provably complete: rows above the branching
row are fully covered, so candidate rectangles never include them; rows and
columns contributing no uncovered cell are dropped; lines with exhausted
budget but uncovered cells kill the node; failed states are memoized.
Verdicts are SAT (with a certificate cover), UNSAT (search space exhausted),
or INCONCLUSIVE (timeout or node budget hit; never reported as UNSAT).

Practical envelope: n <= 4 is instant, n = 5 takes seconds per cell, n = 6
can take minutes on adversarial cells.  ``workers > 1`` splits the root
candidates across processes; verdicts match the single-worker run whenever
no time or node budget binds (each worker enforces the budgets on its own
subtree, so which cells come back INCONCLUSIVE under a binding budget can
depend on scheduling).
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Iterator

from .core import Rectangle, RectangleCover, avoidance_threshold, guaranteed_p

_MEMO_CAP = 4_000_000

SAT = "SAT"
UNSAT = "UNSAT"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class SearchParams:
    """Problem cell (n, m, p) plus optional wall-clock and node budgets."""

    n: int
    m: int
    p: int
    timeout: float | None = None
    node_limit: int | None = None

    def __post_init__(self):
        if self.n < 1 or self.m < 1 or self.p < 1:
            raise ValueError("n, m, p must be positive")
        if self.timeout is not None and self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node_limit must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: dict[str, int] = field(default_factory=dict)
    millis: float = 0.0


@dataclass(frozen=True)
class SearchOutcome:
    verdict: str
    witness: RectangleCover | None
    stats: SearchStats


@dataclass(frozen=True)
class TableRow:
    n: int
    m: int
    p: int
    regime: str
    verdict: str
    nodes: int
    millis: float


class _Abort(Exception):
    def __init__(self, reason: str):
        self.reason = reason


class _Searcher:
    def __init__(self, n: int, m: int, p: int, deadline: float | None, node_limit: int | None):
        self.n = n
        self.m = m
        self.p = p
        self.full = (1 << (n * n)) - 1
        self.row_mask = [((1 << n) - 1) << (r * n) for r in range(n)]
        self.col_mask = [
            sum(1 << (r * n + c) for r in range(n)) for c in range(n)
        ]
        self.deadline = deadline
        self.node_limit = node_limit
        self.nodes = 0
        self.prunes: Counter[str] = Counter()
        self.memo: set[tuple[int, bytes, bytes]] = set()
        self.witness: list[tuple[tuple[int, ...], tuple[int, ...]]] | None = None

    # -- candidate enumeration ------------------------------------------

    def candidates(
        self, covered: int, row_used: list[int], col_used: list[int]
    ) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """All dominance-canonical rectangles through the first uncovered
        cell, as (rows, cols, cell_mask), thin-side-first."""
        n, m, thin_cap = self.n, self.m, self.p - 1
        uncov = ~covered & self.full
        idx = (uncov & -uncov).bit_length() - 1
        r0, c0 = divmod(idx, n)
        extra_rows = [
            r
            for r in range(r0 + 1, n)
            if row_used[r] < m and uncov & self.row_mask[r]
        ]
        budget_cols = [c for c in range(n) if c != c0 and col_used[c] < m]
        out = []
        for row_bits in range(1 << len(extra_rows)):
            rows = [r0]
            bits = row_bits
            i = 0
            while bits:
                if bits & 1:
                    rows.append(extra_rows[i])
                bits >>= 1
                i += 1
            rows_mask = 0
            for r in rows:
                rows_mask |= self.row_mask[r]
            useful_cols = [
                c for c in budget_cols if uncov & self.col_mask[c] & rows_mask
            ]
            for col_bits in range(1 << len(useful_cols)):
                cols = [c0]
                bits = col_bits
                i = 0
                while bits:
                    if bits & 1:
                        cols.append(useful_cols[i])
                    bits >>= 1
                    i += 1
                if min(len(rows), len(cols)) > thin_cap:
                    continue
                cols_bits_row = 0
                for c in cols:
                    cols_bits_row |= 1 << c
                cell_mask = 0
                for r in rows:
                    cell_mask |= cols_bits_row << (r * n)
                # mutual usefulness: every extra line must bring a new cell
                if any(not uncov & self.row_mask[r] & cell_mask for r in rows if r != r0):
                    continue
                if any(not uncov & self.col_mask[c] & cell_mask for c in cols if c != c0):
                    continue
                out.append((tuple(sorted(rows)), tuple(sorted(cols)), cell_mask))
        out.sort(
            key=lambda cand: (
                min(len(cand[0]), len(cand[1])),
                -len(cand[0]) * len(cand[1]),
                cand[0],
                cand[1],
            )
        )
        return out

    # -- depth-first search ---------------------------------------------

    def dfs(
        self,
        covered: int,
        row_used: list[int],
        col_used: list[int],
        chosen: list[tuple[tuple[int, ...], tuple[int, ...]]],
    ) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Abort("nodes")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Abort("timeout")
        if covered == self.full:
            self.witness = list(chosen)
            return True
        uncov = ~covered & self.full
        for r in range(self.n):
            if row_used[r] == self.m and uncov & self.row_mask[r]:
                self.prunes["dead_line"] += 1
                return False
        for c in range(self.n):
            if col_used[c] == self.m and uncov & self.col_mask[c]:
                self.prunes["dead_line"] += 1
                return False
        key = (covered, bytes(row_used), bytes(col_used))
        if key in self.memo:
            self.prunes["memo"] += 1
            return False
        cands = self.candidates(covered, row_used, col_used)
        if not cands:
            self.prunes["no_candidates"] += 1
            if len(self.memo) < _MEMO_CAP:
                self.memo.add(key)
            return False
        for rows, cols, cell_mask in cands:
            for r in rows:
                row_used[r] += 1
            for c in cols:
                col_used[c] += 1
            chosen.append((rows, cols))
            if self.dfs(covered | cell_mask, row_used, col_used, chosen):
                return True
            chosen.pop()
            for r in rows:
                row_used[r] -= 1
            for c in cols:
                col_used[c] -= 1
        if len(self.memo) < _MEMO_CAP:
            self.memo.add(key)
        return False


def _witness_cover(n: int, rects: list[tuple[tuple[int, ...], tuple[int, ...]]]) -> RectangleCover:
    return RectangleCover(
        n_rows=n,
        n_cols=n,
        rectangles=tuple(
            Rectangle(color=i, rows=frozenset(rows), cols=frozenset(cols))
            for i, (rows, cols) in enumerate(rects)
        ),
    )


def _run_rooted(
    n: int,
    m: int,
    p: int,
    timeout: float | None,
    node_limit: int | None,
    root: tuple[tuple[int, ...], tuple[int, ...], int] | None,
) -> tuple[str, list | None, int, dict[str, int]]:
    """Run one (sub)search; root, if given, is a first rectangle to apply."""
    deadline = time.monotonic() + timeout if timeout is not None else None
    searcher = _Searcher(n, m, p, deadline, node_limit)
    covered = 0
    row_used = [0] * n
    col_used = [0] * n
    chosen: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    if root is not None:
        rows, cols, cell_mask = root
        for r in rows:
            row_used[r] += 1
        for c in cols:
            col_used[c] += 1
        covered = cell_mask
        chosen.append((rows, cols))
    try:
        sat = searcher.dfs(covered, row_used, col_used, chosen)
    except _Abort as abort:
        searcher.prunes[f"abort_{abort.reason}"] += 1
        return INCONCLUSIVE, None, searcher.nodes, dict(searcher.prunes)
    if sat:
        return SAT, searcher.witness, searcher.nodes, dict(searcher.prunes)
    return UNSAT, None, searcher.nodes, dict(searcher.prunes)


def _subtree_task(args) -> tuple[str, list | None, int, dict[str, int]]:
    return _run_rooted(*args)


def search_avoiding(params: SearchParams, workers: int = 1) -> SearchOutcome:
    """Decide whether an avoiding cover exists for the cell (n, m, p).

    SAT outcomes carry a certificate :class:`RectangleCover` (coverage
    complete, local width <= m, every thin side <= p-1) with colors numbered
    in discovery order.  UNSAT means the dominance-canonical space was
    exhausted.  Budgets produce INCONCLUSIVE.
    """
    if workers < 1:
        raise ValueError("workers must be positive")
    n, m, p = params.n, params.m, params.p
    start = time.monotonic()
    if workers == 1:
        verdict, rects, nodes, prunes = _run_rooted(
            n, m, p, params.timeout, params.node_limit, None
        )
        millis = (time.monotonic() - start) * 1000.0
        witness = _witness_cover(n, rects) if rects is not None else None
        return SearchOutcome(verdict, witness, SearchStats(nodes, prunes, millis))

    scout = _Searcher(n, m, p, None, None)
    roots = scout.candidates(0, [0] * n, [0] * n)
    if not roots:
        millis = (time.monotonic() - start) * 1000.0
        return SearchOutcome(UNSAT, None, SearchStats(1, {"no_candidates": 1}, millis))
    remaining = params.timeout
    tasks = [(n, m, p, remaining, params.node_limit, root) for root in roots]
    verdicts: list[str] = []
    nodes_total = 1
    prunes_total: Counter[str] = Counter()
    witness = None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending = {pool.submit(_subtree_task, task) for task in tasks}
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                verdict, rects, nodes, prunes = fut.result()
                verdicts.append(verdict)
                nodes_total += nodes
                prunes_total.update(prunes)
                if verdict == SAT and witness is None:
                    witness = _witness_cover(n, rects)
                    for other in pending:
                        other.cancel()
                    pending = set()
                    break
    millis = (time.monotonic() - start) * 1000.0
    if witness is not None:
        verdict = SAT
    elif any(v == INCONCLUSIVE for v in verdicts):
        verdict = INCONCLUSIVE
    else:
        verdict = UNSAT
    return SearchOutcome(verdict, witness, SearchStats(nodes_total, dict(prunes_total), millis))


def threshold_table(
    n_max: int,
    m_max: int | None = None,
    p_max: int | None = None,
    *,
    timeout_per_cell: float | None = None,
    node_limit: int | None = None,
    workers: int = 1,
) -> Iterator[TableRow]:
    """Sweep all cells (n, m, p) up to the given maxima, yielding one row per
    cell as it is decided.

    ``regime`` classifies each cell against the closed-form bounds:
    guaranteed (p <= guaranteed_p(n, m): every valid coloring contains a
    monochromatic K_{p,p}, so the search must come back UNSAT), avoidable
    (p > ceil(n/m): the mod-m construction avoids, so SAT), or open (the
    search is the tie-breaker).
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if m_max is None:
        m_max = n_max
    if p_max is None:
        p_max = n_max + 1
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            for p in range(1, p_max + 1):
                if p <= guaranteed_p(n, m):
                    regime = "guaranteed"
                elif p > avoidance_threshold(n, m):
                    regime = "avoidable"
                else:
                    regime = "open"
                outcome = search_avoiding(
                    SearchParams(n, m, p, timeout=timeout_per_cell, node_limit=node_limit),
                    workers=workers,
                )
                yield TableRow(
                    n=n,
                    m=m,
                    p=p,
                    regime=regime,
                    verdict=outcome.verdict,
                    nodes=outcome.stats.nodes,
                    millis=outcome.stats.millis,
                )


CSV_HEADER = "n,m,p,regime,verdict,nodes,millis"


def table_row_csv(row: TableRow) -> str:
    return f"{row.n},{row.m},{row.p},{row.regime},{row.verdict},{row.nodes},{row.millis:.0f}"
