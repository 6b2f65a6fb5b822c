"""Command-line interface.

Subcommands: generate, validate, detect, bound, search, superimposed,
table.  Data goes to stdout, diagnostics to stderr.  Exit codes:

* 0: success (including SAT, a found witness, or a clean validation)
* 1: search verdict UNSAT
* 2: validation found a violation (its JSON is printed to stdout)
* 4: search verdict INCONCLUSIVE
* 64: usage error
* 65: malformed or unusable input file
* 70: an internal size guard refused the computation

``RAMSEY_GUARD_NODES`` overrides the default search node budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import formats
from .core import (
    ColorMatrix,
    KPartiteCover,
    NotShufflePreserved,
    RectangleCover,
    avoidance_threshold,
    check_coverage,
    check_kpartite_coverage,
    guaranteed_p,
    local_profile,
    locality_violation,
    matrix_local_profile,
    matrix_to_rectangles,
    validate_kpartite,
    validate_shuffle_preserved,
)
from .constructions import (
    construct_kpartite_avoiding,
    construct_mod_m,
    construct_recursive_matrix,
)
from .detect import (
    CliqueFamily,
    InstanceTooLarge,
    NotTwoColored,
    TooManySubsets,
    find_mono_biclique_brute,
    find_mono_biclique_fast,
    find_mono_kpartite,
    find_mono_kpartite_brute,
    max_superimposed,
    superimposed_bound,
)
from .search import SearchParams, search_avoiding, table_row_csv, threshold_table
from .search import CSV_HEADER

EX_OK = 0
EX_UNSAT = 1
EX_VIOLATION = 2
EX_INCONCLUSIVE = 4
EX_USAGE = 64
EX_DATAERR = 65
EX_GUARD = 70

_DEFAULT_NODE_LIMIT = 10_000_000


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; remap to the documented 64."""

    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="shufflecover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit one of the deterministic constructions")
    gen.add_argument("--kind", required=True, choices=["modm", "recursive", "kpartite"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--k", type=int)
    # matrix kinds default to matrix text; kpartite has no matrix form and
    # defaults to json
    gen.add_argument("--format", dest="fmt", choices=["matrix", "json"], default=None)
    gen.add_argument("--out", default="-")

    val = sub.add_parser("validate", help="check shuffle-preservation (and coverage for covers)")
    val.add_argument("--in", dest="path", default="-")
    val.add_argument("--max-local", type=int, default=None)

    det = sub.add_parser("detect", help="find a monochromatic complete subgraph")
    det.add_argument("--in", dest="path", default="-")
    det.add_argument("--p", type=int, required=True)
    det.add_argument("--mode", choices=["fast", "brute"], default="fast")

    bound = sub.add_parser("bound", help="closed-form guarantee and avoidance bounds")
    bound.add_argument("--n", type=int, required=True)
    bound.add_argument("--m", type=int, required=True)

    sea = sub.add_parser("search", help="decide one avoidance cell (n, m, p)")
    sea.add_argument("--n", type=int, required=True)
    sea.add_argument("--m", type=int, required=True)
    sea.add_argument("--p", type=int, required=True)
    sea.add_argument("--timeout-sec", type=float, default=None)
    sea.add_argument("--workers", type=int, default=1)

    sup = sub.add_parser("superimposed", help="t-superimposed clique bound and exact best subset")
    sup.add_argument("--in", dest="path", default="-")
    sup.add_argument("--t", type=int, required=True)

    tab = sub.add_parser("table", help="stream the threshold table as CSV")
    tab.add_argument("--n-max", type=int, required=True)
    tab.add_argument("--m-max", type=int, default=None)
    tab.add_argument("--p-max", type=int, default=None)
    tab.add_argument("--timeout-sec", type=float, default=None)
    tab.add_argument("--workers", type=int, default=1)

    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _node_limit() -> int:
    raw = os.environ.get("RAMSEY_GUARD_NODES")
    if raw is None:
        return _DEFAULT_NODE_LIMIT
    try:
        value = int(raw)
    except ValueError as exc:
        raise _UsageError(f"RAMSEY_GUARD_NODES must be an integer, got {raw!r}") from exc
    if value < 1:
        raise _UsageError("RAMSEY_GUARD_NODES must be positive")
    return value


def _cmd_generate(args) -> int:
    if args.fmt is None:
        args.fmt = "json" if args.kind == "kpartite" else "matrix"
    if args.kind == "modm":
        if args.n is None or args.m is None:
            raise _UsageError("--kind modm requires --n and --m")
        matrix = construct_mod_m(args.n, args.m)
        return _emit_matrix_or_cover(matrix, args)
    if args.kind == "recursive":
        if args.k is None:
            raise _UsageError("--kind recursive requires --k")
        matrix = construct_recursive_matrix(args.k)
        return _emit_matrix_or_cover(matrix, args)
    # kpartite
    if args.n is None or args.m is None or args.k is None:
        raise _UsageError("--kind kpartite requires --n, --m, and --k")
    cover = construct_kpartite_avoiding(args.n, args.m, args.k)
    if args.fmt == "matrix":
        raise _UsageError("k-partite covers have no matrix form; use --format json")
    _write_output(args.out, json.dumps(formats.kpartite_to_obj(cover)) + "\n")
    return EX_OK


def _emit_matrix_or_cover(matrix: ColorMatrix, args) -> int:
    if args.fmt == "matrix":
        _write_output(args.out, formats.write_matrix(matrix))
    else:
        cover = matrix_to_rectangles(matrix)
        _write_output(args.out, json.dumps(formats.cover_to_obj(cover)) + "\n")
    return EX_OK


def _cmd_validate(args) -> int:
    instance = formats.load_instance(_read_input(args.path))
    if isinstance(instance, ColorMatrix):
        violation = validate_shuffle_preserved(instance)
        profile = matrix_local_profile(instance)
    elif isinstance(instance, RectangleCover):
        violation = check_coverage(instance)
        profile = local_profile(instance)
    elif isinstance(instance, KPartiteCover):
        violation = validate_kpartite(instance) or check_kpartite_coverage(instance)
        profile = None
    else:
        raise formats.FormatError("clique families are not colorings; nothing to validate")
    if violation is None and args.max_local is not None:
        if profile is None:
            raise _UsageError("--max-local applies to bipartite matrices and covers only")
        violation = locality_violation(profile, args.max_local)
    if violation is not None:
        _emit_json(formats.violation_to_obj(violation))
        return EX_VIOLATION
    print("ok")
    return EX_OK


def _cmd_detect(args) -> int:
    instance = formats.load_instance(_read_input(args.path))
    if isinstance(instance, CliqueFamily):
        raise formats.FormatError("clique families use the superimposed command")
    if isinstance(instance, KPartiteCover):
        if args.mode == "brute":
            witness = find_mono_kpartite_brute(instance, args.p)
        else:
            witness = find_mono_kpartite(instance, args.p)
    elif args.mode == "brute":
        witness = find_mono_biclique_brute(instance, args.p)
    else:
        if isinstance(instance, ColorMatrix):
            instance = matrix_to_rectangles(instance)
        witness = find_mono_biclique_fast(instance, args.p)
    if witness is None:
        print("none")
    else:
        _emit_json(formats.witness_to_obj(witness))
    return EX_OK


def _cmd_bound(args) -> int:
    _emit_json(
        {
            "guaranteed_p": guaranteed_p(args.n, args.m),
            "avoidance_threshold": avoidance_threshold(args.n, args.m),
        }
    )
    return EX_OK


def _cmd_search(args) -> int:
    params = SearchParams(
        n=args.n,
        m=args.m,
        p=args.p,
        timeout=args.timeout_sec,
        node_limit=_node_limit(),
    )
    outcome = search_avoiding(params, workers=args.workers)
    obj = {
        "verdict": outcome.verdict,
        "witness": formats.cover_to_obj(outcome.witness) if outcome.witness else None,
        "stats": {
            "nodes": outcome.stats.nodes,
            "prunes": outcome.stats.prunes,
            "millis": round(outcome.stats.millis, 3),
        },
    }
    _emit_json(obj)
    if outcome.verdict == "SAT":
        return EX_OK
    if outcome.verdict == "UNSAT":
        return EX_UNSAT
    return EX_INCONCLUSIVE


def _cmd_superimposed(args) -> int:
    instance = formats.load_instance(_read_input(args.path))
    if not isinstance(instance, CliqueFamily):
        raise formats.FormatError("superimposed needs a clique family JSON input")
    bound = superimposed_bound(instance, args.t)
    witness = max_superimposed(instance, args.t)
    _emit_json(
        {
            "bound": bound,
            "s_t": len(witness.vertices),
            "witness": formats.witness_to_obj(witness),
        }
    )
    return EX_OK


def _cmd_table(args) -> int:
    rows = threshold_table(
        args.n_max,
        args.m_max,
        args.p_max,
        timeout_per_cell=args.timeout_sec,
        node_limit=_node_limit(),
        workers=args.workers,
    )
    print(CSV_HEADER)
    for row in rows:
        print(table_row_csv(row))
        sys.stdout.flush()
    return EX_OK


def run(argv: list[str]) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "generate": _cmd_generate,
            "validate": _cmd_validate,
            "detect": _cmd_detect,
            "bound": _cmd_bound,
            "search": _cmd_search,
            "superimposed": _cmd_superimposed,
            "table": _cmd_table,
        }[args.command]
        return handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except formats.FormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except NotTwoColored as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except NotShufflePreserved as exc:
        _emit_json(formats.violation_to_obj(exc.violation))
        return EX_VIOLATION
    except (InstanceTooLarge, TooManySubsets) as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EX_GUARD
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
