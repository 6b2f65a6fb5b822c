"""Avoidance search tests.

Verdicts for small cells are pinned against the closed-form regimes:
guaranteed cells must exhaust to UNSAT, avoidable cells must produce a
certificate, and the open cell (4, 3, 2) is known SAT.
"""

import pytest

from shufflecover import (
    INCONCLUSIVE,
    SAT,
    UNSAT,
    CSV_HEADER,
    SearchParams,
    TableRow,
    avoidance_threshold,
    check_coverage,
    find_mono_biclique_brute,
    guaranteed_p,
    local_profile,
    search_avoiding,
    table_row_csv,
    threshold_table,
)


def run(n, m, p, **kw):
    return search_avoiding(SearchParams(n, m, p, **kw))


def assert_certificate(outcome, n, m, p):
    cover = outcome.witness
    assert cover is not None
    assert cover.n_rows == cover.n_cols == n
    assert check_coverage(cover) is None
    assert local_profile(cover).local_width <= m
    assert all(r.min_side <= p - 1 for r in cover.rectangles)
    # independent check: the certificate really avoids K_{p,p}
    if p <= 6:
        assert find_mono_biclique_brute(cover, p) is None


def test_params_validate():
    with pytest.raises(ValueError):
        SearchParams(0, 1, 1)
    with pytest.raises(ValueError):
        SearchParams(2, 2, 2, timeout=0)
    with pytest.raises(ValueError):
        SearchParams(2, 2, 2, node_limit=0)
    with pytest.raises(ValueError):
        search_avoiding(SearchParams(2, 2, 2), workers=0)


def test_single_color_cell_is_unsat():
    # m=1 means one rectangle must swallow a whole line: impossible for p <= n
    out = run(2, 1, 2)
    assert out.verdict == UNSAT
    assert out.witness is None
    assert out.stats.nodes >= 1


def test_trivial_sat_when_p_exceeds_n():
    out = run(2, 1, 3)
    assert out.verdict == SAT
    assert_certificate(out, 2, 1, 3)
    # one full square does it
    assert len(out.witness.rectangles) == 1


def test_avoidable_cell_sat():
    out = run(2, 2, 2)
    assert out.verdict == SAT
    assert_certificate(out, 2, 2, 2)


def test_guaranteed_cell_unsat():
    assert run(4, 2, 2).verdict == UNSAT
    assert run(3, 2, 2).verdict == UNSAT


def test_open_cell_four_three_two_is_sat():
    out = run(4, 3, 2)
    assert out.verdict == SAT
    assert_certificate(out, 4, 3, 2)


def test_deterministic_single_worker():
    a = run(4, 3, 2)
    b = run(4, 3, 2)
    assert a.verdict == b.verdict
    assert a.witness == b.witness
    assert a.stats.nodes == b.stats.nodes


def test_node_limit_gives_inconclusive():
    out = run(4, 3, 2, node_limit=5)
    assert out.verdict == INCONCLUSIVE
    assert out.witness is None


def test_timeout_gives_inconclusive():
    out = run(5, 3, 2, timeout=0.001)
    assert out.verdict == INCONCLUSIVE


def test_multi_worker_same_verdicts():
    for n, m, p, expected in [(2, 2, 2, SAT), (4, 2, 2, UNSAT), (4, 3, 2, SAT)]:
        out = search_avoiding(SearchParams(n, m, p), workers=2)
        assert out.verdict == expected
        if expected == SAT:
            assert_certificate(out, n, m, p)


def test_sat_verdicts_monotone_in_m():
    # more colors per line never hurts: SAT at m implies SAT at m+1
    for n in (3, 4):
        sat_seen = False
        for m in range(1, n + 1):
            verdict = run(n, m, 2).verdict
            assert verdict in (SAT, UNSAT)
            if sat_seen:
                assert verdict == SAT
            sat_seen = verdict == SAT


def test_threshold_table_matches_regimes():
    rows = list(threshold_table(3))
    # every cell up to (3, 3, 4) exactly once
    assert len(rows) == 3 * 3 * 4
    for row in rows:
        if row.regime == "guaranteed":
            assert row.p <= guaranteed_p(row.n, row.m)
            assert row.verdict == UNSAT
        elif row.regime == "avoidable":
            assert row.p > avoidance_threshold(row.n, row.m)
            assert row.verdict == SAT
        else:
            assert row.verdict in (SAT, UNSAT)


def test_table_row_csv_shape():
    row = TableRow(n=3, m=2, p=2, regime="guaranteed", verdict=UNSAT, nodes=17, millis=1.25)
    assert CSV_HEADER == "n,m,p,regime,verdict,nodes,millis"
    assert table_row_csv(row) == "3,2,2,guaranteed,UNSAT,17,1"


def test_stats_record_prune_reasons():
    out = run(4, 2, 2)
    assert out.stats.millis >= 0
    assert sum(out.stats.prunes.values()) > 0
