"""Core model tests: matrices, rectangles, validators, profiles, counting.

Expected values for the 4x4 golden matrix were worked out by hand from its
color spans before the conversion code existed.
"""

import pytest

from shufflecover import (
    ColorMatrix,
    CoverageViolation,
    KPartiteCover,
    KPartiteCoverageViolation,
    KPartiteShuffleViolation,
    LocalityViolation,
    NotShufflePreserved,
    OverlapError,
    Rectangle,
    RectangleCover,
    ShuffleViolation,
    avoidance_threshold,
    check_coverage,
    check_kpartite_coverage,
    guaranteed_p,
    local_profile,
    locality_violation,
    matrix_local_profile,
    matrix_to_rectangles,
    rectangles_to_matrix,
    triple_count,
    validate_kpartite,
    validate_shuffle_preserved,
)

M2_ROWS = (
    (1, 5, 2, 2),
    (1, 4, 3, 4),
    (8, 5, 8, 7),
    (6, 6, 3, 7),
)

# hand-derived spans of the golden matrix, one rectangle per color
M2_RECTANGLES = {
    1: ({0, 1}, {0}),
    2: ({0}, {2, 3}),
    3: ({1, 3}, {2}),
    4: ({1}, {1, 3}),
    5: ({0, 2}, {1}),
    6: ({3}, {0, 1}),
    7: ({2, 3}, {3}),
    8: ({2}, {0, 2}),
}


def m2() -> ColorMatrix:
    return ColorMatrix(M2_ROWS)


def test_matrix_shape_and_colors():
    m = m2()
    assert m.n_rows == 4
    assert m.n_cols == 4
    assert m.colors() == {1, 2, 3, 4, 5, 6, 7, 8}


def test_matrix_rejects_ragged_rows():
    with pytest.raises(ValueError):
        ColorMatrix(((1, 2), (3,)))


def test_matrix_rejects_empty():
    with pytest.raises(ValueError):
        ColorMatrix(())
    with pytest.raises(ValueError):
        ColorMatrix(((),))


def test_matrix_rejects_bad_colors():
    with pytest.raises(ValueError):
        ColorMatrix(((1, -2),))
    with pytest.raises(ValueError):
        ColorMatrix(((1, True),))


def test_rectangle_normalizes_and_measures():
    r = Rectangle(color=3, rows=[2, 0], cols=(1,))
    assert r.rows == frozenset({0, 2})
    assert r.cols == frozenset({1})
    assert r.min_side == 1
    assert r.area() == 2


def test_rectangle_rejects_empty_side():
    with pytest.raises(ValueError):
        Rectangle(color=0, rows=[], cols=[1])


def test_cover_rejects_duplicate_colors():
    r = Rectangle(color=0, rows=[0], cols=[0])
    with pytest.raises(ValueError):
        RectangleCover(n_rows=2, n_cols=2, rectangles=(r, r))


def test_cover_rejects_out_of_grid():
    r = Rectangle(color=0, rows=[5], cols=[0])
    with pytest.raises(ValueError):
        RectangleCover(n_rows=2, n_cols=2, rectangles=(r,))


def test_golden_matrix_is_shuffle_preserved():
    assert validate_shuffle_preserved(m2()) is None


def test_golden_matrix_rectangles_match_hand_derivation():
    cover = matrix_to_rectangles(m2())
    assert cover.n_rows == 4 and cover.n_cols == 4
    got = {r.color: (set(r.rows), set(r.cols)) for r in cover.rectangles}
    assert got == M2_RECTANGLES


def test_matrix_round_trip_is_identity():
    assert rectangles_to_matrix(matrix_to_rectangles(m2())) == m2()


def test_shuffle_violation_is_concrete():
    # color 1 spans both rows and both cols but (0, 1) is color 2
    bad = ColorMatrix(((1, 2), (2, 1)))
    v = validate_shuffle_preserved(bad)
    assert v == ShuffleViolation(u=0, u_prime=1, v=0, v_prime=1, color=1)
    # the quadruple re-checks against the matrix
    assert bad.cells[v.u][v.v] == v.color
    assert bad.cells[v.u_prime][v.v_prime] == v.color
    assert bad.cells[v.u][v.v_prime] != v.color


def test_matrix_to_rectangles_raises_with_violation():
    bad = ColorMatrix(((1, 2), (2, 1)))
    with pytest.raises(NotShufflePreserved) as exc:
        matrix_to_rectangles(bad)
    assert exc.value.violation.color == 1


def test_rectangles_to_matrix_rejects_overlap():
    rects = (
        Rectangle(color=0, rows=[0, 1], cols=[0, 1]),
        Rectangle(color=1, rows=[1], cols=[1]),
    )
    with pytest.raises(OverlapError):
        rectangles_to_matrix(RectangleCover(n_rows=2, n_cols=2, rectangles=rects))


def test_rectangles_to_matrix_rejects_gap():
    rects = (Rectangle(color=0, rows=[0], cols=[0, 1]),)
    with pytest.raises(ValueError):
        rectangles_to_matrix(RectangleCover(n_rows=2, n_cols=2, rectangles=rects))


def test_check_coverage_reports_first_gap_row_major():
    rects = (
        Rectangle(color=0, rows=[0], cols=[0, 1]),
        Rectangle(color=1, rows=[1], cols=[1]),
    )
    cover = RectangleCover(n_rows=2, n_cols=2, rectangles=rects)
    assert check_coverage(cover) == CoverageViolation(row=1, col=0)


def test_check_coverage_ok_on_partition():
    cover = matrix_to_rectangles(m2())
    assert check_coverage(cover) is None


def test_local_profile_of_golden_matrix():
    prof = local_profile(matrix_to_rectangles(m2()))
    # every line of the golden matrix meets exactly 3 colors
    assert prof.row_counts == (3, 3, 3, 3)
    assert prof.col_counts == (3, 3, 3, 3)
    assert prof.local_width == 3
    assert prof.global_colors == 8


def test_matrix_local_profile_no_shuffle_needed():
    prof = matrix_local_profile(ColorMatrix(((1, 2), (2, 1))))
    assert prof.row_counts == (2, 2)
    assert prof.col_counts == (2, 2)
    assert prof.local_width == 2
    assert prof.global_colors == 2


def test_profiles_agree_on_shuffle_preserved_input():
    assert matrix_local_profile(m2()) == local_profile(matrix_to_rectangles(m2()))


def test_locality_violation_rows_first():
    prof = local_profile(matrix_to_rectangles(m2()))
    assert locality_violation(prof, 3) is None
    v = locality_violation(prof, 2)
    assert v == LocalityViolation(side="row", index=0, count=3, limit=2)


def test_triple_count_golden_equals_grid_size():
    # all 8 rectangles are 1x2 or 2x1: total area 16 = 4*4, the equality case
    assert triple_count(matrix_to_rectangles(m2())) == 16


def test_triple_count_single_full_rectangle():
    full = RectangleCover(
        n_rows=3,
        n_cols=3,
        rectangles=(Rectangle(color=0, rows=range(3), cols=range(3)),),
    )
    assert triple_count(full) == 9


def test_triple_count_counts_overlaps_once_per_color():
    rects = (
        Rectangle(color=0, rows=[0, 1], cols=[0, 1]),
        Rectangle(color=1, rows=[0], cols=[0]),
    )
    cover = RectangleCover(n_rows=2, n_cols=2, rectangles=rects)
    assert triple_count(cover) == 5


def test_guaranteed_p_frozen_values():
    # n=9, m=3: largest p with 2(p-1)(m-1) < 9 is p=3
    assert guaranteed_p(9, 3) == 3
    assert guaranteed_p(8, 2) == 4
    assert guaranteed_p(4, 3) == 1
    # m=1 forces everything: the single color is the whole grid
    assert guaranteed_p(5, 1) == 5
    # cap at n: tiny m cannot promise more rows than exist
    assert guaranteed_p(3, 1) == 3


def test_guaranteed_p_inequality_characterization():
    for n in range(1, 12):
        for m in range(2, 8):
            g = guaranteed_p(n, m)
            assert 2 * (g - 1) * (m - 1) < n
            if g < n:
                assert 2 * g * (m - 1) >= n


def test_avoidance_threshold_frozen_values():
    assert avoidance_threshold(9, 3) == 3
    assert avoidance_threshold(10, 3) == 4
    assert avoidance_threshold(5, 5) == 1
    assert avoidance_threshold(7, 2) == 4


def test_regimes_do_not_cross():
    # the guaranteed regime ends at or below the avoidable threshold
    for n in range(1, 16):
        for m in range(2, 8):
            assert guaranteed_p(n, m) <= avoidance_threshold(n, m)


def mk_kpartite(k: int, n: int, pairs):
    return KPartiteCover(k=k, n=n, pairs=tuple(pairs))


def full_rect(color: int, n: int) -> Rectangle:
    return Rectangle(color=color, rows=range(n), cols=range(n))


def test_kpartite_valid_single_color():
    cover = mk_kpartite(
        3, 2, [(a, b, (full_rect(0, 2),)) for a, b in ((0, 1), (0, 2), (1, 2))]
    )
    assert validate_kpartite(cover) is None
    assert check_kpartite_coverage(cover) is None
    assert cover.colors() == {0}
    assert cover.touched_sets(0) == [{0, 1}, {0, 1}, {0, 1}]


def test_kpartite_shuffle_violation():
    # color 0 touches parts 0 and 1 at vertices 0 and 1 but omits the edge
    rects01 = (
        Rectangle(color=0, rows=[0], cols=[0]),
        Rectangle(color=1, rows=[0], cols=[1]),
        Rectangle(color=1, rows=[1], cols=[0, 1]),
    )
    rects02 = (full_rect(0, 2),)
    rects12 = (full_rect(0, 2),)
    cover = mk_kpartite(3, 2, [(0, 1, rects01), (0, 2, rects02), (1, 2, rects12)])
    v = validate_kpartite(cover)
    assert isinstance(v, KPartiteShuffleViolation)
    assert v.color == 0
    assert (v.part_u, v.part_v) == (0, 1)


def test_kpartite_coverage_violation():
    rects01 = (Rectangle(color=0, rows=[0], cols=[0, 1]),)
    cover = mk_kpartite(2, 2, [(0, 1, rects01)])
    v = check_kpartite_coverage(cover)
    assert v == KPartiteCoverageViolation(part_a=0, part_b=1, row=1, col=0)


def test_kpartite_rejects_bad_pairs():
    with pytest.raises(ValueError):
        mk_kpartite(2, 2, [(1, 0, (full_rect(0, 2),))])
    with pytest.raises(ValueError):
        mk_kpartite(2, 2, [(0, 1, ()), (0, 1, ())])
    with pytest.raises(ValueError):
        mk_kpartite(2, 2, [(0, 1, (full_rect(0, 3),))])
