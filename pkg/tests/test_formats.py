"""Codec tests: text matrices, JSON covers, sniffing loader."""

import json

import pytest

from shufflecover import (
    CliqueFamily,
    ColorMatrix,
    CoverageViolation,
    FormatError,
    KPartiteCover,
    KPartiteWitness,
    LocalityViolation,
    Rectangle,
    RectangleCover,
    ShuffleViolation,
    SuperimposedWitness,
    Witness,
    clique_family_from_obj,
    clique_family_to_obj,
    cover_from_obj,
    cover_to_obj,
    kpartite_from_obj,
    kpartite_to_obj,
    load_instance,
    parse_matrix,
    violation_to_obj,
    witness_to_obj,
    write_matrix,
)

MATRIX = ColorMatrix(((1, 5, 2, 2), (1, 4, 3, 4), (8, 5, 8, 7), (6, 6, 3, 7)))


def test_matrix_text_round_trip():
    assert parse_matrix(write_matrix(MATRIX)) == MATRIX


def test_write_matrix_layout():
    text = write_matrix(ColorMatrix(((0, 1), (2, 3))))
    assert text == "2 2\n0 1\n2 3\n"


def test_parse_matrix_skips_blank_lines():
    assert parse_matrix("2 2\n\n0 1\n\n2 3\n\n") == ColorMatrix(((0, 1), (2, 3)))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\n0 1\n2 3",
        "2 2\n0 1",
        "2 2\n0 1\n2 3\n4 5",
        "2 2\n0 1\n2",
        "2 2\n0 1\nx y",
        "0 2",
        "2 2\n0 -1\n2 3",
    ],
)
def test_parse_matrix_rejects_malformed(text):
    with pytest.raises(FormatError):
        parse_matrix(text)


def sample_cover() -> RectangleCover:
    return RectangleCover(
        n_rows=3,
        n_cols=2,
        rectangles=(
            Rectangle(color=0, rows=[0, 1], cols=[0]),
            Rectangle(color=2, rows=[2], cols=[0, 1]),
        ),
    )


def test_cover_json_round_trip():
    cover = sample_cover()
    obj = json.loads(json.dumps(cover_to_obj(cover)))
    assert cover_from_obj(obj) == cover


def test_cover_obj_is_sorted_and_plain():
    obj = cover_to_obj(sample_cover())
    assert obj["rectangles"][0] == {"color": 0, "rows": [0, 1], "cols": [0]}


@pytest.mark.parametrize(
    "obj",
    [
        {"n_rows": 2, "n_cols": 2},
        {"n_rows": 2, "n_cols": 2, "rectangles": [{"color": 0, "rows": [0]}]},
        {"n_rows": 2, "n_cols": 2, "rectangles": [{"color": 0, "rows": [], "cols": [0]}]},
        {"n_rows": 0, "n_cols": 2, "rectangles": []},
        "not a dict",
    ],
)
def test_cover_from_obj_rejects_malformed(obj):
    with pytest.raises(FormatError):
        cover_from_obj(obj)


def sample_kpartite() -> KPartiteCover:
    full = Rectangle(color=0, rows=[0, 1], cols=[0, 1])
    return KPartiteCover(
        k=3, n=2, pairs=((0, 1, (full,)), (0, 2, (full,)), (1, 2, (full,)))
    )


def test_kpartite_json_round_trip():
    cover = sample_kpartite()
    obj = json.loads(json.dumps(kpartite_to_obj(cover)))
    assert kpartite_from_obj(obj) == cover


def test_kpartite_from_obj_rejects_bad_parts():
    obj = kpartite_to_obj(sample_kpartite())
    obj["pairs"][0]["parts"] = [1, 0]
    with pytest.raises(FormatError):
        kpartite_from_obj(obj)


def test_clique_family_round_trip():
    family = CliqueFamily(
        n_vertices=5, cliques=((0, frozenset({0, 1, 2})), (3, frozenset({2, 4})))
    )
    obj = json.loads(json.dumps(clique_family_to_obj(family)))
    assert clique_family_from_obj(obj) == family


def test_violation_objects_carry_kind():
    assert violation_to_obj(ShuffleViolation(0, 1, 0, 1, 7))["kind"] == "shuffle"
    assert violation_to_obj(CoverageViolation(1, 0)) == {
        "kind": "coverage",
        "row": 1,
        "col": 0,
    }
    obj = violation_to_obj(LocalityViolation(side="col", index=2, count=4, limit=3))
    assert obj["kind"] == "locality" and obj["side"] == "col"


def test_witness_objects_carry_kind():
    w = witness_to_obj(Witness(color=3, rows={1, 0}, cols={2}))
    assert w == {"kind": "witness", "color": 3, "rows": [0, 1], "cols": [2]}
    kw = witness_to_obj(KPartiteWitness(color=1, parts=({0}, {1}, {0})))
    assert kw["kind"] == "kpartite_witness" and kw["parts"] == [[0], [1], [0]]
    sw = witness_to_obj(SuperimposedWitness(colors={2, 0}, vertices={3}))
    assert sw == {
        "kind": "superimposed_witness",
        "colors": [0, 2],
        "vertices": [3],
    }


def test_load_instance_sniffs_matrix():
    assert load_instance(write_matrix(MATRIX)) == MATRIX


def test_load_instance_sniffs_cover():
    assert load_instance(json.dumps(cover_to_obj(sample_cover()))) == sample_cover()


def test_load_instance_sniffs_kpartite():
    text = json.dumps(kpartite_to_obj(sample_kpartite()))
    assert load_instance(text) == sample_kpartite()


def test_load_instance_sniffs_clique_family():
    family = CliqueFamily(n_vertices=3, cliques=((1, frozenset({0, 2})),))
    assert load_instance(json.dumps(clique_family_to_obj(family))) == family


@pytest.mark.parametrize("text", ["", "   ", "{", '{"foo": 1}', "[1, 2]"])
def test_load_instance_rejects_unknown(text):
    with pytest.raises(FormatError):
        load_instance(text)
