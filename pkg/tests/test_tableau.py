import json
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from g2tab.reptheory import dim_gl, weyl_dim_g2
from g2tab.tableau import (
    Shape,
    Tableau,
    count_by_weight,
    decode,
    encode,
    enumerate_fillings,
    enumerate_g2,
    enumerate_semistandard,
    g2_fillings,
    is_g2_filling,
    is_g2_tableau,
    is_semistandard,
    semistandard_fillings,
    tableaux_to_csv,
    weight_of,
)
from g2tab.weights import Weight, simple_reflection

SMALL_SHAPES = [Shape(p, q) for p in range(1, 6) for q in range(p + 1) if p + q <= 5]


def col(top, bottom):
    return Tableau.column(top, bottom)


def row(*entries):
    return Tableau(Shape(len(entries), 0), entries)


def test_shape_validation():
    with pytest.raises(ValueError):
        Shape(1, 2)
    with pytest.raises(ValueError):
        Shape(2, -1)
    assert Shape.parse("3,1") == Shape(3, 1) and Shape.parse("4") == Shape(4, 0)
    s = Shape(3, 1)
    assert s.n == 4 and s.columns() == [(0, 3), (1,), (2,)]


@pytest.mark.parametrize(
    "t, w", [(row(0), (2, 1)), (col(3, 6), (1, 1)), (row(0, 5), (0, 0))]
)
def test_weight_of(t, w):
    assert weight_of(t) == Weight(*w)


@pytest.mark.parametrize("t, want", [(col(0, 1), True), (row(4, 3), False), (col(3, 3), False)])
def test_is_semistandard(t, want):
    assert is_semistandard(t) is want


@pytest.mark.parametrize(
    "t, want", [(col(3, 6), True), (col(0, 1), False), (col(0, 5), False), (row(0, 5), False)]
)
def test_is_g2_tableau(t, want):
    assert is_g2_tableau(t) is want


def test_g2_class_order_across_columns():
    # a V2 entry in a later column may not be smaller than one in an earlier column
    assert not is_g2_tableau(Tableau(Shape(2, 1), (0, 3, 4)))
    assert is_g2_tableau(Tableau(Shape(2, 1), (0, 4, 3)))
    assert is_g2_tableau(row(1, 1))


@pytest.mark.parametrize("shape, n", [((1, 0), 7), ((1, 1), 49), ((2, 1), 343)])
def test_enumerate_fillings_counts(shape, n):
    assert sum(1 for _ in enumerate_fillings(Shape(*shape))) == n


@pytest.mark.parametrize("shape, n", [((1, 1), 21), ((2, 0), 28), ((2, 1), 112)])
def test_enumerate_semistandard_counts(shape, n):
    assert sum(1 for _ in enumerate_semistandard(Shape(*shape))) == n


@pytest.mark.parametrize("shape, n", [((1, 0), 7), ((1, 1), 14), ((2, 1), 64)])
def test_enumerate_g2_counts(shape, n):
    assert sum(1 for _ in enumerate_g2(Shape(*shape))) == n


@pytest.mark.parametrize("shape", SMALL_SHAPES, ids=str)
def test_fast_generators_match_brute_force(shape):
    all_f = list(enumerate_fillings(shape))
    ss = [t.entries for t in all_f if is_semistandard(t)]
    g2 = [t.entries for t in all_f if is_g2_tableau(t)]
    assert list(semistandard_fillings(shape)) == ss
    assert list(g2_fillings(shape)) == g2
    assert all(is_g2_filling(shape, f) for f in g2)


@pytest.mark.parametrize("shape", SMALL_SHAPES, ids=str)
def test_enumerations_are_nested_and_ordered(shape):
    g2 = [t.index for t in enumerate_g2(shape)]
    ss = [t.index for t in enumerate_semistandard(shape)]
    assert g2 == sorted(g2) and ss == sorted(ss)
    assert set(g2) <= set(ss) <= set(range(7**shape.n))
    assert [t.index for t in enumerate_fillings(shape)][:50] == list(range(min(50, 7**shape.n)))


def test_semistandard_counts_match_hook_content_up_to_p8():
    for p in range(9):
        for q in range(p + 1):
            n = sum(1 for _ in semistandard_fillings(Shape(p, q)))
            assert n == dim_gl(7, (p, q)), (p, q)


def test_g2_counts_match_weyl_dimension_up_to_p8():
    for p in range(9):
        for q in range(p + 1):
            assert sum(1 for _ in g2_fillings(Shape(p, q))) == weyl_dim_g2(p - q, q), (p, q)


@pytest.mark.parametrize("shape", [Shape(p, q) for p in range(7) for q in range(p + 1)], ids=str)
def test_weight_counts_are_weyl_symmetric(shape):
    counts = count_by_weight(g2_fillings(shape))
    for mu, k in counts.items():
        for s in ("alpha", "beta"):
            assert counts[simple_reflection(s, mu)] == k


def test_enumerate_g2_weight_filter():
    got = list(enumerate_g2(Shape(1, 1), (1, 1)))
    assert [t.entries for t in got] == [(3, 6)]
    assert sum(1 for _ in enumerate_g2(Shape(1, 1), (0, 0))) == 2


shapes_up_to_4 = st.sampled_from([s for s in SMALL_SHAPES if s.n <= 4])


@given(shapes_up_to_4, st.data())
def test_canonical_index_round_trip(shape, data):
    idx = data.draw(st.integers(0, 7**shape.n - 1))
    t = Tableau.from_index(shape, idx)
    assert t.index == idx == encode(t.entries)
    assert decode(idx, shape.n) == t.entries


@given(shapes_up_to_4, st.data())
def test_json_round_trip(shape, data):
    entries = data.draw(st.lists(st.integers(0, 6), min_size=shape.n, max_size=shape.n))
    t = Tableau(shape, entries)
    obj = t.to_json()
    assert obj["shape"] == [shape.p, shape.q]
    assert Tableau.from_json(json.dumps(obj)) == t


def test_json_and_csv_formats():
    t = Tableau(Shape(2, 1), (0, 4, 3))
    assert t.to_json() == {"shape": [2, 1], "rows": [["2a+b", "a"], ["a+b"]]}
    assert t.to_csv() == "2a+b,a;a+b"
    assert tableaux_to_csv([t, col(3, 6)]) == "2a+b,a;a+b\na+b;0\n"


def test_tableau_rejects_wrong_length():
    with pytest.raises(ValueError):
        Tableau(Shape(2, 1), (0, 1))


def test_character_of_v_has_every_weight_once():
    assert Counter(weight_of(t) for t in enumerate_g2(Shape(1, 0))) == Counter(
        Weight(*w) for w in [(2, 1), (-1, 0), (-1, -1), (1, 1), (1, 0), (-2, -1), (0, 0)]
    )
