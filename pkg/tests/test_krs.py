import pytest
from hypothesis import given, settings, strategies as st

from carrays.acceptance import iter_semistandard
from carrays.krs import delete, insert
from carrays.tableaux import is_semistandard_english, shape_of


def test_insert_into_empty():
    assert insert((), 1) == (((1,),), 1)


def test_insert_appends_when_nothing_bumps():
    assert insert(((1,), (2,)), 3) == (((1, 3), (2,)), 1)


def test_insert_bumping_chain():
    # 1 bumps the 3 out of the first row; 3 then settles in row 2
    assert insert(((1, 3), (2,)), 1) == (((1, 1), (2, 3)), 2)


def test_insert_rejects_non_semistandard():
    with pytest.raises(ValueError):
        insert(((2, 1),), 1)
    with pytest.raises(ValueError):
        insert(((1,),), 0)


def test_delete_single_cell():
    assert delete(((1,),), 1) == ((), 1)


def test_delete_inverts_the_bumping_chain():
    assert delete(((1, 1), (2, 3)), 2) == (((1, 3), (2,)), 1)
    assert delete(((1, 3), (2,)), 1) == (((1,), (2,)), 3)


def test_delete_invalid_corner():
    with pytest.raises(ValueError):
        delete(((1, 3), (2, 4)), 1)
    with pytest.raises(ValueError):
        delete(((1,),), 2)


def test_round_trip_exhaustive_small():
    # insert/delete are mutually inverse on every tableau with at most
    # 6 cells and entries up to 6
    count = 0
    for t in iter_semistandard(6, 6):
        for x in range(1, 7):
            t2, i = insert(t, x)
            assert is_semistandard_english(t2)
            assert delete(t2, i) == (t, x)
        sh = shape_of(t)
        for i in range(1, len(sh) + 1):
            if i == len(sh) or sh[i - 1] > sh[i]:
                t3, x = delete(t, i)
                assert insert(t3, x) == (t, i)
        count += 1
    assert count > 3000


def _random_tableau(values):
    t = ()
    for v in values:
        t, _ = insert(t, v)
    return t


@given(st.lists(st.integers(1, 9), max_size=12))
@settings(max_examples=80, deadline=None)
def test_insertion_builds_semistandard(values):
    t = _random_tableau(values)
    assert is_semistandard_english(t)
    assert sum(shape_of(t)) == len(values)


@given(st.lists(st.integers(1, 9), max_size=10), st.integers(1, 9))
@settings(max_examples=80, deadline=None)
def test_round_trip_property(values, x):
    t = _random_tableau(values)
    t2, i = insert(t, x)
    assert delete(t2, i) == (t, x)
