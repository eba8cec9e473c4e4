import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import specs
from refplan.closure import req_as
from refplan.effectiveness import (
    Effectiveness,
    IndexOutOfRange,
    InvalidOrder,
    NumsHistory,
    compare_effectiveness,
    intro_phenomena,
    nums_history,
)

MORE, EQUAL, LESS = Effectiveness.MORE_EFFECTIVE, Effectiveness.EQUAL, Effectiveness.LESS_EFFECTIVE


def padded_oracle(x, y):
    """Element-wise comparison after descending sort and zero padding."""
    sx, sy = sorted(x, reverse=True), sorted(y, reverse=True)
    n = max(len(sx), len(sy))
    sx += [0] * (n - len(sx))
    sy += [0] * (n - len(sy))
    for u, v in zip(sx, sy):
        if u != v:
            return MORE if u < v else LESS
    return EQUAL


def test_intro_phenomena(library):
    assert intro_phenomena(library, ("a", "b", "c"), 2) == {"p6"}
    assert intro_phenomena(library, ("a", "b", "c"), 1) == {"p1", "p2", "p3", "p5", "p7", "p8"}
    assert intro_phenomena(library, ("c", "b", "a"), 3) == frozenset()


def test_intro_phenomena_index_range(library):
    with pytest.raises(IndexOutOfRange):
        intro_phenomena(library, ("a", "b"), 0)
    with pytest.raises(IndexOutOfRange):
        intro_phenomena(library, ("a", "b"), 3)
    with pytest.raises(InvalidOrder):
        intro_phenomena(library, ("a", "a"), 1)


def test_nums_history(library, two_artifacts):
    assert nums_history(library, ("b", "a", "c")).nums == (7, 0, 1)
    assert nums_history(two_artifacts, ("a", "b")).nums == (10, 1)
    assert nums_history(two_artifacts, ("b", "a")).nums == (6, 5)
    assert nums_history(library, ()).nums == ()


def test_nums_history_agrees_with_intro_phenomena(library):
    order = ("c", "a", "b")
    h = nums_history(library, order)
    assert h.nums == tuple(len(intro_phenomena(library, order, i)) for i in range(1, 4))
    assert h.snums == (6, 2, 0)


def test_compare_examples():
    assert compare_effectiveness(NumsHistory((3, 1, 2)), NumsHistory((0, 3, 3))) is MORE
    assert compare_effectiveness((3, 1, 2), (3, 1, 2)) is EQUAL


def test_two_artifact_prose_discrepancy():
    # The prose calls (a, b) with counts (10, 1) the better order, but the
    # sorted-descending lexicographic rule prefers (6, 5). The rule wins.
    assert compare_effectiveness((10, 1), (6, 5)) is LESS
    assert compare_effectiveness((6, 5), (10, 1)) is MORE


def test_unequal_lengths_pad_with_zeros():
    assert compare_effectiveness((6, 1), (6, 1, 0)) is EQUAL
    assert compare_effectiveness((6, 1), (1, 6, 1)) is MORE
    assert compare_effectiveness((), (0, 0)) is EQUAL


nums_lists = st.lists(st.integers(0, 6), max_size=5)


@settings(max_examples=500)
@given(nums_lists, nums_lists)
def test_compare_matches_padded_oracle(x, y):
    assert compare_effectiveness(x, y) is padded_oracle(x, y)


@settings(max_examples=300)
@given(nums_lists, nums_lists, nums_lists)
def test_compare_is_total_preorder(x, y, z):
    assert compare_effectiveness(x, x) is EQUAL
    assert compare_effectiveness(x, y).value == -compare_effectiveness(y, x).value
    if compare_effectiveness(x, y) is not LESS and compare_effectiveness(y, z) is not LESS:
        assert compare_effectiveness(x, z) is not LESS


@given(nums_lists, st.randoms())
def test_snums_permutation_invariant(x, rnd):
    y = list(x)
    rnd.shuffle(y)
    assert NumsHistory(tuple(x)).snums == NumsHistory(tuple(y)).snums
    assert compare_effectiveness(x, y) is EQUAL


@settings(max_examples=50, deadline=None)
@given(specs(max_artifacts=5), st.randoms())
def test_conservation(spec, rnd):
    total = len(req_as(spec, spec.artifact_ids))
    order = list(spec.artifact_ids)
    for _ in range(5):
        rnd.shuffle(order)
        h = nums_history(spec, order)
        assert sum(h.nums) == total
        assert all(n >= 0 for n in h.nums)
