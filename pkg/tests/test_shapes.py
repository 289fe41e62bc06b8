from __future__ import annotations

import itertools
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from combrep.shapes import (
    EnumerationBoundError,
    Partition,
    SkewShape,
    Tableau,
    border_strip_sign,
    count_updown,
    count_updown_closed,
    double_factorial,
    enumerate_border_strip_tableaux,
    enumerate_cst,
    enumerate_syt,
    enumerate_updown,
    hook_content_dim,
    hook_dim,
    hooks_and_contents,
    is_border_strip,
    is_lattice,
    parse_partition,
    parse_skew,
    partitions,
    word_of,
)

partition_st = st.integers(0, 8).flatmap(lambda n: st.sampled_from(partitions(n)))


def test_partition_counts_match_sympy():
    from sympy.utilities.iterables import partitions as sympy_partitions
    for n in range(0, 13):
        theirs = sorted(tuple(sorted((k for k, m in p.items() for _ in range(m)), reverse=True))
                        for p in sympy_partitions(n))
        assert sorted(tuple(p) for p in partitions(n)) == theirs


def test_parse_partition_and_skew():
    assert parse_partition("3,1,1") == Partition((3, 1, 1))
    assert parse_partition("12") == Partition((12,))
    assert parse_partition("") == Partition()
    skew = parse_skew("5,5,4,2,2,2,1,1/3,2,2,1,1")
    assert skew.outer == Partition((5, 5, 4, 2, 2, 2, 1, 1))
    assert skew.inner == Partition((3, 2, 2, 1, 1))
    assert skew.size == 22 - 9


@pytest.mark.parametrize("text", ["1,2", "2,-1", "a", "3/4", "2,,1"])
def test_parse_partition_rejects(text):
    with pytest.raises(ValueError):
        parse_partition(text)


def test_skew_requires_containment():
    with pytest.raises(ValueError):
        parse_skew("2,1/3")


def test_hooks_and_contents_examples():
    assert hooks_and_contents(Partition((1,))) == {(1, 1): {"hook": 1, "content": 0}}
    hc = hooks_and_contents(Partition((2, 1)))
    assert {c: v["hook"] for c, v in hc.items()} == {(1, 1): 3, (1, 2): 1, (2, 1): 1}
    assert {c: v["content"] for c, v in hc.items()} == {(1, 1): 0, (1, 2): 1, (2, 1): -1}


@given(partition_st)
def test_hooks_match_arm_leg_definition(lam):
    conj = lam.conjugate()
    for (i, j), v in hooks_and_contents(lam).items():
        assert v["hook"] == (lam[i - 1] - j) + (conj[j - 1] - i) + 1
        assert v["content"] == j - i


@pytest.mark.parametrize("lam, count", [((4,), 1), ((2, 1), 2), ((2, 2), 2), ((3, 2), 5), ((1, 1, 1), 1)])
def test_syt_and_hook_examples(lam, count):
    assert len(enumerate_syt(lam)) == count
    assert hook_dim(lam) == count


@given(partition_st)
def test_syt_are_standard_and_distinct(lam):
    ts = enumerate_syt(lam)
    assert all(t.is_standard() for t in ts)
    assert len({t.rows for t in ts}) == len(ts)
    assert hook_dim(lam) == hook_dim(lam.conjugate())


def test_syt_bound():
    with pytest.raises(EnumerationBoundError):
        enumerate_syt((6, 5), bound=10)


def test_hook_content_examples():
    assert hook_content_dim((1,), 7) == 7
    assert hook_content_dim((2, 1), 2) == 2
    assert hook_content_dim((1, 1, 1), 2) == 0


def test_cst_examples():
    assert [t.rows for t in enumerate_cst((1, 1), 2)] == [((1,), (2,))]
    assert sorted(t.rows for t in enumerate_cst((2,), 2)) == [((1, 1),), ((1, 2),), ((2, 2),)]


def _brute_cst(lam, n):
    cells = Partition(lam).cells()
    out = []
    for values in itertools.product(range(1, n + 1), repeat=len(cells)):
        filling = dict(zip(cells, values))
        if all(filling[(i, j)] <= filling.get((i, j + 1), n + 1) for i, j in cells) and \
                all(filling[(i, j)] < filling.get((i + 1, j), n + 1) for i, j in cells):
            out.append(filling)
    return out


@pytest.mark.parametrize("lam", [lam for s in range(1, 5) for lam in partitions(s)])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_cst_count_against_brute_force(lam, n):
    assert len(enumerate_cst(lam, n)) == len(_brute_cst(lam, n))


def test_cst_with_weight_from_figure():
    weight = (3, 3, 3, 2, 3, 1, 2, 2, 1, 1, 1)
    shape = (5, 5, 4, 2, 2, 2, 1, 1)
    ts = enumerate_cst(shape, 11, weight)
    assert len(ts) == 19134
    assert all(t.is_column_strict() and t.weight(11) == weight for t in ts)


def test_weighted_enumeration_agrees_with_filtering():
    shape = SkewShape(Partition((4, 3, 2)), Partition((2, 1)))
    everything = enumerate_cst(shape, 4)
    for weight in [(2, 2, 1, 1), (1, 2, 2, 1), (3, 2, 1, 0), (0, 2, 2, 2)]:
        filtered = [t.rows for t in everything if t.weight(4) == weight]
        assert sorted(t.rows for t in enumerate_cst(shape, 4, weight)) == sorted(filtered)


def test_lattice_examples():
    # printed as a lattice permutation, but the prefix below has two 5s and one 4
    assert is_lattice("1122133456578") is False
    assert is_lattice("11221334565") is False
    assert is_lattice("1122133456") is True
    assert is_lattice("1122143346578") is False
    assert is_lattice("") is True


@given(st.lists(st.integers(1, 4), max_size=12))
def test_lattice_definition(word):
    expected = all(word[:p].count(i) >= word[:p].count(i + 1)
                   for p in range(len(word) + 1) for i in range(1, 5))
    assert is_lattice(word) == expected


def test_word_reads_rows_right_to_left():
    t = Tableau.from_rows([[1, 1, 2], [2, 3]])
    assert word_of(t) == (2, 1, 1, 3, 2)


def test_border_strip_sign_example():
    strip = parse_skew("8,6,3,3,3/5,2,2,2")
    assert is_border_strip(strip)
    assert border_strip_sign(strip) == 1


def test_not_border_strips():
    assert not is_border_strip(SkewShape(Partition((2, 2))))
    assert not is_border_strip(SkewShape(Partition((2, 1)), Partition((1,))))


def test_border_strip_tableaux_examples():
    (bst, sign), = enumerate_border_strip_tableaux((2, 1), (3,))
    assert sign == -1
    (bst, sign), = enumerate_border_strip_tableaux((1,), (1,))
    assert sign == 1
    assert len(enumerate_border_strip_tableaux((2, 1), (1, 1, 1))) == 2


@pytest.mark.parametrize("lam, k, count", [((), 2, 1), ((1,), 3, 3), ((2,), 2, 1), ((), 0, 1), ((1, 1), 2, 1)])
def test_updown_examples(lam, k, count):
    assert count_updown(lam, k) == count
    assert len(enumerate_updown(lam, k)) == count


def test_updown_walks_for_one_box():
    walks = {tuple(tuple(p) for p in w) for w in enumerate_updown((1,), 3)}
    assert walks == {((), (1,), (), (1,)), ((), (1,), (2,), (1,)), ((), (1,), (1, 1), (1,))}


def test_updown_closed_form_odd_reading():
    for k in range(0, 9):
        for h in range(k // 2 + 1):
            for lam in partitions(k - 2 * h):
                expected = comb(k, 2 * h) * double_factorial(2 * h - 1) * hook_dim(lam)
                assert count_updown_closed(lam, k, "odd") == expected == count_updown(lam, k)


def test_updown_closed_form_even_reading_disagrees():
    assert count_updown_closed((1,), 3, "even") != count_updown((1,), 3)


def test_updown_sum_of_squares_is_brauer_count():
    for k in range(0, 7):
        total = sum(count_updown(lam, k) ** 2
                    for h in range(k // 2 + 1) for lam in partitions(k - 2 * h))
        assert total == double_factorial(2 * k - 1)


def test_double_factorial():
    assert [double_factorial(m) for m in (-1, 0, 1, 5, 6)] == [1, 1, 1, 15, 48]


@given(partition_st)
def test_sum_hook_squares(lam):
    n = lam.size
    assert sum(hook_dim(mu) ** 2 for mu in partitions(n)) == factorial(n)
