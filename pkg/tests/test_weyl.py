from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from combrep.schur import schur_tableau_sum
from combrep.shapes import Partition, hook_content_dim, partitions
from combrep.weyl import (
    build_root_system,
    denominator_product,
    weight_from_partition,
    weyl_character,
    weyl_dim,
    weyl_group_elements,
    weyl_group_order,
    weyl_numerator,
)

SYSTEMS = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 2), ("D", 3)]


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(len(m)))


def test_root_system_examples():
    a1 = build_root_system("A", 1)
    assert len(a1.positive_roots) == 1
    assert a1.coroot_pairing(a1.rho, a1.simple_roots[0]) == 1
    assert len(build_root_system("A", 2).positive_roots) == 3
    b2 = build_root_system("B", 2)
    lengths = Counter(sum(x * x for x in r) for r in b2.positive_roots)
    assert sorted(lengths.values()) == [2, 2]


@pytest.mark.parametrize("rtype, rank", SYSTEMS)
def test_rho_pairs_to_one_with_simple_coroots(rtype, rank):
    rs = build_root_system(rtype, rank)
    assert all(rs.coroot_pairing(rs.rho, a) == 1 for a in rs.simple_roots)
    for i in range(rank):
        labels = rs.dynkin_labels(rs.fundamental_weight(i + 1))
        assert labels == tuple(Fraction(int(i == j)) for j in range(rank))


@pytest.mark.parametrize("rtype, rank", SYSTEMS)
def test_weyl_group_orders_and_signs(rtype, rank):
    rs = build_root_system(rtype, rank)
    group = weyl_group_elements(rs)
    assert len(group) == weyl_group_order(rtype, rank)
    assert len({w.matrix for w in group}) == len(group)
    for w in group:
        assert w.sign == _det([list(r) for r in w.matrix])
        assert w.sign == (-1) ** len(w.word)
        roots = set(rs.positive_roots) | {tuple(-x for x in r) for r in rs.positive_roots}
        assert {w.act(r) for r in roots} == roots


def test_weyl_group_examples():
    assert len(weyl_group_elements(build_root_system("A", 1))) == 2
    assert len(weyl_group_elements(build_root_system("A", 2))) == 6
    assert len(weyl_group_elements(build_root_system("B", 2))) == 8


@pytest.mark.parametrize("rtype, rank", SYSTEMS)
def test_denominator_identity(rtype, rank):
    rs = build_root_system(rtype, rank)
    assert weyl_numerator(rs, rs.rho) == denominator_product(rs)


def test_weyl_dim_examples():
    a1, a2 = build_root_system("A", 1), build_root_system("A", 2)
    assert weyl_dim(a2, a2.weight((0, 0))) == 1
    for m in range(6):
        assert weyl_dim(a1, a1.weight((m,))) == m + 1
    assert weyl_dim(a2, a2.weight((1, 1))) == 8 == hook_content_dim((2, 1), 3)


@pytest.mark.parametrize("rtype, rank, labels, dim", [
    ("B", 2, (1, 0), 5), ("B", 2, (0, 1), 4), ("B", 2, (0, 2), 10),
    ("C", 2, (1, 0), 4), ("C", 2, (0, 1), 5), ("C", 2, (2, 0), 10),
    ("B", 3, (1, 0, 0), 7), ("B", 3, (0, 1, 0), 21), ("B", 3, (0, 0, 1), 8),
    ("C", 3, (1, 0, 0), 6), ("C", 3, (0, 1, 0), 14), ("C", 3, (0, 0, 1), 14),
    ("D", 3, (1, 0, 0), 6), ("D", 3, (0, 1, 0), 4), ("D", 3, (0, 0, 1), 4), ("D", 3, (0, 1, 1), 15),
])
def test_classical_dimensions(rtype, rank, labels, dim):
    rs = build_root_system(rtype, rank)
    lam = rs.weight(labels)
    assert weyl_dim(rs, lam) == dim
    assert weyl_character(rs, lam).coefficient_sum() == dim


def test_character_examples():
    a1 = build_root_system("A", 1)
    assert weyl_character(a1, a1.weight((0,))).coefficient_sum() == 1
    assert len(weyl_character(a1, a1.weight((2,))).raw_items()) == 3
    a2 = build_root_system("A", 2)
    assert weyl_character(a2, a2.weight((1, 0))) == schur_tableau_sum(Partition((1,)), 3)
    ch = weyl_character(a2, a2.weight((1, 1)))
    assert ch.coefficient_sum() == 8
    assert ch == schur_tableau_sum(Partition((2, 1)), 3)


def test_non_dominant_weight_rejected():
    b2 = build_root_system("B", 2)
    with pytest.raises(ValueError):
        weyl_dim(b2, b2.weight((-1, 0)))


@pytest.mark.parametrize("rtype, rank", [s for s in SYSTEMS if s[1] <= 2] + [("B", 3), ("C", 3)])
@pytest.mark.parametrize("labels_seed", range(3))
def test_character_is_w_invariant(rtype, rank, labels_seed):
    rs = build_root_system(rtype, rank)
    labels = tuple((labels_seed + i) % 2 for i in range(rank))
    ch = dict(weyl_character(rs, rs.weight(labels)).doubled_items())
    for w in weyl_group_elements(rs):
        assert {w.act(e): c for e, c in ch.items()} == ch


@given(st.integers(0, 5).flatmap(lambda s: st.sampled_from(partitions(s))), st.integers(2, 4))
def test_type_a_bridge(lam, n):
    if len(lam) > n:
        return
    rs = build_root_system("A", n - 1)
    w = weight_from_partition(lam, n)
    assert weyl_dim(rs, w) == hook_content_dim(lam, n)
    assert weyl_character(rs, w) == schur_tableau_sum(lam, n)


def test_weight_from_partition_rejects_long_partition():
    with pytest.raises(ValueError):
        weight_from_partition((1, 1, 1), 2)
