from __future__ import annotations

from fractions import Fraction

import pytest

from combrep.glnrep import (
    GT_READINGS,
    GTVector,
    apply_lower,
    apply_raise,
    commutator_check,
    gt_basis,
    gt_lower,
    gt_raise,
    restrict_gl,
    schur_weyl_check,
    serre_check,
    tensor_decompose,
    torus_act,
    unipotent_act,
)
from combrep.shapes import Partition, Tableau, hook_content_dim, partitions

small_shapes = [(lam, n) for s in range(1, 5) for lam in partitions(s)
                for n in range(max(2, len(lam)), 4)]


def test_basis_size_is_hook_content():
    for s in range(0, 5):
        for lam in partitions(s):
            for n in range(max(1, len(lam)), 5):
                assert len(gt_basis(lam, n)) == hook_content_dim(lam, n)


def test_lower_and_raise_examples():
    one, two = gt_basis((1,), 2)
    assert one.rows == ((1,),) and two.rows == ((2,),)
    low = gt_lower(two, 2)
    assert set(low.terms) == {one} and low.terms[one] != 0
    up = gt_raise(one, 2)
    assert set(up.terms) == {two} and up.terms[two] != 0
    assert gt_lower(one, 2).is_zero()
    assert gt_raise(two, 2).is_zero()
    col, = gt_basis((1, 1), 2)
    assert gt_lower(col, 2).is_zero()
    assert gt_raise(col, 2).is_zero()


def test_torus_examples():
    assert torus_act(Tableau.from_rows([[1]]), 1, 5) == 5
    assert torus_act(Tableau.from_rows([[1]]), 2, 5) == 1
    assert torus_act(Tableau.from_rows([[2, 2]]), 2, 3) == 9


def test_unipotent_identity_at_zero():
    for t in gt_basis((2, 1), 3):
        v = GTVector.basis(t)
        for i in (2, 3):
            assert unipotent_act("raise", i, 0, v) == v
            assert unipotent_act("lower", i, 0, v) == v
    with pytest.raises(ValueError):
        unipotent_act("sideways", 2, 1, v)


@pytest.mark.parametrize("lam, n", small_shapes)
def test_bracket_is_weight_difference(lam, n):
    for t in gt_basis(lam, n):
        v = GTVector.basis(t)
        for k in range(2, n + 1):
            lhs = apply_lower(apply_raise(v, k), k) - apply_raise(apply_lower(v, k), k)
            assert lhs == v.scale(t.count(k - 1) - t.count(k))


@pytest.mark.parametrize("lam, n", small_shapes)
def test_commutator_oracle(lam, n):
    assert commutator_check(lam, n)


@pytest.mark.parametrize("lam", [lam for s in range(1, 5) for lam in partitions(s) if len(lam) <= 3])
def test_serre_oracle(lam):
    assert serre_check(lam, 3)


def test_alternative_shift_fails():
    assert GT_READINGS[0] == "j_minus_i"
    failing = [r for r in GT_READINGS[1:]
               if all(commutator_check(lam, n, r) for lam, n in small_shapes)]
    assert failing == []


def test_unipotent_is_group_action():
    # exp(aE) exp(bE) = exp((a+b)E)
    for t in gt_basis((2, 1), 3):
        v = GTVector.basis(t)
        a, b = Fraction(2, 3), Fraction(-5, 7)
        for direction in ("raise", "lower"):
            for i in (2, 3):
                lhs = unipotent_act(direction, i, a, unipotent_act(direction, i, b, v))
                assert lhs == unipotent_act(direction, i, a + b, v)


@pytest.mark.parametrize("n, k, total", [(2, 2, 4), (1, 5, 1), (3, 3, 27), (4, 6, 4096)])
def test_schur_weyl_examples(n, k, total):
    report = schur_weyl_check(n, k)
    assert report.total == total == n ** k
    assert report.holds


def test_schur_weyl_rows():
    report = schur_weyl_check(3, 3)
    assert [(tuple(lam), a, b) for lam, a, b in report.rows] == [((3,), 10, 1), ((2, 1), 8, 2), ((1, 1, 1), 1, 1)]


def test_tensor_examples():
    assert dict(tensor_decompose((1,), (1,))) == {Partition((2,)): 1, Partition((1, 1)): 1}
    assert dict(tensor_decompose((2, 1), ())) == {Partition((2, 1)): 1}


def test_tensor_truncates_to_n_rows():
    assert dict(tensor_decompose((1,), (1,), 1)) == {Partition((2,)): 1}


def test_restrict_gl_dimension():
    for s in range(1, 6):
        for lam in partitions(s):
            for k in range(1, 4):
                for l in range(1, 3):
                    if len(lam) > k + l:
                        with pytest.raises(ValueError):
                            restrict_gl(lam, k, l)
                        continue
                    r = restrict_gl(lam, k, l)
                    total = sum(c * hook_content_dim(a, k) * hook_content_dim(b, l) for (a, b), c in r.items())
                    assert total == hook_content_dim(lam, k + l)
