from __future__ import annotations

import itertools

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from combrep.exact import MultiLaurent, poly_divide_exact
from combrep.schur import (
    alternant,
    kostka,
    lr_coeff,
    lr_table,
    schur_bialternant,
    schur_product_expand,
    schur_tableau_sum,
)
from combrep.shapes import Partition, hook_content_dim, partitions

X = sympy.symbols("x1:6")


def _to_sympy(p: MultiLaurent, n: int):
    out = 0
    for e, c in p.exponent_items():
        term = sympy.Rational(c.numerator, c.denominator)
        for v, k in zip(X[:n], e):
            term *= v ** int(k)
        out += term
    return sympy.expand(out)


def _jacobi_trudi_h(lam, n):
    """Schur polynomial via the Jacobi-Trudi determinant in complete homogeneous polynomials."""
    xs = X[:n]

    def h(k):
        if k < 0:
            return 0
        return sum(sympy.prod(c) for c in itertools.combinations_with_replacement(xs, k)) if k else 1

    m = len(lam)
    if m == 0:
        return sympy.Integer(1)
    mat = sympy.Matrix(m, m, lambda i, j: h(lam[i] - i + j))
    return sympy.expand(mat.det())


def test_tableau_sum_examples():
    x1, x2 = MultiLaurent.variable(0, 2), MultiLaurent.variable(1, 2)
    assert schur_tableau_sum(Partition((1, 1)), 2) == x1 * x2
    assert schur_tableau_sum(Partition((2,)), 2) == x1 * x1 + x1 * x2 + x2 * x2
    assert schur_tableau_sum(Partition((1, 1, 1)), 2).is_zero()


def test_bialternant_examples():
    x1, x2 = MultiLaurent.variable(0, 2), MultiLaurent.variable(1, 2)
    assert schur_bialternant(Partition((1,)), 2) == x1 + x2
    assert schur_bialternant(Partition((2, 1)), 2) == x1 * x1 * x2 + x1 * x2 * x2
    s = schur_bialternant(Partition((2, 1)), 3)
    assert s.coefficient_sum() == 8
    assert s == schur_tableau_sum(Partition((2, 1)), 3)


def test_alternant_division_example():
    num = alternant((3, 1), 2)  # (2,1) + delta
    assert poly_divide_exact(num, alternant((1, 0), 2)) == schur_tableau_sum(Partition((2, 1)), 2)


@pytest.mark.parametrize("lam", [lam for s in range(0, 6) for lam in partitions(s) if len(lam) <= 3])
def test_schur_matches_jacobi_trudi(lam):
    for n in range(max(1, len(lam)), 4):
        assert _to_sympy(schur_tableau_sum(lam, n), n) == _jacobi_trudi_h(lam, n)


@given(st.integers(0, 6).flatmap(lambda s: st.sampled_from(partitions(s))),
       st.permutations(range(3)))
def test_schur_is_symmetric(lam, perm):
    s = schur_tableau_sum(lam, 3)
    assert s.permute_variables(perm) == s


def test_kostka_examples():
    for lam in partitions(5):
        assert kostka(lam, lam) == 1
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1), (2,)) == 0
    with pytest.raises(ValueError):
        kostka((2, 1), (2,))


def test_kostka_is_unitriangular_in_dominance():
    def dominates(a, b):
        return all(sum(a[:i]) >= sum(b[:i]) for i in range(1, len(b) + 1))

    for lam in partitions(6):
        for mu in partitions(6):
            if kostka(lam, mu):
                assert dominates(lam, mu)


def test_lr_examples():
    assert lr_coeff((2, 1), (1,), (2,)) == 1
    assert lr_coeff((3, 2), (), (3, 2)) == 1
    assert lr_coeff((3,), (1,), (1, 1)) == 0
    with pytest.raises(ValueError):
        lr_coeff((2,), (2, 1), (1,))


def test_schur_product_examples():
    assert dict(schur_product_expand((1,), (1,))) == {Partition((2,)): 1, Partition((1, 1)): 1}
    assert dict(schur_product_expand((3, 1), ())) == {Partition((3, 1)): 1}
    assert dict(schur_product_expand((1,), (2,))) == {Partition((3,)): 1, Partition((2, 1)): 1}


@pytest.mark.parametrize("total", range(0, 6))
def test_lr_matches_product(total):
    for a in range(total + 1):
        for mu in partitions(a):
            for nu in partitions(total - a):
                assert lr_table(mu, nu) == schur_product_expand(mu, nu)


@given(st.integers(0, 3).flatmap(lambda s: st.sampled_from(partitions(s))),
       st.integers(0, 3).flatmap(lambda s: st.sampled_from(partitions(s))))
def test_lr_symmetry_and_conjugation(mu, nu):
    table = lr_table(mu, nu)
    assert table == lr_table(nu, mu)
    conj = lr_table(mu.conjugate(), nu.conjugate())
    assert {lam.conjugate(): c for lam, c in table.items()} == dict(conj)


@given(st.integers(0, 3).flatmap(lambda s: st.sampled_from(partitions(s))),
       st.integers(0, 3).flatmap(lambda s: st.sampled_from(partitions(s))),
       st.integers(1, 4))
def test_lr_dimension_identity(mu, nu, n):
    lhs = hook_content_dim(mu, n) * hook_content_dim(nu, n)
    rhs = sum(c * hook_content_dim(lam, n) for lam, c in lr_table(mu, nu).items())
    assert lhs == rhs
