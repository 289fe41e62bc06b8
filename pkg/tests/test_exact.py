from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from combrep.exact import (
    Generic,
    LaurentPoly,
    MultiLaurent,
    NotDivisibleError,
    QPower,
    RootOfUnity,
    SparseMatrix,
    TwoCos,
    determinant,
    matrix_rank,
    parse_parameter,
    poly_divide_exact,
)

BIG = 2 ** 80
big_ints = st.integers(min_value=-BIG, max_value=BIG)
rationals = st.builds(Fraction, big_ints, st.integers(min_value=1, max_value=BIG))


@st.composite
def laurent(draw, var="q"):
    terms = draw(st.dictionaries(st.integers(-4, 4), rationals, max_size=4))
    return LaurentPoly(terms, var)


@st.composite
def multi(draw, nvars=2):
    exps = st.tuples(*[st.integers(-2, 3)] * nvars)
    terms = draw(st.dictionaries(exps, rationals, max_size=4))
    out = MultiLaurent.zero(nvars)
    for e, c in terms.items():
        out = out + MultiLaurent.monomial(e, c)
    return out


@given(laurent(), laurent(), laurent())
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly({}, "q")
    assert a * LaurentPoly.const(1) == a


@given(laurent(), rationals)
def test_laurent_evaluate_is_homomorphism(a, v):
    if v == 0:
        return
    b = a * a + LaurentPoly.gen("q")
    assert b.evaluate(v) == a.evaluate(v) ** 2 + v


@given(multi(), multi(), multi())
def test_multilaurent_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(multi(), multi())
def test_exact_division_recovers_factor(a, b):
    if b.is_zero():
        return
    assert poly_divide_exact(a * b, b) == a


def test_division_examples():
    x1, x2 = MultiLaurent.variable(0, 2), MultiLaurent.variable(1, 2)
    assert poly_divide_exact(x1 - x2, x1 - x2) == MultiLaurent.one(2)
    assert poly_divide_exact(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2


def test_division_reports_remainder():
    x1, x2 = MultiLaurent.variable(0, 2), MultiLaurent.variable(1, 2)
    with pytest.raises(NotDivisibleError):
        poly_divide_exact(x1 * x1 + x2, x1 - x2)


def test_laurent_parse_round_trip():
    p = LaurentPoly.parse("q^2 - 1 + q^-1")
    assert LaurentPoly.parse(str(p)) == p
    assert p.evaluate(2) == Fraction(7, 2)


def test_rank_examples():
    assert matrix_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert matrix_rank([[0, 0], [0, 0]]) == 0
    assert matrix_rank([[1, 2], [2, 4]]) == 1


small = st.integers(-3, 3)


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_rank_and_determinant_match_sympy(m):
    mat = sympy.Matrix(m)
    assert matrix_rank(m) == mat.rank()
    assert determinant(m) == Fraction(int(mat.det()))


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_big_rationals_match_sympy(m):
    mat = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in m])
    d = mat.det()
    assert determinant(m) == Fraction(int(sympy.numer(d)), int(sympy.denom(d)))


def test_sparse_matrix_products():
    a = SparseMatrix.from_dense([[1, 2], [0, 1]])
    b = SparseMatrix.from_dense([[0, 1], [1, 0]])
    assert (a @ b).to_dense() == [[2, 1], [1, 0]]
    assert (a @ SparseMatrix.identity(2)) == a
    assert (a - a).to_dense() == [[0, 0], [0, 0]]
    assert a.trace() == 2


@pytest.mark.parametrize("text, value", [
    ("3/2", Fraction(3, 2)),
    ("-4", Fraction(-4)),
    ("zeta5", RootOfUnity(5)),
    ("2cos(1/5)", TwoCos(1, 5)),
    ("2cos(2pi/6)", TwoCos(1, 3)),
    ("q^4", QPower(4)),
    ("generic", Generic()),
])
def test_parse_parameter(text, value):
    assert parse_parameter(text) == value


@pytest.mark.parametrize("text", ["", "zeta0", "2cos(1/0)", "abc"])
def test_parse_parameter_rejects(text):
    with pytest.raises(ValueError):
        parse_parameter(text)


@pytest.mark.parametrize("m, l", [(m, l) for l in range(1, 9) for m in range(0, 2 * l)])
def test_twocos_rational_value_matches_sympy(m, l):
    exact = sympy.nsimplify(2 * sympy.cos(sympy.pi * m / l))
    value = TwoCos(m, l).rational_value()
    if exact.is_rational:
        assert value == Fraction(int(exact.p), int(exact.q))
    else:
        assert value is None
