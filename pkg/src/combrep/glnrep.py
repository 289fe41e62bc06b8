"""Irreducible GL(n) modules on the Gelfand-Tsetlin basis.

The module ``V^lam`` has basis ``v_T`` over column strict tableaux of shape
``lam`` with entries ``<= n``. ``E_{k-1,k}`` turns a ``k`` into ``k-1`` and
``E_{k,k-1}`` turns a ``k-1`` into ``k``; the coefficients are products over
the counts ``T_{ik}`` = number of entries ``<= k`` in row ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator, Mapping, Sequence

from .exact import as_rational
from .schur import SchurExpansion, lr_coeff, lr_table
from .shapes import (
    Partition,
    SkewShape,
    Tableau,
    enumerate_cst,
    hook_content_dim,
    hook_dim,
    partitions,
)

__all__ = [
    "GTVector",
    "gt_profile",
    "gt_basis",
    "gt_lower",
    "gt_raise",
    "apply_lower",
    "apply_raise",
    "torus_act",
    "unipotent_act",
    "commutator_check",
    "serre_check",
    "SchurWeylReport",
    "schur_weyl_check",
    "tensor_decompose",
    "restrict_gl",
    "GT_READINGS",
]

# "j_minus_i": the shift in each factor is j - i (row of the change minus the
# running index). "j_minus_k": the shift is j - k for every factor.
GT_READINGS = ("j_minus_i", "j_minus_k")


class GTVector:
    """Finite ``Tableau -> Rational`` combination of basis vectors ``v_T``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tableau, object] | None = None):
        clean: dict[Tableau, Fraction] = {}
        for t, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                clean[t] = clean.get(t, Fraction(0)) + c
        self.terms = {t: c for t, c in clean.items() if c}

    @classmethod
    def basis(cls, t: Tableau) -> GTVector:
        return cls({t: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: GTVector) -> GTVector:
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return GTVector(out)

    def __sub__(self, other: GTVector) -> GTVector:
        return self + other.scale(-1)

    def scale(self, s) -> GTVector:
        s = as_rational(s)
        return GTVector({t: c * s for t, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, GTVector) and self.terms == other.terms

    def __iter__(self) -> Iterator[tuple[Tableau, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0].reading_word()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{c}*{t.reading_word()}" for t, c in self)
        return f"GTVector({inner})"


def gt_profile(t: Tableau, k: int) -> tuple[int, ...]:
    """``(T_{1k}, T_{2k}, ...)``: entries ``<= k`` in each row (zero-padded)."""
    return tuple(sum(1 for v in row if v <= k) for row in t.rows)


def gt_basis(lam: Sequence[int], n: int) -> list[Tableau]:
    return enumerate_cst(SkewShape(Partition(lam)), n)


def _shift(reading: str, j: int, i: int, k: int) -> int:
    if reading == "j_minus_i":
        return j - i
    if reading == "j_minus_k":
        return j - k
    raise ValueError(f"unknown reading {reading!r}")


def _at(profile: Sequence[int], i: int) -> int:
    return profile[i - 1] if i <= len(profile) else 0


def _coefficient_lower(t: Tableau, j: int, k: int, reading: str) -> Fraction:
    tk, tk1 = gt_profile(t, k), gt_profile(t, k - 1)
    base = _at(tk1, j)
    num = prod(_at(tk, i) - base + _shift(reading, j, i, k) for i in range(1, k + 1))
    den = prod(_at(tk1, i) - base + _shift(reading, j, i, k) for i in range(1, k) if i != j)
    return -Fraction(num, den)


def _coefficient_raise(t: Tableau, j: int, k: int, reading: str) -> Fraction:
    tk1, tk2 = gt_profile(t, k - 1), gt_profile(t, k - 2)
    base = _at(tk1, j)
    num = prod(_at(tk2, i) - base + _shift(reading, j, i, k) for i in range(1, k - 1))
    den = prod(_at(tk1, i) - base + _shift(reading, j, i, k) for i in range(1, k) if i != j)
    return Fraction(num, den)


def _entry_above(t: Tableau, i: int, col: int) -> int | None:
    return t.rows[i - 2][col - 1] if i >= 2 else None


def _entry_below(t: Tableau, i: int, col: int) -> int | None:
    if i < len(t.rows) and col <= len(t.rows[i]):
        return t.rows[i][col - 1]
    return None


def gt_lower(t: Tableau, k: int, reading: str = "j_minus_i") -> GTVector:
    """``E_{k-1,k} v_T``: change the leftmost ``k`` of some row into ``k-1``."""
    out = {}
    for j, row in enumerate(t.rows, 1):
        if k not in row:
            continue
        col = row.index(k) + 1
        above = _entry_above(t, j, col)
        if above is not None and above >= k - 1:
            continue
        new = t.replace((j, col), k - 1)
        coeff = _coefficient_lower(t, j, k, reading)
        if coeff:
            out[new] = coeff
    return GTVector(out)


def gt_raise(t: Tableau, k: int, reading: str = "j_minus_i") -> GTVector:
    """``E_{k,k-1} v_T``: change the rightmost ``k-1`` of some row into ``k``."""
    out = {}
    for j, row in enumerate(t.rows, 1):
        if k - 1 not in row:
            continue
        col = len(row) - row[::-1].index(k - 1)
        below = _entry_below(t, j, col)
        if below is not None and below <= k:
            continue
        new = t.replace((j, col), k)
        coeff = _coefficient_raise(t, j, k, reading)
        if coeff:
            out[new] = coeff
    return GTVector(out)


def _apply(op, v: GTVector, k: int, reading: str) -> GTVector:
    acc = GTVector()
    for t, c in v.terms.items():
        acc = acc + op(t, k, reading).scale(c)
    return acc


def apply_lower(v: GTVector, k: int, reading: str = "j_minus_i") -> GTVector:
    """Linear extension of :func:`gt_lower` (the operator ``E_{k-1,k}``)."""
    return _apply(gt_lower, v, k, reading)


def apply_raise(v: GTVector, k: int, reading: str = "j_minus_i") -> GTVector:
    """Linear extension of :func:`gt_raise` (the operator ``E_{k,k-1}``)."""
    return _apply(gt_raise, v, k, reading)


def torus_act(t: Tableau, i: int, z) -> Fraction:
    """Eigenvalue of the diagonal element with ``z`` in slot ``i``: ``z^{#i in T}``."""
    z = as_rational(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    return z ** t.count(i)


def unipotent_act(direction: str, i: int, z, v: GTVector, reading: str = "j_minus_i") -> GTVector:
    """``exp(z E) v`` with ``E = E_{i-1,i}`` ("lower") or ``E_{i,i-1}`` ("raise").

    The series stops once a power of ``E`` kills ``v``; this happens after at
    most ``|lam| + 1`` steps because every application moves the weight.
    """
    if direction == "lower":
        op = apply_lower
    elif direction == "raise":
        op = apply_raise
    else:
        raise ValueError(f"direction must be 'lower' or 'raise', not {direction!r}")
    z = as_rational(z)
    total, term, m = v, v, 0
    while not term.is_zero():
        m += 1
        term = op(term, i, reading).scale(z / m)
        total = total + term
    return total


def commutator_check(lam: Sequence[int], n: int, reading: str = "j_minus_i") -> bool:
    """``[E_{k-1,k}, E_{k,k-1}] v_T == (#(k-1) - #k) v_T`` for every basis ``T`` and ``k``."""
    for t in gt_basis(lam, n):
        v = GTVector.basis(t)
        for k in range(2, n + 1):
            lhs = apply_lower(apply_raise(v, k, reading), k, reading) - \
                apply_raise(apply_lower(v, k, reading), k, reading)
            if lhs != v.scale(t.count(k - 1) - t.count(k)):
                return False
    return True


def serre_check(lam: Sequence[int], n: int = 3, reading: str = "j_minus_i") -> bool:
    """``[E12, [E12, E23]] == 0`` and ``[E21, [E21, E32]] == 0`` on every basis vector."""
    if n < 3:
        raise ValueError("the Serre relations need n >= 3")

    def e12(v):
        return apply_lower(v, 2, reading)

    def e23(v):
        return apply_lower(v, 3, reading)

    def e21(v):
        return apply_raise(v, 2, reading)

    def e32(v):
        return apply_raise(v, 3, reading)

    for t in gt_basis(lam, n):
        v = GTVector.basis(t)
        # [a,[a,b]] = a a b - 2 a b a + b a a
        for a, b in ((e12, e23), (e21, e32)):
            val = a(a(b(v))) - a(b(a(v))).scale(2) + b(a(a(v)))
            if not val.is_zero():
                return False
    return True


@dataclass(frozen=True)
class SchurWeylReport:
    n: int
    k: int
    rows: tuple[tuple[Partition, int, int], ...]  # (lam, dim V^lam, dim S^lam)
    total: int

    @property
    def holds(self) -> bool:
        return self.total == self.n ** self.k


def schur_weyl_check(n: int, k: int) -> SchurWeylReport:
    """``n^k = sum_{lam |- k} dim V^lam(GL_n) * dim S^lam``."""
    rows = []
    for lam in partitions(k):
        d = hook_content_dim(lam, n)
        if d:
            rows.append((lam, d, hook_dim(lam)))
    return SchurWeylReport(n, k, tuple(rows), sum(a * b for _, a, b in rows))


def tensor_decompose(mu: Sequence[int], nu: Sequence[int], n: int | None = None) -> SchurExpansion:
    """``V^mu (x) V^nu`` for GL(n); terms with more than ``n`` rows vanish."""
    return lr_table(mu, nu, max_rows=n)


def restrict_gl(lam: Sequence[int], k: int, l: int) -> dict[tuple[Partition, Partition], int]:
    """``V^lam`` of GL(k+l) restricted to GL(k) x GL(l): multiplicities of ``V^mu (x) V^nu``."""
    lam = Partition(lam)
    if len(lam) > k + l:
        raise ValueError(f"{lam} has more than {k + l} rows")
    out = {}
    for size in range(lam.size + 1):
        for mu in partitions(size):
            if len(mu) > k or not lam.contains(mu):
                continue
            for nu in partitions(lam.size - size):
                if len(nu) > l:
                    continue
                c = lr_coeff(lam, mu, nu)
                if c:
                    out[(mu, nu)] = c
    return out
