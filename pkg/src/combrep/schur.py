"""Schur polynomials, Kostka numbers and Littlewood-Richardson coefficients.

Schur polynomials are built two independent ways (sum over column strict
tableaux, and a quotient of alternants). Littlewood-Richardson coefficients
come from lattice fillings; :func:`schur_product_expand` recovers the same
numbers by multiplying polynomials and peeling off leading terms.
"""
from __future__ import annotations

import json
from functools import lru_cache
from itertools import permutations
from typing import Mapping, Sequence

from .exact import MultiLaurent, poly_divide_exact
from .shapes import (
    Partition,
    SkewShape,
    enumerate_cst,
    is_lattice,
    partitions,
    word_of,
)

__all__ = [
    "SchurExpansion",
    "schur_tableau_sum",
    "schur_bialternant",
    "alternant",
    "kostka",
    "lr_coeff",
    "lr_table",
    "schur_product_expand",
    "peel_schur",
]


class SchurExpansion(dict):
    """``Partition -> positive int``; zero coefficients are never stored."""

    def __init__(self, data: Mapping[Sequence[int], int] | None = None):
        super().__init__()
        for lam, c in (data or {}).items():
            if c < 0:
                raise ValueError(f"negative coefficient {c} for {lam}")
            if c:
                self[Partition(lam)] = int(c)

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.items(), key=lambda kv: tuple(kv[0]), reverse=True)

    def to_json(self) -> list[dict]:
        return [{"lambda": list(lam), "coeff": c} for lam, c in self.sorted_items()]

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def schur_tableau_sum(lam: Partition, n: int) -> MultiLaurent:
    """``sum_T x^T`` over column strict tableaux of shape ``lam``, entries ``<= n``."""
    lam = Partition(lam)
    if len(lam) > n:
        return MultiLaurent.zero(n)
    terms: dict[tuple[int, ...], int] = {}
    for t in enumerate_cst(SkewShape(lam), n):
        w = t.weight(n)
        terms[w] = terms.get(w, 0) + 1
    if not lam:
        return MultiLaurent.one(n)
    return MultiLaurent(terms, n)


def alternant(exponents: Sequence[int], n: int) -> MultiLaurent:
    """``det(x_i^{e_j})`` expanded over the symmetric group."""
    terms = {}
    for perm in permutations(range(n)):
        e = [0] * n
        for j, i in enumerate(perm):
            e[i] = exponents[j]
        terms[tuple(e)] = terms.get(tuple(e), 0) + _sign(perm)
    return MultiLaurent(terms, n)


@lru_cache(maxsize=None)
def schur_bialternant(lam: Partition, n: int) -> MultiLaurent:
    """``det(x_i^{lam_j + n - j}) / det(x_i^{n - j})``."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    delta = [n - j for j in range(1, n + 1)]
    num = alternant([lam.part(j) + delta[j - 1] for j in range(1, n + 1)], n)
    return poly_divide_exact(num, alternant(delta, n))


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of column strict tableaux of shape ``lam`` and weight ``mu``.

    ``mu`` is a composition (any order of parts; zeros allowed).
    """
    lam = Partition(lam)
    if lam.size != sum(mu):
        raise ValueError(f"|lambda| = {lam.size} but |mu| = {sum(mu)}")
    if not mu:
        return 1
    return len(enumerate_cst(SkewShape(lam), len(mu), tuple(mu)))


def _check_lr_args(lam: Partition, mu: Partition, nu: Partition) -> None:
    if not lam.contains(mu):
        raise ValueError(f"{tuple(mu)} is not contained in {tuple(lam)}")
    if lam.size != mu.size + nu.size:
        raise ValueError(f"|lambda| = {lam.size} but |mu| + |nu| = {mu.size + nu.size}")


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if not nu:
        return 1
    shape = SkewShape(lam, mu)
    return sum(1 for t in enumerate_cst(shape, len(nu), tuple(nu)) if is_lattice(word_of(t)))


def lr_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``c^lam_{mu nu}``: lattice column strict fillings of ``lam/mu`` with content ``nu``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _check_lr_args(lam, mu, nu)
    return _lr(lam, mu, nu)


def lr_table(mu: Sequence[int], nu: Sequence[int], max_rows: int | None = None) -> SchurExpansion:
    """All nonzero ``c^lam_{mu nu}`` for ``lam`` of size ``|mu| + |nu|``."""
    mu, nu = Partition(mu), Partition(nu)
    out = {}
    for lam in partitions(mu.size + nu.size):
        if max_rows is not None and len(lam) > max_rows:
            continue
        if lam.contains(mu) and lam.contains(nu):
            c = _lr(lam, mu, nu)
            if c:
                out[lam] = c
    return SchurExpansion(out)


def _is_dominant(e: Sequence) -> bool:
    return all(a >= b for a, b in zip(e, e[1:])) and (not e or e[-1] >= 0)


def _padded(lam: Partition, n: int) -> tuple[int, ...]:
    return tuple(lam) + (0,) * (n - len(lam))


@lru_cache(maxsize=None)
def _dominant_part(lam: Partition, n: int) -> dict[tuple[int, ...], int]:
    """Coefficients of ``s_lam(x_1..x_n)`` at partition exponents (Kostka numbers)."""
    out = {}
    for alpha in partitions(lam.size):
        if len(alpha) <= n:
            c = len(enumerate_cst(SkewShape(lam), n, _padded(alpha, n))) if lam else 1
            if c:
                out[_padded(alpha, n)] = c
    return out


def peel_schur(poly: MultiLaurent | Mapping[tuple[int, ...], int], n: int) -> SchurExpansion:
    """Write a symmetric polynomial as a nonnegative sum of Schur polynomials.

    Only monomials with weakly decreasing exponent vectors are tracked: the
    lexicographically largest of them is the leading term of the next Schur
    polynomial to subtract, by unitriangularity of the Schur-to-monomial
    transition. ``poly`` may also be given as its dominant coefficients.
    """
    if isinstance(poly, MultiLaurent):
        if poly.nvars != n:
            raise ValueError("nvars mismatch")
        rem = {e: c for e, c in poly.exponent_items() if _is_dominant(e)}
    else:
        rem = {tuple(e): c for e, c in poly.items() if c and _is_dominant(e)}
    result: dict[Partition, int] = {}
    while rem:
        lead = max(rem)
        c = rem[lead]
        if c < 0 or int(c) != c:
            raise ArithmeticError(f"peeling produced coefficient {c} at {lead}")
        lam = Partition(lead)
        result[lam] = int(c)
        for e, v in _dominant_part(lam, n).items():
            r = rem.get(e, 0) - c * v
            if r:
                rem[e] = r
            else:
                rem.pop(e, None)
    return SchurExpansion(result)


def _dominant_product(a: MultiLaurent, b: MultiLaurent, n: int, size: int
                      ) -> dict[tuple[int, ...], int]:
    """Coefficients of ``a * b`` at partition exponents of the given total degree."""
    b_terms = dict(b.raw_items())
    targets = [_padded(alpha, n) for alpha in partitions(size) if len(alpha) <= n]
    out = {}
    for alpha in targets:
        total = 0
        for e, c in a.raw_items():
            rest = tuple(x - y for x, y in zip(alpha, e))
            if min(rest) >= 0:
                total += c * b_terms.get(rest, 0)
        if total:
            out[alpha] = int(total)
    return out


def schur_product_expand(mu: Sequence[int], nu: Sequence[int], n: int | None = None
                         ) -> SchurExpansion:
    """Expand ``s_mu * s_nu`` in Schur polynomials by polynomial multiplication.

    ``n`` defaults to ``|mu| + |nu|``; anything below ``l(mu) + l(nu)`` could
    hide terms and is rejected. Only the coefficients of the product at
    partition exponents are formed, which is all the peeling reads.
    """
    mu, nu = Partition(mu), Partition(nu)
    if n is None:
        n = max(1, mu.size + nu.size)
    if n < len(mu) + len(nu):
        raise ValueError(f"n = {n} is below l(mu) + l(nu) = {len(mu) + len(nu)}; terms would be lost")
    prod_coeffs = _dominant_product(schur_tableau_sum(mu, n), schur_tableau_sum(nu, n),
                                    n, mu.size + nu.size)
    return peel_schur(prod_coeffs, n)
