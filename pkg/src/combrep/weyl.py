"""Classical root systems, dominant weights, and the Weyl dimension and character formulas.

Every vector lives in the ambient space with orthonormal basis
``e_1..e_m`` (``m = n+1`` for A_n, ``m = n`` otherwise) and is stored as the
tuple of its coordinates multiplied by 2, so spin weights stay integral.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .exact import MultiLaurent, poly_divide_exact

__all__ = [
    "RootSystem",
    "Weight",
    "build_root_system",
    "weyl_group_elements",
    "weyl_dim",
    "weyl_character",
    "weyl_numerator",
    "denominator_product",
    "weight_from_partition",
    "weyl_group_order",
    "WEYL_RANK_BOUND",
]

WEYL_RANK_BOUND = 3

Vec = tuple[int, ...]  # doubled coordinates


def _dot2(a: Vec, b: Vec) -> int:
    """``4 <a, b>`` for doubled vectors ``a`` and ``b``."""
    return sum(x * y for x, y in zip(a, b))


def _unit(i: int, m: int, scale: int = 2) -> list[int]:
    v = [0] * m
    v[i] = scale
    return v


@dataclass(frozen=True)
class Weight:
    """Point of the ambient space, stored with doubled coordinates."""

    doubled: Vec

    @classmethod
    def from_coords(cls, coords: Sequence) -> Weight:
        out = []
        for c in coords:
            d = Fraction(c) * 2
            if d.denominator != 1:
                raise ValueError(f"coordinate {c} is not a half-integer")
            out.append(int(d))
        return cls(tuple(out))

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, 2) for v in self.doubled)

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def scale(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.doubled))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class RootSystem:
    type: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Vec, ...]
    positive_roots: tuple[Vec, ...]
    fundamental_weights: tuple[Vec, ...]
    rho: Vec

    @property
    def name(self) -> str:
        return f"{self.type}{self.rank}"

    def coroot_pairing(self, lam: Vec, alpha: Vec) -> Fraction:
        """``<lam, alpha^vee> = 2 <lam, alpha> / <alpha, alpha>``."""
        return Fraction(2 * _dot2(lam, alpha), _dot2(alpha, alpha))

    def dynkin_labels(self, lam: Weight) -> tuple[Fraction, ...]:
        return tuple(self.coroot_pairing(lam.doubled, a) for a in self.simple_roots)

    def is_integral(self, lam: Weight) -> bool:
        return all(c.denominator == 1 for c in self.dynkin_labels(lam))

    def is_dominant(self, lam: Weight) -> bool:
        return self.is_integral(lam) and all(c >= 0 for c in self.dynkin_labels(lam))

    def weight(self, labels: Sequence[int]) -> Weight:
        """``sum_i labels[i] * omega_{i+1}``."""
        if len(labels) != self.rank:
            raise ValueError(f"{self.name} needs {self.rank} labels, got {len(labels)}")
        out = [0] * self.ambient_dim
        for c, w in zip(labels, self.fundamental_weights):
            out = [a + c * b for a, b in zip(out, w)]
        return Weight(tuple(out))

    def fundamental_weight(self, i: int) -> Weight:
        return Weight(self.fundamental_weights[i - 1])

    def to_json(self) -> dict:
        def half(v: Vec) -> list[str]:
            return [str(Fraction(x, 2)) for x in v]

        return {
            "type": self.type,
            "rank": self.rank,
            "normalization": "orthonormal e_i coordinates; long roots have squared length 2 "
                             "except type C, whose long roots 2e_i have squared length 4",
            "simple_roots": [half(a) for a in self.simple_roots],
            "positive_roots": [half(a) for a in self.positive_roots],
            "fundamental_weights": [half(w) for w in self.fundamental_weights],
            "rho": half(self.rho),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


@lru_cache(maxsize=None)
def build_root_system(rtype: str, rank: int) -> RootSystem:
    rtype = rtype.upper()
    n = rank
    if n < 1 or (rtype == "D" and n < 2):
        raise ValueError(f"unsupported rank {rank} for type {rtype}")
    if rtype not in "ABCD" or len(rtype) != 1:
        raise ValueError(f"unsupported type {rtype!r}; only A, B, C, D are implemented")
    m = n + 1 if rtype == "A" else n

    def e(i: int, scale: int = 2) -> list[int]:
        return _unit(i, m, scale)

    def comb(*pairs: tuple[int, list[int]]) -> Vec:
        out = [0] * m
        for c, v in pairs:
            out = [a + c * b for a, b in zip(out, v)]
        return tuple(out)

    simple: list[Vec] = []
    positive: list[Vec] = []
    fundamental: list[Vec] = []
    if rtype == "A":
        simple = [comb((1, e(i)), (-1, e(i + 1))) for i in range(n)]
        positive = [comb((1, e(i)), (-1, e(j))) for i in range(m) for j in range(i + 1, m)]
        fundamental = [comb(*[(1, e(j)) for j in range(i + 1)]) for i in range(n)]
    else:
        simple = [comb((1, e(i)), (-1, e(i + 1))) for i in range(n - 1)]
        pairs = [comb((1, e(i)), (s, e(j))) for i in range(n) for j in range(i + 1, n) for s in (-1, 1)]
        if rtype == "B":
            simple.append(tuple(e(n - 1)))
            positive = pairs + [tuple(e(i)) for i in range(n)]
            fundamental = [comb(*[(1, e(j)) for j in range(i + 1)]) for i in range(n - 1)]
            fundamental.append(comb(*[(1, e(j, 1)) for j in range(n)]))
        elif rtype == "C":
            simple.append(tuple(e(n - 1, 4)))
            positive = pairs + [tuple(e(i, 4)) for i in range(n)]
            fundamental = [comb(*[(1, e(j)) for j in range(i + 1)]) for i in range(n)]
        else:  # D
            simple.append(comb((1, e(n - 2)), (1, e(n - 1))))
            positive = pairs
            fundamental = [comb(*[(1, e(j)) for j in range(i + 1)]) for i in range(n - 2)]
            fundamental.append(comb(*[(1, e(j, 1)) for j in range(n - 1)], (-1, e(n - 1, 1))))
            fundamental.append(comb(*[(1, e(j, 1)) for j in range(n)]))
    positive.sort(reverse=True)
    total = [sum(col) for col in zip(*positive)]
    if any(t % 2 for t in total):
        raise ArithmeticError("half-sum of positive roots is not half-integral")
    rho = tuple(t // 2 for t in total)
    rs = RootSystem(rtype, n, m, tuple(simple), tuple(positive), tuple(fundamental), rho)
    _check_invariants(rs)
    return rs


def _check_invariants(rs: RootSystem) -> None:
    for i, w in enumerate(rs.fundamental_weights):
        for j, a in enumerate(rs.simple_roots):
            if rs.coroot_pairing(w, a) != (1 if i == j else 0):
                raise ArithmeticError(f"<omega_{i + 1}, alpha_{j + 1}^vee> != delta in {rs.name}")


def weyl_group_order(rtype: str, rank: int) -> int:
    rtype = rtype.upper()
    if rtype == "A":
        return factorial(rank + 1)
    if rtype in "BC":
        return 2 ** rank * factorial(rank)
    if rtype == "D":
        return 2 ** (rank - 1) * factorial(rank)
    raise ValueError(rtype)


Matrix = tuple[tuple[int, ...], ...]


def _reflection_matrix(alpha: Vec) -> Matrix:
    """``v -> v - 2 <v, a> / <a, a> a`` as an integer matrix."""
    m = len(alpha)
    norm = _dot2(alpha, alpha)
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            val = Fraction(2 * alpha[i] * alpha[j], norm)
            if val.denominator != 1:
                raise ArithmeticError("reflection matrix is not integral")
            row.append((1 if i == j else 0) - int(val))
        rows.append(tuple(row))
    return tuple(rows)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
                 for i in range(len(a)))


def _apply(w: Matrix, v: Vec) -> Vec:
    return tuple(sum(r[k] * v[k] for k in range(len(v))) for r in w)


def _det_signed_perm(w: Matrix) -> int:
    """Determinant of a signed permutation matrix."""
    m = len(w)
    perm, sign = [], 1
    for row in w:
        nz = [(j, x) for j, x in enumerate(row) if x]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            raise ArithmeticError("Weyl group element is not a signed permutation")
        perm.append(nz[0][0])
        sign *= nz[0][1]
    seen = [False] * m
    for i in range(m):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    word: tuple[int, ...]  # a reduced word in the simple reflections (1-based)

    @property
    def sign(self) -> int:
        return _det_signed_perm(self.matrix)

    def act(self, v: Vec) -> Vec:
        return _apply(self.matrix, v)


@lru_cache(maxsize=None)
def _weyl_group(rtype: str, rank: int) -> tuple[WeylElement, ...]:
    rs = build_root_system(rtype, rank)
    gens = [_reflection_matrix(a) for a in rs.simple_roots]
    ident = tuple(tuple(1 if i == j else 0 for j in range(rs.ambient_dim)) for i in range(rs.ambient_dim))
    seen = {ident: ()}
    frontier = [ident]
    while frontier:  # breadth first, so each stored word is reduced
        nxt = []
        for w in frontier:
            for i, g in enumerate(gens, 1):
                u = _matmul(w, g)
                if u not in seen:
                    seen[u] = seen[w] + (i,)
                    nxt.append(u)
        frontier = nxt
    return tuple(WeylElement(mat, word) for mat, word in sorted(seen.items(), key=lambda kv: (len(kv[1]), kv[1])))


def weyl_group_elements(rs: RootSystem, max_rank: int = WEYL_RANK_BOUND) -> tuple[WeylElement, ...]:
    """All elements of ``W``, generated by closing the simple reflections under products."""
    if rs.rank > max_rank:
        raise ValueError(f"rank {rs.rank} exceeds the Weyl group bound {max_rank}")
    return _weyl_group(rs.type, rs.rank)


def _require_dominant(rs: RootSystem, lam: Weight) -> None:
    if len(lam.doubled) != rs.ambient_dim:
        raise ValueError(f"weight has {len(lam.doubled)} coordinates, {rs.name} needs {rs.ambient_dim}")
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not a dominant integral weight for {rs.name}")


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """``prod_{alpha > 0} <lam + rho, alpha> / <rho, alpha>``."""
    _require_dominant(rs, lam)
    shifted = tuple(a + b for a, b in zip(lam.doubled, rs.rho))
    val = prod((Fraction(_dot2(shifted, a), _dot2(rs.rho, a)) for a in rs.positive_roots), start=Fraction(1))
    if val.denominator != 1:
        raise ArithmeticError(f"Weyl dimension {val} is not an integer")
    return int(val)


def weyl_numerator(rs: RootSystem, v: Vec, max_rank: int = WEYL_RANK_BOUND) -> MultiLaurent:
    """``sum_w eps(w) e^{w v}`` with ``v`` doubled."""
    terms: dict[Vec, int] = {}
    for w in weyl_group_elements(rs, max_rank):
        key = w.act(v)
        terms[key] = terms.get(key, 0) + w.sign
    return MultiLaurent.from_doubled(terms, rs.ambient_dim)


def denominator_product(rs: RootSystem) -> MultiLaurent:
    """``prod_{alpha > 0} (e^{alpha/2} - e^{-alpha/2})``."""
    out = MultiLaurent.one(rs.ambient_dim)
    for a in rs.positive_roots:
        # a holds 2*alpha, so alpha/2 in doubled coordinates is a // 2
        plus = tuple(x // 2 for x in a)
        minus = tuple(-x for x in plus)
        out = out * MultiLaurent.from_doubled({plus: 1, minus: -1}, rs.ambient_dim)
    return out


def weyl_character(rs: RootSystem, lam: Weight, max_rank: int = WEYL_RANK_BOUND) -> MultiLaurent:
    """``sum_w eps(w) e^{w(lam + rho)} / sum_w eps(w) e^{w rho}``; variable ``i`` is ``e^{e_i}``."""
    _require_dominant(rs, lam)
    shifted = tuple(a + b for a, b in zip(lam.doubled, rs.rho))
    return poly_divide_exact(weyl_numerator(rs, shifted, max_rank), weyl_numerator(rs, rs.rho, max_rank))


def weight_from_partition(lam: Sequence[int], n: int) -> Weight:
    """Partition with at most ``n`` rows as a dominant weight of A_{n-1} (coordinates = parts)."""
    parts = list(lam) + [0] * (n - len(lam))
    if len(parts) != n:
        raise ValueError(f"{tuple(lam)} has more than {n} rows")
    return Weight(tuple(2 * p for p in parts))
