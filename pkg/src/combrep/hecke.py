"""Iwahori-Hecke algebras of type A and the groups G(r, p, n).

``H_n(q)`` has basis ``T_w`` over permutations ``w`` with
``T_s T_w = T_{sw}`` when ``l(sw) > l(w)`` and ``(q-1) T_w + q T_{sw}``
otherwise. Coefficients are Laurent polynomials in ``q``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterator, Mapping, Sequence

from .exact import Generic, LaurentPoly, RootOfUnity, as_rational
from .shapes import Partition, enumerate_syt, hook_dim, partitions
from .symgroup import (
    Permutation,
    all_permutations,
    gamma_permutation,
    partial_sums,
    roichman_factor,
)

__all__ = [
    "HeckeElement",
    "hecke_mul",
    "T",
    "T_word",
    "reduced_words",
    "gamma_mu",
    "hecke_roichman_character",
    "hecke_character_table",
    "HECKE_READINGS",
    "permutation_module_trace",
    "hecke_semisimple",
    "GrpnIrrepIndex",
    "grpn_irreps",
    "grpn_data",
    "HrpnPresentation",
    "hrpn_presentation",
]

Q = LaurentPoly.gen("q")

# "blocks_one": the generic factor is q only when i is not a block end.
# "literal": every "otherwise" factor is q, block ends included.
HECKE_READINGS = ("blocks_one", "literal")


def _poly(c) -> LaurentPoly:
    return c if isinstance(c, LaurentPoly) else LaurentPoly.const(c, "q")


class HeckeElement:
    """Finite combination ``sum_w c_w T_w`` with ``c_w`` in ``Z[q, q^-1]`` (or its fraction field)."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Mapping[Permutation, object], n: int):
        clean = {}
        for w, c in terms.items():
            if len(w) != n:
                raise ValueError(f"permutation {w} does not have size {n}")
            c = _poly(c)
            if not c.is_zero():
                clean[Permutation(w)] = c
        self.terms = clean
        self.n = n

    @classmethod
    def basis(cls, w: Permutation) -> HeckeElement:
        return cls({w: 1}, len(w))

    @classmethod
    def one(cls, n: int) -> HeckeElement:
        return cls.basis(Permutation.identity(n))

    @classmethod
    def zero(cls, n: int) -> HeckeElement:
        return cls({}, n)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: Permutation) -> LaurentPoly:
        return self.terms.get(w, LaurentPoly({}, "q"))

    def _check(self, other: HeckeElement) -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: H_{self.n} and H_{other.n}")

    def __add__(self, other: HeckeElement) -> HeckeElement:
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(out, self.n)

    def __neg__(self) -> HeckeElement:
        return self.scale(-1)

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + (-other)

    def scale(self, s) -> HeckeElement:
        return HeckeElement({w: c * s for w, c in self.terms.items()}, self.n)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def specialize(self, qval) -> dict[Permutation, Fraction]:
        """Coefficients with ``q`` replaced by a nonzero rational."""
        out = {}
        for w, c in self.terms.items():
            v = c.evaluate(qval)
            if v:
                out[w] = v
        return out

    def __iter__(self) -> Iterator[tuple[Permutation, LaurentPoly]]:
        return iter(sorted(self.terms.items()))

    def to_json(self) -> list[dict]:
        return [{"w": list(w), "coeff": str(c)} for w, c in self]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*T{list(w)}" for w, c in self)


def _left_simple(i: int, w: Permutation) -> dict[Permutation, LaurentPoly]:
    """``T_{s_i} T_w`` as a coefficient map."""
    sw = Permutation.simple(i, len(w)) * w
    inv = w.inverse()
    if inv(i) < inv(i + 1):
        return {sw: LaurentPoly.const(1, "q")}
    return {w: Q - 1, sw: Q}


@lru_cache(maxsize=None)
def _basis_product(u: Permutation, v: Permutation) -> tuple[tuple[Permutation, LaurentPoly], ...]:
    """``T_u T_v``, pushing the letters of a reduced word of ``u`` onto ``T_v`` right to left."""
    current: dict[Permutation, LaurentPoly] = {v: LaurentPoly.const(1, "q")}
    for i in reversed(u.reduced_word()):
        nxt: dict[Permutation, LaurentPoly] = {}
        for w, c in current.items():
            for x, d in _left_simple(i, w).items():
                val = nxt[x] + c * d if x in nxt else c * d
                if val.is_zero():
                    nxt.pop(x, None)
                else:
                    nxt[x] = val
        current = nxt
    return tuple(current.items())


def hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Bilinear product of two elements of ``H_n(q)``."""
    a._check(b)
    out: dict[Permutation, LaurentPoly] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            c = cu * cv
            for w, d in _basis_product(u, v):
                out[w] = out[w] + c * d if w in out else c * d
    return HeckeElement(out, a.n)


def T(i: int, n: int) -> HeckeElement:
    """The generator ``T_i = T_{s_i}``."""
    return HeckeElement.basis(Permutation.simple(i, n))


def T_word(word: Sequence[int], n: int) -> HeckeElement:
    """``T_{i_1} T_{i_2} ... T_{i_m}`` as a product of generators."""
    out = HeckeElement.one(n)
    for i in word:
        out = out * T(i, n)
    return out


def reduced_words(w: Permutation) -> list[tuple[int, ...]]:
    """Every reduced word of ``w`` (``w = s_{i_1} ... s_{i_m}``), sorted."""
    n = len(w)

    @lru_cache(maxsize=None)
    def words(p: Permutation) -> tuple[tuple[int, ...], ...]:
        if p.length() == 0:
            return ((),)
        out = []
        inv = p.inverse()
        for i in range(1, n):
            # s_i is a left descent iff p^{-1}(i) > p^{-1}(i+1)
            if inv(i) > inv(i + 1):
                rest = Permutation.simple(i, n) * p
                out.extend((i,) + r for r in words(rest))
        return tuple(out)

    return sorted(words(w))


def gamma_mu(mu: Sequence[int]) -> Permutation:
    """Product of the cycles ``(1 2 .. mu_1)(mu_1+1 .. mu_1+mu_2)...``."""
    return gamma_permutation(mu)


def _check_sizes(lam: Partition, mu: Sequence[int]) -> None:
    if lam.size != sum(mu):
        raise ValueError(f"|lambda| = {lam.size} but |mu| = {sum(mu)}")


@lru_cache(maxsize=None)
def _hecke_roichman(lam: Partition, mu: tuple[int, ...], reading: str) -> LaurentPoly:
    blocks = partial_sums(mu)
    n = lam.size
    total = LaurentPoly({}, "q")
    for t in enumerate_syt(lam):
        pos = t.positions()
        sign, qdeg = 1, 0
        for i in range(1, n + 1):
            f = roichman_factor(i, pos, blocks, n)
            if f == 0:
                sign = 0
                break
            if f is None or (reading == "literal" and i in blocks):
                qdeg += 1
            else:
                sign *= f
        if sign:
            total = total + LaurentPoly.monomial(qdeg, sign, "q")
    return total


def hecke_roichman_character(lam: Sequence[int], mu: Sequence[int],
                             reading: str = "blocks_one") -> LaurentPoly:
    """``chi^lam_q(T_{gamma_mu})`` as a sum over standard tableaux.

    Each tableau contributes ``prod_i f(i, T)`` with ``f`` equal to ``-1``,
    ``0``, ``1`` (``i`` a block end) or ``q`` (all remaining ``i``).
    """
    lam = Partition(lam)
    _check_sizes(lam, mu)
    if reading not in HECKE_READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    if not lam:
        return LaurentPoly.const(1, "q")
    return _hecke_roichman(lam, tuple(mu), reading)


def hecke_character_table(n: int) -> tuple[list[Partition], list[list[LaurentPoly]]]:
    """Rows ``lam`` and columns ``mu``, both in reverse-lexicographic order."""
    parts = partitions(n)
    return parts, [[hecke_roichman_character(lam, mu) for mu in parts] for lam in parts]


# ---------------------------------------------------------------------------
# permutation modules (independent character oracle)
# ---------------------------------------------------------------------------


def _block_simples(nu: Sequence[int]) -> list[int]:
    out, start = [], 1
    for m in nu:
        out.extend(range(start, start + m - 1))
        start += m
    return out


def _minimal_coset_reps(nu: Sequence[int], n: int) -> list[Permutation]:
    """``d`` with ``d(i) < d(i+1)`` whenever ``s_i`` lies in the Young subgroup ``S_nu``."""
    simples = _block_simples(nu)
    return [d for d in all_permutations(n) if all(d(i) < d(i + 1) for i in simples)]


def permutation_module_trace(nu: Sequence[int], h: HeckeElement) -> LaurentPoly:
    """Trace of left multiplication by ``h`` on ``M^nu = H_n(q) x_nu``.

    ``x_nu`` is the sum of ``T_u`` over the Young subgroup; ``M^nu`` has basis
    ``T_d x_nu`` over minimal coset representatives ``d``, and
    ``T_d x_nu = sum_u T_{du}``, so the coordinate of ``T_d x_nu`` in any
    element of ``M^nu`` is its coefficient at ``T_d``.
    """
    n = h.n
    if sum(nu) != n:
        raise ValueError(f"|nu| = {sum(nu)} but n = {n}")
    young = [p for p in all_permutations(n) if _in_young(p, nu)]
    x_nu = HeckeElement({u: 1 for u in young}, n)
    total = LaurentPoly({}, "q")
    for d in _minimal_coset_reps(nu, n):
        img = h * (HeckeElement.basis(d) * x_nu)
        total = total + img.coefficient(d)
    return total


def _in_young(p: Permutation, nu: Sequence[int]) -> bool:
    start = 1
    for m in nu:
        block = range(start, start + m)
        if any(not (start <= p(i) < start + m) for i in block):
            return False
        start += m
    return True


# ---------------------------------------------------------------------------
# semisimplicity
# ---------------------------------------------------------------------------


def _is_root_of_unity_between(qval, lo: int, hi: int) -> bool:
    """Whether ``qval`` is a primitive ``j``-th root of unity for some ``lo <= j <= hi``."""
    if isinstance(qval, RootOfUnity):
        return lo <= qval.order <= hi
    if isinstance(qval, Generic):
        return False
    q = as_rational(qval)
    if q == 1:
        return lo <= 1 <= hi
    if q == -1:
        return lo <= 2 <= hi
    return False


def hecke_semisimple(qval, n: int) -> bool:
    """Whether ``H_n(q)`` is semisimple at the given parameter.

    ``qval`` is a rational, a :class:`RootOfUnity` tag or :class:`Generic`.
    The algebra fails to be semisimple exactly when ``q = 0`` (for ``n >= 3``)
    or ``q`` is a primitive ``j``-th root of unity with ``2 <= j <= n``; in
    those cases some ``1 + q + .. + q^{j-1}`` vanishes. ``H_2(0)`` is split
    by the idempotent ``-T_1`` and so is semisimple.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not isinstance(qval, (RootOfUnity, Generic)) and as_rational(qval) == 0:
        return n < 3
    return not _is_root_of_unity_between(qval, 2, n)


# ---------------------------------------------------------------------------
# G(r, p, n) and H_{r,p,n}
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrpnIrrepIndex:
    """An ``r``-tuple of partitions of total size ``n``."""

    parts: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(Partition(p) for p in self.parts))

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(p.size for p in self.parts)

    def dim(self) -> int:
        """``n! / prod of all hook lengths`` = multinomial times the ``S_m`` dimensions."""
        multinomial = factorial(self.n) // prod(factorial(p.size) for p in self.parts)
        return multinomial * prod(hook_dim(p) for p in self.parts)

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) if p else "0" for p in self.parts) + ")"

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


def _compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, r - 1):
            yield (first,) + rest


def grpn_irreps(r: int, n: int) -> list[GrpnIrrepIndex]:
    """Irreducibles of ``G(r, 1, n)``, enumerated size-composition first."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    out = []
    for sizes in _compositions(n, r):
        for combo in product(*(partitions(s) for s in sizes)):
            out.append(GrpnIrrepIndex(tuple(combo)))
    return out


def grpn_data(r: int, p: int, n: int) -> dict:
    """Order of ``G(r, p, n)`` and, for ``p = 1``, its irreducible dimensions."""
    if r < 1 or p < 1 or n < 1:
        raise ValueError("r, p and n must be positive")
    if r % p:
        raise ValueError(f"p = {p} does not divide r = {r}")
    d = r // p
    data = {"r": r, "p": p, "n": n, "order": d * r ** (n - 1) * factorial(n)}
    if p == 1:
        irreps = grpn_irreps(r, n)
        data["irrep_count"] = len(irreps)
        data["dims"] = [(ix, ix.dim()) for ix in irreps]
    return data


@dataclass(frozen=True)
class HrpnPresentation:
    """Generators and relations of ``H_{r,1,n}`` and the generators of ``H_{r,p,n}`` inside it.

    Stored as data only: no normal form is computed for these algebras.
    """

    r: int
    p: int
    n: int
    generators: tuple[str, ...]
    relations: tuple[str, ...]
    subalgebra_generators: tuple[str, ...]
    parameter_specialization: tuple[str, ...]
    group_specialization: str

    def to_json(self) -> dict:
        return {
            "r": self.r, "p": self.p, "n": self.n,
            "generators": list(self.generators),
            "relations": list(self.relations),
            "subalgebra_generators": list(self.subalgebra_generators),
            "parameter_specialization": list(self.parameter_specialization),
            "group_specialization": self.group_specialization,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def hrpn_presentation(r: int, p: int, n: int) -> HrpnPresentation:
    if r < 1 or p < 1 or n < 1 or r % p:
        raise ValueError("need positive r, p, n with p dividing r")
    d = r // p
    gens = tuple(f"T{i}" for i in range(1, n + 1))
    rels = ["T_i T_j = T_j T_i for |i-j| > 1"]
    if n >= 3:
        rels.append("T_i T_(i+1) T_i = T_(i+1) T_i T_(i+1) for 2 <= i <= n-1")
    if n >= 2:
        rels.append("T1 T2 T1 T2 = T2 T1 T2 T1")
    rels.append(" ".join(f"(T1 - u{i})" for i in range(r)) + " = 0")
    if n >= 2:
        rels.append("(T_i - q)(T_i + q^-1) = 0 for 2 <= i <= n")
    sub = [f"a0 = T1^{p}"]
    if n >= 2:
        sub.append("a1 = T1^-1 T2 T1")
    sub.extend(f"a{i} = T{i}" for i in range(2, n + 1))
    substitutions = []
    for ell in range(p):
        for k in range(d):
            idx = (ell * d + k * p + 1) % r
            substitutions.append(f"u{idx} = eps^{ell} * x{k}^(1/{p})")
    return HrpnPresentation(
        r, p, n, gens, tuple(rels), tuple(sub), tuple(substitutions),
        f"q = 1 and x_k^(1/{p}) = xi^(k*{p}) with xi a primitive {r}th root of unity",
    )
