"""Brauer and Temperley-Lieb diagram algebras, with BMW parameter data.

A Brauer diagram on ``k`` dots is a perfect matching of ``2k`` points: top
points ``0..k-1`` and bottom points ``k..2k-1``, each read left to right.
``d1 * d2`` places ``d1`` above ``d2``; every closed loop becomes a factor of
the loop parameter ``x``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Iterator, Mapping

from .exact import (
    Generic,
    LaurentPoly,
    MultiLaurent,
    QPower,
    RootOfUnity,
    TwoCos,
    as_rational,
)
from .shapes import Partition, count_updown, partitions
from .symgroup import Permutation

__all__ = [
    "BrauerDiagram",
    "brauer_mul",
    "enumerate_brauer",
    "DiagramElement",
    "brauer_s",
    "brauer_e",
    "brauer_presentation_check",
    "brauer_dims",
    "tl_enumerate",
    "tl_presentation_check",
    "TLHalfDiagram",
    "tl_basis",
    "tl_dim",
    "tl_module_action",
    "tl_action_matrix",
    "tl_character_closed",
    "tl_character_general",
    "tl_gram_matrix",
    "d_2h",
    "hecke_to_tl_check",
    "HECKE_TL_READINGS",
    "brauer_semisimple",
    "tl_semisimple",
    "bmw_semisimple",
    "BMWParams",
    "bmw_relation_data",
    "catalan",
    "seven_dot_example",
]

X = LaurentPoly.gen("x")


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


# ---------------------------------------------------------------------------
# diagrams
# ---------------------------------------------------------------------------


class BrauerDiagram(tuple):
    """``partner[p]`` for every point ``p`` in ``0..2k-1``."""

    def __new__(cls, partner: Iterable[int]):
        partner = tuple(int(p) for p in partner)
        m = len(partner)
        if m % 2:
            raise ValueError("a Brauer diagram has an even number of points")
        for p, q in enumerate(partner):
            if not 0 <= q < m or q == p or partner[q] != p:
                raise ValueError(f"not a perfect matching: {partner}")
        return super().__new__(cls, partner)

    @property
    def k(self) -> int:
        return len(self) // 2

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], k: int) -> BrauerDiagram:
        partner = [-1] * (2 * k)
        for a, b in pairs:
            if partner[a] != -1 or partner[b] != -1:
                raise ValueError(f"point used twice in {pairs}")
            partner[a], partner[b] = b, a
        if -1 in partner:
            raise ValueError("not every point is matched")
        return cls(partner)

    @classmethod
    def identity(cls, k: int) -> BrauerDiagram:
        return cls.from_pairs(((i, k + i) for i in range(k)), k)

    @classmethod
    def from_permutation(cls, w: Permutation) -> BrauerDiagram:
        """Top dot ``w(i)`` joined to bottom dot ``i``; then ``D(u) D(v) = D(u v)``."""
        k = len(w)
        return cls.from_pairs(((w(i) - 1, k + i - 1) for i in range(1, k + 1)), k)

    @classmethod
    def s(cls, i: int, k: int) -> BrauerDiagram:
        return cls.from_permutation(Permutation.simple(i, k))

    @classmethod
    def e(cls, i: int, k: int) -> BrauerDiagram:
        """Cap on top dots ``i, i+1``, cup on the bottom ones, verticals elsewhere."""
        if not 1 <= i < k:
            raise ValueError(f"e_{i} needs 1 <= i < k = {k}")
        pairs = [(i - 1, i), (k + i - 1, k + i)]
        pairs += [(j, k + j) for j in range(k) if j not in (i - 1, i)]
        return cls.from_pairs(pairs, k)

    def pairs(self) -> list[tuple[int, int]]:
        return [(p, q) for p, q in enumerate(self) if p < q]

    def through_count(self) -> int:
        k = self.k
        return sum(1 for p in range(k) if self[p] >= k)

    def to_permutation(self) -> Permutation | None:
        """The permutation when every edge runs top to bottom, else ``None``."""
        k = self.k
        if self.through_count() != k:
            return None
        return Permutation(self[k + i] + 1 for i in range(k))

    def _circle_position(self, p: int) -> int:
        k = self.k
        return p if p < k else 3 * k - 1 - p

    def is_planar(self) -> bool:
        """Noncrossing when the top row and then the reversed bottom row lie on a circle."""
        chords = sorted(tuple(sorted((self._circle_position(a), self._circle_position(b))))
                        for a, b in self.pairs())
        for idx, (a, b) in enumerate(chords):
            for c, d in chords[idx + 1:]:
                if a < c < b < d:
                    return False
        return True

    def flip(self) -> BrauerDiagram:
        """Reflect top and bottom."""
        k = self.k
        return BrauerDiagram.from_pairs((((a + k) % (2 * k), (b + k) % (2 * k))
                                         for a, b in self.pairs()), k)

    @staticmethod
    def _label(p: int, k: int) -> str:
        return f"t{p + 1}" if p < k else f"b{p - k + 1}"

    @staticmethod
    def _unlabel(s: str, k: int) -> int:
        if len(s) < 2 or s[0] not in "tb":
            raise ValueError(f"bad point label {s!r}")
        i = int(s[1:])
        if not 1 <= i <= k:
            raise ValueError(f"point label {s!r} out of range for k = {k}")
        return i - 1 if s[0] == "t" else k + i - 1

    def to_json(self) -> dict:
        k = self.k
        return {"k": k, "edges": [[self._label(a, k), self._label(b, k)] for a, b in self.pairs()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: Mapping | str) -> BrauerDiagram:
        if isinstance(data, str):
            data = json.loads(data)
        k = int(data["k"])
        return cls.from_pairs(((cls._unlabel(a, k), cls._unlabel(b, k)) for a, b in data["edges"]), k)

    def __repr__(self) -> str:
        return "BrauerDiagram(" + " ".join(f"{a}-{b}" for a, b in self.to_json()["edges"]) + ")"


def _k_of(d1: BrauerDiagram, d2: BrauerDiagram) -> int:
    if d1.k != d2.k:
        raise ValueError(f"size mismatch: {d1.k} and {d2.k} dots")
    return d1.k


@lru_cache(maxsize=1 << 16)
def brauer_mul(d1: BrauerDiagram, d2: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """``d1 d2 = x^c d``: stack ``d1`` over ``d2`` and count closed loops."""
    k = _k_of(d1, d2)
    result = [-1] * (2 * k)
    middle_seen = [False] * k
    # outer points: top row of d1 (diagram 1) and bottom row of d2 (diagram 2)
    for diag0, p0 in [(1, p) for p in range(k)] + [(2, p) for p in range(k, 2 * k)]:
        if result[p0] != -1:
            continue
        diag, p = diag0, p0
        while True:
            q = (d1 if diag == 1 else d2)[p]
            if (diag == 1 and q < k) or (diag == 2 and q >= k):
                break
            if diag == 1:
                middle_seen[q - k] = True
                diag, p = 2, q - k
            else:
                middle_seen[q] = True
                diag, p = 1, q + k
        result[p0], result[q] = q, p0
    loops = 0
    for j in range(k):
        if middle_seen[j]:
            continue
        loops += 1
        m = j
        while not middle_seen[m]:
            middle_seen[m] = True
            m2 = d2[m]
            middle_seen[m2] = True
            m = d1[m2 + k] - k
    return BrauerDiagram(result), loops


def enumerate_brauer(k: int) -> list[BrauerDiagram]:
    """All ``(2k-1)!!`` Brauer diagrams on ``k`` dots, in lexicographic order."""

    def matchings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
        if not points:
            yield []
            return
        first, rest = points[0], points[1:]
        for idx, other in enumerate(rest):
            for m in matchings(rest[:idx] + rest[idx + 1:]):
                yield [(first, other)] + m

    return sorted(BrauerDiagram.from_pairs(m, k) for m in matchings(tuple(range(2 * k))))


# ---------------------------------------------------------------------------
# algebra elements
# ---------------------------------------------------------------------------


class DiagramElement:
    """``sum c_d d`` over Brauer diagrams; loops multiply by ``loop``.

    ``loop`` is the symbolic ``x`` by default, or any exact scalar.
    """

    __slots__ = ("terms", "k", "loop")

    def __init__(self, terms: Mapping[BrauerDiagram, object], k: int, loop=X):
        clean = {}
        for d, c in terms.items():
            if d.k != k:
                raise ValueError(f"diagram on {d.k} dots in an element on {k} dots")
            if not isinstance(c, LaurentPoly):
                c = as_rational(c)
            if c:
                clean[d] = c
        self.terms = clean
        self.k = k
        self.loop = loop

    @classmethod
    def basis(cls, d: BrauerDiagram, loop=X) -> DiagramElement:
        return cls({d: 1}, d.k, loop)

    @classmethod
    def one(cls, k: int, loop=X) -> DiagramElement:
        return cls.basis(BrauerDiagram.identity(k), loop)

    def _check(self, other: DiagramElement) -> None:
        if self.k != other.k:
            raise ValueError(f"size mismatch: {self.k} and {other.k} dots")
        if self.loop != other.loop:
            raise ValueError("loop parameters differ")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, DiagramElement):
            other = DiagramElement.one(self.k, self.loop).scale(other)
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return DiagramElement(out, self.k, self.loop)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other if isinstance(other, DiagramElement) else -as_rational(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> DiagramElement:
        return DiagramElement({d: c * s for d, c in self.terms.items()}, self.k, self.loop)

    def __mul__(self, other):
        if not isinstance(other, DiagramElement):
            return self.scale(other)
        self._check(other)
        out: dict[BrauerDiagram, object] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d, loops = brauer_mul(d1, d2)
                c = c1 * c2 * self.loop ** loops if loops else c1 * c2
                out[d] = out[d] + c if d in out else c
        return DiagramElement(out, self.k, self.loop)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, DiagramElement):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{d!r}" for d, c in sorted(self.terms.items()))


def brauer_s(i: int, k: int, loop=X) -> DiagramElement:
    return DiagramElement.basis(BrauerDiagram.s(i, k), loop)


def brauer_e(i: int, k: int, loop=X) -> DiagramElement:
    return DiagramElement.basis(BrauerDiagram.e(i, k), loop)


def brauer_presentation_check(k: int, loop=X) -> dict[str, bool]:
    """Every defining relation of the Brauer algebra on ``k`` dots, by name."""
    if k < 1:
        raise ValueError("k must be positive")
    s = {i: brauer_s(i, k, loop) for i in range(1, k)}
    e = {i: brauer_e(i, k, loop) for i in range(1, k)}
    one = DiagramElement.one(k, loop)
    checks: dict[str, bool] = {}

    def record(name: str, ok: bool) -> None:
        checks[name] = checks.get(name, True) and ok

    for i in range(1, k):
        record("s_i^2 = 1", s[i] * s[i] == one)
        record("e_i^2 = x e_i", e[i] * e[i] == e[i].scale(loop))
        record("e_i s_i = e_i", e[i] * s[i] == e[i])
        record("s_i e_i = e_i", s[i] * e[i] == e[i])
        for j in range(1, k):
            if abs(i - j) > 1:
                record("s_i s_j = s_j s_i", s[i] * s[j] == s[j] * s[i])
                record("s_i e_j = e_j s_i", s[i] * e[j] == e[j] * s[i])
                record("e_i e_j = e_j e_i", e[i] * e[j] == e[j] * e[i])
    for i in range(1, k - 1):
        record("s_i s_i+1 s_i = s_i+1 s_i s_i+1", s[i] * s[i + 1] * s[i] == s[i + 1] * s[i] * s[i + 1])
        record("e_i e_i+1 e_i = e_i", e[i] * e[i + 1] * e[i] == e[i])
        record("e_i+1 e_i e_i+1 = e_i+1", e[i + 1] * e[i] * e[i + 1] == e[i + 1])
        record("s_i e_i+1 e_i = s_i+1 e_i", s[i] * e[i + 1] * e[i] == s[i + 1] * e[i])
        record("e_i+1 e_i s_i+1 = e_i+1 s_i", e[i + 1] * e[i] * s[i + 1] == e[i + 1] * s[i])
    return checks


def brauer_dims(k: int) -> dict[Partition, int]:
    """Irreducible dimensions of the Brauer algebra, counted by up-down tableaux.

    Keys are partitions of ``k - 2h``; ``sum dim^2 = (2k-1)!!``.
    """
    out = {}
    for h in range(k // 2 + 1):
        for lam in partitions(k - 2 * h):
            out[lam] = count_updown(lam, k)
    return out


# ---------------------------------------------------------------------------
# Temperley-Lieb
# ---------------------------------------------------------------------------


def tl_enumerate(k: int) -> list[BrauerDiagram]:
    """The ``Catalan(k)`` planar Brauer diagrams, generated directly as noncrossing matchings."""
    m = 2 * k

    @lru_cache(maxsize=None)
    def nc(lo: int, hi: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        # noncrossing perfect matchings of circle positions lo..hi-1
        if lo >= hi:
            return ((),)
        out = []
        for j in range(lo + 1, hi, 2):
            for inner in nc(lo + 1, j):
                for outer in nc(j + 1, hi):
                    out.append(((lo, j),) + inner + outer)
        return tuple(out)

    def point(c: int) -> int:
        return c if c < k else 3 * k - 1 - c

    return sorted(BrauerDiagram.from_pairs(((point(a), point(b)) for a, b in chords), k)
                  for chords in nc(0, m))


def tl_presentation_check(k: int, loop=X) -> dict[str, bool]:
    """The Temperley-Lieb relations among the ``E_i = e_i``."""
    e = {i: brauer_e(i, k, loop) for i in range(1, k)}
    checks: dict[str, bool] = {}

    def record(name: str, ok: bool) -> None:
        checks[name] = checks.get(name, True) and ok

    for i in range(1, k):
        record("E_i^2 = x E_i", e[i] * e[i] == e[i].scale(loop))
        for j in range(1, k):
            if abs(i - j) > 1:
                record("E_i E_j = E_j E_i", e[i] * e[j] == e[j] * e[i])
            if abs(i - j) == 1:
                record("E_i E_i+-1 E_i = E_i", e[i] * e[j] * e[i] == e[i])
    return checks


class TLHalfDiagram(tuple):
    """Noncrossing partial matching of ``k`` points; ``None`` marks a through point.

    No through point may sit under an arc, so through strands can always be
    drawn straight down.
    """

    def __new__(cls, links: Iterable[int | None]):
        links = tuple(None if v is None else int(v) for v in links)
        k = len(links)
        for p, q in enumerate(links):
            if q is not None and (not 0 <= q < k or q == p or links[q] != p):
                raise ValueError(f"not a partial matching: {links}")
        for p, q in enumerate(links):
            if q is not None and p < q:
                for r in range(p + 1, q):
                    s = links[r]
                    if s is None or not p < s < q:
                        raise ValueError(f"crossing or covered through point in {links}")
        return super().__new__(cls, links)

    @property
    def k(self) -> int:
        return len(self)

    @property
    def through(self) -> int:
        return sum(1 for v in self if v is None)

    def __repr__(self) -> str:
        out = []
        for p, q in enumerate(self):
            out.append("|" if q is None else ("(" if q > p else ")"))
        return "TLHalfDiagram(" + "".join(out) + ")"


@lru_cache(maxsize=None)
def tl_basis(k: int, t: int) -> tuple[TLHalfDiagram, ...]:
    """Half diagrams on ``k`` points with ``t`` through points, sorted."""
    if t < 0 or t > k or (k - t) % 2:
        return ()

    def build(pos: int, stack: tuple[int, ...], links: tuple, through_left: int):
        if pos == k:
            if not stack and through_left == 0:
                yield links
            return
        # through point: only allowed when no arc is open
        if not stack and through_left > 0:
            yield from build(pos + 1, stack, links + (None,), through_left - 1)
        # open an arc
        yield from build(pos + 1, stack + (pos,), links + (-1,), through_left)
        # close the innermost open arc
        if stack:
            o = stack[-1]
            new = list(links) + [o]
            new[o] = pos
            yield from build(pos + 1, stack[:-1], tuple(new), through_left)

    return tuple(sorted((TLHalfDiagram(l) for l in build(0, (), (), t)), key=_half_key))


def _half_key(h: TLHalfDiagram) -> tuple:
    return tuple(-1 if v is None else v for v in h)


def tl_dim(k: int, ell: int) -> int:
    """``C(k, ell) - C(k, ell - 1)``, the dimension of ``T^{(k-ell, ell)}``."""
    if not 0 <= 2 * ell <= k:
        raise ValueError(f"need 0 <= ell <= k/2, got k = {k}, ell = {ell}")
    return comb(k, ell) - (comb(k, ell - 1) if ell >= 1 else 0)


def tl_module_action(d: BrauerDiagram, h: TLHalfDiagram) -> tuple[TLHalfDiagram, int] | None:
    """``d`` on top of ``h``: the resulting half diagram and the loop count.

    ``None`` means the through-strand count dropped, so the action is zero.
    """
    k = d.k
    if h.k != k:
        raise ValueError(f"size mismatch: diagram on {k} dots, half diagram on {h.k}")
    if not d.is_planar():
        raise ValueError("the Temperley-Lieb action needs a planar diagram")
    result: list[int | None] = [-1] * k
    visited = [False] * k
    for p in range(k):
        if result[p] != -1:
            continue
        q = d[p]
        if q < k:
            result[p], result[q] = q, p
            continue
        while True:
            j = q - k
            visited[j] = True
            nxt = h[j]
            if nxt is None:
                result[p] = None
                break
            visited[nxt] = True
            q = d[nxt + k]
            if q < k:
                result[p], result[q] = q, p
                break
    if sum(1 for v in result if v is None) < h.through:
        return None
    loops = 0
    for j in range(k):
        if visited[j]:
            continue
        loops += 1
        m = j
        while not visited[m]:
            visited[m] = True
            partner = h[m]
            visited[partner] = True
            m = d[partner + k] - k
    return TLHalfDiagram(result), loops


def tl_action_matrix(a: DiagramElement, t: int) -> dict[tuple[TLHalfDiagram, TLHalfDiagram], object]:
    """Sparse matrix of ``a`` on the half diagrams with ``t`` through points: ``(row, col) -> coeff``."""
    out: dict[tuple[TLHalfDiagram, TLHalfDiagram], object] = {}
    for h in tl_basis(a.k, t):
        for d, c in a.terms.items():
            res = tl_module_action(d, h)
            if res is None:
                continue
            g, loops = res
            val = c * a.loop ** loops if loops else c
            key = (g, h)
            out[key] = out[key] + val if key in out else val
    return {key: v for key, v in out.items() if v}


def tl_character_general(a: DiagramElement, ell: int):
    """Trace of ``a`` on ``T^{(k-ell, ell)}``, realized on half diagrams with ``k - 2 ell`` through points."""
    k = a.k
    if not 0 <= 2 * ell <= k:
        raise ValueError(f"need 0 <= ell <= k/2, got k = {k}, ell = {ell}")
    total = a.loop * 0
    for (g, h), v in tl_action_matrix(a, k - 2 * ell).items():
        if g == h:
            total = total + v
    return total


def d_2h(k: int, h: int, layout: str = "nested", loop=X) -> DiagramElement:
    """``k - 2h`` vertical strands followed by ``h`` cap/cup pairs on the last ``2h`` dots.

    ``layout="nested"`` nests the caps; ``"adjacent"`` places them side by
    side (the product ``e_{k-2h+1} e_{k-2h+3} ... e_{k-1}``).
    """
    if not 0 <= 2 * h <= k:
        raise ValueError(f"need 0 <= 2h <= k, got k = {k}, h = {h}")
    start = k - 2 * h
    pairs = [(j, k + j) for j in range(start)]
    if layout == "nested":
        for j in range(h):
            a, b = start + j, k - 1 - j
            pairs += [(a, b), (k + a, k + b)]
    elif layout == "adjacent":
        for j in range(h):
            a = start + 2 * j
            pairs += [(a, a + 1), (k + a, k + a + 1)]
    else:
        raise ValueError(f"unknown layout {layout!r}")
    return DiagramElement.basis(BrauerDiagram.from_pairs(pairs, k), loop)


def tl_character_closed(k: int, ell: int, h: int) -> int:
    """``C(k-2h, ell-h) - C(k-2h, ell-h-1)`` for ``ell >= h`` and ``0`` otherwise."""
    if not 0 <= 2 * ell <= k or not 0 <= 2 * h <= k:
        raise ValueError(f"out of range: k = {k}, ell = {ell}, h = {h}")
    if ell < h:
        return 0
    m = k - 2 * h
    return comb(m, ell - h) - (comb(m, ell - h - 1) if ell - h >= 1 else 0)


def tl_gram_matrix(k: int, t: int, loop=X) -> list[list[object]]:
    """Pairing of half diagrams: join ``a`` to the mirror of ``b``.

    The pairing is ``loop^c`` when the through points of ``a`` and ``b`` join
    each other in order, and ``0`` otherwise.
    """
    basis = tl_basis(k, t)
    rows = []
    for a in basis:
        row = []
        for b in basis:
            row.append(_pair(a, b, loop))
        rows.append(row)
    return rows


def _pair(a: TLHalfDiagram, b: TLHalfDiagram, loop):
    k = a.k
    seen = [False] * k
    for p in range(k):
        if a[p] is None:
            seen[p] = True
            # walk from a's through point through b and a alternately
            q = p
            while True:
                nb = b[q]
                if nb is None:
                    break
                seen[nb] = True
                na = a[nb]
                if na is None:
                    return loop * 0
                seen[na] = True
                q = na
    loops = 0
    for p in range(k):
        if seen[p]:
            continue
        loops += 1
        q = p
        while not seen[q]:
            seen[q] = True
            r = a[q]
            seen[r] = True
            q = b[r]
    return loop ** loops if loops else loop ** 0


# ---------------------------------------------------------------------------
# Hecke algebra to Temperley-Lieb
# ---------------------------------------------------------------------------

# "x_squared": x^2 = q + q^-1 + 2; "inverse_x_squared": 1/x^2 = q + q^-1 + 2.
HECKE_TL_READINGS = ("x_squared", "inverse_x_squared")

_T_SAMPLES = (Fraction(2), Fraction(3), Fraction(1, 2), Fraction(5, 7), Fraction(-3))


def _hecke_tl_relations(k: int, q, a, loop) -> dict[str, bool]:
    """``T_i -> a E_i - 1`` against the Hecke relations and the kernel element."""
    one = DiagramElement.one(k, loop)
    img = {i: brauer_e(i, k, loop).scale(a) - one for i in range(1, k)}
    checks: dict[str, bool] = {}

    def record(name: str, ok: bool) -> None:
        checks[name] = checks.get(name, True) and ok

    for i in range(1, k):
        t = img[i]
        record("T_i^2 = (q-1) T_i + q", t * t == t.scale(q - 1) + one.scale(q))
        for j in range(1, k):
            if abs(i - j) > 1:
                record("T_i T_j = T_j T_i", t * img[j] == img[j] * t)
    for i in range(1, k - 1):
        t1, t2 = img[i], img[i + 1]
        record("T_i T_i+1 T_i = T_i+1 T_i T_i+1", t1 * t2 * t1 == t2 * t1 * t2)
        kern = t1 * t2 * t1 + t1 * t2 + t2 * t1 + t1 + t2 + one
        record("kernel element maps to 0", kern.is_zero())
    return checks


def hecke_to_tl_check(k: int, reading: str = "x_squared") -> dict:
    """Check the map ``T_i -> ((q+1)/x) E_i - 1`` under a reading of the parameter relation.

    Both readings are tested at ``q = t^2`` for the rational sample values of
    ``t`` in ``_T_SAMPLES``. Under ``"x_squared"``, ``x = t + 1/t`` and
    ``(q+1)/x = t``. The same identities are also checked symbolically,
    with coefficients in ``Z[t, 1/t]``. Under ``"inverse_x_squared"``,
    ``x = t/(t^2+1)`` and ``(q+1)/x = (t^2+1)^2/t``.
    """
    if reading not in HECKE_TL_READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    samples = {}
    for t in _T_SAMPLES:
        q = t * t
        x = t + 1 / t if reading == "x_squared" else t / (t * t + 1)
        a = (q + 1) / x
        samples[str(t)] = _hecke_tl_relations(k, q, a, x)
    report = {"k": k, "reading": reading, "samples": samples}
    ok = all(all(v.values()) for v in samples.values())
    if reading == "x_squared":
        tt = LaurentPoly.gen("t")
        xs = tt + LaurentPoly.monomial(-1, 1, "t")
        symbolic = _hecke_tl_relations(k, tt * tt, tt, xs)
        report["symbolic"] = symbolic
        ok = ok and all(symbolic.values())
    report["holds"] = ok
    return report


# ---------------------------------------------------------------------------
# semisimplicity
# ---------------------------------------------------------------------------


def brauer_semisimple(xval, k: int) -> bool:
    """``True`` when ``x`` lies outside the integer window ``{-2k+3, .., k-2}``.

    This is a sufficient condition only: ``False`` means "not guaranteed".
    """
    if isinstance(xval, Generic):
        return True
    if isinstance(xval, TwoCos):
        v = xval.rational_value()
        if v is None:
            return True
        xval = v
    x = as_rational(xval)
    if x.denominator != 1:
        return True
    return not (-2 * k + 3 <= x <= k - 2)


def _twocos_roots(k: int) -> set[tuple[int, int]]:
    """``(m, l)`` in lowest terms with ``2 <= l <= k`` and ``1 <= m < l``."""
    return {(m, l) for l in range(2, k + 1) for m in range(1, l) if gcd(m, l) == 1}


def tl_semisimple(xval, k: int) -> bool:
    """Whether ``TL_k(x)`` (with ``E_i^2 = x E_i``) is semisimple.

    It fails exactly when ``x = 2 cos(pi m / l)`` with ``gcd(m, l) = 1`` and
    ``2 <= l <= k``, with one exception: ``x = 0`` and ``k`` odd is
    semisimple. ``xval`` is a rational, a :class:`TwoCos` tag or
    :class:`Generic`.
    """
    if isinstance(xval, Generic):
        return True
    if isinstance(xval, TwoCos):
        rational = xval.rational_value()
        if rational is None:
            m, l = xval.m % (2 * xval.l), xval.l
            if m > l:
                m = 2 * l - m
            return (m, l) not in _twocos_roots(k)
        xval = rational
    x = as_rational(xval)
    if x == 0:
        return k < 2 or k % 2 == 1
    if x in (1, -1):
        return k < 3
    return True


def _rational_power_of(r: Fraction, q: Fraction) -> bool:
    """Whether ``r = q^n`` for some integer ``n``."""
    if r == 1:
        return True
    if q in (0, 1, -1) or r == 0:
        return r in (q, 1) if q != 0 else False
    a = abs(q)
    inv = a < 1
    base = 1 / a if inv else a
    target = abs(r)
    if inv:
        target = 1 / target
    # find n >= 0 with base^n = target, or n <= 0 via the reciprocal
    for tgt, sign in ((target, 1), (1 / target, -1)):
        p, n = Fraction(1), 0
        while p < tgt:
            p *= base
            n += 1
        if p == tgt:
            e = n * sign * (-1 if inv else 1)
            if q ** e == r:
                return True
    return False


def bmw_semisimple(r, q) -> bool:
    """``True`` when ``q`` is not a root of unity and ``r`` is not an integer power of ``q``.

    Sufficient condition only: ``False`` means the parameters are flagged.
    ``q`` may be a rational, :class:`RootOfUnity` or :class:`Generic`; ``r``
    may also be a :class:`QPower` tag.
    """
    if isinstance(q, RootOfUnity):
        return False
    if isinstance(r, QPower):
        return False
    if isinstance(q, Generic):
        if isinstance(r, (Generic, RootOfUnity)):
            return True
        return as_rational(r) != 1
    qv = as_rational(q)
    if qv == 0:
        raise ValueError("q must be invertible")
    if qv in (1, -1):
        return False
    if isinstance(r, Generic):
        return True
    if isinstance(r, RootOfUnity):
        return r.order != 1
    rv = as_rational(r)
    if rv == 0:
        raise ValueError("r must be invertible")
    return not _rational_power_of(rv, qv)


@dataclass(frozen=True)
class BMWParams:
    """``r`` and ``q`` as monomials in two variables, or exact rationals.

    ``x`` is returned as an exact pair ``(numerator, denominator)`` of
    two-variable Laurent polynomials, or a rational.
    """

    r: object
    q: object

    @classmethod
    def generic(cls) -> BMWParams:
        return cls(MultiLaurent.variable(0, 2), MultiLaurent.variable(1, 2))

    def _inv(self, v):
        if isinstance(v, MultiLaurent):
            (e, c), = v.raw_items()
            return MultiLaurent.monomial(tuple(-a for a in e), 1 / c)
        return 1 / as_rational(v)

    def x(self):
        r, q = self.r, self.q
        num = r - self._inv(r)
        den = q - self._inv(q)
        if isinstance(den, MultiLaurent):
            if den.is_zero():
                raise ValueError("q - 1/q vanishes: q = +-1 is degenerate")
            return (num + den, den)
        den = as_rational(den)
        if den == 0:
            raise ValueError("q - 1/q vanishes: q = +-1 is degenerate")
        return as_rational(num) / den + 1


def _x_equal(a, b) -> bool:
    if isinstance(a, tuple):
        return a[0] * b[1] == b[0] * a[1]
    return a == b


def bmw_relation_data(params: BMWParams) -> dict:
    """The BMW defining relations as text, with the derived loop value ``x``."""
    x = params.x()
    if isinstance(x, tuple):
        x_text = {"numerator": str(x[0]), "denominator": str(x[1]), "variables": ["r", "q"]}
        inv = BMWParams(-params._inv(params.r), -params._inv(params.q)).x()
        sym = _x_equal(x, inv)
    else:
        x_text = str(x)
        inv = BMWParams(-params._inv(params.r), -params._inv(params.q)).x()
        sym = x == inv
    return {
        "generators": "1, g_1, .., g_(k-1), all invertible",
        "relations": [
            "g_i g_(i+1) g_i = g_(i+1) g_i g_(i+1)",
            "g_i g_j = g_j g_i for |i-j| >= 2",
            "(g_i - r^-1)(g_i + q^-1)(g_i - q) = 0",
            "E_i g_(i-1)^(+-1) E_i = r^(+-1) E_i",
            "E_i g_(i+1)^(+-1) E_i = r^(+-1) E_i",
        ],
        "E_i": "(q - q^-1)(1 - E_i) = g_i - g_i^-1",
        "x": x_text,
        "x_invariant_under_r,q->-1/r,-1/q": sym,
    }


# ---------------------------------------------------------------------------
# worked example
# ---------------------------------------------------------------------------


def seven_dot_example() -> tuple[BrauerDiagram, BrauerDiagram, BrauerDiagram, int]:
    """Two diagrams on seven dots whose product closes two loops: ``(d1, d2, d, c)``."""
    k = 7
    # d1: caps t1-t2, t4-t5 on top; bottom cups b2-b3, b5-b6; the rest crosses
    d1 = BrauerDiagram.from_pairs(
        [(0, 1), (3, 4), (k + 1, k + 2), (k + 4, k + 5), (2, k + 6), (5, k + 0), (6, k + 3)], k)
    # d2: caps t2-t3 and t5-t6 meet the cups of d1 and close two loops
    d2 = BrauerDiagram.from_pairs(
        [(1, 2), (4, 5), (0, k + 2), (3, k + 0), (6, k + 6), (k + 1, k + 3), (k + 4, k + 5)], k)
    d, c = brauer_mul(d1, d2)
    return d1, d2, d, c
