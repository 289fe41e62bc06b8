"""Representations of the symmetric group S_n.

Two character rules (border strips and the standard-tableau weight rule),
Young's seminormal matrices, Young symmetrizer ranks, and the branching,
induction and tensor product multiplicities.

Permutations are one-line tuples of ``1..n`` and compose right to left:
``(s * t)(i) == s(t(i))``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itperms
from math import factorial, prod
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .exact import SparseMatrix, as_rational, matrix_rank
from .schur import kostka, lr_coeff
from .shapes import (
    Partition,
    Tableau,
    enumerate_border_strip_tableaux,
    enumerate_syt,
    partitions,
)

__all__ = [
    "Permutation",
    "all_permutations",
    "partial_sums",
    "gamma_word",
    "gamma_permutation",
    "z_mu",
    "class_size",
    "class_sizes_bruteforce",
    "mn_character",
    "roichman_factor",
    "roichman_weight",
    "roichman_character",
    "character_table",
    "SeminormalRep",
    "seminormal_matrices",
    "character_from_rep",
    "GroupAlgebraElement",
    "young_symmetrizer_dim",
    "kronecker",
    "induce_trivial_decompose",
    "restrict_decompose",
]

YOUNG_SYMMETRIZER_BOUND = 5
KRONECKER_BOUND = 7


class Permutation(tuple):
    """Bijection of ``{1..n}`` in one-line notation."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        """The transposition ``s_i = (i, i+1)``."""
        if not 1 <= i < n:
            raise ValueError(f"s_{i} is not defined in S_{n}")
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(img)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a - 1] = b
        return cls(img)

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> Permutation:
        """``s_{w_1} s_{w_2} ... s_{w_k}``."""
        p = cls.identity(n)
        for i in word:
            p = p * cls.simple(i, n)
        return p

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(other) != len(self):
            raise ValueError("permutations of different sizes")
        return Permutation(self[v - 1] for v in other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc, j = [], start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self[j - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def length(self) -> int:
        """Number of inversions, i.e. the Coxeter length."""
        return sum(1 for i in range(len(self)) for j in range(i + 1, len(self)) if self[i] > self[j])

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically first reduced word (by bubble sort from the right)."""
        word: list[int] = []
        p = list(self)
        while True:
            for i in range(len(p) - 1):
                if p[i] > p[i + 1]:
                    # self = p' * s_i where p' = p with positions i, i+1 swapped
                    p[i], p[i + 1] = p[i + 1], p[i]
                    word.append(i + 1)
                    break
            else:
                break
        return tuple(reversed(word))

    def descents_right(self) -> list[int]:
        return [i for i in range(1, len(self)) if self[i - 1] > self[i]]

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in _itperms(range(1, n + 1)):
        yield Permutation(p)


# ---------------------------------------------------------------------------
# cycle types and class sizes
# ---------------------------------------------------------------------------


def partial_sums(mu: Sequence[int]) -> frozenset[int]:
    """``B(mu) = {mu_1, mu_1 + mu_2, ..., |mu|}``."""
    out, s = set(), 0
    for m in mu:
        s += m
        out.add(s)
    return frozenset(out)


def gamma_word(mu: Sequence[int]) -> tuple[int, ...]:
    """Word in the simple transpositions for the block cycles ``(1 2 .. mu_1)(mu_1+1 ..)..``.

    Each block ``(a, a+1, .., b)`` is ``s_a s_{a+1} .. s_{b-1}``.
    """
    word, start = [], 1
    for m in mu:
        word.extend(range(start, start + m - 1))
        start += m
    return tuple(word)


def gamma_permutation(mu: Sequence[int]) -> Permutation:
    n = sum(mu)
    cycles, start = [], 1
    for m in mu:
        cycles.append(tuple(range(start, start + m)))
        start += m
    return Permutation.from_cycles(cycles, n)


def z_mu(mu: Sequence[int]) -> int:
    """Centralizer order ``prod_i i^{m_i} m_i!``."""
    mult: dict[int, int] = {}
    for m in mu:
        mult[m] = mult.get(m, 0) + 1
    return prod(i ** m * factorial(m) for i, m in mult.items())


def class_size(mu: Sequence[int]) -> int:
    mu = Partition(mu)
    return factorial(mu.size) // z_mu(mu)


def class_sizes_bruteforce(n: int) -> dict[Partition, int]:
    """Conjugacy class sizes counted by walking all of ``S_n``."""
    out: dict[Partition, int] = {}
    for p in all_permutations(n):
        ct = p.cycle_type()
        out[ct] = out.get(ct, 0) + 1
    return out


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------


def _check_sizes(lam: Partition, mu: Sequence[int]) -> None:
    if lam.size != sum(mu):
        raise ValueError(f"|lambda| = {lam.size} but |mu| = {sum(mu)}")


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: tuple[int, ...], last_strip: bool) -> int:
    total = 0
    for bst, _ in enumerate_border_strip_tableaux(lam, mu):
        signs = bst.strip_signs if last_strip else bst.strip_signs[:-1]
        total += prod(signs)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int], reading: str = "all") -> int:
    """Border strip (Murnaghan-Nakayama) rule for ``chi^lam(mu)``.

    ``reading="all"`` weights a tableau by the product of the signs of all of
    its strips. ``reading="drop_last"`` omits the sign of the final strip; it
    is not a class function of S_n and exists only so the two readings can be
    compared.
    """
    lam = Partition(lam)
    _check_sizes(lam, mu)
    if reading not in ("all", "drop_last"):
        raise ValueError(f"unknown reading {reading!r}")
    return _mn(lam, tuple(mu), reading == "all")


def _south_west(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Cell ``b`` is strictly south and weakly west of ``a``."""
    return b[0] > a[0] and b[1] <= a[1]


def _north_east(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Cell ``b`` is weakly north and strictly east of ``a``.

    For consecutive entries of a standard tableau this is exactly the
    complement of :func:`_south_west`, so a cell further along the same row
    counts as north-east.
    """
    return b[0] <= a[0] and b[1] > a[1]


def _north_east_strict_row(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Cell ``b`` is strictly north and weakly east of ``a``."""
    return b[0] < a[0] and b[1] >= a[1]


NE_READINGS = {"weak_row": _north_east, "strict_row": _north_east_strict_row}


def roichman_factor(i: int, pos: Mapping[int, tuple[int, int]], blocks: frozenset[int],
                    n: int, ne_reading: str = "weak_row") -> int | None:
    """The factor ``f(i, T)``: -1, 0, 1, or ``None`` for the generic case.

    ``None`` marks "otherwise with ``i`` not in ``B(mu)``", where the symmetric
    group takes 1 and the Hecke algebra takes ``q``. Conditions that mention
    ``i+1`` or ``i+2`` beyond ``n`` count as false.

    ``ne_reading`` picks the meaning of "north-east": ``"weak_row"`` (weakly
    north, strictly east) reproduces the border strip rule; ``"strict_row"``
    (strictly north, weakly east) leaves same-row successors in neither case
    and is kept only for comparison.
    """
    if i in blocks:
        return 1
    # i < n here, since n is always a block end
    if _south_west(pos[i], pos[i + 1]):
        return -1
    ne = NE_READINGS[ne_reading]
    if (i + 1 not in blocks and i + 2 <= n
            and ne(pos[i], pos[i + 1]) and _south_west(pos[i + 1], pos[i + 2])):
        return 0
    return None


def roichman_weight(t: Tableau, mu: Sequence[int], generic=1, ne_reading: str = "weak_row"):
    """``prod_i f(i, T)`` with the generic factor set to ``generic``."""
    pos = t.positions()
    n = len(pos)
    blocks = partial_sums(mu)
    w = 1
    for i in range(1, n + 1):
        f = roichman_factor(i, pos, blocks, n, ne_reading)
        if f == 0:
            return 0
        w = w * (generic if f is None else f)
    return w


@lru_cache(maxsize=None)
def _roichman(lam: Partition, mu: tuple[int, ...], ne_reading: str) -> int:
    return sum(roichman_weight(t, mu, 1, ne_reading) for t in enumerate_syt(lam))


def roichman_character(lam: Sequence[int], mu: Sequence[int], ne_reading: str = "weak_row") -> int:
    """``chi^lam(mu)`` as a sum over standard tableaux of ``prod f(i, T)``."""
    lam = Partition(lam)
    _check_sizes(lam, mu)
    if ne_reading not in NE_READINGS:
        raise ValueError(f"unknown reading {ne_reading!r}")
    return _roichman(lam, tuple(mu), ne_reading)


def character_table(n: int, rule: Callable[[Partition, Partition], int] = mn_character
                    ) -> tuple[list[Partition], list[list[int]]]:
    """Rows ``lam`` and columns ``mu`` both in reverse-lexicographic order."""
    parts = partitions(n)
    return parts, [[rule(lam, mu) for mu in parts] for lam in parts]


# ---------------------------------------------------------------------------
# seminormal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeminormalRep:
    """Young's seminormal matrices on the basis of standard tableaux.

    ``generators[i-1][S, T]`` is the coefficient of ``v_S`` in ``s_i v_T``.
    """

    lam: Partition
    basis: tuple[Tableau, ...]
    generators: tuple[SparseMatrix, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.lam.size

    @property
    def dim(self) -> int:
        return len(self.basis)

    def word_matrix(self, word: Sequence[int]) -> SparseMatrix:
        m = SparseMatrix.identity(self.dim)
        for i in word:
            m = m @ self.generators[i - 1]
        return m

    def matrix(self, perm: Permutation) -> SparseMatrix:
        key = tuple(perm)
        if key not in self._cache:
            self._cache[key] = self.word_matrix(perm.reduced_word())
        return self._cache[key]


def _content(cell: tuple[int, int]) -> int:
    return cell[1] - cell[0]


@lru_cache(maxsize=None)
def seminormal_matrices(lam: Sequence[int]) -> SeminormalRep:
    """Matrices of ``s_1 .. s_{n-1}`` in Young's seminormal form."""
    lam = Partition(lam)
    basis = tuple(enumerate_syt(lam))
    index = {t.reading_word(): k for k, t in enumerate(basis)}
    n = lam.size
    gens = []
    for i in range(1, n):
        rows: dict[int, dict[int, Fraction]] = {}
        for col, t in enumerate(basis):
            pos = t.positions()
            a = Fraction(1, _content(pos[i + 1]) - _content(pos[i]))
            rows.setdefault(col, {})[col] = a
            swapped = t.swap_entries(i, i + 1)
            if swapped.is_standard():
                rows.setdefault(index[swapped.reading_word()], {})[col] = 1 + a
        gens.append(SparseMatrix(len(basis), rows))
    return SeminormalRep(lam, basis, tuple(gens))


def character_from_rep(rep: SeminormalRep, mu: Sequence[int]) -> int:
    """Trace of the block-cycle element of type ``mu`` in ``rep``."""
    if sum(mu) != rep.n:
        raise ValueError(f"|mu| = {sum(mu)} but the representation has n = {rep.n}")
    tr = rep.word_matrix(gamma_word(mu)).trace()
    if tr.denominator != 1:
        raise ArithmeticError(f"non-integral character value {tr}")
    return int(tr)


# ---------------------------------------------------------------------------
# group algebra and Young symmetrizers
# ---------------------------------------------------------------------------


class GroupAlgebraElement:
    """Finite ``Permutation -> Rational`` map, an element of ``Q S_n``."""

    __slots__ = ("n", "terms")

    def __init__(self, terms: Mapping[Permutation, object], n: int):
        self.n = n
        self.terms = {Permutation(p): as_rational(c) for p, c in terms.items() if c}

    @classmethod
    def basis(cls, p: Permutation) -> GroupAlgebraElement:
        return cls({p: 1}, len(p))

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return GroupAlgebraElement(out, self.n)

    def __mul__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        out: dict[Permutation, Fraction] = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                r = p * q
                out[r] = out.get(r, 0) + a * b
        return GroupAlgebraElement(out, self.n)

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({len(self.terms)} terms, n={self.n})"


def _stabilizer(blocks: Sequence[Sequence[int]], n: int) -> list[Permutation]:
    """Permutations preserving each block setwise."""
    perms = [Permutation.identity(n)]
    for block in blocks:
        new = []
        for img in _itperms(block):
            mapping = dict(zip(block, img))
            g = Permutation(mapping.get(i, i) for i in range(1, n + 1))
            new.extend(p * g for p in perms)
        perms = new
    return perms


def row_symmetrizer(t: Tableau) -> GroupAlgebraElement:
    n = sum(len(r) for r in t.rows)
    return GroupAlgebraElement({p: 1 for p in _stabilizer(t.rows, n)}, n)


def column_antisymmetrizer(t: Tableau) -> GroupAlgebraElement:
    n = sum(len(r) for r in t.rows)
    cols: dict[int, list[int]] = {}
    for (i, j), v in t.cells():
        cols.setdefault(j, []).append(v)
    return GroupAlgebraElement({p: p.sign() for p in _stabilizer(list(cols.values()), n)}, n)


def young_symmetrizer_dim(lam: Sequence[int], t: Tableau,
                          bound: int = YOUNG_SYMMETRIZER_BOUND) -> int:
    """Rank of ``a -> a * P(T) N(T)`` on the group algebra ``Q S_n``."""
    lam = Partition(lam)
    if t.shape.outer != lam or t.shape.inner:
        raise ValueError(f"tableau shape {t.shape} does not match {lam}")
    n = lam.size
    if n > bound:
        raise ValueError(f"n = {n} exceeds the Young symmetrizer bound {bound}")
    e = row_symmetrizer(t) * column_antisymmetrizer(t)
    group = list(all_permutations(n))
    index = {p: k for k, p in enumerate(group)}
    # row g holds the coordinates of g * e
    matrix = []
    for g in group:
        row = [0] * len(group)
        for p, c in e.terms.items():
            row[index[g * p]] += c
        matrix.append(row)
    return matrix_rank(matrix)


# ---------------------------------------------------------------------------
# multiplicities
# ---------------------------------------------------------------------------


def kronecker(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int],
              bound: int = KRONECKER_BOUND) -> int:
    """Multiplicity of ``S^lam`` in ``S^mu (x) S^nu``, by summing over all of ``S_n``."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    n = mu.size
    if not (nu.size == lam.size == n):
        raise ValueError("kronecker needs three partitions of the same size")
    if n > bound:
        raise ValueError(f"n = {n} exceeds the Kronecker bound {bound}")
    total = 0
    for p in all_permutations(n):
        ct = p.cycle_type()
        total += mn_character(mu, ct) * mn_character(nu, ct) * mn_character(lam, ct)
    q, r = divmod(total, factorial(n))
    if r or q < 0:
        raise ArithmeticError(f"Kronecker sum {total} is not a nonnegative multiple of {n}!")
    return q


def induce_trivial_decompose(mu: Sequence[int]) -> dict[Partition, int]:
    """Multiplicities in the trivial module of ``S_mu`` induced to ``S_n``."""
    n = sum(mu)
    out = {}
    for lam in partitions(n):
        k = kostka(lam, mu)
        if k:
            out[lam] = k
    return out


def restrict_decompose(lam: Sequence[int], k: int, l: int) -> dict[tuple[Partition, Partition], int]:
    """Multiplicities of ``S^mu (x) S^nu`` in ``S^lam`` restricted to ``S_k x S_l``."""
    lam = Partition(lam)
    if k + l != lam.size or k < 0 or l < 0:
        raise ValueError(f"k + l = {k + l} but |lambda| = {lam.size}")
    out = {}
    for mu in partitions(k):
        if not lam.contains(mu):
            continue
        for nu in partitions(l):
            c = lr_coeff(lam, mu, nu)
            if c:
                out[(mu, nu)] = c
    return out
