"""Partitions, skew shapes, and the tableau families indexed by them.

Cells are 1-based ``(row, column)`` pairs in English (matrix) convention.
Enumerations return lists in a fixed order: lexicographic on the row-reading
word of the tableau, so repeated runs agree exactly.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "SkewShape",
    "Tableau",
    "StandardTableau",
    "ColumnStrictTableau",
    "UpDownTableau",
    "BorderStripTableau",
    "EnumerationBoundError",
    "partitions",
    "parse_partition",
    "parse_skew",
    "hooks_and_contents",
    "hook_dim",
    "hook_content_dim",
    "enumerate_syt",
    "enumerate_cst",
    "word_of",
    "is_lattice",
    "is_border_strip",
    "border_strip_sign",
    "removable_border_strips",
    "enumerate_border_strip_tableaux",
    "enumerate_updown",
    "count_updown",
    "count_updown_closed",
    "double_factorial",
    "compositions_weight",
]

SYT_BOUND = 12


class EnumerationBoundError(ValueError):
    """Raised when an enumeration request exceeds its configured size bound."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; ``Partition()`` is empty."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """``λ_i`` with 1-based ``i``; zero beyond the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, p in enumerate(self, 1) for j in range(1, p + 1)]

    def contains(self, other: Sequence[int]) -> bool:
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def addable_cells(self) -> list[tuple[int, int]]:
        out = []
        for i in range(1, len(self) + 2):
            j = self.part(i) + 1
            if i == 1 or self.part(i - 1) >= j:
                out.append((i, j))
        return out

    def removable_cells(self) -> list[tuple[int, int]]:
        return [(i, p) for i, p in enumerate(self, 1) if self.part(i + 1) < p]

    def add_cell(self, row: int) -> Partition:
        parts = list(self) + [0]
        parts[row - 1] += 1
        return Partition(parts)

    def remove_cell(self, row: int) -> Partition:
        parts = list(self)
        parts[row - 1] -= 1
        return Partition(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"``; ``""``, ``"0"`` and ``"-"`` give the empty partition."""
    text = text.strip()
    if text in ("", "0", "-", "()", "∅"):
        return Partition()
    try:
        return Partition(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"not a partition: {text!r} ({exc})") from None


def parse_skew(text: str) -> SkewShape:
    """Parse ``"outer/inner"`` or a plain partition."""
    if "/" in text:
        outer, inner = text.split("/", 1)
        return SkewShape(parse_partition(outer), parse_partition(inner))
    return SkewShape(parse_partition(text))


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order: ``(n)`` first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [Partition()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return out


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram ``outer/inner`` with ``inner`` contained in ``outer``."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{tuple(self.inner)} is not contained in {tuple(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, p in enumerate(self.outer, 1)
                for j in range(self.inner.part(i) + 1, p + 1)]

    def row_ranges(self) -> list[tuple[int, int]]:
        """Per row ``i`` (1-based), the half-open column range ``(inner_i, outer_i)``."""
        return [(self.inner.part(i), p) for i, p in enumerate(self.outer, 1)]

    def rows_occupied(self) -> int:
        return sum(1 for i, p in enumerate(self.outer, 1) if p > self.inner.part(i))

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}" if self.inner else str(self.outer)


# ---------------------------------------------------------------------------
# hooks, contents and dimension formulas
# ---------------------------------------------------------------------------


def hooks_and_contents(shape: Partition | SkewShape) -> dict[tuple[int, int], dict[str, int]]:
    """Hook length and content of every cell.

    For a skew shape the hooks are those of the outer partition; the cells
    reported are the cells of the skew diagram.
    """
    if isinstance(shape, SkewShape):
        lam, cells = shape.outer, shape.cells()
    else:
        lam = Partition(shape)
        cells = lam.cells()
    conj = lam.conjugate()
    return {(i, j): {"hook": lam.part(i) - i + conj.part(j) - j + 1, "content": j - i}
            for i, j in cells}


def _hook_product(lam: Partition) -> int:
    return prod(v["hook"] for v in hooks_and_contents(lam).values())


def hook_dim(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook-length formula."""
    lam = Partition(lam)
    n = lam.size
    num, den = factorial(n), _hook_product(lam)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"hook formula inexact for {lam}: {num}/{den}")
    return q


def hook_content_dim(lam: Sequence[int], n: int) -> int:
    """``prod (n + c(x)) / h_x``: dimension of the GL(n) irreducible ``V^lam``."""
    lam = Partition(lam)
    data = hooks_and_contents(lam).values()
    num = prod(n + v["content"] for v in data)
    den = prod(v["hook"] for v in data)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"hook-content formula inexact for {lam}, n={n}")
    return q


def double_factorial(m: int) -> int:
    """``m!! = m (m-2) (m-4) ...``, with ``(-1)!! = 0!! = 1``."""
    if m <= 0:
        return 1
    return prod(range(m, 0, -2))


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """Filling of a (skew) shape; ``rows[i]`` holds the entries of row ``i+1``
    from left to right, covering only the cells of the skew diagram."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], inner: Sequence[int] = ()) -> Tableau:
        inner = Partition(inner)
        rows = tuple(tuple(r) for r in rows)
        outer = Partition(inner.part(i) + len(r) for i, r in enumerate(rows, 1))
        return cls(SkewShape(outer, inner), rows)

    def cells(self) -> Iterator[tuple[tuple[int, int], int]]:
        for i, row in enumerate(self.rows, 1):
            start = self.shape.inner.part(i)
            for k, v in enumerate(row, 1):
                yield (i, start + k), v

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1 - self.shape.inner.part(i)]

    def positions(self) -> dict[int, tuple[int, int]]:
        """Cell of each entry (meaningful for standard tableaux)."""
        return {v: cell for cell, v in self.cells()}

    def reading_word(self) -> tuple[int, ...]:
        """Entries row by row, left to right (the enumeration sort key)."""
        return tuple(v for row in self.rows for v in row)

    def weight(self, n: int | None = None) -> tuple[int, ...]:
        c = Counter(self.reading_word())
        top = n if n is not None else max(c, default=0)
        return tuple(c.get(i, 0) for i in range(1, top + 1))

    def count(self, value: int) -> int:
        return sum(1 for v in self.reading_word() if v == value)

    def is_column_strict(self) -> bool:
        grid = dict(self.cells())
        for (i, j), v in grid.items():
            if (i, j + 1) in grid and grid[(i, j + 1)] < v:
                return False
            if (i + 1, j) in grid and grid[(i + 1, j)] <= v:
                return False
        return True

    def is_standard(self) -> bool:
        word = sorted(self.reading_word())
        if word != list(range(1, len(word) + 1)):
            return False
        grid = dict(self.cells())
        return all(
            ((i, j + 1) not in grid or grid[(i, j + 1)] > v)
            and ((i + 1, j) not in grid or grid[(i + 1, j)] > v)
            for (i, j), v in grid.items()
        )

    def replace(self, cell: tuple[int, int], value: int) -> Tableau:
        i, j = cell
        rows = [list(r) for r in self.rows]
        rows[i - 1][j - 1 - self.shape.inner.part(i)] = value
        return Tableau(self.shape, tuple(tuple(r) for r in rows))

    def swap_entries(self, a: int, b: int) -> Tableau:
        rows = tuple(tuple(b if v == a else a if v == b else v for v in r) for r in self.rows)
        return Tableau(self.shape, rows)

    def __str__(self) -> str:
        lines = []
        for i, row in enumerate(self.rows, 1):
            pad = "  " * self.shape.inner.part(i)
            lines.append(pad + " ".join(str(v) for v in row))
        return "\n".join(lines)


StandardTableau = Tableau
ColumnStrictTableau = Tableau
UpDownTableau = tuple  # sequence of Partitions of length k+1 starting at the empty partition


def enumerate_syt(lam: Sequence[int], bound: int = SYT_BOUND) -> list[Tableau]:
    """All standard tableaux of straight shape ``lam``."""
    lam = Partition(lam)
    n = lam.size
    if n > bound:
        raise EnumerationBoundError(f"|lambda| = {n} exceeds the SYT bound {bound}")
    out: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in lam]

    def place(k: int):
        if k > n:
            out.append(Tableau.from_rows(rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                place(k + 1)
                rows[i].pop()

    place(1)
    out.sort(key=Tableau.reading_word)
    return out


def enumerate_cst(shape: SkewShape | Sequence[int], n: int,
                  weight: Sequence[int] | None = None) -> list[Tableau]:
    """Column strict tableaux of ``shape`` with entries in ``1..n``.

    When ``weight`` is given only tableaux with exactly ``weight[i-1]``
    entries equal to ``i`` are returned (entries beyond ``len(weight)`` must
    then be absent).
    """
    if not isinstance(shape, SkewShape):
        shape = SkewShape(Partition(shape))
    if n < 1:
        raise ValueError("n must be positive")
    if weight is not None:
        return _cst_by_strips(shape, n, tuple(weight))
    cells = shape.cells()  # row-major order
    grid: dict[tuple[int, int], int] = {}
    out: list[Tableau] = []

    def fill(idx: int):
        if idx == len(cells):
            rows = []
            for i, (a, b) in enumerate(shape.row_ranges(), 1):
                rows.append(tuple(grid[(i, j)] for j in range(a + 1, b + 1)))
            out.append(Tableau(shape, tuple(rows)))
            return
        i, j = cells[idx]
        lo = 1
        if (i, j - 1) in grid:
            lo = max(lo, grid[(i, j - 1)])
        if (i - 1, j) in grid:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            grid[(i, j)] = v
            fill(idx + 1)
            del grid[(i, j)]

    fill(0)
    return out  # row-major fill with increasing values is already reading-word order


def _horizontal_strips(inner: tuple[int, ...], outer: Partition, size: int
                       ) -> Iterator[tuple[int, ...]]:
    """Shapes ``nu`` with ``inner ⊆ nu ⊆ outer`` and ``nu/inner`` a horizontal strip."""
    rows = len(outer)

    def rec(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                yield tuple(acc)
            return
        # a horizontal strip may not extend past the previous row's old length
        cap = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for extra in range(min(left, cap - inner[i]), -1, -1):
            acc.append(inner[i] + extra)
            yield from rec(i + 1, left - extra, acc)
            acc.pop()

    yield from rec(0, size, [])


def _cst_by_strips(shape: SkewShape, n: int, weight: tuple[int, ...]) -> list[Tableau]:
    if len(weight) > n and any(weight[n:]):
        return []
    weight = (weight + (0,) * n)[:n]
    if sum(weight) != shape.size:
        return []
    outer = shape.outer
    start = tuple(shape.inner.part(i) for i in range(1, len(outer) + 1))
    out: list[Tableau] = []
    chain: list[tuple[int, ...]] = [start]

    def rec(v: int):
        cur = chain[-1]
        if v == n:
            if cur == tuple(outer):
                rows = []
                for i in range(len(outer)):
                    row = []
                    for lvl in range(1, len(chain)):
                        row.extend([lvl] * (chain[lvl][i] - chain[lvl - 1][i]))
                    rows.append(tuple(row))
                out.append(Tableau(shape, tuple(rows)))
            return
        for nxt in _horizontal_strips(cur, outer, weight[v]):
            chain.append(nxt)
            rec(v + 1)
            chain.pop()

    rec(0)
    out.sort(key=Tableau.reading_word)
    return out


def compositions_weight(t: Tableau, n: int) -> tuple[int, ...]:
    return t.weight(n)


def word_of(t: Tableau) -> tuple[int, ...]:
    """Entries read right to left along each row, top row first."""
    return tuple(v for row in t.rows for v in reversed(row))


def is_lattice(word: Iterable[int] | str) -> bool:
    """Every prefix has at least as many ``i`` as ``i+1``."""
    if isinstance(word, str):
        word = [int(ch) for ch in word]
    seen: Counter = Counter()
    for v in word:
        seen[v] += 1
        if v > 1 and seen[v] > seen[v - 1]:
            return False
    return True


# ---------------------------------------------------------------------------
# border strips and Murnaghan-Nakayama tableaux
# ---------------------------------------------------------------------------


def is_border_strip(shape: SkewShape) -> bool:
    """Nonempty, edge-connected, and free of 2x2 blocks (direct cell geometry)."""
    cells = set(shape.cells())
    if not cells:
        return False
    for i, j in cells:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def border_strip_sign(shape: SkewShape) -> int:
    return -1 if (shape.rows_occupied() - 1) % 2 else 1


def _subpartitions_of_size(lam: Partition, size: int) -> Iterator[Partition]:
    def rec(i: int, cap: int, left: int, acc: list[int]):
        if i == len(lam):
            if left == 0:
                yield Partition(acc)
            return
        upper = min(lam[i], cap, left)
        # remaining rows can hold at most upper * (rows left)
        for p in range(upper, -1, -1):
            if left - p > p * (len(lam) - i - 1):
                break
            acc.append(p)
            yield from rec(i + 1, p, left - p, acc)
            acc.pop()

    yield from rec(0, lam[0] if lam else 0, size, [])


@lru_cache(maxsize=None)
def removable_border_strips(lam: Partition, m: int) -> tuple[tuple[Partition, int], ...]:
    """Partitions ``nu`` with ``lam/nu`` a border strip of size ``m``, with signs."""
    lam = Partition(lam)
    if m <= 0 or m > lam.size:
        return ()
    out = []
    for nu in _subpartitions_of_size(lam, lam.size - m):
        sk = SkewShape(lam, nu)
        if is_border_strip(sk):
            out.append((nu, border_strip_sign(sk)))
    return tuple(out)


@dataclass(frozen=True)
class BorderStripTableau:
    """Chain ``∅ = λ0 ⊆ λ1 ⊆ ... ⊆ λℓ = λ`` of partitions whose successive
    differences are border strips of sizes ``μ1, ..., μℓ``."""

    chain: tuple[Partition, ...]
    strip_signs: tuple[int, ...]

    @property
    def weight(self) -> int:
        return prod(self.strip_signs)


def enumerate_border_strip_tableaux(lam: Sequence[int], mu: Sequence[int]
                                    ) -> list[tuple[BorderStripTableau, int]]:
    """All ``mu``-border strip tableaux of shape ``lam`` with their weights.

    The weight is the product of the signs of all strips.
    """
    lam, mu = Partition(lam), tuple(mu)
    if lam.size != sum(mu):
        raise ValueError(f"|lambda| = {lam.size} but |mu| = {sum(mu)}")
    out: list[tuple[BorderStripTableau, int]] = []

    def rec(shape: Partition, k: int, chain: list[Partition], signs: list[int]):
        if k == 0:
            bst = BorderStripTableau(tuple(reversed(chain)), tuple(reversed(signs)))
            out.append((bst, bst.weight))
            return
        for nu, sign in removable_border_strips(shape, mu[k - 1]):
            chain.append(nu)
            signs.append(sign)
            rec(nu, k - 1, chain, signs)
            chain.pop()
            signs.pop()

    rec(lam, len(mu), [lam], [])
    out.sort(key=lambda pair: [tuple(p) for p in pair[0].chain])
    return out


# ---------------------------------------------------------------------------
# up-down tableaux
# ---------------------------------------------------------------------------


def _neighbors(p: Partition) -> list[Partition]:
    ups = [p.add_cell(i) for i, _ in p.addable_cells()]
    downs = [p.remove_cell(i) for i, _ in p.removable_cells()]
    return ups + downs


def enumerate_updown(lam: Sequence[int], k: int) -> list[tuple[Partition, ...]]:
    """Every walk ``∅ = λ0, λ1, ..., λk = lam`` adding or removing one box per step."""
    lam = Partition(lam)
    out: list[tuple[Partition, ...]] = []
    if lam.size > k or (k - lam.size) % 2:
        return out

    def walk(path: list[Partition]):
        step = len(path) - 1
        if step == k:
            if path[-1] == lam:
                out.append(tuple(path))
            return
        for nb in _neighbors(path[-1]):
            # prune: must still be able to reach lam in the remaining steps
            if abs(nb.size - lam.size) <= k - step - 1:
                path.append(nb)
                walk(path)
                path.pop()

    walk([Partition()])
    out.sort(key=lambda w: [tuple(p) for p in w])
    return out


def count_updown(lam: Sequence[int], k: int) -> int:
    """Number of up-down tableaux of shape ``lam`` and length ``k``.

    Counted by dynamic programming over the walk (each walk counted once);
    agrees with ``len(enumerate_updown(lam, k))``.
    """
    lam = Partition(lam)
    if lam.size > k or (k - lam.size) % 2:
        raise ValueError(f"|lambda| = {lam.size} and k = {k} differ by an odd amount or |lambda| > k")
    layer: dict[Partition, int] = {Partition(): 1}
    for step in range(k):
        nxt: dict[Partition, int] = {}
        for p, c in layer.items():
            for nb in _neighbors(p):
                if abs(nb.size - lam.size) <= k - step - 1:
                    nxt[nb] = nxt.get(nb, 0) + c
        layer = nxt
    return layer.get(lam, 0)


def count_updown_closed(lam: Sequence[int], k: int, reading: str = "odd") -> int:
    """Closed form ``C(k, 2h) * D(h) * (k-2h)! / prod h_x`` with ``|lam| = k - 2h``.

    ``reading="odd"`` uses ``D(h) = (2h-1)!! = (2h-1)(2h-3)...1``;
    ``reading="even"`` uses ``D(h) = (2h)!! = 2h (2h-2)...2``. Only the first
    agrees with :func:`count_updown`; the second is kept so the two can be
    compared.
    """
    lam = Partition(lam)
    if lam.size > k or (k - lam.size) % 2:
        raise ValueError(f"|lambda| = {lam.size} and k = {k} differ by an odd amount or |lambda| > k")
    h = (k - lam.size) // 2
    if reading == "odd":
        d = double_factorial(2 * h - 1)
    elif reading == "even":
        d = double_factorial(2 * h)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    return comb(k, 2 * h) * d * hook_dim(lam)
