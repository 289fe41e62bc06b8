"""Exact scalars and exact linear algebra.

Every coefficient in the package is a :class:`fractions.Fraction` (exported
here as ``Rational``), a :class:`LaurentPoly` in one named variable, or a
:class:`MultiLaurent` in ``n`` variables whose exponents may be half-integers.
Half-integer exponents are stored doubled so that all bookkeeping stays
integral.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "LaurentPoly",
    "MultiLaurent",
    "NotDivisibleError",
    "SparseMatrix",
    "poly_divide_exact",
    "matrix_rank",
    "determinant",
    "as_rational",
    "RootOfUnity",
    "TwoCos",
    "QPower",
    "Generic",
    "parse_parameter",
]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


# ---------------------------------------------------------------------------
# single-variable Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Laurent polynomial with rational coefficients in one named variable.

    Values are immutable. Terms are kept as a tuple of ``(exponent, coeff)``
    pairs sorted by exponent with no zero coefficients, so ``==`` is
    structural. Integers and Fractions are accepted wherever a LaurentPoly is.
    """

    __slots__ = ("var", "_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None, var: str = "q"):
        clean: dict[int, Fraction] = {}
        for e, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                clean[int(e)] = clean.get(int(e), Fraction(0)) + c
        self.var = var
        self._terms = tuple(sorted((e, c) for e, c in clean.items() if c))
        self._hash = None

    # construction helpers
    @classmethod
    def gen(cls, var: str = "q") -> LaurentPoly:
        return cls({1: 1}, var)

    @classmethod
    def const(cls, c, var: str = "q") -> LaurentPoly:
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exponent: int, coeff=1, var: str = "q") -> LaurentPoly:
        return cls({exponent: coeff}, var)

    # access
    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, exponent: int) -> Fraction:
        for e, c in self._terms:
            if e == exponent:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.coefficient(0)

    @property
    def min_degree(self) -> int:
        return self._terms[0][0]

    @property
    def max_degree(self) -> int:
        return self._terms[-1][0]

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic
    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            if other.var != self.var and not (other.is_constant() or self.is_constant()):
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other}, self.var)
        return None

    def _var_with(self, other: LaurentPoly) -> str:
        if self.var == other.var or other.is_constant():
            return self.var
        return other.var

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in o._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc, self._var_with(o))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms}, self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in o._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc, self._var_with(o))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise NotDivisibleError(f"{self} is not a unit")
            (e, c), = self._terms
            return LaurentPoly({-e * -n: Fraction(1) / c ** -n}, self.var)
        result = LaurentPoly({0: 1}, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Exact division; the divisor must divide self in the Laurent ring."""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero LaurentPoly")
        if len(o) == 1:
            (e, c), = o._terms
            return LaurentPoly({k - e: v / c for k, v in self._terms}, self._var_with(o))
        num = MultiLaurent({(e,): c for e, c in self._terms}, 1)
        den = MultiLaurent({(e,): c for e, c in o._terms}, 1)
        quo = poly_divide_exact(num, den)
        return LaurentPoly({exp[0]: c for exp, c in quo.exponent_items()}, self._var_with(o))

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            if not self._terms and not other._terms:
                return True
            if self.is_constant() and other.is_constant():
                return self._terms == other._terms
            return self.var == other.var and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.coefficient(0) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms) if not self.is_constant() else hash(self.coefficient(0))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # evaluation and substitution
    def __call__(self, value):
        return self.evaluate(value)

    def evaluate(self, value):
        """Substitute an exact scalar (or another LaurentPoly) for the variable."""
        total = 0
        for e, c in self._terms:
            total = total + c * (value ** e)
        return total

    # formatting
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in reversed(self._terms):
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if e == 0:
                body = str(a)
            else:
                mono = self.var if e == 1 else f"{self.var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, var={self.var!r})"

    _TERM = re.compile(r"^(?:(?P<coef>\d+(?:/\d+)?)\*?)?(?P<var>[A-Za-z]\w*)?(?:\^(?P<exp>-?\d+))?$")

    @classmethod
    def parse(cls, text: str, var: str = "q") -> LaurentPoly:
        """Inverse of ``str``: ``"q^2 - q + 1"``, ``"1/2*q^-1"``, ``"0"``."""
        s = text.replace(" ", "").replace("^-", "^~")
        if not s:
            raise ValueError("empty polynomial string")
        terms: dict[int, Fraction] = {}
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            m = cls._TERM.match(body.replace("^~", "^-"))
            if not m or (m.group("coef") is None and m.group("var") is None):
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            if m.group("var") is not None and m.group("var") != var:
                raise ValueError(f"unexpected variable {m.group('var')!r} in {text!r}")
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
            if sign == "-":
                coef = -coef
            if m.group("var") is None:
                if m.group("exp") is not None:
                    raise ValueError(f"exponent without variable in {text!r}")
                e = 0
            else:
                e = int(m.group("exp")) if m.group("exp") is not None else 1
            terms[e] = terms.get(e, 0) + coef
        return cls(terms, var)


# ---------------------------------------------------------------------------
# multivariate Laurent polynomials on a (possibly half-integer) lattice
# ---------------------------------------------------------------------------


def _add_exp(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


class MultiLaurent:
    """Finite sum of monomials ``c * x^e`` with ``e`` in ``(1/scale) Z^n``.

    Exponents are stored as integer tuples equal to ``scale * e`` where
    ``scale`` is 1 or 2. The representation is canonical: the scale is 1
    whenever every stored exponent is even after doubling, so two values are
    equal exactly when their term maps are equal.
    """

    __slots__ = ("nvars", "scale", "_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], object] | None = None,
                 nvars: int | None = None, scale: int = 1):
        if scale not in (1, 2):
            raise ValueError("scale must be 1 or 2")
        clean: dict[tuple[int, ...], Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(v) for v in e)
            if nvars is None:
                nvars = len(e)
            elif len(e) != nvars:
                raise ValueError(f"exponent {e} does not have length {nvars}")
            c = as_rational(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        clean = {e: c for e, c in clean.items() if c}
        if nvars is None:
            raise ValueError("nvars is required for the zero polynomial")
        if scale == 2 and all(v % 2 == 0 for e in clean for v in e):
            clean = {tuple(v // 2 for v in e): c for e, c in clean.items()}
            scale = 1
        self.nvars = nvars
        self.scale = scale
        self._terms = clean
        self._hash = None

    # construction
    @classmethod
    def zero(cls, nvars: int) -> MultiLaurent:
        return cls({}, nvars)

    @classmethod
    def one(cls, nvars: int) -> MultiLaurent:
        return cls({(0,) * nvars: 1}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> MultiLaurent:
        """``x_{i+1}`` (0-based index)."""
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars)

    @classmethod
    def monomial(cls, exponent: Sequence, coeff=1) -> MultiLaurent:
        """Monomial with exponent given as ints or Fractions (half-integers allowed)."""
        exps = [as_rational(v) for v in exponent]
        if all(v.denominator == 1 for v in exps):
            return cls({tuple(int(v) for v in exps): coeff}, len(exps))
        if any(v.denominator != 2 for v in exps if v.denominator != 1):
            raise ValueError(f"exponent {exponent} is not half-integral")
        return cls({tuple(int(2 * v) for v in exps): coeff}, len(exps), scale=2)

    @classmethod
    def from_doubled(cls, doubled: Mapping[tuple[int, ...], object], nvars: int) -> MultiLaurent:
        return cls(doubled, nvars, scale=2)

    # access
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def raw_items(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms with exponents in stored (scale-multiplied) form, sorted."""
        return sorted(self._terms.items())

    def doubled_items(self) -> list[tuple[tuple[int, ...], Fraction]]:
        f = 2 // self.scale
        return sorted((tuple(v * f for v in e), c) for e, c in self._terms.items())

    def exponent_items(self) -> list[tuple[tuple, Fraction]]:
        """Terms with true exponents (ints, or Fractions when half-integral)."""
        if self.scale == 1:
            return sorted(self._terms.items())
        return sorted((tuple(Fraction(v, 2) for v in e), c) for e, c in self._terms.items())

    def coefficient(self, exponent: Sequence) -> Fraction:
        key = tuple(int(as_rational(v) * self.scale) for v in exponent)
        if any(as_rational(v) * self.scale != k for v, k in zip(exponent, key)):
            return Fraction(0)
        return self._terms.get(key, Fraction(0))

    def coefficient_sum(self) -> Fraction:
        """Value at ``x_1 = ... = x_n = 1`` (for characters: the dimension)."""
        return sum(self._terms.values(), Fraction(0))

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Lexicographically largest stored exponent and its coefficient."""
        e = max(self._terms)
        return e, self._terms[e]

    # arithmetic
    def _rescaled(self, scale: int) -> dict[tuple[int, ...], Fraction]:
        if scale == self.scale:
            return self._terms
        f = scale // self.scale
        return {tuple(v * f for v in e): c for e, c in self._terms.items()}

    def _coerce(self, other) -> MultiLaurent | None:
        if isinstance(other, MultiLaurent):
            if other.nvars != self.nvars:
                raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiLaurent({(0,) * self.nvars: other}, self.nvars)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        s = max(self.scale, o.scale)
        acc = dict(self._rescaled(s))
        for e, c in o._rescaled(s).items():
            acc[e] = acc.get(e, 0) + c
        return MultiLaurent(acc, self.nvars, s)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent({e: -c for e, c in self._terms.items()}, self.nvars, self.scale)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        s = max(self.scale, o.scale)
        a, b = self._rescaled(s), o._rescaled(s)
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = _add_exp(e1, e2)
                acc[e] = acc.get(e, 0) + c1 * c2
        return MultiLaurent(acc, self.nvars, s)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise NotDivisibleError("only monomials are units")
            (e, c), = self._terms.items()
            return MultiLaurent({tuple(-v * -n for v in e): Fraction(1) / c ** -n},
                                self.nvars, self.scale)
        result = MultiLaurent.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return poly_divide_exact(self, o)

    def __eq__(self, other):
        if isinstance(other, MultiLaurent):
            return (self.nvars == other.nvars and self.scale == other.scale
                    and self._terms == other._terms)
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {(0,) * self.nvars: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.scale, frozenset(self._terms.items())))
        return self._hash

    # transformations
    def map_exponents(self, fn: Callable[[tuple[int, ...]], tuple[int, ...]]) -> MultiLaurent:
        """Apply ``fn`` to every doubled exponent vector (it must be additive)."""
        acc: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.doubled_items():
            k = tuple(fn(e))
            acc[k] = acc.get(k, 0) + c
        return MultiLaurent(acc, self.nvars, 2)

    def permute_variables(self, perm: Sequence[int]) -> MultiLaurent:
        """Substitute ``x_i -> x_{perm[i]}`` (0-based)."""
        def fn(e):
            out = [0] * self.nvars
            for i, v in enumerate(e):
                out[perm[i]] += v
            return tuple(out)
        return MultiLaurent({fn(e): c for e, c in self._terms.items()}, self.nvars, self.scale)

    def evaluate(self, values: Sequence) -> Fraction:
        """Evaluate at rational points; half-integer exponents need perfect squares."""
        if self.scale != 1:
            raise ValueError("cannot evaluate a half-integer Laurent polynomial at rationals")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(values, e):
                term *= as_rational(v) ** k
            total += term
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self.exponent_items(), reverse=True):
            mono = "*".join(f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiLaurent({str(self)!r}, nvars={self.nvars})"


def poly_divide_exact(num: MultiLaurent, den: MultiLaurent) -> MultiLaurent:
    """Quotient ``Q`` with ``Q * den == num`` in the Laurent ring.

    Uses leading-term elimination under lexicographic order. For an exact
    division every exponent of ``Q`` lies in the box between the coordinate
    minima and maxima of ``num`` shifted by those of ``den``; leaving that
    box, or running out of terms with a nonzero remainder, raises
    :class:`NotDivisibleError`.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.nvars != den.nvars:
        raise ValueError("nvars mismatch")
    if num.is_zero():
        return MultiLaurent.zero(num.nvars)
    n = num.nvars
    s = max(num.scale, den.scale)
    rem = dict(num._rescaled(s))
    d = den._rescaled(s)
    d_items = list(d.items())
    d_lead = max(d)
    d_lc = d[d_lead]
    lo = [min(e[i] for e in rem) - min(e[i] for e in d) for i in range(n)]
    hi = [max(e[i] for e in rem) - max(e[i] for e in d) for i in range(n)]
    quot: dict[tuple[int, ...], Fraction] = {}
    while rem:
        lead = max(rem)
        qe = tuple(a - b for a, b in zip(lead, d_lead))
        if any(v < l or v > h for v, l, h in zip(qe, lo, hi)):
            raise NotDivisibleError("dividend is not divisible by divisor")
        qc = rem[lead] / d_lc
        quot[qe] = quot.get(qe, 0) + qc
        for e, c in d_items:
            k = _add_exp(qe, e)
            v = rem.get(k, 0) - qc * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return MultiLaurent(quot, n, s)


# ---------------------------------------------------------------------------
# exact dense and sparse linear algebra
# ---------------------------------------------------------------------------


def _integer_rows(m: Iterable[Sequence]) -> list[list[int]]:
    rows = []
    for row in m:
        vals = [as_rational(v) for v in row]
        l = 1
        for v in vals:
            l = l * v.denominator // gcd(l, v.denominator)
        rows.append([int(v * l) for v in vals])
    return rows


def matrix_rank(m: Sequence[Sequence]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination.

    Rows are first cleared of denominators, which does not change the rank.
    """
    a = _integer_rows(m)
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            f = a[r][col]
            row_r = a[r]
            row_p = a[rank]
            a[r] = [(p * row_r[c] - f * row_p[c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def determinant(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix (Bareiss)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    rows = [[as_rational(v) for v in row] for row in m]
    scale = Fraction(1)
    a = []
    for row in rows:
        l = 1
        for v in row:
            l = l * v.denominator // gcd(l, v.denominator)
        scale /= l
        a.append([int(v * l) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] * scale


class SparseMatrix:
    """Square exact matrix stored as ``{row: {col: value}}``.

    Only the operations the representation code needs: products, sums,
    scalar multiples, trace, equality and conversion to dense lists.
    """

    __slots__ = ("size", "rows")

    def __init__(self, size: int, rows: Mapping[int, Mapping[int, object]] | None = None):
        self.size = size
        clean: dict[int, dict[int, Fraction]] = {}
        for r, row in (rows or {}).items():
            kept = {c: as_rational(v) for c, v in row.items() if v}
            if kept:
                clean[r] = kept
        self.rows = clean

    @classmethod
    def identity(cls, size: int) -> SparseMatrix:
        return cls(size, {i: {i: 1} for i in range(size)})

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence]) -> SparseMatrix:
        return cls(len(dense), {i: {j: v for j, v in enumerate(row) if v}
                                for i, row in enumerate(dense)})

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.size for _ in range(self.size)]
        for r, row in self.rows.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.rows.get(r, {}).get(c, Fraction(0))

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.size != other.size:
            raise ValueError("size mismatch")
        out: dict[int, dict[int, Fraction]] = {}
        for r, row in self.rows.items():
            acc: dict[int, Fraction] = {}
            for k, v in row.items():
                for c, w in other.rows.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + v * w
            out[r] = acc
        return SparseMatrix(self.size, out)

    def __add__(self, other: SparseMatrix) -> SparseMatrix:
        out = {r: dict(row) for r, row in self.rows.items()}
        for r, row in other.rows.items():
            tgt = out.setdefault(r, {})
            for c, v in row.items():
                tgt[c] = tgt.get(c, 0) + v
        return SparseMatrix(self.size, out)

    def __neg__(self) -> SparseMatrix:
        return SparseMatrix(self.size, {r: {c: -v for c, v in row.items()}
                                        for r, row in self.rows.items()})

    def __sub__(self, other: SparseMatrix) -> SparseMatrix:
        return self + (-other)

    def scale(self, s) -> SparseMatrix:
        s = as_rational(s)
        return SparseMatrix(self.size, {r: {c: v * s for c, v in row.items()}
                                        for r, row in self.rows.items()})

    def trace(self) -> Fraction:
        return sum((row.get(r, Fraction(0)) for r, row in self.rows.items()), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.size == other.size and self.rows == other.rows

    def __hash__(self):
        return hash((self.size, frozenset((r, frozenset(row.items())) for r, row in self.rows.items())))

    def __repr__(self):
        return f"SparseMatrix(size={self.size}, nnz={sum(len(r) for r in self.rows.values())})"


# ---------------------------------------------------------------------------
# symbolic parameter values
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootOfUnity:
    """A primitive root of unity of the given order (order 1 is the number 1)."""

    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("the order of a root of unity is a positive integer")

    def __str__(self) -> str:
        return f"zeta{self.order}"


@dataclass(frozen=True)
class TwoCos:
    """The real number ``2 cos(pi * m / l)``, stored with ``m / l`` reduced."""

    m: int
    l: int

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("l must be positive")
        g = gcd(self.m, self.l)
        object.__setattr__(self, "m", self.m // g)
        object.__setattr__(self, "l", self.l // g)

    def rational_value(self) -> Fraction | None:
        """The value when it is rational (only for ``l`` in ``{1, 2, 3}``), else ``None``."""
        m = self.m % (2 * self.l)
        table = {(0, 1): 2, (1, 1): -2, (1, 2): 0, (3, 2): 0,
                 (1, 3): 1, (5, 3): 1, (2, 3): -1, (4, 3): -1}
        v = table.get((m, self.l))
        return None if v is None else Fraction(v)

    def __str__(self) -> str:
        return f"2cos({self.m}pi/{self.l})"


@dataclass(frozen=True)
class QPower:
    """The parameter value ``q^e`` for the companion parameter ``q``."""

    e: int

    def __str__(self) -> str:
        return f"q^{self.e}"


@dataclass(frozen=True)
class Generic:
    """An indeterminate: satisfies no algebraic relation."""

    def __str__(self) -> str:
        return "generic"


_TWOCOS = re.compile(r"^2cos\((-?\d+)(?:pi)?/(\d+)\)$")


def parse_parameter(text: str):
    """Parse ``"3/2"``, ``"zeta5"``, ``"2cos(1/5)"``, ``"q^4"`` or ``"generic"``."""
    t = text.strip().replace(" ", "")
    if t == "generic":
        return Generic()
    if t.startswith("zeta"):
        return RootOfUnity(int(t[4:]))
    m = _TWOCOS.match(t)
    if m:
        return TwoCos(int(m.group(1)), int(m.group(2)))
    if t.startswith("q^"):
        return QPower(int(t[2:]))
    try:
        return Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse parameter {text!r}") from None
