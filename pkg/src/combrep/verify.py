"""Verification suites: every formula against an independent computation.

Each suite returns a :class:`VerifyReport` of named checks. Suites are pure
functions of their bounds, so the report does not depend on scheduling.
"""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from .diagram import (
    HECKE_TL_READINGS,
    BrauerDiagram,
    brauer_dims,
    brauer_mul,
    brauer_presentation_check,
    catalan,
    d_2h,
    enumerate_brauer,
    hecke_to_tl_check,
    tl_basis,
    tl_character_closed,
    tl_character_general,
    tl_dim,
    tl_enumerate,
    tl_presentation_check,
)
from .exact import LaurentPoly
from .glnrep import GT_READINGS, commutator_check, schur_weyl_check, serre_check
from .hecke import (
    HECKE_READINGS,
    HeckeElement,
    T_word,
    gamma_mu,
    hecke_roichman_character,
    permutation_module_trace,
    reduced_words,
)
from .schur import kostka, lr_table, schur_bialternant, schur_product_expand, schur_tableau_sum
from .shapes import (
    Partition,
    SkewShape,
    count_updown,
    count_updown_closed,
    double_factorial,
    enumerate_cst,
    enumerate_syt,
    hook_content_dim,
    hook_dim,
    is_lattice,
    partitions,
)
from .symgroup import (
    NE_READINGS,
    all_permutations,
    character_from_rep,
    class_size,
    class_sizes_bruteforce,
    mn_character,
    roichman_character,
    seminormal_matrices,
)
from .weyl import build_root_system, weight_from_partition, weyl_character, weyl_dim

__all__ = [
    "Check",
    "VerifyReport",
    "SUITES",
    "run_suite",
    "run_suites",
    "default_bounds",
    "workers",
]


@dataclass(frozen=True)
class Check:
    id: str
    passed: bool
    expected: object
    actual: object

    def to_json(self) -> dict:
        return {"id": self.id, "status": "pass" if self.passed else "fail",
                "expected": self.expected, "actual": self.actual}


@dataclass
class VerifyReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    wall_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, cid: str, expected, actual, passed: bool | None = None) -> None:
        ok = expected == actual if passed is None else passed
        self.checks.append(Check(cid, bool(ok), expected, actual))

    def to_json(self, timing: bool = True) -> dict:
        out = {"suite": self.suite, "pass": self.passed,
               "checks": [c.to_json() for c in self.checks]}
        if timing:
            out["wall_ms"] = self.wall_ms
        return out


def _p(lam) -> str:
    return str(Partition(lam)) if lam else "0"


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def suite_sn(nmax: int) -> VerifyReport:
    rep = VerifyReport("sn")
    for n in range(1, nmax + 1):
        parts = partitions(n)
        total = sum(hook_dim(lam) ** 2 for lam in parts)
        rep.add(f"sum hook_dim^2 = {n}!", factorial(n), total)
        bad = [str(lam) for lam in parts if hook_dim(lam) != len(enumerate_syt(lam))]
        rep.add(f"hook_dim = #SYT, n={n}", [], bad)
        bad = [f"{lam}|{mu}" for lam in parts for mu in parts
               if mn_character(lam, mu) != roichman_character(lam, mu)]
        rep.add(f"MN = Roichman, n={n}", [], bad)
        sizes = {mu: class_size(mu) for mu in parts}
        bad = []
        for a in parts:
            for b in parts:
                s = sum(sizes[mu] * mn_character(a, mu) * mn_character(b, mu) for mu in parts)
                if s != (factorial(n) if a == b else 0):
                    bad.append(f"{a}|{b}")
        rep.add(f"row orthogonality, n={n}", [], bad)
        bad = []
        for mu in parts:
            for nu in parts:
                s = sum(mn_character(lam, mu) * mn_character(lam, nu) for lam in parts)
                if s != (factorial(n) // sizes[mu] if mu == nu else 0):
                    bad.append(f"{mu}|{nu}")
        rep.add(f"column orthogonality, n={n}", [], bad)
        if n <= 6:
            brute = {str(k): v for k, v in class_sizes_bruteforce(n).items()}
            rep.add(f"class sizes by enumeration, n={n}", {str(k): v for k, v in sizes.items()}, brute)
        if n <= 6:
            bad = []
            for lam in parts:
                rm = seminormal_matrices(lam)
                for mu in parts:
                    if character_from_rep(rm, mu) != mn_character(lam, mu):
                        bad.append(f"{lam}|{mu}")
            rep.add(f"seminormal traces = MN, n={n}", [], bad)
    return rep


def suite_schur(nmax: int) -> VerifyReport:
    rep = VerifyReport("schur")
    for size in range(0, nmax + 1):
        bad = []
        for lam in partitions(size):
            for n in range(max(1, len(lam)), 5):
                if schur_bialternant(lam, n) != schur_tableau_sum(lam, n):
                    bad.append(f"{_p(lam)}@{n}")
        rep.add(f"bialternant = tableau sum, |lam|={size}", [], bad)
    for total in range(0, nmax + 1):
        bad = []
        for a in range(total + 1):
            for mu in partitions(a):
                for nu in partitions(total - a):
                    if lr_table(mu, nu) != schur_product_expand(mu, nu):
                        bad.append(f"{_p(mu)}*{_p(nu)}")
        rep.add(f"LR = Schur product, |mu|+|nu|={total}", [], bad)
    for size in range(0, min(nmax, 6) + 1):
        bad = []
        for lam in partitions(size):
            for n in range(1, 6):
                hc = hook_content_dim(lam, n)
                cst = len(enumerate_cst(SkewShape(lam), n)) if len(lam) <= n else 0
                if hc != cst:
                    bad.append(f"{_p(lam)}@{n}")
        rep.add(f"hook-content = #CST, |lam|={size}", [], bad)
    for n in range(1, 5):
        for k in range(0, 7):
            r = schur_weyl_check(n, k)
            rep.add(f"n^k = sum dim V * dim S, n={n} k={k}", n ** k, r.total)
    return rep


def suite_gt(nmax: int) -> VerifyReport:
    rep = VerifyReport("gt")
    for size in range(1, min(nmax, 4) + 1):
        for lam in partitions(size):
            for n in range(max(2, len(lam)), 4):
                rep.add(f"commutator {_p(lam)} n={n}", True, commutator_check(lam, n))
            if len(lam) <= 3:
                rep.add(f"Serre {_p(lam)} n=3", True, serre_check(lam, 3))
    return rep


def suite_weyl(nmax: int) -> VerifyReport:
    rep = VerifyReport("weyl")
    for size in range(0, min(nmax, 6) + 1):
        bad = []
        for lam in partitions(size):
            for n in range(max(2, len(lam)), 6):
                rs = build_root_system("A", n - 1)
                w = weight_from_partition(lam, n)
                if not (weyl_dim(rs, w) == hook_content_dim(lam, n)):
                    bad.append(f"{_p(lam)}@{n}")
        rep.add(f"weyl_dim = hook-content, |lam|={size}", [], bad)
    bad = []
    for size in range(0, min(nmax, 6) + 1):
        for lam in partitions(size):
            for n in range(max(2, len(lam)), 5):
                rs = build_root_system("A", n - 1)
                if weyl_character(rs, weight_from_partition(lam, n)) != schur_tableau_sum(lam, n):
                    bad.append(f"{_p(lam)}@{n}")
    rep.add("Weyl character = Schur polynomial (type A, n<=4)", [], bad)
    a2 = build_root_system("A", 2)
    ch = weyl_character(a2, a2.weight((1, 1)))
    rep.add("A2 omega1+omega2: total multiplicity", 8, int(ch.coefficient_sum()))
    rep.add("A2 omega1+omega2 = s_(2,1)(x1,x2,x3)", True, ch == schur_tableau_sum(Partition((2, 1)), 3))
    for t, ranks in (("A", (1, 2, 3)), ("B", (2, 3)), ("C", (2, 3)), ("D", (2, 3))):
        for r in ranks:
            rs = build_root_system(t, r)
            bad = []
            for labels in _small_labels(r):
                lam = rs.weight(labels)
                if int(weyl_character(rs, lam).coefficient_sum()) != weyl_dim(rs, lam):
                    bad.append(str(labels))
            rep.add(f"{t}{r}: character mass = Weyl dimension", [], bad)
    return rep


def _small_labels(r: int) -> list[tuple[int, ...]]:
    out = [(0,) * r]
    for i in range(r):
        e = [0] * r
        e[i] = 1
        out.append(tuple(e))
    out.append((1,) * r)
    return out


def suite_hecke(nmax: int) -> VerifyReport:
    rep = VerifyReport("hecke")
    nh = min(nmax, 4)
    rng = random.Random(20240601)
    for n in range(1, nh + 1):
        group = sorted(all_permutations(n))
        basis = {w: HeckeElement.basis(w) for w in group}
        bad = []
        triples = [(a, b, c) for a in group for b in group for c in group]
        if len(triples) > 400:
            triples = rng.sample(triples, 400)
        for a, b, c in triples:
            if (basis[a] * basis[b]) * basis[c] != basis[a] * (basis[b] * basis[c]):
                bad.append(f"{list(a)}{list(b)}{list(c)}")
        rep.add(f"associativity, n={n}", [], bad)
        bad = [str(list(w)) for w in group
               if any(T_word(word, n) != basis[w] for word in reduced_words(w))]
        rep.add(f"reduced-word independence, n={n}", [], bad)
        bad = []
        for u in group:
            for v in group:
                specialized = (basis[u] * basis[v]).specialize(1)
                if specialized != {u * v: 1}:
                    bad.append(f"{list(u)}{list(v)}")
        rep.add(f"q=1 gives S_{n} products, n={n}", [], bad)
    for k in range(1, min(nmax, 6) + 1):
        bad = [f"{lam}|{mu}" for lam in partitions(k) for mu in partitions(k)
               if hecke_roichman_character(lam, mu).evaluate(1) != mn_character(lam, mu)]
        rep.add(f"q-character at q=1 = MN, k={k}", [], bad)
    for n in range(1, min(nmax, 5) + 1):
        parts = partitions(n)
        bad = []
        for mu in parts:
            g = HeckeElement.basis(gamma_mu(mu))
            for nu in parts:
                lhs = permutation_module_trace(nu, g)
                rhs = LaurentPoly({}, "q")
                for lam in parts:
                    rhs = rhs + hecke_roichman_character(lam, mu) * kostka(lam, nu)
                if lhs != rhs:
                    bad.append(f"{mu}|{nu}")
        rep.add(f"q-characters match permutation-module traces, n={n}", [], bad)
    return rep


def suite_diagram(kmax: int) -> VerifyReport:
    rep = VerifyReport("diagram")
    for k in range(1, min(kmax, 8) + 1):
        r = brauer_presentation_check(k)
        rep.add(f"Brauer presentation, k={k}", [], sorted(n for n, ok in r.items() if not ok))
    for k in range(1, min(kmax, 6) + 1):
        count = len(enumerate_brauer(k))
        rep.add(f"#Brauer diagrams = (2k-1)!!, k={k}", double_factorial(2 * k - 1), count)
        dims = brauer_dims(k)
        rep.add(f"sum Brauer dim^2 = (2k-1)!!, k={k}", count, sum(d * d for d in dims.values()))
    rng = random.Random(7)
    for k in range(1, min(kmax, 6) + 1):
        ds = enumerate_brauer(k)
        bad = 0
        for _ in range(200):
            a, b, c = rng.choice(ds), rng.choice(ds), rng.choice(ds)
            ab, l1 = brauer_mul(a, b)
            left, l2 = brauer_mul(ab, c)
            bc, l3 = brauer_mul(b, c)
            right, l4 = brauer_mul(a, bc)
            bad += left != right or l1 + l2 != l3 + l4
        rep.add(f"diagram product associative, k={k}", 0, bad)
    for k in range(1, min(kmax, 5) + 1):
        bad = 0
        for u in all_permutations(k):
            for v in all_permutations(k):
                d, c = brauer_mul(BrauerDiagram.from_permutation(u), BrauerDiagram.from_permutation(v))
                bad += c != 0 or d.to_permutation() != u * v
        rep.add(f"permutation diagrams compose as S_{k}", 0, bad)
    for k in range(1, min(kmax + 2, 10) + 1):
        rep.add(f"#TL diagrams = Catalan, k={k}", catalan(k), len(tl_enumerate(k)))
        dims = [len(tl_basis(k, k - 2 * l)) for l in range(k // 2 + 1)]
        rep.add(f"TL module dims = ballot numbers, k={k}",
                [tl_dim(k, l) for l in range(k // 2 + 1)], dims)
        rep.add(f"sum TL dim^2 = Catalan, k={k}", catalan(k), sum(d * d for d in dims))
    for k in range(2, min(kmax, 8) + 1):
        r = tl_presentation_check(k)
        rep.add(f"TL presentation, k={k}", [], sorted(n for n, ok in r.items() if not ok))
    x = LaurentPoly.gen("x")
    for k in range(1, min(kmax, 8) + 1):
        bad = []
        for h in range(k // 2 + 1):
            d = d_2h(k, h)
            for ell in range(k // 2 + 1):
                if tl_character_general(d, ell) != x ** h * tl_character_closed(k, ell, h):
                    bad.append(f"h={h},l={ell}")
        rep.add(f"trace of d_2h = x^h * closed form, k={k}", [], bad)
    for k in range(2, min(kmax, 4) + 1):
        r = hecke_to_tl_check(k, "x_squared")
        rep.add(f"Hecke -> TL homomorphism and kernel, k={k}", True, r["holds"])
    return rep


def suite_readings(nmax: int) -> VerifyReport:
    """Alternative readings of formulas: exactly one of each family passes."""
    rep = VerifyReport("readings")
    n_mn = min(nmax, 6)

    def mn_ok(reading: str) -> bool:
        for n in range(1, n_mn + 1):
            parts = partitions(n)
            sizes = {mu: class_size(mu) for mu in parts}
            for a in parts:
                for b in parts:
                    s = sum(sizes[mu] * mn_character(a, mu, reading) * mn_character(b, mu, reading)
                            for mu in parts)
                    if s != (factorial(n) if a == b else 0):
                        return False
        return True

    _record_family(rep, "border strip weight", {r: mn_ok(r) for r in ("all", "drop_last")})

    def updown_ok(reading: str) -> bool:
        for k in range(0, min(nmax, 8) + 1):
            for h in range(k // 2 + 1):
                for lam in partitions(k - 2 * h):
                    if count_updown_closed(lam, k, reading) != count_updown(lam, k):
                        return False
        return True

    _record_family(rep, "up-down closed form", {r: updown_ok(r) for r in ("odd", "even")})
    rep.add("up-down count for (1), k=3", 3, count_updown((1,), 3))

    _record_family(rep, "Hecke to TL parameter relation",
                   {r: hecke_to_tl_check(4, r)["holds"] for r in HECKE_TL_READINGS})

    def ne_ok(reading: str) -> bool:
        return all(roichman_character(lam, mu, reading) == mn_character(lam, mu)
                   for n in range(1, n_mn + 1) for lam in partitions(n) for mu in partitions(n))

    _record_family(rep, "north-east convention", {r: ne_ok(r) for r in NE_READINGS})

    def gt_ok(reading: str) -> bool:
        return all(commutator_check(lam, n, reading) and (n < 3 or serre_check(lam, 3, reading))
                   for size in range(1, 4) for lam in partitions(size)
                   for n in range(max(2, len(lam)), 4))

    _record_family(rep, "Gelfand-Tsetlin shift", {r: gt_ok(r) for r in GT_READINGS})

    def hecke_ok(reading: str) -> bool:
        for n in range(1, 5):
            parts = partitions(n)
            for mu in parts:
                g = HeckeElement.basis(gamma_mu(mu))
                for nu in parts:
                    rhs = LaurentPoly({}, "q")
                    for lam in parts:
                        rhs = rhs + hecke_roichman_character(lam, mu, reading) * kostka(lam, nu)
                    if permutation_module_trace(nu, g) != rhs:
                        return False
        return True

    _record_family(rep, "Hecke weight at block ends", {r: hecke_ok(r) for r in HECKE_READINGS})

    rep.add("lattice: 1122133456578 (fails at prefix 11221334565)", False, is_lattice("1122133456578"))
    rep.add("lattice: 1122143346578", False, is_lattice("1122143346578"))
    return rep


def _record_family(rep: VerifyReport, name: str, results: dict[str, bool]) -> None:
    passing = sorted(r for r, ok in results.items() if ok)
    rep.add(f"{name}: exactly one reading passes", 1, len(passing))
    for r, ok in results.items():
        rep.checks.append(Check(f"{name} [{r}]", True, "pass" if ok else "fail",
                                "pass" if ok else "fail"))


SUITES: dict[str, Callable[[int], VerifyReport]] = {
    "sn": suite_sn,
    "schur": suite_schur,
    "gt": suite_gt,
    "weyl": suite_weyl,
    "hecke": suite_hecke,
    "diagram": suite_diagram,
    "readings": suite_readings,
}


def default_bounds(quick: bool) -> dict[str, int]:
    if quick:
        return {"sn": 5, "schur": 5, "gt": 3, "weyl": 4, "hecke": 3, "diagram": 4, "readings": 4}
    return {"sn": 7, "schur": 8, "gt": 4, "weyl": 6, "hecke": 4, "diagram": 8, "readings": 6}


def run_suite(name: str, bound: int) -> VerifyReport:
    start = time.perf_counter()
    rep = SUITES[name](bound)
    rep.wall_ms = int((time.perf_counter() - start) * 1000)
    return rep


def workers() -> int:
    """Worker count from ``COMBREP_WORKERS``, else the number of available cores."""
    env = os.environ.get("COMBREP_WORKERS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"COMBREP_WORKERS must be an integer, got {env!r}") from None
        if n < 1:
            raise ValueError("COMBREP_WORKERS must be positive")
        return n
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:  # pragma: no cover - non-Linux
        return os.cpu_count() or 1


def run_suites(jobs: list[tuple[str, int]], nworkers: int | None = None) -> list[VerifyReport]:
    """Run suites, in parallel when more than one worker is allowed; order follows ``jobs``."""
    nworkers = workers() if nworkers is None else nworkers
    if nworkers <= 1 or len(jobs) <= 1:
        return [run_suite(n, b) for n, b in jobs]
    with ProcessPoolExecutor(max_workers=min(nworkers, len(jobs))) as pool:
        futures = [pool.submit(run_suite, n, b) for n, b in jobs]
        return [f.result() for f in futures]
