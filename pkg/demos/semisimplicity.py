"""Where the Hecke, Temperley-Lieb and Brauer algebras stop being semisimple."""
from __future__ import annotations

from fractions import Fraction

from combrep.diagram import bmw_semisimple, brauer_semisimple, tl_semisimple
from combrep.exact import Generic, QPower, RootOfUnity, parse_parameter
from combrep.hecke import hecke_semisimple

print("Hecke H_n(q): q = primitive j-th root of unity")
for n in range(1, 6):
    row = ["ok" if hecke_semisimple(RootOfUnity(j), n) else "--" for j in range(1, 8)]
    print(f"  n={n}: " + " ".join(row))

print("\nTemperley-Lieb TL_k(x) at x = 2cos(pi m/l) and a few rationals")
points = [parse_parameter(t) for t in ("0", "1", "-1", "2", "2cos(1/4)", "2cos(1/5)", "2cos(2/5)", "3/2")]
for k in range(2, 7):
    print(f"  k={k}: " + " ".join(f"{str(p)}:{'ok' if tl_semisimple(p, k) else '--'}" for p in points))

print("\nBrauer B_k(x), sufficient condition")
for k in range(2, 6):
    bad = [x for x in range(-10, 10) if not brauer_semisimple(x, k)]
    print(f"  k={k}: not guaranteed for x in {bad}; x=1/2 -> {brauer_semisimple(Fraction(1, 2), k)}")

print("\nBMW(r, q), sufficient condition")
for r, q in ((Generic(), Generic()), (QPower(5), Generic()), (3, 2), (8, 2), (Generic(), RootOfUnity(4))):
    print(f"  r={r}, q={q}: {bmw_semisimple(r, q)}")
