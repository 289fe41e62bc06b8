"""Brauer and Temperley-Lieb algebras: dimensions, products and a d_2h trace table."""
from __future__ import annotations

from combrep.diagram import (
    brauer_dims,
    brauer_e,
    brauer_s,
    d_2h,
    seven_dot_example,
    tl_character_general,
    tl_dim,
)
from combrep.shapes import double_factorial

for k in range(1, 6):
    dims = brauer_dims(k)
    total = sum(d * d for d in dims.values())
    print(f"B_{k}: {len(dims)} irreducibles, sum of squares {total} = (2k-1)!! = {double_factorial(2 * k - 1)}")

d1, d2, d, loops = seven_dot_example()
print(f"\n{d1} * {d2}\n  = x^{loops} {d}")

e1, s2 = brauer_e(1, 3), brauer_s(2, 3)
print(f"\ne1 e1 = {e1 * e1}")
print(f"s2 e1 s2 = {s2 * e1 * s2}")

k = 6
print(f"\nTL_{k}: trace of d_2h on T^(k-l,l)")
print("h\\l " + "".join(f"{ell:>12}" for ell in range(k // 2 + 1)))
for h in range(k // 2 + 1):
    d = d_2h(k, h)
    print(f"{h:>3} " + "".join(f"{str(tl_character_general(d, ell)):>12}" for ell in range(k // 2 + 1)))
print("dims " + " ".join(str(tl_dim(k, ell)) for ell in range(k // 2 + 1)))
