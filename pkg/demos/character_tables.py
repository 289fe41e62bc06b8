"""Print the S_n and Hecke character tables and check them against each other."""
from __future__ import annotations

import sys

from combrep.hecke import hecke_character_table
from combrep.shapes import hook_dim
from combrep.symgroup import character_table, roichman_character


def main(n: int = 4) -> None:
    labels, rows = character_table(n)
    width = max(len(str(lam)) for lam in labels) + 2
    print(f"S_{n} characters (Murnaghan-Nakayama)")
    print("".ljust(width) + "".join(str(mu).rjust(width) for mu in labels))
    for lam, row in zip(labels, rows):
        print(str(lam).ljust(width) + "".join(str(v).rjust(width) for v in row))
        assert row[-1] == hook_dim(lam)
        assert row == [roichman_character(lam, mu) for mu in labels]

    labels, rows = hecke_character_table(n)
    print(f"\nH_{n}(q) characters on T_gamma_mu")
    for lam, row in zip(labels, rows):
        print(f"{str(lam):>10}: " + " | ".join(str(v) for v in row))
        assert [int(v.evaluate(1)) for v in row] == character_table(n)[1][labels.index(lam)]


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4)
