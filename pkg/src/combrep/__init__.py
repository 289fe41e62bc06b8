"""Exact tableaux, characters, Hecke and diagram algebras.

Symmetric groups, GL(n), classical Weyl characters, Iwahori-Hecke algebras
and the Brauer / Temperley-Lieb diagram algebras, each formula paired with an
independent check.
"""
__version__ = "0.1.0"
