"""Exact star products from a pair of derivations (delta, gamma) with
[delta, gamma] = delta and delta locally nilpotent.

All polynomials and rationals are exchanged as exact strings, e.g.
``Pair.from_jordan([2], ["1"]).star("X1", "X0") == "X0*X1 + X0^2"``.
"""

from ._solvpair import Pair

__all__ = ["Pair"]
