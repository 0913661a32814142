"""Scalar combinatorial helpers shared by every other module.

All results are exact: Fractions for numeric arguments, Poly values when the
argument itself is the indeterminate x.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .polynomials import Poly


def binom_general(lam, i: int):
    """Generalized binomial coefficient lam*(lam-1)***(lam-i+1)/i!.

    ``lam`` may be an int, a Fraction, or a Poly; the empty product at i=0 is 1.
    """
    if i < 0:
        raise ValueError(f"binom_general needs i >= 0, got {i}")
    if isinstance(lam, Poly):
        prod = Poly.one()
        for j in range(i):
            prod = prod * (lam - j)
        return prod / factorial(i)
    prod = Fraction(1)
    lam = Fraction(lam)
    for j in range(i):
        prod *= lam - j
    return prod / factorial(i)


def falling_factorial(n: int) -> Poly:
    """x(x-1)***(x-n+1); its coefficients are the signed Stirling first-kind row n."""
    if n < 0:
        raise ValueError(f"falling_factorial needs n >= 0, got {n}")
    prod = Poly.one()
    x = Poly.x()
    for j in range(n):
        prod = prod * (x - j)
    return prod


def perm_count(k: int, i: int) -> int:
    """Number of i-permutations of k items, k!/(k-i)!."""
    if not 0 <= i <= k:
        raise ValueError(f"perm_count needs 0 <= i <= k, got k={k}, i={i}")
    return factorial(k) // factorial(k - i)
