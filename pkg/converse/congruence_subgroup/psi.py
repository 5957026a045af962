"""
converse/congruence_subgroup/psi.py

Index of Gamma0(N) in SL2(Z) as the size of the projective line over Z/N.
"""

from fractions import Fraction
from math import gcd

from sympy import primefactors, totient


def psi_index(N: int) -> int:
    """|P^1(Z/N)| by counting primitive pairs (c, d) mod N.

    Units act freely on primitive pairs, so the classes number
    #{primitive pairs} / phi(N).
    """
    if N < 1:
        raise ValueError("N must be positive")
    if N == 1:
        return 1
    primitive = sum(
        1 for c in range(N) for d in range(N) if gcd(gcd(c, d), N) == 1
    )
    return primitive // int(totient(N))


def psi_formula(N: int) -> int:
    """N * prod_{p | N} (1 + 1/p)"""
    value = Fraction(N)
    for p in primefactors(N):
        value *= Fraction(p + 1, p)
    return int(value)
