"""
converse/exact_linalg/named.py

Named matrices of the converse-theorem derivations: Fricke H_N, translation
P, W_N, beta(x), the M_{m,b} family, and the level-2 helpers A and B.
"""

from fractions import Fraction
from math import gcd
from typing import Optional

from sympy import mod_inverse

from converse.exact_linalg.projmat import (
    IDENTITY,
    ProjMat,
    Rational,
    canonicalize,
    inv,
    mul,
)
from converse.exceptions import NoRepresentative, UnsatisfiableConstraint


def fricke(N: int) -> ProjMat:
    """H_N = [[0,-1],[N,0]]"""
    return canonicalize(0, -1, N, 0)


def translation(x: Rational = 1) -> ProjMat:
    """beta(x) = [[1,x],[0,1]]; P is beta(1)"""
    return canonicalize(1, x, 0, 1)


P = translation(1)


def lower_translation(N: int) -> ProjMat:
    """W_N = [[1,0],[N,1]]"""
    return canonicalize(1, 0, N, 1)


def diagonal(x: Rational, y: Rational = 1) -> ProjMat:
    return canonicalize(x, 0, 0, y)


def elliptic_s() -> ProjMat:
    return canonicalize(0, -1, 1, 0)


def _require_level(name: str, N: Optional[int]) -> int:
    if N is None or N < 1:
        raise UnsatisfiableConstraint(f"{name} needs a positive level", name=name)
    return N


def m_two(N: int) -> ProjMat:
    """M_2 = [[2,1],[N,(N+1)/2]] for odd N"""
    if N % 2 == 0:
        raise UnsatisfiableConstraint("M_2 requires odd level", N=N)
    return canonicalize(2, 1, N, (N + 1) // 2)


def m_minus_two(N: int) -> ProjMat:
    """M_{-2} = W_N^{-1} M_2 P^{-1}"""
    return mul(mul(inv(lower_translation(N)), m_two(N)), inv(P))


def matrix_a(N: int) -> ProjMat:
    """A = [[-2,1],[N,-(N+2)/2]] for even N"""
    if N % 2 == 1:
        raise UnsatisfiableConstraint("A requires even level", N=N)
    return canonicalize(-2, 1, N, -(N + 2) // 2)


def matrix_b() -> ProjMat:
    return canonicalize(2, 1, 0, 2)


def m_family(N: int, m: int, b: int = 1) -> ProjMat:
    """M_{m,b} = [[m,b],[cN,d]] with md - bcN = 1 and 0 < 2|c| < |m|.

    M_{2,1} and M_{-2,1} are the special matrices of the odd-level case.
    """
    if abs(m) == 2 and b == 1:
        return m_two(N) if m > 0 else m_minus_two(N)
    if m == 0 or gcd(m, b * N) != 1:
        raise UnsatisfiableConstraint(
            "M_{m,b} requires gcd(m, bN) = 1", m=m, b=b, N=N
        )
    modulus = abs(m)
    if modulus == 1:
        raise NoRepresentative("no c with 0 < 2|c| < 1", m=m, b=b, N=N)

    # bNc = -1 (mod |m|), then shift c into the symmetric range
    c = (-int(mod_inverse(b * N, modulus))) % modulus
    if 2 * c > modulus:
        c -= modulus
    if not 0 < 2 * abs(c) < modulus:
        raise NoRepresentative(
            "no c with 0 < 2|c| < |m|", m=m, b=b, N=N, c=c
        )
    d = Fraction(1 + b * c * N, m)
    return canonicalize(m, b, c * N, d)


def named_matrix(
    name: str,
    N: Optional[int] = None,
    m: Optional[int] = None,
    b: Optional[int] = None,
    x: Optional[Rational] = None,
) -> ProjMat:
    """Look up a named matrix; parameters are interpreted per name"""
    key = name.strip()
    if key in ("I", "identity"):
        return IDENTITY
    if key in ("P", "T"):
        return P
    if key == "S":
        return elliptic_s()
    if key == "B":
        return matrix_b()
    if key == "beta":
        return translation(x if x is not None else 1)
    if key == "D":
        return diagonal(x if x is not None else 1)
    if key == "H":
        return fricke(_require_level(key, N))
    if key == "W":
        return lower_translation(_require_level(key, N))
    if key == "A":
        return matrix_a(_require_level(key, N))
    if key == "M2":
        return m_two(_require_level(key, N))
    if key == "Mm2":
        return m_minus_two(_require_level(key, N))
    if key == "M":
        if m is None:
            raise UnsatisfiableConstraint("M needs an index m")
        return m_family(_require_level(key, N), m, 1 if b is None else b)
    raise UnsatisfiableConstraint(f"unknown matrix name {name!r}", name=name)
