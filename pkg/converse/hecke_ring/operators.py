"""
converse/hecke_ring/operators.py

Hecke, Atkin-Lehner and R_n operators as formal sums
"""

from math import gcd

from sympy import isprime

from converse.exact_linalg import canonicalize
from converse.exceptions import NotPrime
from converse.hecke_ring.element import RingElem


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise NotPrime(f"{p} is not prime", value=p)


def _upper(a: int, b: int, d: int) -> RingElem:
    return RingElem.from_matrix(canonicalize(a, b, 0, d))


def hecke_T_power(p: int, exponent: int) -> RingElem:
    """T_{p^l} = sum_{j<=l} sum_{b<p^j} [[p^(l-j), b], [0, p^j]]"""
    _require_prime(p)
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    result = RingElem()
    for j in range(exponent + 1):
        for b in range(p ** j):
            result = result + _upper(p ** (exponent - j), b, p ** j)
    return result


def hecke_T(p: int) -> RingElem:
    return hecke_T_power(p, 1)


def atkin_U(q: int) -> RingElem:
    """U_q = sum_{a<q} [[q, a], [0, q]]"""
    _require_prime(q)
    return translation_sum(q)


def translation_sum(n: int) -> RingElem:
    """sum_{b<n} beta(b/n)"""
    return sum((_upper(n, b, n) for b in range(n)), RingElem())


def R_sum(n: int) -> RingElem:
    """R_n = sum over 1 <= a <= n, (a, n) = 1, of [[n, a], [0, n]]"""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(
        (_upper(n, a, n) for a in range(1, n + 1) if gcd(a, n) == 1),
        RingElem(),
    )
