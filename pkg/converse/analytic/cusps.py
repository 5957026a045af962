"""
converse/analytic/cusps.py

Cusps 1/r of Gamma0(N) for the square-free-odd-part level shapes, their
widths and scaling matrices, and the Gamma0(N) element that moves the
cusp a*r onto the standard representative 1/r.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import List, NamedTuple, Optional

from sympy import divisors, factorint, mod_inverse
from sympy.ntheory.modular import crt

from converse.exact_linalg import IDENTITY, ProjMat, canonicalize, in_gamma0
from converse.exceptions import InvalidCuspData, InvalidLevelShape

logger = logging.getLogger(__name__)


class Lemma6Solution(NamedTuple):
    gamma: ProjMat
    b: int
    d: int


def check_level_shape(N: int) -> None:
    """N = 2^e * N' with e <= 3 and N' odd and square-free"""
    if N < 1:
        raise InvalidLevelShape("level must be positive", N=N)
    for p, e in factorint(N).items():
        if (p == 2 and e > 3) or (p != 2 and e > 1):
            raise InvalidLevelShape(
                "level must be 2^e N' with e <= 3 and N' odd square-free", N=N
            )


def _check_cusp(N: int, r: int) -> int:
    if r < 1 or N % r:
        raise InvalidCuspData("r must divide N", N=N, r=r)
    Q = N // r
    if gcd(r, Q) != 1:
        raise InvalidCuspData("needs gcd(r, N/r) = 1", N=N, r=r)
    return Q


def lemma6_gamma(N: int, r: int, a: int, d: Optional[int] = None) -> Lemma6Solution:
    """gamma in Gamma0(N) with gamma * [1,0;ar,1] = [1,b;-r,d].

    d solves d = 1 (mod r), d = -a^-1 (mod N/r); the least positive
    solution is used unless a specific admissible d is passed.
    """
    Q = _check_cusp(N, r)
    if gcd(a * r, Q) != 1:
        raise InvalidCuspData("needs gcd(a r, N/r) = 1", N=N, r=r, a=a)

    residue = (-int(mod_inverse(a % Q, Q))) % Q if Q > 1 else 0
    if d is None:
        solved = crt([r, Q], [1 % r, residue])
        d = int(solved[0]) % (r * Q) or r * Q
    elif (d - 1) % r or (d - residue) % Q:
        raise InvalidCuspData("d does not satisfy the congruences", d=d, r=r, Q=Q)

    b = (1 - d) // r
    gamma = canonicalize(1 - a * b * r, b, -r - a * d * r, d)
    if not in_gamma0(gamma, N):
        raise InvalidCuspData("constructed matrix is not in Gamma0(N)", gamma=gamma)
    logger.debug("lemma6 solution N=%s r=%s a=%s d=%s", N, r, a, d)
    return Lemma6Solution(gamma, b, d)


@dataclass(frozen=True)
class CuspSpec:
    """Cusp 1/r; width N/r; sigma in SL2(Z) sends infinity to 1/r"""

    level: int
    r: int
    width: int
    sigma: ProjMat

    @property
    def label(self) -> str:
        if self.r == self.level:
            return "infinity"
        if self.r == 1:
            return "0"
        return f"1/{self.r}"


def cusp_spec(N: int, r: int, width: Optional[int] = None) -> CuspSpec:
    """Cusp 1/r of Gamma0(N); r = N is the cusp at infinity"""
    if r < 1 or N % r:
        raise InvalidCuspData("r must divide N", N=N, r=r)
    if r == N:
        return CuspSpec(N, r, 1, IDENTITY)
    if width is None:
        # N/r is a multiple of the true width, enough for horocycle averages
        width = N // r
    if r == 1:
        # S = [0,-1;1,0] sends infinity to 0
        return CuspSpec(N, r, width, canonicalize(0, -1, 1, 0))
    return CuspSpec(N, r, width, canonicalize(1, 0, r, 1))


def cusp_specs(N: int) -> List[CuspSpec]:
    """Cusps {1/r : r | N} at the levels where they form a full set"""
    check_level_shape(N)
    return [cusp_spec(N, int(r)) for r in divisors(N)]
