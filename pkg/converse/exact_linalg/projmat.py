"""
converse/exact_linalg/projmat.py

Exact projective 2x2 matrices with positive determinant, and their
elliptic/parabolic/hyperbolic classification
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Optional, Tuple, Union

from converse.exceptions import NonPositiveDeterminant

Rational = Union[int, Fraction, str]


@dataclass(frozen=True, order=True)
class ProjMat:
    """Canonical representative of a matrix class modulo nonzero scalars.

    Construct through canonicalize(); the raw constructor trusts its input.
    """

    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def __mul__(self, other: "ProjMat") -> "ProjMat":
        if not isinstance(other, ProjMat):
            return NotImplemented
        return mul(self, other)

    def __pow__(self, k: int) -> "ProjMat":
        return power(self, k)

    def inverse(self) -> "ProjMat":
        return inv(self)

    def __str__(self) -> str:
        return f"[{self.a},{self.b};{self.c},{self.d}]"

    def __repr__(self) -> str:
        return f"ProjMat{self}"


def canonicalize(a: Rational, b: Rational, c: Rational, d: Rational) -> ProjMat:
    """Unique representative of the class of [[a,b],[c,d]]"""
    fa, fb, fc, fd = (Fraction(v) for v in (a, b, c, d))
    if fa * fd - fb * fc <= 0:
        raise NonPositiveDeterminant(
            "determinant must be positive", matrix=f"[{a},{b};{c},{d}]"
        )

    den = reduce(lcm, (v.denominator for v in (fa, fb, fc, fd)))
    ints = [int(v * den) for v in (fa, fb, fc, fd)]
    content = reduce(gcd, (abs(v) for v in ints))
    ints = [v // content for v in ints]

    first = next(v for v in ints if v != 0)
    if first < 0:
        ints = [-v for v in ints]
    return ProjMat(*ints)


IDENTITY = ProjMat(1, 0, 0, 1)


def mul(x: ProjMat, y: ProjMat) -> ProjMat:
    return canonicalize(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def inv(x: ProjMat) -> ProjMat:
    # adjugate; same class as the inverse
    return canonicalize(x.d, -x.b, -x.c, x.a)


def power(x: ProjMat, k: int) -> ProjMat:
    base = x if k >= 0 else inv(x)
    result = IDENTITY
    k = abs(k)
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def in_gamma0(x: ProjMat, N: int) -> bool:
    return x.det == 1 and x.c % N == 0


class OrderKind(str, Enum):
    IDENTITY = "identity"
    ELLIPTIC_FINITE = "elliptic_finite"
    ELLIPTIC_INFINITE = "elliptic_infinite"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


# tr^2/det of a finite-order elliptic class determines its order
FINITE_ORDERS = {Fraction(0): 2, Fraction(1): 3, Fraction(2): 4, Fraction(3): 6}


@dataclass(frozen=True)
class OrderClass:
    kind: OrderKind
    discriminant: Fraction
    order: Optional[int] = None

    def describe(self) -> str:
        disc = f"tr²/det = {self.discriminant}"
        if self.kind == OrderKind.ELLIPTIC_FINITE:
            return f"elliptic, order {self.order}, {disc}"
        if self.kind == OrderKind.ELLIPTIC_INFINITE:
            return f"elliptic, infinite order, {disc}"
        return f"{self.kind.value}, {disc}"


def classify_order(x: ProjMat) -> OrderClass:
    disc = Fraction(x.trace * x.trace, x.det)
    if x.is_identity():
        return OrderClass(OrderKind.IDENTITY, disc, 1)
    if disc in FINITE_ORDERS:
        return OrderClass(OrderKind.ELLIPTIC_FINITE, disc, FINITE_ORDERS[disc])
    if disc < 4:
        return OrderClass(OrderKind.ELLIPTIC_INFINITE, disc)
    if disc == 4:
        return OrderClass(OrderKind.PARABOLIC, disc)
    return OrderClass(OrderKind.HYPERBOLIC, disc)
