"""
tests/factories.py

Factories for random matrices, Gamma0(N) members and symbolic scalars.
Seeded through factory.random so every run sees the same draws.
"""

from fractions import Fraction
from math import gcd
from typing import List, Tuple

import factory
import factory.random
from factory import Faker
from sympy import mod_inverse

from converse.exact_linalg import ProjMat, canonicalize
from converse.symscalar import SymScalar

factory.random.reseed_random("converse-tests")


def positive_matrix(a: int, b: int, c: int, d: int) -> ProjMat:
    """Nudge random entries into a positive-determinant class"""
    while a * d - b * c == 0:
        a, d = a + 1, d + 1
    if a * d - b * c < 0:
        a, b = -a, -b
    return canonicalize(a, b, c, d)


def gamma0_member(N: int, k: int, d: int) -> ProjMat:
    """[a,b;kN,d] with determinant 1; d is moved up until coprime to kN"""
    c = k * N
    while gcd(d, c) != 1:
        d += 1
    a = int(mod_inverse(d, c)) if c > 1 else 1
    b = (a * d - 1) // c
    return canonicalize(a, b, c, d)


SCALAR_SYMBOLS = ("eps", "alpha_2", "alpha_3", "alpha_5")
ENTRY_BOUND = 10**6


def nonzero_rational(num: int, den: int) -> Fraction:
    return Fraction(num or 1, den)


def scalar_poly(terms: List[Tuple[Fraction, Tuple[str, ...]]]) -> SymScalar:
    """Sum of coeff * product of the listed symbols"""
    total = SymScalar()
    for coeff, names in terms:
        mono = SymScalar.const(coeff)
        for name in names:
            mono = mono * SymScalar.symbol(name)
        total = total + mono
    return total


def random_scalar_terms() -> List[Tuple[Fraction, Tuple[str, ...]]]:
    """Up to five terms of degree <= 3 over four symbols"""
    rng = factory.random.randgen
    return [
        (
            Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
            tuple(rng.choice(SCALAR_SYMBOLS) for _ in range(rng.randint(0, 3))),
        )
        for _ in range(rng.randint(1, 5))
    ]


def st_product(exponents: List[int]) -> ProjMat:
    """T^k1 S T^k2 S ..., stopping before an entry exceeds ENTRY_BOUND"""
    S = canonicalize(0, -1, 1, 0)
    value = canonicalize(1, 0, 0, 1)
    for k in exponents:
        step = value * canonicalize(1, k, 0, 1) * S
        if max(abs(v) for v in step.entries) > ENTRY_BOUND:
            break
        value = step
    return value


def random_exponents() -> List[int]:
    rng = factory.random.randgen
    return [rng.randint(-12, 12) for _ in range(rng.randint(1, 30))]


class ProjMatFactory(factory.Factory):
    class Meta:
        model = positive_matrix

    a = Faker("random_int", min=-9, max=9)
    b = Faker("random_int", min=-9, max=9)
    c = Faker("random_int", min=-9, max=9)
    d = Faker("random_int", min=-9, max=9)


class Gamma0MatrixFactory(factory.Factory):
    class Meta:
        model = gamma0_member

    N = 11
    k = Faker("random_int", min=1, max=6)
    d = Faker("random_int", min=1, max=120)


class RationalFactory(factory.Factory):
    class Meta:
        model = nonzero_rational

    num = Faker("random_int", min=-50, max=50)
    den = Faker("random_int", min=1, max=50)


class SL2WordMatrixFactory(factory.Factory):
    class Meta:
        model = st_product

    exponents = factory.LazyFunction(random_exponents)


class SymScalarFactory(factory.Factory):
    class Meta:
        model = scalar_poly

    terms = factory.LazyFunction(random_scalar_terms)
