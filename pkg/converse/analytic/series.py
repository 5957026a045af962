"""
converse/analytic/series.py

Truncated q-expansions with exact rational coefficients: eta quotients,
expansion from local Euler factors, and the weight-2 Eisenstein series
attached to the character mod 3.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import lcm
from pathlib import Path
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import divisor_sigma, factorint, primerange

from converse.analytic.schemas import LocalFactorSpec, SeriesFile
from converse.exceptions import (
    InvalidFormSpec,
    MissingPrime,
    NonIntegralLeadingPower,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FourierSeries:
    """f = sum_{n=0}^{K} a_n q^n with q = e^{2 pi i z}"""

    weight: int
    level: int
    coeffs: Tuple[Fraction, ...]
    label: str = ""

    def __post_init__(self):
        if self.weight <= 0 or self.weight % 2:
            raise InvalidFormSpec(
                "weight must be a positive even integer", weight=self.weight
            )
        object.__setattr__(
            self, "coeffs", tuple(Fraction(a) for a in self.coeffs)
        )

    @property
    def K(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n > self.K:
            raise IndexError(f"a_{n} is beyond the truncation K={self.K}")
        return self.coeffs[n]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    @cached_property
    def _floats(self) -> np.ndarray:
        return np.array([float(a) for a in self.coeffs], dtype=np.float64)

    def as_array(self) -> np.ndarray:
        return self._floats.copy()

    def truncate(self, K: int) -> "FourierSeries":
        return FourierSeries(self.weight, self.level, self.coeffs[: K + 1], self.label)

    # -- JSON export / import

    def to_file(self) -> SeriesFile:
        return SeriesFile(
            level=self.level,
            weight=self.weight,
            K=self.K,
            label=self.label,
            coefficients=[str(a) for a in self.coeffs],
        )

    def dump(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.to_file().model_dump_json(indent=2), encoding="utf-8")

    @classmethod
    def from_file(cls, data: SeriesFile) -> "FourierSeries":
        if len(data.coefficients) != data.K + 1:
            raise InvalidFormSpec(
                "coefficient count does not match K",
                K=data.K,
                count=len(data.coefficients),
            )
        return cls(
            weight=data.weight,
            level=data.level,
            coeffs=tuple(Fraction(a) for a in data.coefficients),
            label=data.label,
        )

    @classmethod
    def load(cls, path: Union[str, Path]) -> "FourierSeries":
        text = Path(path).read_text(encoding="utf-8")
        return cls.from_file(SeriesFile.model_validate_json(text))


# -- eta quotients


def pentagonal(M: int) -> List[int]:
    """prod_{n>=1} (1 - q^n) up to q^M by the pentagonal number theorem"""
    coeffs = [0] * (M + 1)
    coeffs[0] = 1
    m = 1
    while True:
        p1 = m * (3 * m - 1) // 2
        p2 = m * (3 * m + 1) // 2
        if p1 > M:
            break
        sign = -1 if m % 2 else 1
        coeffs[p1] = sign
        if p2 <= M:
            coeffs[p2] = sign
        m += 1
    return coeffs


def series_power(a: Sequence[int], r: int) -> List[int]:
    """a^r for a power series with a_0 = 1, via the J.C.P. Miller recurrence"""
    M = len(a) - 1
    support = [k for k in range(1, M + 1) if a[k]]
    b = [0] * (M + 1)
    b[0] = 1
    for n in range(1, M + 1):
        total = 0
        for k in support:
            if k > n:
                break
            total += ((r + 1) * k - n) * a[k] * b[n - k]
        b[n] = total // n
    return b


def series_mul(x: Sequence[int], y: Sequence[int]) -> List[int]:
    M = min(len(x), len(y)) - 1
    out = [0] * (M + 1)
    y_support = [j for j in range(M + 1) if y[j]]
    for i in range(M + 1):
        xi = x[i]
        if not xi:
            continue
        for j in y_support:
            if i + j > M:
                break
            out[i + j] += xi * y[j]
    return out


def eta_quotient(
    exponents: Mapping[int, int], K: int, level: Optional[int] = None
) -> FourierSeries:
    """prod_d eta(d z)^{r_d} truncated at q^K.

    The level defaults to the lcm of the d with r_d != 0; callers with
    better knowledge pass it explicitly.
    """
    if K < 1:
        raise InvalidFormSpec("K must be positive", K=K)
    exponents = {int(d): int(r) for d, r in exponents.items() if r}
    if not exponents or any(d < 1 for d in exponents):
        raise InvalidFormSpec("eta exponents need positive d", exponents=exponents)

    twice_weight = sum(exponents.values())
    if twice_weight <= 0 or twice_weight % 4:
        raise InvalidFormSpec(
            "weight (sum r_d)/2 must be a positive even integer",
            exponents=exponents,
        )
    lead, rem = divmod(sum(d * r for d, r in exponents.items()), 24)
    if rem:
        raise NonIntegralLeadingPower(
            f"leading power {sum(d * r for d, r in exponents.items())}/24 is not integral",
            exponents=exponents,
        )
    if lead < 0:
        raise InvalidFormSpec("negative leading power", exponents=exponents)

    M = K - lead
    product = [1] + [0] * max(M, 0)
    if M >= 0:
        for d, r in sorted(exponents.items()):
            inner = series_power(pentagonal(M // d), r)
            spread = [0] * (M + 1)
            for i, v in enumerate(inner):
                spread[i * d] = v
            product = series_mul(product, spread)

    coeffs = [0] * (K + 1)
    for i in range(max(M, -1) + 1):
        coeffs[i + lead] = product[i]

    if level is None:
        level = reduce(lcm, exponents)
    label = "eta:" + ",".join(f"{d}^{r}" for d, r in sorted(exponents.items()))
    logger.debug("expanded %s to K=%d", label, K)
    return FourierSeries(twice_weight // 2, level, tuple(coeffs), label)


# -- Euler products


def prime_power_coefficients(
    spec: LocalFactorSpec, p: int, top: int
) -> List[Fraction]:
    """a_{p^j} for j = 0..top from the local factor at p"""
    N, k = spec.level, spec.weight
    values = [Fraction(1)]
    if N % (p * p) == 0:
        return values + [Fraction(0)] * top
    if N % p == 0:
        a_q = spec.ap.get(p, Fraction(p) ** (k // 2 - 1))
        return [a_q ** j for j in range(top + 1)]
    if p not in spec.ap:
        raise MissingPrime(f"a_{p} is not supplied", p=p, level=N)
    a_p = spec.ap[p]
    values.append(a_p)
    for _ in range(2, top + 1):
        values.append(a_p * values[-1] - Fraction(p) ** (k - 1) * values[-2])
    return values[: top + 1]


def euler_expand(spec: LocalFactorSpec, K: int) -> FourierSeries:
    """a_n for n <= K by multiplicativity and the prime-power recursion"""
    local: Dict[int, List[Fraction]] = {}
    for p in primerange(2, K + 1):
        top = 1
        while p ** (top + 1) <= K:
            top += 1
        local[p] = prime_power_coefficients(spec, p, top)

    coeffs = [Fraction(0)] * (K + 1)
    if K >= 1:
        coeffs[1] = Fraction(1)
    for n in range(2, K + 1):
        value = Fraction(1)
        for p, e in factorint(n).items():
            value *= local[p][e]
        coeffs[n] = value
    return FourierSeries(spec.weight, spec.level, tuple(coeffs), f"euler:{spec.level}")


def local_factors_from(
    series: FourierSeries, bound: Optional[int] = None
) -> LocalFactorSpec:
    """Read a_p for p not dividing the level off an existing expansion"""
    bound = series.K if bound is None else bound
    ap = {
        p: series[p]
        for p in primerange(2, bound + 1)
        if series.level % p
    }
    return LocalFactorSpec(level=series.level, weight=series.weight, ap=ap)


# -- Eisenstein series for the character mod 3


def chi3(n: int) -> int:
    return (0, 1, -1)[n % 3]


def eisenstein_chi3(K: int) -> FourierSeries:
    """a_n = sum_{dm=n} chi(d) chi(m) m = chi(n) sigma(n); weight 2, level 9"""
    if K < 1:
        raise InvalidFormSpec("K must be positive", K=K)
    coeffs = [0] + [chi3(n) * int(divisor_sigma(n, 1)) for n in range(1, K + 1)]
    return FourierSeries(2, 9, tuple(coeffs), "eis-chi3")