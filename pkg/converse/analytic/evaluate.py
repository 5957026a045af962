"""
converse/analytic/evaluate.py

Point evaluation of truncated q-expansions and of the weight-k slash
action, each reported with a bound on the truncation tail.
"""

import logging
import math
from typing import List, NamedTuple, Optional

import numpy as np

from converse.analytic.series import FourierSeries
from converse.config import settings
from converse.exact_linalg import ProjMat
from converse.exceptions import PrecisionUnreachable

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


class Evaluation(NamedTuple):
    value: complex
    tail: float


def growth_constant(f: FourierSeries) -> float:
    """Least C with |a_n| <= C n^{k/2+1} for 1 <= n <= K"""
    if f.K < 1:
        return 0.0
    n = np.arange(1, f.K + 1, dtype=np.float64)
    a = np.abs(f.as_array()[1:])
    return float(np.max(a / n ** (f.weight / 2 + 1)))


def tail_bound(f: FourierSeries, y: float) -> float:
    """Bound on sum_{n>K} |a_n| e^{-2 pi n y} under the fitted growth"""
    if y <= 0:
        return math.inf
    C = growth_constant(f)
    if C == 0.0:
        return 0.0
    e = f.weight / 2 + 1
    K = f.K
    log_r = -TWO_PI * y
    log_rho = e * math.log((K + 2) / (K + 1)) + log_r
    if log_rho >= 0:
        return math.inf
    log_first = math.log(C) + e * math.log(K + 1) + (K + 1) * log_r
    return math.exp(log_first - math.log1p(-math.exp(log_rho)))


def evaluate(f: FourierSeries, z: complex) -> Evaluation:
    """f(z) = sum a_n e^{2 pi i n z}"""
    z = complex(z)
    if z.imag <= 0:
        raise PrecisionUnreachable("point is not in the upper half-plane", z=z)
    n = np.arange(f.K + 1, dtype=np.float64)
    q_powers = np.exp(1j * TWO_PI * n * z)
    value = complex(np.dot(f.as_array(), q_powers))
    return Evaluation(value, tail_bound(f, z.imag))


def mobius(gamma: ProjMat, z: complex) -> complex:
    a, b, c, d = gamma.entries
    return (a * z + b) / (c * z + d)


def slash_eval(
    f: FourierSeries,
    gamma: ProjMat,
    z: complex,
    tol: Optional[float] = None,
) -> Evaluation:
    """(f|_k gamma)(z) = (det gamma)^{k/2} (cz+d)^{-k} f(gamma z).

    Even weight makes this independent of the scalar representative.
    Raises PrecisionUnreachable when the scaled tail bound exceeds tol.
    """
    tol = settings.NUMERIC_TOL if tol is None else tol
    z = complex(z)
    if z.imag <= 0:
        raise PrecisionUnreachable("point is not in the upper half-plane", z=z)
    k = f.weight
    a, b, c, d = gamma.entries
    j = c * z + d
    factor = float(gamma.det) ** (k // 2) * j ** (-k)
    inner = evaluate(f, mobius(gamma, z))
    tail = abs(factor) * inner.tail
    if not tail < tol:
        raise PrecisionUnreachable(
            f"tail bound {tail:.3g} exceeds {tol:.3g} at {gamma} z={z:.6g}",
            tail=tail,
            tol=tol,
            matrix=gamma,
            z=z,
            K=f.K,
        )
    return Evaluation(factor * inner.value, tail)


def sample_points(gamma: ProjMat, count: int = 5) -> List[complex]:
    """Deterministic points balancing Im z against Im gamma z.

    For c != 0 the points sit over -d/c at height sqrt(det)/|c|, where the
    two imaginary parts agree; for c = 0 a fixed horizontal row is used.
    """
    a, b, c, d = gamma.entries
    offsets = [0.15 * (i - count // 2) for i in range(count)]
    if c == 0:
        height = max(settings.NUMERIC_MIN_IMAG, 0.5)
        return [complex(0.1 + o, height) for o in offsets]
    height = math.sqrt(gamma.det) / abs(c)
    if height < settings.NUMERIC_MIN_IMAG:
        logger.debug(
            "points for %s sit at height %.4f, below the usual %.2f",
            gamma,
            height,
            settings.NUMERIC_MIN_IMAG,
        )
    centre = -d / c
    return [complex(centre + o * height, height) for o in offsets]
