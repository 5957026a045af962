"""
converse/analytic/checks.py

Numeric evidence for modularity: slash invariance under a matrix, Hecke
eigenvalues, the Fricke sign, and constant terms at cusps.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np
from sympy import isprime

from converse.analytic.cusps import CuspSpec
from converse.analytic.evaluate import evaluate, sample_points, slash_eval
from converse.analytic.schemas import (
    CuspReport,
    EigenReport,
    FrickeReport,
    InvarianceReport,
    PointResidual,
)
from converse.analytic.series import FourierSeries
from converse.config import settings
from converse.exact_linalg import ProjMat, canonicalize, fricke
from converse.exceptions import InconsistentLevel, InvalidCuspData, NotPrime

logger = logging.getLogger(__name__)

# heights for the Hecke check; every coset point stays above 0.1
HECKE_POINTS = (
    complex(0.11, 0.62),
    complex(-0.23, 0.71),
    complex(0.37, 0.83),
    complex(-0.05, 0.95),
)


def _fmt(z: complex) -> str:
    return f"{z.real:.6f}{z.imag:+.6f}i"


def check_invariance(
    f: FourierSeries,
    gamma: ProjMat,
    points: Optional[Sequence[complex]] = None,
    tol: Optional[float] = None,
) -> InvarianceReport:
    """max_z |(f|gamma)(z) - f(z)| over the points; passes iff below tol"""
    tol = settings.NUMERIC_TOL if tol is None else tol
    points = list(points) if points is not None else sample_points(gamma)
    rows: List[PointResidual] = []
    for z in points:
        lhs = slash_eval(f, gamma, z, tol)
        rhs = evaluate(f, z)
        rows.append(
            PointResidual(
                z=_fmt(z),
                residual=abs(lhs.value - rhs.value),
                tail=lhs.tail + rhs.tail,
            )
        )
    worst = max(r.residual for r in rows)
    report = InvarianceReport(
        form=f.label,
        level=f.level,
        matrix=str(gamma),
        max_residual=worst,
        max_tail=max(r.tail for r in rows),
        tol=tol,
        passed=worst < tol,
        points=rows,
    )
    logger.info(
        "invariance of %s under %s: residual %.3g", f.label, gamma, worst
    )
    return report


def hecke_slash(f: FourierSeries, p: int, z: complex, tol: float) -> complex:
    """(f|T_p)(z) over the cosets [1,j;0,p] and [p,0;0,1]"""
    total = slash_eval(f, canonicalize(p, 0, 0, 1), z, tol).value
    for j in range(p):
        total += slash_eval(f, canonicalize(1, j, 0, p), z, tol).value
    return total


def hecke_eigen_check(
    f: FourierSeries,
    p: int,
    tol: Optional[float] = None,
    points: Sequence[complex] = HECKE_POINTS,
) -> EigenReport:
    """Least-squares eigenvalue of f under T_p, compared with p^{1-k/2} a_p"""
    tol = settings.NUMERIC_TOL if tol is None else tol
    if not isprime(p):
        raise NotPrime(f"{p} is not prime", p=p)
    if f.level % p == 0:
        raise InconsistentLevel(f"{p} divides the level {f.level}", p=p, N=f.level)

    fz = np.array([evaluate(f, z).value for z in points])
    gz = np.array([hecke_slash(f, p, z, tol) for z in points])
    estimate = complex(np.vdot(fz, gz) / np.vdot(fz, fz))
    residual = float(np.max(np.abs(gz - estimate * fz)))

    expected = None
    passed = residual < tol
    if p <= f.K:
        expected = float(f[p]) * float(p) ** (1 - f.weight / 2)
        passed = passed and abs(estimate - expected) < tol
    logger.info("T_%d on %s: eigenvalue %.12g", p, f.label, estimate.real)
    return EigenReport(
        form=f.label,
        p=p,
        estimate_real=estimate.real,
        estimate_imag=estimate.imag,
        expected=expected,
        residual=residual,
        tol=tol,
        passed=passed,
    )


def fricke_check(
    f: FourierSeries,
    points: Optional[Sequence[complex]] = None,
    tol: Optional[float] = None,
) -> FrickeReport:
    """Ratio (f|H_N)/f at the points, expected to be a constant sign"""
    tol = settings.NUMERIC_TOL if tol is None else tol
    H = fricke(f.level)
    points = list(points) if points is not None else sample_points(H, 3)
    fz = np.array([evaluate(f, z).value for z in points])
    gz = np.array([slash_eval(f, H, z, tol).value for z in points])
    ratio = complex(np.vdot(fz, gz) / np.vdot(fz, fz))
    sign = 1 if ratio.real >= 0 else -1
    residual = float(np.max(np.abs(gz - sign * fz)))
    return FrickeReport(
        form=f.label,
        level=f.level,
        sign=sign,
        ratio_real=ratio.real,
        ratio_imag=ratio.imag,
        residual=residual,
        tol=tol,
        passed=residual < tol,
    )


def cusp_constant_term(
    f: FourierSeries,
    cusp: CuspSpec,
    height: Optional[float] = None,
    samples: Optional[int] = None,
    tol: Optional[float] = None,
) -> CuspReport:
    """Horocycle average of f|sigma over one width at the given height.

    The average removes every frequency except multiples of `samples`,
    which are damped by e^{-2 pi samples height / width}. The default
    height is CUSP_HEIGHT widths; one width is close to the height that
    maximizes the smallest Im(sigma z) along the horocycle.
    """
    if height is None:
        height = settings.CUSP_HEIGHT * cusp.width
    samples = settings.CUSP_SAMPLES if samples is None else samples
    tol = settings.NUMERIC_TOL if tol is None else tol
    if samples < 8:
        raise InvalidCuspData("at least 8 samples are needed", samples=samples)
    if height <= 0:
        raise InvalidCuspData("height must be positive", height=height)

    xs = cusp.width * np.arange(samples) / samples
    values = [slash_eval(f, cusp.sigma, complex(x, height), tol) for x in xs]
    alpha0 = complex(np.mean([v.value for v in values]))
    tail = max(v.tail for v in values)
    modulus = abs(alpha0)
    logger.info(
        "constant term of %s at %s: %.3g", f.label, cusp.label, modulus
    )
    return CuspReport(
        form=f.label,
        level=cusp.level,
        cusp=cusp.label,
        width=cusp.width,
        height=height,
        samples=samples,
        constant_real=alpha0.real,
        constant_imag=alpha0.imag,
        modulus=modulus,
        tail=tail,
        vanishes=modulus < max(tol, 1e-6),
    )
