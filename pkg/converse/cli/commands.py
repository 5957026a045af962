"""
converse/cli/commands.py

One function per subcommand. Each returns a RunReport; rendering and exit
codes are the caller's business.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from sympy import divisors

from converse.analytic import (
    check_invariance,
    cusp_constant_term,
    cusp_spec,
    fricke_check,
    hecke_eigen_check,
    load_form,
)
from converse.analytic.schemas import ExpansionReport, OrderReport
from converse.cli.exception_handlers import EXIT_CERTIFICATE, EXIT_NEGATIVE, EXIT_OK
from converse.cli.schemas import RunReport
from converse.config import BaseConfig
from converse.congruence_subgroup import (
    certify_generators,
    psi_index,
    shipped_generators,
)
from converse.congruence_subgroup.certify import drop_generator
from converse.exact_linalg import classify_order, eval_matrix_expr
from converse.exceptions import InvalidConfig, InvalidCuspData
from converse.hecke_ring import (
    SUPPORTED_LEVELS,
    load_script,
    run_script,
    verify_cusps,
    verify_level,
)
from converse.hecke_ring.engine import builtin_script_path
from converse.hecke_ring.generators import (
    gen_corollary2_script,
    gen_corollary3_script,
    gen_theorem2_script,
    gen_theorem3_script,
)
from converse.hecke_ring.schemas import Report

logger = logging.getLogger(__name__)


def _finish(run: RunReport, ok: bool, failure_code: int = EXIT_NEGATIVE) -> RunReport:
    run.ok = ok
    run.exit_code = EXIT_OK if ok else failure_code
    return run


def _add_derivations(run: RunReport, reports: Sequence[Report]) -> None:
    for report in reports:
        run.add(report)
        run.verdicts.extend(
            f"N={report.level}: {text} = 1" for text in report.verified()
        )
        run.residuals.extend(report.residuals)
        for assumption in report.assumptions:
            if assumption not in run.assumptions:
                run.assumptions.append(assumption)


# -- verify


def cmd_verify(
    levels: Optional[Sequence[int]] = None,
    script: Optional[Path] = None,
    cusps: bool = False,
    jobs: int = 1,
) -> RunReport:
    """Replay built-in scripts, a user script, or the cusp derivations"""
    if script is not None:
        run = RunReport(command=f"verify --script {script}")
        reports = [run_script(load_script(script))]
        run.level = reports[0].level
    elif cusps:
        if not levels:
            raise InvalidConfig("--cusps needs --level")
        run = RunReport(command=f"verify --cusps --level {levels[0]}", level=levels[0])
        reports = [r for N in levels for r in verify_cusps(N)]
    else:
        levels = list(levels or SUPPORTED_LEVELS)
        run = RunReport(
            command="verify " + " ".join(f"--level {N}" for N in levels),
            level=levels[0] if len(levels) == 1 else None,
        )
        if jobs > 1 and len(levels) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                reports = list(pool.map(verify_level, levels))
        else:
            reports = [verify_level(N) for N in levels]

    _add_derivations(run, reports)
    return _finish(run, all(r.ok for r in reports), EXIT_CERTIFICATE)


# -- certify-generators


def cmd_certify_generators(
    config: BaseConfig,
    levels: Optional[Sequence[int]] = None,
    drop: Optional[str] = None,
    expressions: Optional[Sequence[str]] = None,
) -> RunReport:
    levels = list(levels or SUPPORTED_LEVELS)
    if expressions and len(levels) != 1:
        raise InvalidConfig("--gen needs exactly one --level")
    run = RunReport(
        command="certify-generators "
        + " ".join(f"--level {N}" for N in levels)
        + (f" --drop {drop}" if drop else ""),
        level=levels[0] if len(levels) == 1 else None,
    )
    ok = True
    for N in levels:
        exprs = list(expressions) if expressions else shipped_generators(N)
        if drop is not None:
            exprs = drop_generator(exprs, drop, N)
        cap = config.COSET_CAP_FACTOR * psi_index(N) + config.COSET_CAP_OFFSET
        cert = certify_generators(N, exprs, max_cosets=cap)
        run.add(cert)
        run.indices.append(cert.index)
        run.verdicts.append(f"N={N}: {cert.verdict.value}")
        ok = ok and cert.generates()
    return _finish(run, ok)


# -- numeric


def parse_cusp(text: str, level: int) -> int:
    """'infinity' -> N, '0' -> 1, '1/r' -> r"""
    text = text.strip().lower()
    if text in ("infinity", "inf", "oo"):
        return level
    if text == "0":
        return 1
    num, sep, den = text.partition("/")
    if sep and num.strip() == "1" and den.strip().isdigit():
        return int(den)
    raise InvalidCuspData(f"cusp {text!r} is not of the form 1/r", cusp=text)


def cmd_numeric_invariance(
    config: BaseConfig,
    form: str,
    level: int,
    matrices: Optional[Sequence[str]] = None,
    terms: Optional[int] = None,
    tol: Optional[float] = None,
) -> RunReport:
    K = terms or config.NUMERIC_TERMS
    tol = tol or config.NUMERIC_TOL
    f = load_form(form, K, level)
    run = RunReport(command=f"numeric invariance --form {form} --level {level}", level=level)
    ok = True
    for expr in matrices or shipped_generators(level):
        report = check_invariance(f, eval_matrix_expr(expr, level), tol=tol)
        run.add(report)
        run.residuals.append(f"{report.max_residual:.3e}")
        run.verdicts.append(f"{expr}: {'pass' if report.passed else 'fail'}")
        ok = ok and report.passed
    return _finish(run, ok)


def cmd_numeric_hecke(
    config: BaseConfig,
    form: str,
    level: int,
    primes: Optional[Sequence[int]] = None,
    terms: Optional[int] = None,
    tol: Optional[float] = None,
) -> RunReport:
    K = terms or config.NUMERIC_TERMS
    tol = tol or config.NUMERIC_TOL
    f = load_form(form, K, level)
    primes = list(primes or [p for p in (2, 3, 5) if level % p][:2])
    run = RunReport(command=f"numeric hecke --form {form} --level {level}", level=level)
    ok = True
    for p in primes:
        report = hecke_eigen_check(f, p, tol)
        run.add(report)
        run.residuals.append(f"{report.residual:.3e}")
        run.verdicts.append(f"T_{p}: {report.estimate_real:.12g}")
        ok = ok and report.passed
    return _finish(run, ok)


def cmd_numeric_cusp(
    config: BaseConfig,
    form: str,
    level: int,
    cusps: Optional[Sequence[str]] = None,
    terms: Optional[int] = None,
    tol: Optional[float] = None,
) -> RunReport:
    K = terms or config.NUMERIC_TERMS
    tol = tol or config.NUMERIC_TOL
    f = load_form(form, K, level)
    if cusps:
        radii = [parse_cusp(c, level) for c in cusps]
    else:
        radii = [int(r) for r in divisors(level)]
    run = RunReport(command=f"numeric cusp --form {form} --level {level}", level=level)
    ok = True
    for r in radii:
        spec = cusp_spec(level, r)
        report = cusp_constant_term(
            f,
            spec,
            height=config.CUSP_HEIGHT * spec.width,
            samples=config.CUSP_SAMPLES,
            tol=tol,
        )
        run.add(report)
        run.residuals.append(f"{report.modulus:.3e}")
        run.verdicts.append(
            f"{report.cusp}: {'vanishes' if report.vanishes else 'non-vanishing'}"
        )
        ok = ok and report.vanishes
    return _finish(run, ok)


def cmd_numeric_fricke(
    config: BaseConfig,
    form: str,
    level: int,
    terms: Optional[int] = None,
    tol: Optional[float] = None,
) -> RunReport:
    K = terms or config.NUMERIC_TERMS
    tol = tol or config.NUMERIC_TOL
    f = load_form(form, K, level)
    report = fricke_check(f, tol=tol)
    run = RunReport(command=f"numeric fricke --form {form} --level {level}", level=level)
    run.add(report)
    run.residuals.append(f"{report.residual:.3e}")
    run.verdicts.append(f"sign {report.sign:+d}")
    return _finish(run, report.passed)


def cmd_numeric_expand(
    config: BaseConfig,
    form: str,
    level: Optional[int] = None,
    terms: Optional[int] = None,
    out: Optional[Path] = None,
) -> RunReport:
    K = terms or config.NUMERIC_TERMS
    f = load_form(form, K, level)
    if out is not None:
        f.dump(out)
    report = ExpansionReport(
        form=f.label,
        level=f.level,
        weight=f.weight,
        K=f.K,
        head=[str(a) for a in f.coeffs[1:11]],
        output=str(out) if out else None,
    )
    run = RunReport(command=f"numeric expand --form {form}", level=f.level)
    run.add(report)
    run.verdicts.append(f"K={f.K}")
    return _finish(run, True)


def cmd_numeric_classify(matrix: str, level: Optional[int] = None) -> RunReport:
    mat = eval_matrix_expr(matrix, level)
    order = classify_order(mat)
    report = OrderReport(
        matrix=str(mat),
        kind=order.kind.value,
        discriminant=str(order.discriminant),
        order=order.order,
        description=order.describe(),
    )
    run = RunReport(command=f"numeric classify --matrix {matrix}", level=level)
    run.add(report)
    run.verdicts.append(report.description)
    return _finish(run, True)


# -- script


def cmd_script(
    kind: str,
    level: int,
    n: Optional[int] = None,
    m: Optional[int] = None,
    r: Optional[int] = None,
    max_exponent: Optional[int] = None,
) -> RunReport:
    """Generate one of the derivation families and replay it"""
    if kind == "theorem2":
        script = gen_theorem2_script(_need(n, "--n"), level, max_exponent)
    elif kind == "corollary2":
        script = gen_corollary2_script(_need(m, "--m"), level, max_exponent)
    elif kind == "corollary3":
        script = gen_corollary3_script(_need(m, "--m"), level, max_exponent)
    elif kind == "theorem3":
        script = gen_theorem3_script(level, _need(r, "--r"))
    else:
        raise InvalidConfig(f"unknown script family {kind!r}", kind=kind)
    report = run_script(script)
    run = RunReport(command=f"script {kind} --level {level}", level=level)
    _add_derivations(run, [report])
    run.verdicts.append(f"{script.name}: established {report.result}")
    return _finish(run, report.ok, EXIT_CERTIFICATE)


def script_text(level: int) -> str:
    return builtin_script_path(level).read_text(encoding="utf-8")


def _need(value: Optional[int], flag: str) -> int:
    if value is None:
        raise InvalidConfig(f"{flag} is required for this script family")
    return value
