"""
converse/hecke_ring/engine.py

Replays derivation scripts against a fresh relation store and reports
which generator assertions were established.
"""

import logging
from math import gcd
from pathlib import Path
from typing import List, Optional

from sympy import divisors

from converse.config import settings
from converse.exceptions import CertificateMismatch, ConverseError, UnsupportedLevel
from converse.hecke_ring.dsl import load_script
from converse.hecke_ring.generators import gen_theorem3_script
from converse.hecke_ring.relations import RelationStore, new_session
from converse.hecke_ring.schemas import AssertionReport, Report, StepReport
from converse.hecke_ring.script import DerivationScript

logger = logging.getLogger(__name__)

# levels of the extended converse theorem, one built-in script each
SUPPORTED_LEVELS = (5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 17, 23)


def builtin_script_path(N: int, scripts_dir: Optional[Path] = None) -> Path:
    return Path(scripts_dir or settings.SCRIPTS_DIR) / f"level_{N:02d}.ccv"


def load_builtin(N: int, scripts_dir: Optional[Path] = None) -> DerivationScript:
    if N not in SUPPORTED_LEVELS:
        raise UnsupportedLevel(
            f"unsupported level {N}", N=N, supported=list(SUPPORTED_LEVELS)
        )
    return load_script(builtin_script_path(N, scripts_dir))


def replay(script: DerivationScript) -> tuple:
    """Apply every step; returns (store, step reports). Fails fast."""
    store = new_session(script.level, script.hypotheses)
    store.log = store.log.bind(script=script.name)
    reports: List[StepReport] = []
    for index, step in enumerate(script.steps, start=1):
        try:
            outcomes = step.apply(store)
        except ConverseError as exc:
            exc.context.setdefault("step", index)
            if step.line is not None:
                exc.context.setdefault("line", step.line)
            if isinstance(exc, CertificateMismatch) and exc.step_index is None:
                exc.step_index = index
            store.log.error(
                "step failed", step=index, kind=step.kind, error=exc.detail
            )
            raise
        for outcome in outcomes:
            reports.append(
                StepReport(
                    index=index,
                    kind=outcome.kind,
                    id=outcome.id,
                    provenance=outcome.provenance,
                    element=outcome.element,
                    residual=outcome.residual,
                    terms=outcome.terms,
                    line=outcome.line,
                )
            )
            store.log.debug(
                "step verified", step=index, kind=outcome.kind, id=outcome.id
            )
    return store, reports


def run_script(script: DerivationScript) -> Report:
    store, steps = replay(script)
    assertions = []
    for assertion in script.assertions:
        rel_id = store.proves_trivial(assertion.matrix)
        assertions.append(
            AssertionReport(
                matrix=str(assertion.matrix),
                text=assertion.text,
                verified=rel_id is not None,
                relation=rel_id,
                line=assertion.line,
            )
        )
    ok = all(a.verified for a in assertions)
    report = _report(script, store, steps, assertions, ok)
    store.log.info(
        "script replayed",
        name=script.name,
        steps=len(script.steps),
        verified=len(report.verified()),
        ok=ok,
    )
    return report


def _report(
    script: DerivationScript,
    store: RelationStore,
    steps: List[StepReport],
    assertions: List[AssertionReport],
    ok: bool,
) -> Report:
    return Report(
        level=script.level,
        name=script.name,
        session_id=store.session_id,
        hypotheses=[h.describe() for h in store.hypotheses],
        steps=steps,
        step_count=len(script.steps),
        assertions=assertions,
        assumptions=list(store.assumptions),
        residuals=[s.residual for s in steps],
        result=script.result,
        ok=ok,
    )


def verify_level(N: int, scripts_dir: Optional[Path] = None) -> Report:
    return run_script(load_builtin(N, scripts_dir))


def cusp_radii(N: int) -> List[int]:
    """r | N with gcd(r, N/r) = 1"""
    return [int(r) for r in divisors(N) if gcd(int(r), N // int(r)) == 1]


def verify_cusps(N: int) -> List[Report]:
    """Vanishing relations at every cusp 1/r with gcd(r, N/r) = 1"""
    reports = []
    for r in cusp_radii(N):
        script = gen_theorem3_script(N, r)
        reports.append(run_script(script))
    return reports
