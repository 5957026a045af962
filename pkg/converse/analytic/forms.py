"""
converse/analytic/forms.py

Form specifiers accepted on the command line:

    eta:1^2,11^2     eta quotient, exponents d^r_d
    delta            eta:1^24
    euler:<file>     LocalFactorSpec JSON expanded by Euler products
    series:<file>    coefficient file written by `numeric expand --out`
    eis-chi3         weight-2 Eisenstein series on Gamma0(9)
"""

import json
import re
from pathlib import Path
from typing import Dict, Optional

from pydantic import ValidationError

from converse.analytic.schemas import LocalFactorSpec
from converse.analytic.series import (
    FourierSeries,
    eisenstein_chi3,
    eta_quotient,
    euler_expand,
)
from converse.exceptions import InvalidFormSpec

ETA_TERM = re.compile(r"^\s*(\d+)\s*\^\s*(-?\d+)\s*$")

ALIASES = {"delta": "eta:1^24", "f11": "eta:1^2,11^2"}


def parse_eta_exponents(body: str) -> Dict[int, int]:
    exponents: Dict[int, int] = {}
    for term in body.split(","):
        match = ETA_TERM.match(term)
        if not match:
            raise InvalidFormSpec(f"bad eta term {term!r}", term=term)
        d, r = int(match.group(1)), int(match.group(2))
        exponents[d] = exponents.get(d, 0) + r
    return exponents


def load_form(spec: str, K: int, level: Optional[int] = None) -> FourierSeries:
    spec = ALIASES.get(spec.strip(), spec.strip())
    kind, _, body = spec.partition(":")
    if kind == "eta" and body:
        return eta_quotient(parse_eta_exponents(body), K, level)
    if kind == "eis-chi3" and not body:
        form = eisenstein_chi3(K)
        if level is not None and level != form.level:
            raise InvalidFormSpec("eis-chi3 lives on level 9", level=level)
        return form
    if kind == "euler" and body:
        try:
            local = LocalFactorSpec.model_validate(
                json.loads(Path(body).read_text(encoding="utf-8"))
            )
        except (OSError, ValueError, ValidationError) as exc:
            raise InvalidFormSpec(f"cannot read {body}: {exc}", path=body) from exc
        return euler_expand(local, K)
    if kind == "series" and body:
        try:
            form = FourierSeries.load(body)
        except (OSError, ValidationError) as exc:
            raise InvalidFormSpec(f"cannot read {body}: {exc}", path=body) from exc
        return form.truncate(K) if K < form.K else form
    raise InvalidFormSpec(f"unknown form specifier {spec!r}", spec=spec)
