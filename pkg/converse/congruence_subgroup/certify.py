"""
converse/congruence_subgroup/certify.py

Certify that a list of matrix expressions generates Gamma0(N): every
member lies in Gamma0(N) and the subgroup they generate has index psi(N)
in the modular group.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from converse.config import settings
from converse.congruence_subgroup.psi import psi_index
from converse.congruence_subgroup.schemas import (
    GenerationCertificate,
    MemberReport,
    Verdict,
)
from converse.congruence_subgroup.todd_coxeter import todd_coxeter
from converse.congruence_subgroup.word import word_decompose
from converse.exact_linalg import eval_matrix_expr, in_gamma0
from converse.exceptions import (
    CosetLimitExceeded,
    InvalidConfig,
    MemberNotInGamma0,
    UnsupportedLevel,
)

logger = logging.getLogger(__name__)

LINE_RE = re.compile(r"^\s*(\d+)\s*:\s*(.+?)\s*$")


def coset_cap(N: int) -> int:
    return settings.COSET_CAP_FACTOR * psi_index(N) + settings.COSET_CAP_OFFSET


def certify_generators(
    N: int, exprs: Sequence[str], max_cosets: Optional[int] = None
) -> GenerationCertificate:
    psi = psi_index(N)
    cap = max_cosets or coset_cap(N)

    members: List[MemberReport] = []
    words = []
    for expr in exprs:
        mat = eval_matrix_expr(expr, N)
        if mat.det != 1 or not in_gamma0(mat, N):
            raise MemberNotInGamma0(
                f"{expr} = {mat} is not in Gamma0({N})",
                expression=expr,
                matrix=mat,
                N=N,
            )
        word = word_decompose(mat)
        words.append(word)
        members.append(
            MemberReport(
                expression=expr,
                matrix=str(mat),
                in_gamma0=True,
                word=str(word),
                word_length=len(word),
            )
        )

    try:
        table = todd_coxeter(words, cap)
    except CosetLimitExceeded as exc:
        logger.info("N=%s: enumeration stopped at the cap (%s)", N, exc.detail)
        return GenerationCertificate(
            level=N,
            expressions=list(exprs),
            members=members,
            psi=psi,
            limit=cap,
            verdict=Verdict.NOT_GENERATING,
        )

    verdict = Verdict.GENERATES if table.index == psi else Verdict.NOT_GENERATING
    logger.info("N=%s: index %s, psi %s, %s", N, table.index, psi, verdict.value)
    return GenerationCertificate(
        level=N,
        expressions=list(exprs),
        members=members,
        index=table.index,
        psi=psi,
        cosets_defined=table.defined,
        limit=cap,
        verdict=verdict,
    )


def load_generator_table(path: Optional[Path] = None) -> Dict[int, List[str]]:
    """Parse the versioned `N: expr | expr` generator file"""
    path = Path(path or settings.GENERATORS_FILE)
    table: Dict[int, List[str]] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("version="):
            continue
        match = LINE_RE.match(line)
        if not match:
            raise InvalidConfig(
                f"malformed generator line {lineno}", path=str(path), line=lineno
            )
        table[int(match.group(1))] = [
            expr.strip() for expr in match.group(2).split("|") if expr.strip()
        ]
    return table


def short_name(expr: str) -> str:
    """M(3) and M3 name the same generator; M(13,6) is M13_6"""
    return re.sub(r"[\s()]", "", expr).replace(",", "_")


def shipped_generators(N: int, path: Optional[Path] = None) -> List[str]:
    table = load_generator_table(path)
    if N not in table:
        raise UnsupportedLevel(
            f"no generator list for level {N}", N=N, supported=sorted(table)
        )
    return table[N]


def drop_generator(exprs: Sequence[str], drop: str, N: int) -> List[str]:
    kept = [e for e in exprs if short_name(e) != short_name(drop)]
    if len(kept) == len(exprs):
        raise InvalidConfig(
            f"{drop!r} is not in the level {N} list", N=N, generators=list(exprs)
        )
    return kept


def certify_level(
    N: int,
    drop: Optional[str] = None,
    path: Optional[Path] = None,
    max_cosets: Optional[int] = None,
) -> GenerationCertificate:
    """Certify the shipped list for N, optionally without one generator"""
    exprs = shipped_generators(N, path)
    if drop is not None:
        exprs = drop_generator(exprs, drop, N)
    return certify_generators(N, exprs, max_cosets)
