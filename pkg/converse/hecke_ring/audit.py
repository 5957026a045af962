"""
converse/hecke_ring/audit.py

Expand a derived relation down to hypotheses, exact identities and
elliptic-rule relations, and recheck the expanded certificate.
"""

import logging
from typing import Dict

from converse.hecke_ring.element import RingElem
from converse.hecke_ring.relations import RelationStore
from converse.hecke_ring.schemas import FlattenedTerm, FlattenReport

logger = logging.getLogger(__name__)


def _expand(store: RelationStore, rel_id: str, memo: Dict[str, Dict[str, RingElem]]):
    if rel_id in memo:
        return memo[rel_id]
    rel = store.get(rel_id)
    if not rel.certificate:
        leaves = {rel_id: RingElem.from_scalar(1)}
    else:
        leaves: Dict[str, RingElem] = {}
        for source, mult in rel.certificate:
            for leaf, inner in _expand(store, source, memo).items():
                leaves[leaf] = leaves.get(leaf, RingElem()) + inner * mult
    memo[rel_id] = leaves
    return leaves


def flatten(store: RelationStore, rel_id: str) -> FlattenReport:
    """rel = sum(leaf * multiplier) over certificate-free relations"""
    leaves = {
        leaf: mult
        for leaf, mult in _expand(store, rel_id, {}).items()
        if not mult.is_zero()
    }
    total = RingElem()
    for leaf, mult in leaves.items():
        total = total + store.get(leaf).element * mult
    residual = store.get(rel_id).element - total
    store.log.debug("relation flattened", id=rel_id, leaves=len(leaves))
    return FlattenReport(
        relation=rel_id,
        leaves=[
            FlattenedTerm(relation=leaf, multiplier=str(mult))
            for leaf, mult in sorted(leaves.items())
        ],
        residual=str(residual),
        ok=residual.is_zero(),
    )
