"""
converse/hecke_ring/steps.py

Proof steps and their certificate checks. Every step either verifies an
exact identity or stores a new relation whose membership in the ideal is
witnessed by an explicit certificate sum(relation_i * multiplier_i).
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from converse.exact_linalg import IDENTITY, P, OrderKind, ProjMat, classify_order
from converse.exceptions import CertificateMismatch, SideConditionFailed
from converse.hecke_ring.element import RingElem, p_multiplier, p_reduce
from converse.hecke_ring.relations import (
    HOLOMORPHIC_NONCONSTANT,
    CertTerm,
    Hypothesis,
    Provenance,
    Relation,
    RelationStore,
)
from converse.symscalar import ONE, SymScalar

logger = logging.getLogger(__name__)

# multiplier placeholder: solve for u in (1 - P) * u
AUTO = None

TRANSLATION_RELATION = RingElem.from_matrix(IDENTITY) - RingElem.from_matrix(P)


@dataclass
class StepOutcome:
    kind: str
    id: Optional[str]
    provenance: str
    element: str
    residual: str = "0"
    terms: int = 0
    line: Optional[int] = None


def verify_certificate(
    store: RelationStore,
    target: Optional[RingElem],
    terms: Sequence[Tuple[str, Optional[RingElem]]],
) -> Tuple[RingElem, Tuple[CertTerm, ...]]:
    """Check target == sum(rel * mult); returns (target, resolved terms)"""
    total = RingElem()
    resolved: List[CertTerm] = []
    auto_ids = []
    for rel_id, mult in terms:
        rel = store.get(rel_id)
        if mult is AUTO:
            auto_ids.append(rel_id)
            continue
        total = total + rel.element * mult
        resolved.append((rel_id, mult))

    if auto_ids:
        if target is None:
            raise SideConditionFailed("an auto multiplier needs an explicit target")
        if len(auto_ids) > 1:
            raise SideConditionFailed("at most one auto multiplier per step")
        rel = store.get(auto_ids[0])
        if rel.element != TRANSLATION_RELATION:
            raise SideConditionFailed(
                "auto multipliers apply only to the relation 1 - P",
                id=rel.id,
            )
        u = p_multiplier(target - total)
        if u is None:
            raise CertificateMismatch(
                "residual is not a translation multiple",
                residual=str(p_reduce(target - total)),
            )
        if not u.is_zero():
            total = total + rel.element * u
            resolved.append((rel.id, u))

    if target is None:
        target = total
    residual = target - total
    store.log.debug("certificate residual", residual=str(residual))
    if not residual.is_zero():
        raise CertificateMismatch(
            "certificate does not reproduce the target", residual=str(residual)
        )
    return target, tuple(resolved)


def _require_unit(store: RelationStore, rel_id: str):
    rel = store.get(rel_id)
    form = rel.unit_form()
    if form is None:
        raise SideConditionFailed(
            f"relation {rel_id!r} is not of the form g = scalar", id=rel_id
        )
    return rel, form


class Step:
    kind = "step"
    line: Optional[int] = None

    def apply(self, store: RelationStore) -> List[StepOutcome]:
        raise NotImplementedError

    def _store(
        self,
        store: RelationStore,
        rel_id: Optional[str],
        element: RingElem,
        provenance: Provenance,
        certificate=(),
        assumptions=frozenset(),
        note: str = "",
    ) -> StepOutcome:
        rel = store.add(
            Relation(
                id=rel_id or store.fresh_id(),
                element=element,
                provenance=provenance,
                certificate=tuple(certificate),
                assumptions=frozenset(assumptions),
                note=note,
            )
        )
        return StepOutcome(
            kind=self.kind,
            id=rel.id,
            provenance=provenance.value,
            element=str(element),
            terms=len(certificate),
            line=self.line,
        )


@dataclass
class HypothesisStep(Step):
    hypothesis: Hypothesis
    line: Optional[int] = None
    kind = "hyp"

    def apply(self, store):
        rel = store.add_hypothesis(self.hypothesis)
        return [
            StepOutcome(
                kind=self.kind,
                id=rel.id,
                provenance=rel.provenance.value,
                element=str(rel.element),
                line=self.line,
            )
        ]


@dataclass
class ExactStep(Step):
    lhs: RingElem
    rhs: RingElem
    id: Optional[str] = None
    line: Optional[int] = None
    kind = "exact"

    def apply(self, store):
        residual = self.lhs - self.rhs
        if not residual.is_zero():
            raise CertificateMismatch(
                "exact identity fails", residual=str(residual)
            )
        return [
            self._store(
                store,
                self.id,
                RingElem(),
                Provenance.EXACT,
                note=f"{self.lhs} == {self.rhs}",
            )
        ]


@dataclass
class CombineStep(Step):
    terms: List[Tuple[str, Optional[RingElem]]]
    target: Optional[RingElem] = None
    id: Optional[str] = None
    line: Optional[int] = None
    provenance: Provenance = Provenance.COMBINE
    kind = "combine"

    def apply(self, store):
        target, certificate = verify_certificate(store, self.target, self.terms)
        return [
            self._store(store, self.id, target, self.provenance, certificate)
        ]


@dataclass
class RmulStep(Step):
    source: str
    by: RingElem
    id: Optional[str] = None
    line: Optional[int] = None
    kind = "rmul"

    def apply(self, store):
        element = store.get(self.source).element * self.by
        return [
            self._store(
                store,
                self.id,
                element,
                Provenance.COMBINE,
                [(self.source, self.by)],
            )
        ]


@dataclass
class LmulStep(Step):
    """g * Z from Z and g = sigma: (g - sigma) Z + Z sigma"""

    source: str
    by: str
    id: Optional[str] = None
    line: Optional[int] = None
    kind = "lmul"

    def apply(self, store):
        _, (g, a, sigma) = _require_unit(store, self.by)
        z = store.get(self.source).element
        target = RingElem.from_matrix(g) * z
        terms = [(self.by, z * a.inverse()), (self.source, RingElem.from_scalar(sigma))]
        target, certificate = verify_certificate(store, target, terms)
        return [self._store(store, self.id, target, Provenance.MACRO, certificate)]


@dataclass
class ConjStep(Step):
    """g * Z * g from Z and g = sigma: (g - sigma) Z g + Z sigma g"""

    source: str
    by: str
    id: Optional[str] = None
    line: Optional[int] = None
    kind = "conj"

    def apply(self, store):
        _, (g, a, sigma) = _require_unit(store, self.by)
        z = store.get(self.source).element
        gm = RingElem.from_matrix(g)
        target = gm * z * gm
        terms = [
            (self.by, z * gm * a.inverse()),
            (self.source, gm * sigma),
        ]
        target, certificate = verify_certificate(store, target, terms)
        return [self._store(store, self.id, target, Provenance.MACRO, certificate)]


@dataclass
class WordStep(Step):
    """g_1 ... g_k = sigma_1 ... sigma_k from relations g_i = sigma_i.

    Telescoping: prod g - prod sigma
        = sum_i (g_i - sigma_i) * sigma_1..sigma_{i-1} * g_{i+1}..g_k
    """

    letters: List[Tuple[str, bool]]
    id: Optional[str] = None
    line: Optional[int] = None
    kind = "word"

    def apply(self, store):
        if not self.letters:
            raise SideConditionFailed("empty word")
        mats: List[ProjMat] = []
        sigmas: List[SymScalar] = []
        factors: List[RingElem] = []
        for rel_id, inverse in self.letters:
            _, (g, a, sigma) = _require_unit(store, rel_id)
            a_inv = a.inverse()
            if not inverse:
                mats.append(g)
                sigmas.append(sigma)
                factors.append(RingElem.from_scalar(a_inv))
                continue
            try:
                sigma_inv = sigma.inverse()
            except ZeroDivisionError:
                raise SideConditionFailed(
                    f"relation {rel_id!r} has a non-invertible scalar", id=rel_id
                )
            g_inv = g.inverse()
            mats.append(g_inv)
            sigmas.append(sigma_inv)
            # (g - sigma) * (-sigma^-1 g^-1) = g^-1 - sigma^-1
            factors.append(RingElem.from_matrix(g_inv, -a_inv * sigma_inv))

        terms = []
        prefix = ONE
        for i, (rel_id, _) in enumerate(self.letters):
            suffix = RingElem.from_matrix(IDENTITY)
            for m in mats[i + 1:]:
                suffix = suffix * RingElem.from_matrix(m)
            terms.append((rel_id, factors[i] * prefix * suffix))
            prefix = prefix * sigmas[i]

        word = RingElem.from_matrix(IDENTITY)
        for m in mats:
            word = word * RingElem.from_matrix(m)
        target = word - RingElem.from_scalar(prefix)
        target, certificate = verify_certificate(store, target, terms)
        return [self._store(store, self.id, target, Provenance.MACRO, certificate)]


@dataclass
class WeilStep(Step):
    """From (1 - gamma)(1 - eps) with eps elliptic of infinite order, 1 - gamma"""

    gamma: ProjMat
    eps: ProjMat
    source: str
    id: Optional[str] = None
    line: Optional[int] = None
    kind = "weil"

    def apply(self, store):
        order = classify_order(self.eps)
        if order.kind != OrderKind.ELLIPTIC_INFINITE:
            raise SideConditionFailed(
                f"eps must be elliptic of infinite order ({order.describe()})",
                eps=self.eps,
            )
        if self.gamma.det != 1:
            raise SideConditionFailed(
                "gamma must have determinant 1", gamma=self.gamma
            )
        one = RingElem.from_matrix(IDENTITY)
        rel_gamma = one - RingElem.from_matrix(self.gamma)
        expected = rel_gamma * (one - RingElem.from_matrix(self.eps))
        residual = store.get(self.source).element - expected
        if not residual.is_zero():
            raise CertificateMismatch(
                "stored relation is not (1 - gamma)(1 - eps)",
                residual=str(residual),
            )
        store.log.info(
            "elliptic rule applied", gamma=str(self.gamma), eps=str(self.eps)
        )
        return [
            self._store(
                store,
                self.id,
                rel_gamma,
                Provenance.WEIL_RULE,
                assumptions={HOLOMORPHIC_NONCONSTANT},
                note=f"from {self.source}; {order.describe()}",
            )
        ]


@dataclass
class MacroStep(Step):
    """A generated sub-derivation expanded in place"""

    name: str
    steps: List[Step] = field(default_factory=list)
    line: Optional[int] = None
    kind = "macro"

    def apply(self, store):
        outcomes: List[StepOutcome] = []
        for step in self.steps:
            if step.line is None:
                step.line = self.line
            outcomes.extend(step.apply(store))
        return outcomes


def apply_step(store: RelationStore, step: Step) -> RelationStore:
    step.apply(store)
    return store
