"""
converse/hecke_ring/relations.py

Relations (elements of the annihilating right ideal) and the append-only
store that holds a derivation session.
"""

import logging
import uuid
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from sympy import isprime

from converse.exact_linalg import (
    IDENTITY,
    P,
    ProjMat,
    diagonal,
    fricke,
    in_gamma0,
    lower_translation,
)
from converse.exceptions import (
    DuplicateRelationId,
    InconsistentLevel,
    MemberNotInGamma0,
    NotPrime,
    UnknownRelationId,
)
from converse.hecke_ring.element import RingElem
from converse.hecke_ring.operators import atkin_U, hecke_T_power
from converse.logging import SessionLogger
from converse.symscalar import EPS, SymbolTable, SymScalar

logger = logging.getLogger(__name__)

EVEN_WEIGHT = "weight k even (scalar matrices act trivially)"
HOLOMORPHIC_NONCONSTANT = (
    "f holomorphic and nonconstant (elliptic fixed-point rule applied)"
)


class Provenance(str, Enum):
    HYPOTHESIS = "hypothesis"
    EXACT = "exact"
    COMBINE = "combine"
    WEIL_RULE = "weil_rule"
    MACRO = "macro"


# one certificate term: (relation id, right multiplier)
CertTerm = Tuple[str, RingElem]


@dataclass(frozen=True)
class Relation:
    id: str
    element: RingElem
    provenance: Provenance
    assumptions: FrozenSet[str] = frozenset()
    certificate: Tuple[CertTerm, ...] = ()
    note: str = ""

    def unit_form(self):
        return self.element.unit_form()


@dataclass(frozen=True)
class Hypothesis:
    """One functional-equation or eigenform hypothesis.

    kind is one of P, H, W, T, U, G.
    """

    kind: str
    prime: Optional[int] = None
    exponent: int = 1
    mode: Optional[str] = None  # "id" | "zero" for U
    matrix: Optional[ProjMat] = None
    id: Optional[str] = None

    def default_id(self) -> str:
        if self.id:
            return self.id
        if self.kind == "T":
            if self.exponent != 1:
                return f"T{self.prime}_{self.exponent}"
            return f"T{self.prime}"
        if self.kind == "U":
            return f"U{self.prime}"
        return self.kind

    def describe(self) -> str:
        if self.kind == "P":
            return "f|P = f"
        if self.kind == "H":
            return "f|H_N = eps f"
        if self.kind == "W":
            return "f|W_N = f"
        if self.kind == "T":
            if self.exponent != 1:
                return f"f|T_{self.prime}^{self.exponent} = alpha f"
            return f"f|T_{self.prime} = alpha_{self.prime} f"
        if self.kind == "U":
            if self.mode == "zero":
                return f"f|U_{self.prime} = 0"
            return f"f|U_{self.prime} = f|[{self.prime},0;0,1]"
        return f"f|{self.matrix} = f"


def hypothesis_element(N: int, hyp: Hypothesis, table: SymbolTable) -> RingElem:
    """The ideal element a hypothesis asserts, checked against the level"""
    one = RingElem.from_matrix(IDENTITY)
    if hyp.kind == "P":
        return one - RingElem.from_matrix(P)
    if hyp.kind == "H":
        return RingElem.from_matrix(fricke(N)) - RingElem.from_scalar(EPS)
    if hyp.kind == "W":
        return one - RingElem.from_matrix(lower_translation(N))
    if hyp.kind == "T":
        p = hyp.prime
        if not isprime(p):
            raise NotPrime(f"{p} is not prime", value=p)
        if N % p == 0:
            raise InconsistentLevel(
                f"T_{p} eigen-hypothesis needs p not dividing N", N=N, p=p
            )
        symbol = table.declare_eigenvalue(p, hyp.exponent)
        return hecke_T_power(p, hyp.exponent) - RingElem.from_scalar(
            SymScalar.symbol(symbol)
        )
    if hyp.kind == "U":
        q = hyp.prime
        if not isprime(q):
            raise NotPrime(f"{q} is not prime", value=q)
        if hyp.mode == "zero":
            if N % (q * q) != 0:
                raise InconsistentLevel(
                    f"U_{q} = 0 needs {q}^2 | N", N=N, q=q
                )
            return atkin_U(q)
        if N % q != 0 or N % (q * q) == 0:
            raise InconsistentLevel(
                f"U_{q} = [q,0;0,1] needs {q} || N", N=N, q=q
            )
        return atkin_U(q) - RingElem.from_matrix(diagonal(q))
    if hyp.kind == "G":
        if hyp.matrix is None or not in_gamma0(hyp.matrix, N):
            raise MemberNotInGamma0(
                "invariance hypothesis outside Gamma0(N)",
                matrix=hyp.matrix,
                N=N,
            )
        return one - RingElem.from_matrix(hyp.matrix)
    raise InconsistentLevel(f"unknown hypothesis kind {hyp.kind!r}")


@dataclass
class RelationStore:
    """Proof state of one session: append-only, single writer"""

    level: int
    table: SymbolTable = field(default_factory=SymbolTable)
    relations: Dict[str, Relation] = field(default_factory=dict)
    hypotheses: List[Hypothesis] = field(default_factory=list)
    assumptions: List[str] = field(default_factory=lambda: [EVEN_WEIGHT])
    session_id: str = field(default_factory=lambda: uuid.uuid4().hex[:12])

    def __post_init__(self):
        self.log = SessionLogger(logger, self.session_id, self.level)

    def __contains__(self, rel_id: str) -> bool:
        return rel_id in self.relations

    def __len__(self) -> int:
        return len(self.relations)

    def get(self, rel_id: str) -> Relation:
        try:
            return self.relations[rel_id]
        except KeyError:
            raise UnknownRelationId(
                f"relation {rel_id!r} is not in the store", id=rel_id
            )

    def add(self, relation: Relation) -> Relation:
        if relation.id in self.relations:
            raise DuplicateRelationId(
                f"relation id {relation.id!r} already used", id=relation.id
            )
        self.relations[relation.id] = relation
        for assumption in relation.assumptions:
            if assumption not in self.assumptions:
                self.assumptions.append(assumption)
        self.log.debug(
            "relation stored",
            id=relation.id,
            provenance=relation.provenance.value,
            terms=len(relation.element),
        )
        return relation

    def add_hypothesis(self, hyp: Hypothesis) -> Relation:
        element = hypothesis_element(self.level, hyp, self.table)
        self.hypotheses.append(hyp)
        return self.add(
            Relation(
                id=hyp.default_id(),
                element=element,
                provenance=Provenance.HYPOTHESIS,
                note=hyp.describe(),
            )
        )

    def fresh_id(self, stem: str = "s") -> str:
        k = len(self.relations) + 1
        while f"{stem}{k}" in self.relations:
            k += 1
        return f"{stem}{k}"

    def proves_trivial(self, g: ProjMat) -> Optional[str]:
        """Id of a stored relation of the form a*(g - 1) or a*(g^-1 - 1)"""
        if g == IDENTITY:
            return "identity"
        targets = {g, g.inverse()}
        for rel in self.relations.values():
            form = rel.unit_form()
            if form and form[0] in targets and form[2] == 1:
                return rel.id
        return None


def new_session(N: int, hypotheses: List[Hypothesis]) -> RelationStore:
    store = RelationStore(level=N)
    for hyp in hypotheses:
        store.add_hypothesis(hyp)
    store.log.info("session opened", hypotheses=[h.default_id() for h in hypotheses])
    return store
