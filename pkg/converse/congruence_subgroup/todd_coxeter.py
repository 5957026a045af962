"""
converse/congruence_subgroup/todd_coxeter.py

HLT coset enumeration with look-ahead over the projective modular group
<S, T | S^2, (S T)^3>. Cosets are right cosets H g; coset 0 is H.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from converse.congruence_subgroup.word import S, T, T_INV, ModularWord
from converse.exceptions import CosetLimitExceeded

logger = logging.getLogger(__name__)

S_INV = "s"

# columns come in inverse pairs: (S, S^-1), (T, T^-1)
COLUMNS: Dict[str, int] = {S: 0, S_INV: 1, T: 2, T_INV: 3}
INVERSE_COLUMN = {0: 1, 1: 0, 2: 3, 3: 2}

RELATORS = (
    (S, S),
    (S, T, S, T, S, T),
)


class _SpaceExhausted(Exception):
    pass


@dataclass
class CosetTable:
    """Coset table: rows are cosets, columns S, S^-1, T, T^-1"""

    max_cosets: int
    table: List[List[Optional[int]]] = field(default_factory=lambda: [[None] * 4])
    p: List[int] = field(default_factory=lambda: [0])
    n_live: int = 1

    @property
    def live(self) -> List[int]:
        return [alpha for alpha in range(len(self.p)) if self.p[alpha] == alpha]

    @property
    def index(self) -> int:
        return len(self.live)

    @property
    def defined(self) -> int:
        return len(self.table)

    def is_complete(self) -> bool:
        return not any(None in self.table[alpha] for alpha in self.live)

    # -- definitions and coincidences

    def define(self, alpha: int, col: int) -> None:
        if self.n_live >= self.max_cosets:
            raise _SpaceExhausted()
        beta = len(self.table)
        self.table.append([None] * 4)
        self.p.append(beta)
        self.n_live += 1
        self.table[alpha][col] = beta
        self.table[beta][INVERSE_COLUMN[col]] = alpha

    def rep(self, k: int) -> int:
        root = k
        while self.p[root] != root:
            root = self.p[root]
        while self.p[k] != root:
            self.p[k], k = root, self.p[k]
        return root

    def merge(self, k: int, lam: int, queue: List[int]) -> None:
        phi, psi = self.rep(k), self.rep(lam)
        if phi != psi:
            mu, v = min(phi, psi), max(phi, psi)
            self.p[v] = mu
            self.n_live -= 1
            queue.append(v)

    def coincidence(self, alpha: int, beta: int) -> None:
        queue: List[int] = []
        self.merge(alpha, beta, queue)
        while queue:
            gamma = queue.pop(0)
            for col in range(4):
                delta = self.table[gamma][col]
                if delta is None:
                    continue
                inv_col = INVERSE_COLUMN[col]
                self.table[delta][inv_col] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if self.table[mu][col] is not None:
                    self.merge(nu, self.table[mu][col], queue)
                elif self.table[nu][inv_col] is not None:
                    self.merge(mu, self.table[nu][inv_col], queue)
                else:
                    self.table[mu][col] = nu
                    self.table[nu][inv_col] = mu

    # -- scanning

    def scan(self, alpha: int, word: Sequence[int], fill: bool = False) -> None:
        """Scan word (column indices) from alpha, deducing or defining as needed"""
        table = self.table
        f, b = alpha, alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][INVERSE_COLUMN[word[j]]] is not None:
                b = table[b][INVERSE_COLUMN[word[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][INVERSE_COLUMN[word[i]]] = f
                return
            if not fill:
                return
            self.define(f, word[i])

    def look_ahead(self, relators) -> None:
        """Scan every relator at every live coset without new definitions"""
        for beta in self.live:
            for rel in relators:
                if self.p[beta] != beta:
                    break
                self.scan(beta, rel)


def _columns(word: ModularWord) -> List[int]:
    return [COLUMNS[x] for x in word.letters]


def todd_coxeter(
    subgroup_words: Sequence[ModularWord], max_cosets: int
) -> CosetTable:
    """Enumerate H\\G for H generated by the words; raises when max_cosets is hit"""
    C = CosetTable(max_cosets=max_cosets)
    relators = [[COLUMNS[x] for x in rel] for rel in RELATORS]
    try:
        for word in subgroup_words:
            if len(word):
                C.scan(0, _columns(word), fill=True)
        alpha = 0
        while alpha < len(C.table):
            if C.p[alpha] == alpha:
                try:
                    for rel in relators:
                        C.scan(alpha, rel, fill=True)
                        if C.p[alpha] < alpha:
                            break
                    if C.p[alpha] == alpha:
                        for col in range(4):
                            if C.table[alpha][col] is None:
                                C.define(alpha, col)
                except _SpaceExhausted:
                    before = C.n_live
                    C.look_ahead(relators)
                    logger.debug(
                        "look-ahead recovered %d of %d cosets",
                        before - C.n_live,
                        C.defined,
                    )
                    if C.n_live >= before:
                        raise
                    continue
            alpha += 1
    except _SpaceExhausted:
        raise CosetLimitExceeded(
            f"coset enumeration exceeded {max_cosets} cosets",
            max_cosets=max_cosets,
            live=C.index,
        )
    if not C.is_complete():
        raise CosetLimitExceeded("coset table is incomplete", live=C.index)
    logger.debug("enumerated %d cosets (%d defined)", C.index, C.defined)
    return C
