"""
converse/congruence_subgroup/word.py

Words over S, T, T^-1 in the projective modular group and the
nearest-integer Euclidean decomposition of a unimodular class.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, List, Tuple

from converse.exact_linalg import IDENTITY, ProjMat, canonicalize, mul
from converse.exceptions import NotUnimodular

logger = logging.getLogger(__name__)

S, T, T_INV = "S", "T", "t"

LETTER_MATRICES = {
    S: canonicalize(0, -1, 1, 0),
    T: canonicalize(1, 1, 0, 1),
    T_INV: canonicalize(1, -1, 0, 1),
}

INVERSES = {S: S, T: T_INV, T_INV: T}


def free_reduce(letters: Iterable[str]) -> Tuple[str, ...]:
    """Cancel T t, t T and S S (S has order 2 in PSL2(Z))"""
    stack: List[str] = []
    for x in letters:
        if x not in LETTER_MATRICES:
            raise ValueError(f"unknown letter {x!r}")
        if stack and stack[-1] == INVERSES[x]:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class ModularWord:
    letters: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "ModularWord") -> "ModularWord":
        return ModularWord(self.letters + other.letters)

    def inverse(self) -> "ModularWord":
        return ModularWord(tuple(INVERSES[x] for x in reversed(self.letters)))

    def evaluate(self) -> ProjMat:
        value = IDENTITY
        for x in self.letters:
            value = mul(value, LETTER_MATRICES[x])
        return value

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join("T^-1" if x == T_INV else x for x in self.letters)


def _t_power(k: int) -> List[str]:
    return [T] * k if k >= 0 else [T_INV] * (-k)


def word_decompose(x: ProjMat) -> ModularWord:
    """x = T^k1 S T^k2 S ... T^kn, using nearest-integer quotients"""
    if x.det != 1:
        raise NotUnimodular(f"{x} does not have determinant 1", matrix=x)
    a, b, c, d = x.entries
    letters: List[str] = []
    while c != 0:
        # |a - k c| <= |c|/2, so |c| strictly decreases
        k = floor(Fraction(a, c) + Fraction(1, 2))
        letters += _t_power(k)
        letters.append(S)
        a, b, c, d = c, d, -(a - k * c), -(b - k * d)
    # now [[a,b],[0,d]] with a = d = +-1
    letters += _t_power(b * a)
    word = ModularWord(tuple(letters))
    logger.debug("decomposed %s into %d letters", x, len(word))
    return word
