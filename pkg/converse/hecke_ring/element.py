"""
converse/hecke_ring/element.py

Group-ring elements: finite formal sums of projective matrices with
symbolic coefficients.
"""

from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple, Union

from converse.exact_linalg import IDENTITY, ProjMat, canonicalize, mul, translation
from converse.symscalar import ONE, SymScalar

Coefficient = Union[SymScalar, int, Fraction]


class RingElem:
    """Immutable map ProjMat -> nonzero SymScalar"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[ProjMat, Coefficient]] = None):
        clean: Dict[ProjMat, SymScalar] = {}
        for mat, coeff in (terms or {}).items():
            coeff = SymScalar.coerce(coeff)
            if not coeff.is_zero():
                clean[mat] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> "RingElem":
        return cls()

    @classmethod
    def from_matrix(cls, mat: ProjMat, coeff: Coefficient = 1) -> "RingElem":
        return cls({mat: coeff})

    @classmethod
    def from_scalar(cls, coeff: Coefficient) -> "RingElem":
        return cls({IDENTITY: coeff})

    @classmethod
    def coerce(cls, value) -> "RingElem":
        if isinstance(value, RingElem):
            return value
        if isinstance(value, ProjMat):
            return cls.from_matrix(value)
        if isinstance(value, (SymScalar, int, Fraction)):
            return cls.from_scalar(value)
        raise TypeError(f"cannot use {type(value).__name__} as a ring element")

    # -- inspection

    def terms(self) -> Iterator[Tuple[ProjMat, SymScalar]]:
        return iter(sorted(self._terms.items(), key=lambda item: item[0]))

    def coefficient(self, mat: ProjMat) -> SymScalar:
        return self._terms.get(mat, SymScalar())

    def support(self) -> Tuple[ProjMat, ...]:
        return tuple(sorted(self._terms))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def scalar_part(self) -> SymScalar:
        return self.coefficient(IDENTITY)

    def unit_form(self) -> Optional[Tuple[ProjMat, SymScalar, SymScalar]]:
        """(g, a, sigma) when self = a*g + b*1 with a a unit; then g = sigma"""
        others = [m for m in self._terms if m != IDENTITY]
        if len(others) != 1:
            return None
        g = others[0]
        a = self._terms[g]
        try:
            a_inv = a.inverse()
        except ZeroDivisionError:
            return None
        sigma = -self.scalar_part() * a_inv
        return g, a, sigma

    # -- arithmetic

    def __add__(self, other) -> "RingElem":
        try:
            other = RingElem.coerce(other)
        except TypeError:
            return NotImplemented
        terms: Dict[ProjMat, SymScalar] = dict(self._terms)
        for mat, coeff in other._terms.items():
            terms[mat] = terms[mat] + coeff if mat in terms else coeff
        return RingElem(terms)

    __radd__ = __add__

    def __neg__(self) -> "RingElem":
        return RingElem({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "RingElem":
        try:
            other = RingElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RingElem":
        return RingElem.coerce(other) - self

    def __mul__(self, other) -> "RingElem":
        if isinstance(other, (SymScalar, int, Fraction)):
            scalar = SymScalar.coerce(other)
            return RingElem({m: c * scalar for m, c in self._terms.items()})
        try:
            other = RingElem.coerce(other)
        except TypeError:
            return NotImplemented
        terms: Dict[ProjMat, SymScalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mat = mul(m1, m2)
                coeff = c1 * c2
                terms[mat] = terms[mat] + coeff if mat in terms else coeff
        return RingElem(terms)

    def __rmul__(self, other) -> "RingElem":
        if isinstance(other, (SymScalar, int, Fraction)):
            return self * other
        return RingElem.coerce(other) * self

    def __pow__(self, k: int) -> "RingElem":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomial elements can be inverted")
            (mat, coeff), = self._terms.items()
            return RingElem({mat.inverse(): coeff.inverse()}) ** (-k)
        result, base = RingElem.from_scalar(ONE), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        try:
            other = RingElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mat, coeff in self.terms():
            text = str(coeff)
            if " " in text:
                text = f"({text})"
            parts.append(f"{text}*{mat}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"RingElem({self})"


def ring_add(x: RingElem, y: RingElem) -> RingElem:
    return x + y


def ring_neg(x: RingElem) -> RingElem:
    return -x


def ring_mul(x: RingElem, y: RingElem) -> RingElem:
    return x * y


def mat(a, b, c, d, coeff: Coefficient = 1) -> RingElem:
    return RingElem.from_matrix(canonicalize(a, b, c, d), coeff)


# -- left translation orbits


def _orbit_split(m: ProjMat) -> Tuple[ProjMat, int]:
    """(rep, j) with m = P^j * rep and rep the chosen left <P>-orbit representative"""
    a, b, c, d = m.entries
    if c != 0:
        if c < 0:
            a, b, c, d = -a, -b, -c, -d
        j = a // c
        rep = canonicalize(a - j * c, b - j * d, c, d)
    else:
        # canonical form already has d > 0 here
        j = b // d
        rep = canonicalize(a, b - j * d, c, d)
    return rep, j


def p_reduce(x: RingElem) -> RingElem:
    """Collapse every term onto its left <P>-orbit representative"""
    terms: Dict[ProjMat, SymScalar] = {}
    for m, coeff in x._terms.items():
        rep, _ = _orbit_split(m)
        terms[rep] = terms[rep] + coeff if rep in terms else coeff
    return RingElem(terms)


def translation_power_sum(j: int) -> RingElem:
    """u with P^j - 1 = (1 - P) * u"""
    if j > 0:
        return -sum((RingElem.from_matrix(translation(i)) for i in range(j)), RingElem())
    return sum((RingElem.from_matrix(translation(-i)) for i in range(1, -j + 1)), RingElem())


def p_multiplier(x: RingElem) -> Optional[RingElem]:
    """u with x = (1 - P) * u, or None when p_reduce(x) is nonzero"""
    if not p_reduce(x).is_zero():
        return None
    u = RingElem()
    for m, coeff in x._terms.items():
        rep, j = _orbit_split(m)
        if j:
            u = u + translation_power_sum(j) * RingElem.from_matrix(rep) * coeff
    return u
