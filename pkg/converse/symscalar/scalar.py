"""
converse/symscalar/scalar.py

Commutative polynomials over Q in formal symbols. Sign symbols (eps) satisfy
s^2 = 1; every other symbol is a free indeterminate.
"""

import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

from converse.exceptions import UnknownSymbol

Monomial = Tuple[Tuple[str, int], ...]
Number = Union[int, Fraction]

SIGN = "sign"
FREE = "free"

ALPHA_RE = re.compile(r"^alpha_(\d+)(?:_(\d+))?$")


class SymbolTable:
    """Declared symbol names and their kind.

    eps is always present and is the only sign symbol.
    """

    def __init__(self):
        self._kinds: Dict[str, str] = {"eps": SIGN}

    def declare(self, name: str, kind: str = FREE) -> None:
        if name == "eps" or kind == SIGN:
            if name != "eps":
                raise ValueError("eps is the only sign symbol")
            return
        self._kinds.setdefault(name, FREE)

    def declare_eigenvalue(self, p: int, exponent: Optional[int] = None) -> str:
        name = eigenvalue_symbol(p, exponent)
        self.declare(name)
        return name

    def kind(self, name: str) -> str:
        try:
            return self._kinds[name]
        except KeyError:
            raise UnknownSymbol(f"symbol {name!r} is not declared", symbol=name)

    def __contains__(self, name: str) -> bool:
        return name in self._kinds

    def names(self) -> Tuple[str, ...]:
        return tuple(sorted(self._kinds))

    def check(self, x: "SymScalar") -> "SymScalar":
        for name in x.symbols():
            self.kind(name)
        return x


def eigenvalue_symbol(p: int, exponent: Optional[int] = None) -> str:
    if exponent is None or exponent == 1:
        return f"alpha_{p}"
    return f"alpha_{p}_{exponent}"


def is_sign(name: str) -> bool:
    return name == "eps"


def _normalize_monomial(powers: Dict[str, int]) -> Monomial:
    items = []
    for name, exp in powers.items():
        if is_sign(name):
            exp %= 2
        if exp:
            items.append((name, exp))
    return tuple(sorted(items))


def _mul_monomials(x: Monomial, y: Monomial) -> Monomial:
    powers: Dict[str, int] = dict(x)
    for name, exp in y:
        powers[name] = powers.get(name, 0) + exp
    return _normalize_monomial(powers)


class SymScalar:
    """Immutable polynomial; canonical map monomial -> nonzero Fraction"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Dict[Monomial, Number]] = None):
        clean: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = coeff
        self._terms = clean
        self._hash = None

    # -- constructors

    @classmethod
    def const(cls, value: Number) -> "SymScalar":
        return cls({(): value})

    @classmethod
    def symbol(cls, name: str, exponent: int = 1) -> "SymScalar":
        return cls({_normalize_monomial({name: exponent}): 1})

    @classmethod
    def coerce(cls, value) -> "SymScalar":
        if isinstance(value, SymScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot use {type(value).__name__} as a scalar")

    # -- inspection

    def terms(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items(), key=_term_order))

    def symbols(self) -> Iterable[str]:
        return {name for mono in self._terms for name, _ in mono}

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(mono == () for mono in self._terms)

    def constant_value(self) -> Optional[Fraction]:
        """Rational value if the scalar has no symbols"""
        if not self.is_constant():
            return None
        return self._terms.get((), Fraction(0))

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self._terms), default=0)

    # -- arithmetic

    def __add__(self, other) -> "SymScalar":
        try:
            other = SymScalar.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return SymScalar(terms)

    __radd__ = __add__

    def __neg__(self) -> "SymScalar":
        return SymScalar({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "SymScalar":
        try:
            other = SymScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SymScalar":
        return SymScalar.coerce(other) - self

    def __mul__(self, other) -> "SymScalar":
        try:
            other = SymScalar.coerce(other)
        except TypeError:
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mul_monomials(m1, m2)
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return SymScalar(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SymScalar":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = SymScalar.const(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "SymScalar":
        """Inverse of a unit: c * eps^e with c a nonzero rational"""
        if len(self._terms) == 1:
            (mono, coeff), = self._terms.items()
            if all(is_sign(name) for name, _ in mono):
                return SymScalar({mono: 1 / coeff})
        raise ZeroDivisionError(f"{self} is not invertible")

    # -- comparison

    def __eq__(self, other) -> bool:
        try:
            other = SymScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.terms():
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            factors = [
                name if exp == 1 else f"{name}^{exp}" for name, exp in mono
            ]
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            parts.append((sign, "*".join(factors)))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"SymScalar({self})"


def _term_order(item):
    mono, _ = item
    return (sum(e for _, e in mono), mono)


ZERO = SymScalar()
ONE = SymScalar.const(1)
EPS = SymScalar.symbol("eps")


def scal_add(x: SymScalar, y: SymScalar, table: Optional[SymbolTable] = None):
    if table:
        table.check(x)
        table.check(y)
    return x + y


def scal_mul(x: SymScalar, y: SymScalar, table: Optional[SymbolTable] = None):
    if table:
        table.check(x)
        table.check(y)
    return x * y


def scal_neg(x: SymScalar, table: Optional[SymbolTable] = None):
    if table:
        table.check(x)
    return -x


def scal_is_zero(x: SymScalar) -> bool:
    return x.is_zero()
