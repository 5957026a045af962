"""
converse/symscalar/parser.py

Coefficient literals: integers, fractions, eps, alpha_p, alpha_p_l with
+ - * ^ and parentheses.
"""

from fractions import Fraction
from typing import Optional

from converse.exact_linalg.expr import Token, tokenize
from converse.exceptions import MatrixParseError, UnknownSymbol
from converse.symscalar.scalar import ALPHA_RE, SymbolTable, SymScalar


def resolve_symbol(name: str, table: Optional[SymbolTable]) -> SymScalar:
    if table is not None:
        table.kind(name)
    elif name != "eps" and not ALPHA_RE.match(name):
        raise UnknownSymbol(f"symbol {name!r} is not declared", symbol=name)
    return SymScalar.symbol(name)


class ScalarParser:
    def __init__(self, text: str, table: Optional[SymbolTable] = None):
        self.tokens = tokenize(text)
        self.index = 0
        self.table = table

    def peek(self) -> Token:
        return self.tokens[self.index]

    def accept(self, text: str) -> bool:
        token = self.peek()
        if token.kind != "end" and token.text == text:
            self.index += 1
            return True
        return False

    def fail(self, message: str):
        token = self.peek()
        raise MatrixParseError(
            f"{message}, found {token.text or 'end of input'!r}",
            column=token.pos + 1,
        )

    def parse(self) -> SymScalar:
        value = self.parse_sum()
        if self.peek().kind != "end":
            self.fail("unexpected token")
        return value

    def parse_sum(self) -> SymScalar:
        value = -self.parse_term() if self.accept("-") else self.parse_term()
        while True:
            if self.accept("+"):
                value = value + self.parse_term()
            elif self.accept("-"):
                value = value - self.parse_term()
            else:
                return value

    def parse_term(self) -> SymScalar:
        value = self.parse_power()
        while True:
            if self.accept("*"):
                value = value * self.parse_power()
            elif self.peek().kind in ("num", "name") or self.peek().text == "(":
                value = value * self.parse_power()
            else:
                return value

    def parse_power(self) -> SymScalar:
        value = self.parse_atom()
        if self.accept("^"):
            token = self.peek()
            if token.kind != "num":
                self.fail("expected exponent")
            self.index += 1
            value = value ** int(token.text)
        return value

    def parse_atom(self) -> SymScalar:
        token = self.peek()
        if self.accept("("):
            value = self.parse_sum()
            if not self.accept(")"):
                self.fail("expected ')'")
            return value
        if token.kind == "num":
            self.index += 1
            value = Fraction(int(token.text))
            if self.accept("/"):
                den = self.peek()
                if den.kind != "num" or int(den.text) == 0:
                    self.fail("expected a nonzero denominator")
                self.index += 1
                value /= int(den.text)
            return SymScalar.const(value)
        if token.kind == "name":
            self.index += 1
            return resolve_symbol(token.text, self.table)
        self.fail("expected a coefficient")


def parse_scalar(text: str, table: Optional[SymbolTable] = None) -> SymScalar:
    return ScalarParser(text, table).parse()
