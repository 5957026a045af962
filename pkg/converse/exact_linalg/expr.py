"""
converse/exact_linalg/expr.py

Tokenizer and recursive-descent parser for matrix expressions such as
``A^-1 W A``, ``(W A)^2`` or ``[1,-2/3;11/2,-8/3]``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional

from converse.exact_linalg import named
from converse.exact_linalg.projmat import ProjMat, canonicalize, mul, power
from converse.exceptions import ConverseError, MatrixParseError

TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[\[\](),;^*/+\-·=]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num" | "name" | "sym" | "end"
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = TOKEN_RE.match(text, pos)
        if not match:
            raise MatrixParseError(
                f"unexpected character {text[pos:].lstrip()[:1]!r}",
                column=pos + 1,
            )
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class MatrixExprParser:
    """Parse a product of named matrices, literals, powers and inverses.

    Subclasses reuse the factor grammar for other value types by overriding
    the _mul/_pow/_lift/_named hooks.
    """

    error_cls = MatrixParseError

    def __init__(self, text: str, level: Optional[int] = None):
        self.text = text
        self.level = level
        self.tokens = tokenize(text)
        self.index = 0

    # -- token helpers

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        self.index += 1
        return token

    def accept(self, text: str) -> bool:
        if self.peek().kind != "end" and self.peek().text == text:
            self.index += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        token = self.peek()
        if token.text != text or token.kind == "end":
            self.fail(f"expected {text!r}", token)
        return self.advance()

    def fail(self, message: str, token: Optional[Token] = None):
        token = token or self.peek()
        found = token.text or "end of input"
        raise self.error_cls(f"{message}, found {found!r}", column=token.pos + 1)

    # -- value hooks

    def _lift(self, m: ProjMat) -> Any:
        return m

    def _mul(self, x: Any, y: Any) -> Any:
        return mul(x, y)

    def _pow(self, x: Any, k: int) -> Any:
        return power(x, k)

    def _named(self, name: str, args: List[Fraction], token: Token) -> Any:
        return self._lift(self.named_matrix(name, args, token))

    # -- grammar

    def parse(self) -> Any:
        value = self.parse_product()
        if self.peek().kind != "end":
            self.fail("unexpected token")
        return value

    def starts_factor(self, token: Token) -> bool:
        return token.kind in ("name", "num") or token.text in ("[", "(")

    def parse_product(self) -> Any:
        value = self.parse_power()
        while True:
            if self.accept("*") or self.accept("·"):
                value = self._mul(value, self.parse_power())
            elif self.starts_factor(self.peek()):
                value = self._mul(value, self.parse_power())
            else:
                return value

    def parse_power(self) -> Any:
        value = self.parse_atom()
        while self.accept("^"):
            negative = self.accept("-")
            token = self.peek()
            if token.kind != "num":
                self.fail("expected integer exponent")
            self.advance()
            k = int(token.text)
            value = self._pow(value, -k if negative else k)
        return value

    def parse_atom(self) -> Any:
        token = self.peek()
        if self.accept("("):
            value = self.parse_product()
            self.expect(")")
            return value
        if token.text == "[":
            return self._lift(self.parse_literal())
        if token.kind == "name":
            self.advance()
            args = self.parse_args() if self.starts_args() else []
            return self._named(token.text, args, token)
        self.fail("expected a matrix")

    def starts_args(self) -> bool:
        # H(11) takes arguments; H (W A) is a product
        nxt = self.peek(1)
        return self.peek().text == "(" and (nxt.kind == "num" or nxt.text == "-")

    def parse_args(self) -> List[Fraction]:
        self.expect("(")
        args = [self.parse_rational()]
        while self.accept(","):
            args.append(self.parse_rational())
        self.expect(")")
        return args

    def parse_rational(self) -> Fraction:
        sign = -1 if self.accept("-") else 1
        token = self.peek()
        if token.kind != "num":
            self.fail("expected a number")
        self.advance()
        value = Fraction(int(token.text))
        if self.accept("/"):
            den = self.peek()
            if den.kind != "num" or int(den.text) == 0:
                self.fail("expected a nonzero denominator")
            self.advance()
            value /= int(den.text)
        return sign * value

    def parse_literal(self) -> ProjMat:
        start = self.expect("[")
        a = self.parse_rational()
        self.expect(",")
        b = self.parse_rational()
        self.expect(";")
        c = self.parse_rational()
        self.expect(",")
        d = self.parse_rational()
        self.expect("]")
        try:
            return canonicalize(a, b, c, d)
        except ConverseError as exc:
            raise self.error_cls(exc.detail, column=start.pos + 1) from exc

    def named_matrix(
        self, name: str, args: List[Fraction], token: Token
    ) -> ProjMat:
        if name in ("H", "W", "M") and any(v.denominator != 1 for v in args):
            self.fail(f"{name} takes integer arguments", token)
        ints = [int(v) for v in args]
        try:
            if name in ("H", "W") and args:
                return named.named_matrix(name, N=ints[0])
            if name == "M":
                if not args:
                    self.fail("M needs an index", token)
                b = ints[1] if len(ints) > 1 else 1
                return named.named_matrix(name, N=self.level, m=ints[0], b=b)
            if name == "beta":
                return named.translation(args[0] if args else 1)
            if name == "D":
                if not args:
                    self.fail("D needs arguments", token)
                return named.diagonal(*args[:2])
            return named.named_matrix(name, N=self.level)
        except MatrixParseError:
            raise
        except IndexError:
            self.fail(f"bad arguments for {name}", token)
        except ConverseError as exc:
            if isinstance(exc, self.error_cls):
                raise
            exc.context.setdefault("column", token.pos + 1)
            raise


def eval_matrix_expr(expr: str, N: Optional[int] = None) -> ProjMat:
    """Evaluate a matrix word to its canonical class"""
    return MatrixExprParser(expr, level=N).parse()
