"""
converse/hecke_ring/dsl.py

Parser for the line-oriented derivation language (.ccv scripts).

    session N=11
    hyp P
    hyp T 2
    step conj as hT2h T2 by H
    step combine as D2 target=[2,0;-11,1] - [1,1;0,2] cert= hT2h - T2
    step word as W = H P^-1 H
    step weil as M3 gamma=M(3) eps=[1,-2/3;11/2,-8/3] from=prod
    assert gen M(3)

Element grammar: sums of coefficient*matrix products, with eps, alpha_p,
T(p[,l]), U(q), R(n), V(n) and every named matrix of exact_linalg.
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from converse.exact_linalg import MatrixExprParser, ProjMat
from converse.exceptions import (
    ConverseError,
    MatrixParseError,
    NoRepresentative,
    ScriptParseError,
    UnknownSymbol,
    UnsatisfiableConstraint,
)
from converse.hecke_ring.element import RingElem
from converse.hecke_ring.generators import (
    corollary2_steps,
    corollary3_steps,
    theorem2_steps,
    theorem3_steps,
)
from converse.hecke_ring.operators import R_sum, atkin_U, hecke_T_power, translation_sum
from converse.hecke_ring.relations import Hypothesis
from converse.hecke_ring.script import AssertGen, DerivationScript
from converse.hecke_ring.steps import (
    AUTO,
    CombineStep,
    ConjStep,
    ExactStep,
    HypothesisStep,
    LmulStep,
    MacroStep,
    RmulStep,
    Step,
    WeilStep,
    WordStep,
)
from converse.symscalar import SymbolTable
from converse.symscalar.parser import resolve_symbol
from converse.symscalar.scalar import ALPHA_RE

logger = logging.getLogger(__name__)

CertTerms = List[Tuple[str, Optional[RingElem]]]

KEY_RE = re.compile(r"\b(target|cert|gamma|eps|from|neg|m|n|r)\s*=(?!=)")
TRAILING_ID_RE = re.compile(r"\s+as\s+([A-Za-z_]\w*)\s*$")
LEADING_ID_RE = re.compile(r"^\s+as\s+([A-Za-z_]\w*)")
BY_RE = re.compile(r"^\s*([A-Za-z_]\w*)\s+by\s+(.*)$")


class RingExprParser(MatrixExprParser):
    """Matrix products extended with sums, scalars and Hecke operators"""

    def __init__(
        self, text: str, level: Optional[int] = None, table: Optional[SymbolTable] = None
    ):
        super().__init__(text, level)
        self.table = table

    def _lift(self, m: ProjMat) -> RingElem:
        return RingElem.from_matrix(m)

    def _mul(self, x: RingElem, y: RingElem) -> RingElem:
        return x * y

    def _pow(self, x: RingElem, k: int) -> RingElem:
        try:
            return x ** k
        except (ValueError, ZeroDivisionError):
            self.fail("only single-term elements can be inverted")

    def parse(self) -> RingElem:
        value = self.parse_sum()
        if self.peek().kind != "end":
            self.fail("unexpected token")
        return value

    def parse_sum(self) -> RingElem:
        negative = self.accept("-")
        if not negative:
            self.accept("+")
        value = self.parse_product()
        if negative:
            value = -value
        while True:
            if self.accept("+"):
                value = value + self.parse_product()
            elif self.accept("-"):
                value = value - self.parse_product()
            else:
                return value

    def parse_atom(self) -> RingElem:
        token = self.peek()
        if self.accept("("):
            value = self.parse_sum()
            self.expect(")")
            return value
        if token.kind == "num":
            return RingElem.from_scalar(self.parse_rational())
        if token.kind == "name" and (token.text == "eps" or ALPHA_RE.match(token.text)):
            self.advance()
            try:
                return RingElem.from_scalar(resolve_symbol(token.text, self.table))
            except UnknownSymbol as exc:
                exc.context.setdefault("column", token.pos + 1)
                raise
        return super().parse_atom()

    def _named(self, name: str, args: List[Fraction], token) -> RingElem:
        if name not in ("T", "U", "R", "V") or not args:
            return super()._named(name, args, token)
        if any(a.denominator != 1 or a < 1 for a in args):
            self.fail(f"{name} takes positive integer arguments", token)
        ints = [int(a) for a in args]
        try:
            if name == "T":
                return hecke_T_power(ints[0], ints[1] if len(ints) > 1 else 1)
            if name == "U":
                return atkin_U(ints[0])
            if name == "R":
                return R_sum(ints[0])
            return translation_sum(ints[0])
        except ConverseError as exc:
            exc.context.setdefault("column", token.pos + 1)
            raise


class WordParser(MatrixExprParser):
    """Words in relation ids: W A W A, (W A)^2, A^-1 W^-1 A P"""

    def _mul(self, x, y):
        return x + y

    def _pow(self, x, k: int):
        if k < 0:
            x = [(rel_id, not inverse) for rel_id, inverse in reversed(x)]
        return x * abs(k)

    def parse_atom(self):
        token = self.peek()
        if self.accept("("):
            value = self.parse_product()
            self.expect(")")
            return value
        if token.kind == "name":
            self.advance()
            return [(token.text, False)]
        self.fail("expected a relation id")


def parse_element(
    text: str, level: Optional[int] = None, table: Optional[SymbolTable] = None
) -> RingElem:
    return RingExprParser(text, level, table).parse()


def parse_certificate(
    text: str, level: Optional[int] = None, table: Optional[SymbolTable] = None
) -> CertTerms:
    """[+-] id [* multiplier] ...; `id*auto` asks the engine for the multiplier"""
    parser = RingExprParser(text, level, table)
    terms: CertTerms = []
    while parser.peek().kind != "end":
        sign = 1
        if parser.accept("-"):
            sign = -1
        elif not parser.accept("+") and terms:
            parser.fail("expected '+' or '-'")
        token = parser.peek()
        if token.kind != "name":
            parser.fail("expected a relation id")
        parser.advance()
        multiplier = RingElem.from_scalar(sign)
        if parser.accept("*") or parser.accept("·"):
            if parser.peek().text == "auto":
                parser.advance()
                terms.append((token.text, AUTO))
                continue
            if parser.accept("-"):
                sign = -sign
            multiplier = parser.parse_product() * sign
        terms.append((token.text, multiplier))
    if not terms:
        parser.fail("empty certificate")
    return terms


def parse_word(text: str) -> List[Tuple[str, bool]]:
    word = WordParser(text).parse()
    if not word:
        raise MatrixParseError("empty word", column=1)
    return word


class ScriptParser:
    def __init__(self, text: str, name: str = "", max_exponent: Optional[int] = None):
        self.text = text
        self.name = name
        self.max_exponent = max_exponent
        self.level: Optional[int] = None
        self.table = SymbolTable()
        self.hypotheses: List[Hypothesis] = []
        self.steps: List[Step] = []
        self.assertions: List[AssertGen] = []
        self.lineno = 0

    # -- errors

    def fail(self, message: str, column: int = 1):
        raise ScriptParseError(message, line=self.lineno, column=column)

    def _located(self, exc: ConverseError, offset: int) -> ScriptParseError:
        column = offset + int(exc.context.get("column", 1))
        return ScriptParseError(exc.detail, line=self.lineno, column=column)

    def _parse_with(self, fn, text: str, offset: int):
        try:
            return fn(text)
        except (
            MatrixParseError,
            UnknownSymbol,
            UnsatisfiableConstraint,
            NoRepresentative,
        ) as exc:
            raise self._located(exc, offset) from exc

    def element(self, text: str, offset: int) -> RingElem:
        return self._parse_with(
            lambda t: parse_element(t, self.level, self.table), text, offset
        )

    def matrix(self, text: str, offset: int) -> ProjMat:
        return self._parse_with(
            lambda t: MatrixExprParser(t, self.level).parse(), text, offset
        )

    # -- driver

    def parse(self) -> DerivationScript:
        for self.lineno, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            try:
                self.parse_line(line)
            except ScriptParseError:
                raise
            except ConverseError as exc:
                exc.context.setdefault("line", self.lineno)
                raise
        if self.level is None:
            raise ScriptParseError("missing session line", line=1, column=1)
        logger.debug("parsed script %s: %d steps", self.name, len(self.steps))
        return DerivationScript(
            level=self.level,
            hypotheses=self.hypotheses,
            steps=self.steps,
            assertions=self.assertions,
            name=self.name,
        )

    def parse_line(self, line: str) -> None:
        match = re.match(r"\s*([a-z]+)", line)
        if not match:
            self.fail("expected a keyword", len(line) - len(line.lstrip()) + 1)
        keyword, pos = match.group(1), match.end()
        if keyword == "session":
            return self.parse_session(line[pos:], pos)
        if self.level is None:
            self.fail("the first line must be 'session N=<level>'", match.start(1) + 1)
        if keyword == "hyp":
            return self.parse_hyp(line[pos:], pos)
        if keyword == "step":
            return self.parse_step(line[pos:], pos)
        if keyword == "assert":
            return self.parse_assert(line[pos:], pos)
        self.fail(f"unknown keyword {keyword!r}", match.start(1) + 1)

    def parse_session(self, rest: str, offset: int) -> None:
        if self.level is not None:
            self.fail("duplicate session line", offset)
        match = re.fullmatch(r"\s*N\s*=\s*(\d+)\s*", rest)
        if not match or int(match.group(1)) < 1:
            self.fail("expected 'session N=<positive integer>'", offset + 1)
        self.level = int(match.group(1))

    def parse_assert(self, rest: str, offset: int) -> None:
        match = re.match(r"\s*gen\b", rest)
        if not match:
            self.fail("expected 'assert gen <matrix>'", offset + 1)
        text = rest[match.end():]
        mat = self.matrix(text, offset + match.end())
        self.assertions.append(AssertGen(mat, text.strip(), self.lineno))

    # -- hypotheses

    def parse_hyp(self, rest: str, offset: int) -> None:
        rel_id = None
        trailing = TRAILING_ID_RE.search(rest)
        if trailing:
            rel_id = trailing.group(1)
            rest = rest[: trailing.start()]
        parts = rest.split()
        if not parts:
            self.fail("expected a hypothesis kind", offset + 1)
        kind = parts[0]
        try:
            hyp = self._hypothesis(kind, parts[1:], rest, offset, rel_id)
        except (ValueError, IndexError):
            self.fail(f"malformed hypothesis {rest.strip()!r}", offset + 1)

        if hyp.kind == "T":
            self.table.declare_eigenvalue(hyp.prime, hyp.exponent)
        if self.steps:
            self.steps.append(HypothesisStep(hyp, line=self.lineno))
        else:
            self.hypotheses.append(hyp)

    def _hypothesis(
        self, kind: str, args: Sequence[str], rest: str, offset: int, rel_id
    ) -> Hypothesis:
        if kind in ("P", "H", "W"):
            if args:
                self.fail(f"hyp {kind} takes no arguments", offset + 1)
            return Hypothesis(kind, id=rel_id)
        if kind == "T":
            exponent = int(args[1]) if len(args) > 1 else 1
            return Hypothesis("T", prime=int(args[0]), exponent=exponent, id=rel_id)
        if kind.startswith("U"):
            if kind in ("U", "Uq"):
                q, mode = int(args[0]), args[1]
            else:
                q, mode = int(kind[1:]), args[0]
            if mode not in ("id", "zero"):
                self.fail("U hypotheses take 'id' or 'zero'", offset + 1)
            return Hypothesis("U", prime=q, mode=mode, id=rel_id)
        if kind == "G":
            start = rest.index("G") + 1
            mat = self.matrix(rest[start:], offset + start)
            return Hypothesis("G", matrix=mat, id=rel_id or "G")
        self.fail(f"unknown hypothesis kind {kind!r}", offset + 1)

    # -- steps

    def parse_step(self, rest: str, offset: int) -> None:
        match = re.match(r"\s*([a-z0-9]+)", rest)
        if not match:
            self.fail("expected a step kind", offset + 1)
        kind = match.group(1)
        pos = match.end()
        rel_id = None
        leading = LEADING_ID_RE.match(rest[pos:])
        if leading:
            rel_id = leading.group(1)
            pos += leading.end()
        body = rest[pos:]
        trailing = TRAILING_ID_RE.search(body)
        if trailing and rel_id is None:
            rel_id = trailing.group(1)
            body = body[: trailing.start()]

        handler = getattr(self, f"step_{kind}", None)
        if handler is None:
            self.fail(f"unknown step kind {kind!r}", offset + match.start(1) + 1)
        step = handler(body, offset + pos, rel_id)
        step.line = self.lineno
        self.steps.append(step)

    def keyed(self, body: str, offset: int, allowed: Sequence[str]) -> Dict[str, Tuple[str, int]]:
        matches = list(KEY_RE.finditer(body))
        if not matches or body[: matches[0].start()].strip():
            self.fail(f"expected {'/'.join(allowed)}= arguments", offset + 1)
        out: Dict[str, Tuple[str, int]] = {}
        for i, match in enumerate(matches):
            key = match.group(1)
            if key not in allowed:
                self.fail(f"unexpected argument {key!r}", offset + match.start() + 1)
            end = matches[i + 1].start() if i + 1 < len(matches) else len(body)
            out[key] = (body[match.end():end], offset + match.end())
        return out

    def _required(self, args, key: str, offset: int) -> Tuple[str, int]:
        if key not in args or not args[key][0].strip():
            self.fail(f"missing {key}=", offset + 1)
        return args[key]

    def _integer(self, args, key: str, offset: int) -> int:
        text, at = self._required(args, key, offset)
        if not text.strip().isdigit():
            self.fail(f"{key}= expects a positive integer", at + 1)
        return int(text)

    def step_exact(self, body: str, offset: int, rel_id) -> Step:
        if "==" not in body:
            self.fail("expected '<elem> == <elem>'", offset + 1)
        cut = body.index("==")
        lhs = self.element(body[:cut], offset)
        rhs = self.element(body[cut + 2:], offset + cut + 2)
        return ExactStep(lhs=lhs, rhs=rhs, id=rel_id)

    def step_combine(self, body: str, offset: int, rel_id) -> Step:
        args = self.keyed(body, offset, ("target", "cert"))
        cert_text, cert_at = self._required(args, "cert", offset)
        terms = self._parse_with(
            lambda t: parse_certificate(t, self.level, self.table), cert_text, cert_at
        )
        target = None
        if "target" in args:
            target = self.element(*args["target"])
        return CombineStep(terms=terms, target=target, id=rel_id)

    def _by(self, body: str, offset: int) -> Tuple[str, str, int]:
        match = BY_RE.match(body)
        if not match:
            self.fail("expected '<id> by <...>'", offset + 1)
        return match.group(1), match.group(2), offset + match.start(2)

    def step_rmul(self, body: str, offset: int, rel_id) -> Step:
        source, text, at = self._by(body, offset)
        return RmulStep(source=source, by=self.element(text, at), id=rel_id)

    def step_lmul(self, body: str, offset: int, rel_id) -> Step:
        source, by, at = self._by(body, offset)
        if not re.fullmatch(r"[A-Za-z_]\w*\s*", by):
            self.fail("lmul multiplies by a relation id", at + 1)
        return LmulStep(source=source, by=by.strip(), id=rel_id)

    def step_conj(self, body: str, offset: int, rel_id) -> Step:
        source, by, at = self._by(body, offset)
        if not re.fullmatch(r"[A-Za-z_]\w*\s*", by):
            self.fail("conj multiplies by a relation id", at + 1)
        return ConjStep(source=source, by=by.strip(), id=rel_id)

    def step_word(self, body: str, offset: int, rel_id) -> Step:
        match = re.match(r"\s*=?", body)
        text = body[match.end():]
        letters = self._parse_with(parse_word, text, offset + match.end())
        return WordStep(letters=letters, id=rel_id)

    def step_weil(self, body: str, offset: int, rel_id) -> Step:
        args = self.keyed(body, offset, ("gamma", "eps", "from"))
        gamma = self.matrix(*self._required(args, "gamma", offset))
        eps = self.matrix(*self._required(args, "eps", offset))
        source = self._required(args, "from", offset)[0].strip()
        return WeilStep(gamma=gamma, eps=eps, source=source, id=rel_id)

    def step_theorem2(self, body: str, offset: int, rel_id) -> Step:
        n = self._integer(self.keyed(body, offset, ("n",)), "n", offset)
        rel_id = rel_id or f"thm2_{n}"
        return MacroStep(
            name=f"theorem2 n={n}",
            steps=theorem2_steps(n, self.level, rel_id, self.max_exponent),
        )

    def step_corollary2(self, body: str, offset: int, rel_id) -> Step:
        m = self._integer(self.keyed(body, offset, ("m",)), "m", offset)
        rel_id = rel_id or f"C{m}"
        return MacroStep(
            name=f"corollary2 m={m}",
            steps=corollary2_steps(m, self.level, rel_id, self.max_exponent),
        )

    def step_corollary3(self, body: str, offset: int, rel_id) -> Step:
        args = self.keyed(body, offset, ("m", "neg"))
        m = self._integer(args, "m", offset)
        rel_id = rel_id or f"M{m}"
        neg = args["neg"][0].strip() if "neg" in args else None
        return MacroStep(
            name=f"corollary3 m={m}",
            steps=corollary3_steps(m, self.level, rel_id, neg, self.max_exponent),
        )

    def step_theorem3(self, body: str, offset: int, rel_id) -> Step:
        r = self._integer(self.keyed(body, offset, ("r",)), "r", offset)
        rel_id = rel_id or f"cusp_{r}"
        return MacroStep(
            name=f"theorem3 r={r}", steps=theorem3_steps(self.level, r, rel_id)
        )


def parse_script(text: str, name: str = "", max_exponent: Optional[int] = None) -> DerivationScript:
    return ScriptParser(text, name, max_exponent).parse()


def load_script(path, max_exponent: Optional[int] = None) -> DerivationScript:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise ScriptParseError(f"cannot read script: {exc.strerror}", path=path) from exc
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data[: exc.start].count(b"\n") + 1
        raise ScriptParseError(
            "script is not valid UTF-8", line=line, byte=exc.start, path=path
        ) from exc
    return parse_script(text, path.stem, max_exponent)
