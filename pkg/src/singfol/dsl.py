"""Expression language for foliation definitions.

A spec file declares variables once, then one generator per line:

    # anything after a hash is a comment
    vars: x, y;
    gen: -1*y*dx + x*dy;
    gen: (x + y^2)*dx;

Expressions are sums of products of rational literals (``p`` or
``p/q``), declared variables, coordinate derivations (``d`` + variable
name) and parenthesized polynomial subexpressions; ``^`` takes integer
powers of polynomial factors.  Whitespace is insignificant.  Every
generator must be a vector field that vanishes at the origin; the
offending constant term is reported otherwise.

Rendering is the inverse direction: ``canonical_source`` produces the
unique normal form of a spec (terms in the fixed order, explicit ``*``
and ``^``, negative coefficients parenthesized) and parsing it back
yields an equal spec, which is the round-trip contract the tests pin.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InputRejected, ParseError
from .poly import Polynomial
from .vecfield import PolyVectorField

_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
_INT_RE = re.compile(r"[0-9]+")

_PUNCT = {"+", "-", "*", "^", "/", "(", ")", ":", ";", ","}


@dataclass(frozen=True)
class _Token:
    kind: str  # "name", "int" or the punctuation itself
    text: str
    line: int
    column: int


def _tokenize(source: str) -> List[_Token]:
    tokens = []
    for lineno, line in enumerate(source.splitlines(), start=1):
        pos = 0
        length = len(line)
        while pos < length:
            ch = line[pos]
            if ch == "#":
                break
            if ch.isspace():
                pos += 1
                continue
            if ch in _PUNCT:
                tokens.append(_Token(ch, ch, lineno, pos + 1))
                pos += 1
                continue
            m = _NAME_RE.match(line, pos)
            if m:
                tokens.append(_Token("name", m.group(), lineno, pos + 1))
                pos = m.end()
                continue
            m = _INT_RE.match(line, pos)
            if m:
                tokens.append(_Token("int", m.group(), lineno, pos + 1))
                pos = m.end()
                continue
            raise ParseError(f"unexpected character {ch!r}", lineno, pos + 1)
    return tokens


class _TokenStream:
    def __init__(self, tokens: List[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> _Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else None
            raise ParseError(
                "unexpected end of input",
                last.line if last else 1,
                last.column if last else 1,
            )
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(
                f"expected {kind!r}, found {tok.text!r}", tok.line, tok.column
            )
        return tok


class _Value:
    """Polynomial or vector field intermediate during evaluation."""

    __slots__ = ("poly", "field")

    def __init__(self, poly: Optional[Polynomial] = None,
                 field: Optional[PolyVectorField] = None):
        self.poly = poly
        self.field = field

    @property
    def is_field(self) -> bool:
        return self.field is not None


class _ExprParser:
    def __init__(self, stream: _TokenStream, variables: Sequence[str]):
        self.stream = stream
        self.variables = list(variables)
        self.index = {name: i for i, name in enumerate(variables)}
        self.nvars = len(variables)

    def parse(self) -> _Value:
        return self._sum()

    def _sum(self) -> _Value:
        value = self._term()
        while True:
            tok = self.stream.peek()
            if tok is None or tok.kind not in {"+", "-"}:
                return value
            op = self.stream.next()
            rhs = self._term()
            value = self._combine(value, rhs, op, negate=op.kind == "-")

    def _combine(self, lhs: _Value, rhs: _Value, tok: _Token, negate: bool) -> _Value:
        if negate:
            rhs = _Value(
                poly=None if rhs.poly is None else -rhs.poly,
                field=None if rhs.field is None else -rhs.field,
            )
        if lhs.is_field != rhs.is_field:
            raise ParseError(
                "cannot add a polynomial and a vector field", tok.line, tok.column
            )
        if lhs.is_field:
            return _Value(field=lhs.field + rhs.field)
        return _Value(poly=lhs.poly + rhs.poly)

    def _term(self) -> _Value:
        tok = self.stream.peek()
        negate = False
        if tok is not None and tok.kind == "-":
            self.stream.next()
            negate = True
        value = self._factor()
        while True:
            nxt = self.stream.peek()
            if nxt is None or nxt.kind != "*":
                break
            star = self.stream.next()
            rhs = self._factor()
            value = self._multiply(value, rhs, star)
        if negate:
            value = _Value(
                poly=None if value.poly is None else -value.poly,
                field=None if value.field is None else -value.field,
            )
        return value

    def _multiply(self, lhs: _Value, rhs: _Value, tok: _Token) -> _Value:
        if lhs.is_field and rhs.is_field:
            raise ParseError(
                "cannot multiply two vector fields", tok.line, tok.column
            )
        if lhs.is_field:
            return _Value(field=lhs.field * rhs.poly)
        if rhs.is_field:
            return _Value(field=rhs.field * lhs.poly)
        return _Value(poly=lhs.poly * rhs.poly)

    def _factor(self) -> _Value:
        value = self._atom()
        tok = self.stream.peek()
        if tok is not None and tok.kind == "^":
            caret = self.stream.next()
            power = self.stream.expect("int")
            if value.is_field:
                raise ParseError(
                    "cannot take a power of a vector field", caret.line, caret.column
                )
            value = _Value(poly=value.poly ** int(power.text))
        return value

    def _atom(self) -> _Value:
        tok = self.stream.next()
        if tok.kind == "(":
            inner = self._sum()
            self.stream.expect(")")
            return inner
        if tok.kind == "int":
            numerator = int(tok.text)
            nxt = self.stream.peek()
            if nxt is not None and nxt.kind == "/":
                self.stream.next()
                denom_tok = self.stream.expect("int")
                denominator = int(denom_tok.text)
                if denominator == 0:
                    raise ParseError(
                        "zero denominator", denom_tok.line, denom_tok.column
                    )
                value = Fraction(numerator, denominator)
            else:
                value = Fraction(numerator)
            return _Value(poly=Polynomial.constant(self.nvars, value))
        if tok.kind == "name":
            name = tok.text
            if name in self.index:
                return _Value(
                    poly=Polynomial.variable(self.nvars, self.index[name])
                )
            if name.startswith("d") and name[1:] in self.index:
                return _Value(
                    field=PolyVectorField.coordinate(
                        self.nvars, self.index[name[1:]]
                    )
                )
            raise ParseError(f"undeclared name {name!r}", tok.line, tok.column)
        raise ParseError(f"unexpected token {tok.text!r}", tok.line, tok.column)


@dataclass(frozen=True)
class FoliationSpec:
    """Parsed foliation definition."""

    variables: Tuple[str, ...]
    generators: Tuple[PolyVectorField, ...]
    sources: Tuple[str, ...]
    options: Dict[str, str] = dataclass_field(default_factory=dict)

    def canonical_source(self) -> str:
        lines = [f"vars: {', '.join(self.variables)};"]
        for g in self.generators:
            lines.append(f"gen: {g.render(self.variables)};")
        return "\n".join(lines) + "\n"


def parse_spec(source: str) -> FoliationSpec:
    tokens = _tokenize(source)
    stream = _TokenStream(tokens)
    first = stream.peek()
    if first is None:
        raise ParseError("empty specification", 1, 1)
    header = stream.expect("name")
    if header.text != "vars":
        raise ParseError("specification must begin with a vars header",
                         header.line, header.column)
    stream.expect(":")
    variables: List[str] = []
    while True:
        name_tok = stream.expect("name")
        variables.append(name_tok.text)
        nxt = stream.next()
        if nxt.kind == ";":
            break
        if nxt.kind != ",":
            raise ParseError(
                f"expected ',' or ';' in variable list, found {nxt.text!r}",
                nxt.line, nxt.column,
            )
    if len(set(variables)) != len(variables):
        raise InputRejected("variable names must be distinct")
    for v in variables:
        if v.startswith("d") and v[1:] in variables:
            raise InputRejected(
                f"variable name {v!r} is ambiguous with the derivation of "
                f"{v[1:]!r}"
            )
    generators: List[PolyVectorField] = []
    while stream.peek() is not None:
        keyword = stream.expect("name")
        if keyword.text != "gen":
            raise ParseError(
                f"expected a gen statement, found {keyword.text!r}",
                keyword.line, keyword.column,
            )
        stream.expect(":")
        parser = _ExprParser(stream, variables)
        value = parser.parse()
        end = stream.expect(";")
        if not value.is_field:
            raise ParseError(
                "generator expression is a polynomial, not a vector field",
                end.line, end.column,
            )
        field = value.field
        for i, comp in enumerate(field.components):
            constant = comp.constant_term()
            if constant != 0:
                raise InputRejected(
                    f"generator {field.render(variables)} does not vanish at "
                    f"the origin: d{variables[i]} carries constant term "
                    f"{constant}"
                )
        generators.append(field)
    if not generators:
        raise InputRejected("specification declares no generators")
    spec = FoliationSpec(
        variables=tuple(variables),
        generators=tuple(generators),
        sources=tuple(g.render(variables) for g in generators),
    )
    return spec


def parse_field(source: str, variables: Sequence[str]) -> PolyVectorField:
    """Parse a single vector field expression over known variables."""
    stream = _TokenStream(_tokenize(source))
    parser = _ExprParser(stream, variables)
    value = parser.parse()
    tok = stream.peek()
    if tok is not None:
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.column)
    if not value.is_field:
        if value.poly is not None and value.poly.is_zero:
            return PolyVectorField.zero(len(variables))
        raise ParseError("expression is not a vector field", 1, 1)
    return value.field
