"""Recursive-descent parser for polynomial expressions.

Grammar:
    expr     := ('+'|'-')? term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' nat)*
    atom     := rational | var | '(' expr ')'
    rational := int ('/' posint)?

Printing a polynomial and re-parsing it over the same weight system is the
identity.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Poly, WeightSystem


class PolySyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^()]))")


class _Parser:
    def __init__(self, src: str, ring: WeightSystem):
        self.src = src
        self.ring = ring
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._tokenize()
        self.index = 0

    def _tokenize(self):
        pos = 0
        while pos < len(self.src):
            m = _TOKEN.match(self.src, pos)
            if not m:
                if self.src[pos:].strip():
                    raise PolySyntaxError(
                        f"unexpected character {self.src[pos:].lstrip()[0]!r}", pos
                    )
                break
            number, name, op = m.groups()
            kind = "num" if number else "name" if name else "op"
            self.tokens.append((kind, m.group().strip(), m.start(1 if number else 2 if name else 3)))
            pos = m.end()

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def next(self) -> tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise PolySyntaxError("unexpected end of input", len(self.src))
        self.index += 1
        return token

    def expect_op(self, op: str):
        token = self.next()
        if token[0] != "op" or token[1] != op:
            raise PolySyntaxError(f"expected {op!r}", token[2])

    def parse(self) -> Poly:
        value = self.expr()
        trailing = self.peek()
        if trailing is not None:
            raise PolySyntaxError(f"unexpected {trailing[1]!r}", trailing[2])
        return value

    def expr(self) -> Poly:
        sign = 1
        token = self.peek()
        if token and token[0] == "op" and token[1] in "+-":
            self.index += 1
            sign = -1 if token[1] == "-" else 1
        value = self.term() * sign
        while True:
            token = self.peek()
            if token is None or token[0] != "op" or token[1] not in "+-":
                return value
            self.index += 1
            rhs = self.term()
            value = value + rhs if token[1] == "+" else value - rhs

    def term(self) -> Poly:
        value = self.factor()
        while True:
            token = self.peek()
            if token is None or token[0] != "op" or token[1] != "*":
                return value
            self.index += 1
            value = value * self.factor()

    def factor(self) -> Poly:
        value = self.atom()
        while True:
            token = self.peek()
            if token is None or token[0] != "op" or token[1] != "^":
                return value
            self.index += 1
            exponent = self.next()
            if exponent[0] != "num":
                raise PolySyntaxError("exponent must be a natural number", exponent[2])
            value = value ** int(exponent[1])

    def atom(self) -> Poly:
        token = self.next()
        kind, text, position = token
        if kind == "num":
            numerator = int(text)
            nxt = self.peek()
            if nxt and nxt[0] == "op" and nxt[1] == "/":
                self.index += 1
                denominator = self.next()
                if denominator[0] != "num" or int(denominator[1]) == 0:
                    raise PolySyntaxError("denominator must be a positive integer",
                                          denominator[2])
                return Poly.const(self.ring, Fraction(numerator, int(denominator[1])))
            return Poly.const(self.ring, numerator)
        if kind == "name":
            if text not in self.ring.names:
                raise PolySyntaxError(f"unknown variable {text!r}", position)
            return Poly.var(self.ring, text)
        if kind == "op" and text == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise PolySyntaxError(f"unexpected {text!r}", position)


def parse_poly(src: str, ring: WeightSystem) -> Poly:
    """Parse an expression over the declared variables into a Poly."""
    return _Parser(src, ring).parse()
