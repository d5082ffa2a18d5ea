"""A small recursive-descent parser for algebraic expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')'

Names are resolved by a caller-supplied function, so the same grammar serves
polynomials, enveloping-algebra elements, free-algebra elements and series.
``e-1`` (the letter e immediately followed by a signed integer) is one token.
Values are combined with Python operators; ``int / int`` yields an exact
rational.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable

from .scalars import canon_q


class ParseError(ValueError):
    """Malformed expression text."""


_TOKEN = re.compile(
    r"\s*(?:(?P<ename>e-?\d+)(?![A-Za-z_0-9])"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<int>\d+)"
    r"|(?P<op>[-+*/^()]))"
)


def tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        kind = m.lastgroup
        value = m.group(kind)
        out.append(("name" if kind == "ename" else kind, value))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, resolve, known):
        self.tokens = tokens
        self.i = 0
        self.resolve = resolve
        self.known = known

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of expression")
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            elif isinstance(val, int) and isinstance(rhs, int):
                if rhs == 0:
                    from .scalars import DomainError
                    raise DomainError("division by zero")
                val = canon_q(Fraction(val, rhs))
            else:
                val = val / rhs
        return val

    def unary(self):
        tok = self.peek()
        if tok[1] == "-":
            self.take()
            return -self.unary()
        if tok[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            kind, text = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be an integer, found {text!r}")
            k = sign * int(text)
            if isinstance(base, (int, Fraction)) and k < 0:
                return canon_q(Fraction(base) ** k)
            return base ** k
        return base

    def atom(self):
        kind, text = self.take()
        if kind == "int":
            return int(text)
        if kind == "name":
            if not self.known(text):
                raise ParseError(f"unknown name {text!r}")
            return self.resolve(text)
        if text == "(":
            val = self.expr()
            self.take(")")
            return val
        raise ParseError(f"unexpected token {text!r}")


def parse_expression(text: str, resolve: Callable[[str], object],
                     known: Callable[[str], bool] | None = None):
    """Parse ``text`` and evaluate it, resolving names through ``resolve``."""
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    parser = _Parser(tokens, resolve, known or (lambda name: True))
    value = parser.expr()
    if parser.i != len(tokens):
        raise ParseError(f"trailing input at {parser.peek()[1]!r}")
    return value
