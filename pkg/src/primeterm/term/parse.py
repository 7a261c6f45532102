"""Recursive-descent parser for term text.

    expr   := term (("+"|"-") term)*
    term   := factor (("*"|"/"|"%") factor)*
    factor := atom ("^" factor)?
    atom   := INT | VAR | "(" expr ")" | "monus(" expr "," expr ")"
            | ("gcd"|"nu2"|"hw") "(" expr ("," expr)* ")"

Whitespace is ignored between tokens.
"""
from __future__ import annotations

import re

from ..errors import TermSyntaxError
from .nodes import BINARY, CALLS, Call, Const, Monus, Term, Var

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z][a-z0-9_]*)|(.))", re.S)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []  # (kind, value, char offset)
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m.group(0).strip() == "":
                break
            start = m.start(m.lastindex)
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), start))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2), start))
            else:
                ch = m.group(3)
                if ch not in "+-*/%^(),":
                    self.fail(f"unexpected character {ch!r}", start)
                self.tokens.append(("op", ch, start))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.i = 0

    def fail(self, msg, char_offset):
        raise TermSyntaxError(msg, len(self.text[:char_offset].encode("utf-8")))

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, value, off = self.take()
        if kind != "op" or value != op:
            shown = value or "end of input"
            self.fail(f"expected {op!r}, found {shown!r}", off)

    def expr(self) -> Term:
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            node = BINARY[op](node, self.term())
        return node

    def term(self) -> Term:
        node = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/%":
            op = self.take()[1]
            node = BINARY[op](node, self.factor())
        return node

    def factor(self) -> Term:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            return BINARY["^"](base, self.factor())
        return base

    def args(self):
        self.expect("(")
        out = [self.expr()]
        while self.peek()[:2] == ("op", ","):
            self.take()
            out.append(self.expr())
        self.expect(")")
        return out

    def atom(self) -> Term:
        kind, value, off = self.take()
        if kind == "int":
            return Const(int(value))
        if kind == "name":
            if self.peek()[:2] != ("op", "("):
                return Var(value)
            if value == "monus":
                args = self.args()
                if len(args) != 2:
                    self.fail("monus takes 2 arguments", off)
                return Monus(*args)
            if value in CALLS:
                args = self.args()
                if len(args) != CALLS[value]:
                    self.fail(f"{value} takes {CALLS[value]} argument(s)", off)
                return Call(value, tuple(args))
            self.fail(f"unknown function {value!r}", off)
        if (kind, value) == ("op", "("):
            node = self.expr()
            self.expect(")")
            return node
        self.fail(f"unexpected {value or 'end of input'!r}", off)


def parse_term(text: str) -> Term:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    p = _Parser(text)
    node = p.expr()
    kind, value, off = p.peek()
    if kind != "end":
        p.fail(f"unexpected {value!r}", off)
    return node
