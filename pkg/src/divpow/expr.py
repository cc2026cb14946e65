"""Text formats: polynomial expressions and divided-power operators.

Polynomial grammar::

    expr    := ['+'|'-'] term (('+'|'-') ['+'|'-'] term)*
    term    := factor ('*' factor)*
    factor  := atom ('^' INT)*
    atom    := ['+'|'-'] INT | NAME | '(' expr ')'

``2x`` is rejected; multiplication must be written ``2*x``.

Operator syntax is a whitespace-separated list ``[scalar] Dname[^k] ...``,
for example ``Du^2 Dy^2 Dz^2``.
"""

from __future__ import annotations

import re
from typing import List, NamedTuple, Optional

from .diffop import DividedPowerOp
from .errors import ParseError, UndeclaredVariableError
from .ring import Polynomial, VarTable

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^()]))")


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


def tokenize(src: str) -> List[Token]:
    tokens = []
    pos = 0
    n = len(src)
    while True:
        while pos < n and src[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", src, pos)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, src: str, vars: VarTable, modulus: Optional[int]):
        self.src = src
        self.vars = vars
        self.modulus = modulus
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, tok: Token, what: str) -> ParseError:
        found = repr(tok.text) if tok.kind != "end" else "end of input"
        return ParseError(f"{what}, found {found}", self.src, tok.pos)

    def parse(self) -> Polynomial:
        result = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise self.error(tok, "expected operator or end of input")
        return result

    def signed_term(self) -> Polynomial:
        sign = 1
        while self.peek().text in ("+", "-"):
            if self.next().text == "-":
                sign = -sign
        t = self.term()
        return t if sign == 1 else -t

    def expr(self) -> Polynomial:
        acc = self.signed_term()
        while self.peek().text in ("+", "-"):
            op = self.next().text
            t = self.signed_term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek().text == "*":
            self.next()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        while self.peek().text == "^":
            self.next()
            tok = self.next()
            if tok.kind != "int":
                raise self.error(tok, "expected a nonnegative integer exponent")
            base = base ** int(tok.text)
        return base

    def atom(self) -> Polynomial:
        tok = self.next()
        if tok.text in ("+", "-") and self.peek().kind == "int":
            # signed coefficient, e.g. x*-3
            num = self.next()
            tok = Token("int", tok.text + num.text, tok.pos)
        if tok.kind == "int":
            nxt = self.peek()
            if nxt.kind in ("name", "int") or nxt.text == "(":
                raise self.error(nxt, "implicit multiplication is not allowed; use '*'")
            return Polynomial.constant(self.vars, int(tok.text), self.modulus)
        if tok.kind == "name":
            if tok.text not in self.vars.names:
                raise UndeclaredVariableError(f"undeclared variable {tok.text!r}", self.src, tok.pos)
            return self.vars.gen(tok.text, self.modulus)
        if tok.text == "(":
            inner = self.expr()
            close = self.next()
            if close.text != ")":
                raise self.error(close, "expected ')'")
            return inner
        raise self.error(tok, "expected a number, variable or '('")


def parse_poly(src: str, vars: VarTable, modulus: Optional[int] = None) -> Polynomial:
    return _Parser(src, vars, modulus).parse()


def _render_monomial(names, exps) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_poly(a: Polynomial) -> str:
    """Deterministic, re-parseable text; terms in descending graded lex order."""
    terms = a.terms()
    if not terms:
        return "0"
    out = []
    for idx, (exps, c) in enumerate(terms):
        mono = _render_monomial(a.vars.names, exps)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


_OP_ITEM = re.compile(r"D(?P<name>[A-Za-z][A-Za-z0-9_]*)(?:\^(?P<k>\d+))?$")


def parse_operator(src: str, vars: VarTable) -> DividedPowerOp:
    """Parse ``[scalar] Du^k Dy^k ...``; repeated variables compose."""
    orders = [0] * len(vars)
    scalar = 1
    items = src.replace("*", " ").split()
    if not items:
        raise ParseError("empty operator", src, 0)
    pos = 0
    for n, item in enumerate(items):
        pos = src.index(item, pos)
        if n == 0 and re.fullmatch(r"[+-]?\d+", item):
            scalar = int(item)
            continue
        m = _OP_ITEM.match(item)
        if not m:
            raise ParseError(f"bad operator factor {item!r}", src, pos)
        name = m.group("name")
        if name not in vars.names:
            raise UndeclaredVariableError(f"undeclared variable {name!r}", src, pos)
        k = int(m.group("k") or 1)
        op = DividedPowerOp(vars, tuple(k if v == name else 0 for v in vars.names))
        current = DividedPowerOp(vars, tuple(orders), scalar)
        combined = current @ op
        orders, scalar = list(combined.orders), combined.scalar
        pos += len(item)
    return DividedPowerOp(vars, tuple(orders), scalar)


def render_operator(op: DividedPowerOp) -> str:
    parts = []
    if op.scalar != 1 or not any(op.orders):
        parts.append(str(op.scalar))
    for name, k in zip(op.vars.names, op.orders):
        if k == 1:
            parts.append(f"D{name}")
        elif k > 1:
            parts.append(f"D{name}^{k}")
    return " ".join(parts)
