# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

"""
module parser provides the recursive descent parser of the operator
syntax used on the command line:

    expr     := ('+'|'-')? term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := atom ('^' uint)?
    atom     := 'D' | 't' | rational | '(' expr ')'
    rational := int ('/' uint)?

Multiplication is noncommutative and must be written, "D t" is a parse
error.  A parse tree keeps the source order of its factors; normalize
turns it into an OrePoly in normal form.  Division is only defined for
divisors of order 0.
"""

from dataclasses import dataclass
from typing import Any, Iterator

from sympy.polys.domains import QQ

from fadel._internal.ratfun import RatFun, rf_inv
from fadel._internal.ore import (
    OrePoly, op_embed, op_delta, op_add, op_sub, op_mul, op_pow, theta)

END = 'end of input'
RATIONAL = 'rational'
UINT = 'unsigned integer'

_SINGLE = {'D', 't', '+', '-', '*', '/', '^', '(', ')'}


class ParseError(Exception):
    """
    ParseError reports the line and column (both 1-based) of the
    offending token and the set of tokens which were expected.
    """

    def __init__(self, line: int, column: int, expected: set[str],
        found: str
    ) -> None:
        exp = ', '.join(sorted(expected))
        super().__init__(
            f'{line}:{column}: expected {exp}; found {found}')
        self.line, self.column = line, column
        self.expected, self.found = frozenset(expected), found


class NormalizeError(Exception):
    pass


@dataclass(frozen=True)
class AtomD:
    pass


@dataclass(frozen=True)
class AtomT:
    pass


@dataclass(frozen=True)
class AtomRational:
    value: Any


@dataclass(frozen=True)
class Power:
    base: 'Expr'
    exponent: int


@dataclass(frozen=True)
class Product:
    """
    Product holds factors in source order; each but the first is
    paired with its operator '*' or '/'.
    """
    first: 'Expr'
    rest: tuple[tuple[str, 'Expr'], ...] = ()


@dataclass(frozen=True)
class Sum:
    """Sum holds signed terms in source order."""
    terms: tuple[tuple[str, 'Expr'], ...]


Expr = AtomD | AtomT | AtomRational | Power | Product | Sum


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokens(text: str) -> Iterator[_Token]:
    line, col, i = 1, 1, 0
    while i < len(text):
        c = text[i]
        if c == '\n':
            line, col, i = line + 1, 1, i + 1
            continue
        if c.isspace():
            col, i = col + 1, i + 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            yield _Token(UINT, text[i:j], line, col)
            col, i = col + j - i, j
            continue
        if c in _SINGLE:
            yield _Token(c, c, line, col)
            col, i = col + 1, i + 1
            continue
        raise ParseError(line, col, {'D', 't', RATIONAL, '('}, repr(c))
    yield _Token(END, '', line, col)


class _Parser:

    def __init__(self, text: str) -> None:
        self.tt = list(_tokens(text))
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tt[self.i]

    def peek(self, k: int = 1) -> _Token:
        return self.tt[min(self.i + k, len(self.tt) - 1)]

    def fail(self, expected: set[str]) -> ParseError:
        t = self.tok
        return ParseError(t.line, t.column, expected,
            END if t.kind == END else repr(t.text))

    def take(self) -> _Token:
        t = self.tok
        self.i += 1
        return t

    def expr(self) -> Sum:
        sign = '+'
        if self.tok.kind in ('+', '-'):
            sign = self.take().kind
        terms = [(sign, self.term())]
        while self.tok.kind in ('+', '-'):
            sign = self.take().kind
            terms.append((sign, self.term()))
        return Sum(tuple(terms))

    def term(self) -> Product:
        first = self.factor()
        rest = []
        while self.tok.kind in ('*', '/'):
            op = self.take().kind
            rest.append((op, self.factor()))
        return Product(first, tuple(rest))

    def factor(self) -> Expr:
        a = self.atom()
        if self.tok.kind != '^':
            return a
        self.take()
        if self.tok.kind != UINT:
            raise self.fail({UINT})
        return Power(a, int(self.take().text))

    def atom(self) -> Expr:
        k = self.tok.kind
        if k == 'D':
            self.take()
            return AtomD()
        if k == 't':
            self.take()
            return AtomT()
        if k == UINT:
            return self.rational()
        if k == '(':
            self.take()
            e = self.expr()
            if self.tok.kind != ')':
                raise self.fail({')', '+', '-', '*', '/', '^'})
            self.take()
            return e
        raise self.fail({'D', 't', RATIONAL, '('})

    def rational(self) -> AtomRational:
        n = int(self.take().text)
        if self.tok.kind == '/' and self.peek().kind == UINT:
            self.take()
            d = self.take()
            if int(d.text) == 0:
                raise ParseError(d.line, d.column, {'nonzero ' + UINT},
                    repr(d.text))
            return AtomRational(QQ(n, int(d.text)))
        return AtomRational(QQ(n))


def parse_operator(text: str) -> Expr:
    """
    parse_operator returns the parse tree of given text or fails with a
    ParseError.
    """
    p = _Parser(text)
    e = p.expr()
    if p.tok.kind != END:
        raise p.fail({'+', '-', '*', '/', '^', END})
    return e


def normalize(e: Expr) -> OrePoly:
    """
    normalize evaluates a parse tree to an operator in normal form.  It
    fails with NormalizeError for a division by zero or by an operator
    of order at least 1.
    """
    match e:
        case AtomD():
            return op_delta()
        case AtomT():
            return op_embed(RatFun.t())
        case AtomRational(value=q):
            return op_embed(RatFun.const(q))
        case Power(base=b, exponent=n):
            return op_pow(normalize(b), n)
        case Product(first=f, rest=rest):
            u = normalize(f)
            for op, g in rest:
                v = normalize(g)
                if op == '*':
                    u = op_mul(u, v)
                    continue
                if not v:
                    raise NormalizeError('division by zero')
                if theta(v) > 0:
                    raise NormalizeError(
                        f'division by an operator of order {theta(v)}')
                u = op_mul(u, op_embed(rf_inv(v.leading)))
            return u
        case Sum(terms=terms):
            u = OrePoly.zero()
            for sign, g in terms:
                v = normalize(g)
                u = op_add(u, v) if sign == '+' else op_sub(u, v)
            return u
    raise TypeError(f'not a parse tree: {e!r}')


def parse(text: str) -> OrePoly:
    """parse returns the normal form of the operator given by text."""
    return normalize(parse_operator(text))


def parse_ratfun(text: str) -> RatFun:
    """
    parse_ratfun returns the rational function given by text; it fails
    with NormalizeError if text denotes an operator of order ≥ 1.
    """
    u = parse(text)
    if theta(u) > 0:
        raise NormalizeError(f'{text} is not a rational function')
    return u.coeff(0)


def parse_rational(text: str) -> Any:
    """parse_rational returns the QQ element given by text."""
    f = parse_ratfun(text)
    if not f.is_constant():
        raise NormalizeError(f'{text} is not a rational number')
    return f.constant()


def parse_series(text: str, rational: bool = False) -> list[Any]:
    """
    parse_series returns the comma separated coefficients of text as
    operators, or as QQ elements if rational is set.  Errors report
    columns relative to the whole text.
    """
    cc, col = [], 0
    for item in text.split(','):
        try:
            cc.append(parse_rational(item) if rational else parse(item))
        except ParseError as e:
            raise ParseError(e.line, e.column + col, set(e.expected),
                e.found) from e
        col += len(item) + 1
    return cc
