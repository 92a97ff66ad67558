# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

"""
module ratfun provides exact arithmetic in the differential field
(Q(t), d/dt) on which all operator computations of fadel run.  A RatFun
is kept in canonical form: numerator and denominator are coprime and the
denominator is monic, hence two rational functions are equal iff their
representations are equal.

Polynomials are sympy's sparse polynomials over QQ (see POLY_RING), the
rational coefficients are QQ's elements.
"""

from typing import Protocol, Any

from sympy.polys.domains import QQ
from sympy.polys.rings import ring, PolyElement

POLY_RING, T = ring("t", QQ)
"""POLY_RING is Q[t] and T its generator t."""

Poly = PolyElement
Rational = Any  # QQ.dtype, i.e. sympy's PythonMPQ or gmpy2's mpq

_SUPERSCRIPTS = str.maketrans('0123456789-', '⁰¹²³⁴⁵⁶⁷⁸⁹⁻')


class InvariantError(Exception):
    """
    InvariantError is the base of all errors signaling that a computed
    value failed its own exact verification, i.e. a bug in fadel.
    """
    pass


class DivisionByZero(Exception):
    pass


class DifferentialField(Protocol):
    """
    DifferentialField names what the operator ring expects from the
    elements of its base field: field operations, truthiness for zero
    tests and the derivation.
    """

    def __add__(self, other: Any) -> Any: ...
    def __sub__(self, other: Any) -> Any: ...
    def __mul__(self, other: Any) -> Any: ...
    def __neg__(self) -> Any: ...
    def __bool__(self) -> bool: ...
    def inverse(self) -> Any: ...
    def derive(self) -> Any: ...


class RatFun:
    """
    RatFun is an element num/den of Q(t) in canonical form.  Instances
    are immutable values.
    """

    __slots__ = ('num', 'den', '_hash')

    def __init__(self, num: Poly, den: Poly | None = None) -> None:
        """
        init normalizes given numerator and denominator to canonical
        form and fails with DivisionByZero if den is the zero
        polynomial.
        """
        if den is None:
            den = POLY_RING.one
        if not den:
            raise DivisionByZero('rational function with zero denominator')
        if not num:
            num, den = POLY_RING.zero, POLY_RING.one
        else:
            g = num.gcd(den)
            if g.degree() > 0:
                num, den = num.exquo(g), den.exquo(g)
            lc = den.LC
            if lc != QQ.one:
                num, den = num.quo_ground(lc), den.quo_ground(lc)
        self.num = num  # type: Poly
        self.den = den  # type: Poly
        self._hash = None  # type: int | None

    @classmethod
    def _canonical(cls, num: Poly, den: Poly) -> 'RatFun':
        """_canonical wraps an already canonical pair without checks."""
        f = cls.__new__(cls)
        f.num, f.den, f._hash = num, den, None
        return f

    @classmethod
    def const(cls, q: Any) -> 'RatFun':
        """const embeds an int or a QQ element as constant function."""
        return cls._canonical(POLY_RING.ground_new(QQ.convert(q)),
            POLY_RING.one)

    @classmethod
    def zero(cls) -> 'RatFun':
        return cls._canonical(POLY_RING.zero, POLY_RING.one)

    @classmethod
    def one(cls) -> 'RatFun':
        return cls._canonical(POLY_RING.one, POLY_RING.one)

    @classmethod
    def t(cls) -> 'RatFun':
        return cls._canonical(T, POLY_RING.one)

    @classmethod
    def poly(cls, coefficients: list[Any]) -> 'RatFun':
        """
        poly creates the polynomial whose coefficient of t^i is the i-th
        entry of given coefficients.
        """
        return cls(POLY_RING.from_dict(
            {(i, ): QQ.convert(c) for i, c in enumerate(coefficients) if c}))

    def is_constant(self) -> bool:
        return self.den == POLY_RING.one and self.num.degree() <= 0

    def constant(self) -> Rational:
        """constant returns the value of a constant function."""
        if not self.is_constant():
            raise ValueError(f"'{self}' is not constant")
        return self.num.coeff(POLY_RING.one)

    def is_polynomial(self) -> bool:
        return self.den == POLY_RING.one

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self == RatFun.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __add__(self, other: Any) -> 'RatFun':
        o = _lift(other)
        return NotImplemented if o is None else rf_add(self, o)

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'RatFun':
        o = _lift(other)
        return NotImplemented if o is None else rf_sub(self, o)

    def __rsub__(self, other: Any) -> 'RatFun':
        o = _lift(other)
        return NotImplemented if o is None else rf_sub(o, self)

    def __mul__(self, other: Any) -> 'RatFun':
        o = _lift(other)
        return NotImplemented if o is None else rf_mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> 'RatFun':
        o = _lift(other)
        return NotImplemented if o is None else rf_div(self, o)

    def __rtruediv__(self, other: Any) -> 'RatFun':
        o = _lift(other)
        return NotImplemented if o is None else rf_div(o, self)

    def __neg__(self) -> 'RatFun':
        return rf_neg(self)

    def __pow__(self, n: int) -> 'RatFun':
        if n < 0:
            return rf_inv(self) ** -n
        return RatFun._canonical(self.num ** n, self.den ** n)

    def inverse(self) -> 'RatFun':
        return rf_inv(self)

    def derive(self) -> 'RatFun':
        return derive(self)

    def __str__(self) -> str:
        return format_ratfun(self)

    def __repr__(self) -> str:
        return f"RatFun('{format_ratfun(self)}')"


def _lift(x: Any) -> RatFun | None:
    """_lift embeds ints and rationals, other types are not ours."""
    if isinstance(x, RatFun):
        return x
    if isinstance(x, (int, QQ.dtype)):
        return RatFun.const(x)
    return None


def rf_add(a: RatFun, b: RatFun) -> RatFun:
    """rf_add returns the canonical sum of given a and b."""
    if a.den == b.den:
        return RatFun(a.num + b.num, a.den)
    return RatFun(a.num*b.den + b.num*a.den, a.den*b.den)


def rf_sub(a: RatFun, b: RatFun) -> RatFun:
    return rf_add(a, rf_neg(b))


def rf_mul(a: RatFun, b: RatFun) -> RatFun:
    """rf_mul returns the canonical product of given a and b."""
    if not a or not b:
        return RatFun.zero()
    return RatFun(a.num*b.num, a.den*b.den)


def rf_neg(a: RatFun) -> RatFun:
    return RatFun._canonical(-a.num, a.den)


def rf_inv(a: RatFun) -> RatFun:
    """
    rf_inv returns the multiplicative inverse of given a and fails with
    DivisionByZero if a is zero.
    """
    if not a:
        raise DivisionByZero('inverse of zero')
    return RatFun(a.den, a.num)


def rf_div(a: RatFun, b: RatFun) -> RatFun:
    return rf_mul(a, rf_inv(b))


def rf_eq(a: RatFun, b: RatFun) -> bool:
    return a == b


def derive(a: RatFun) -> RatFun:
    """derive returns da/dt by the quotient rule."""
    if a.is_polynomial():
        return RatFun._canonical(a.num.diff(T), POLY_RING.one)
    return RatFun(
        a.num.diff(T)*a.den - a.num*a.den.diff(T), a.den**2)


def derive_n(a: RatFun, k: int) -> RatFun:
    """derive_n returns the k-th derivative of a."""
    for _ in range(k):
        if not a:
            break
        a = derive(a)
    return a


def numerator(a: RatFun) -> Poly:
    return a.num


def denominator(a: RatFun) -> Poly:
    return a.den


def format_rational(q: Rational) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f'{q.numerator}/{q.denominator}'


def _power(symbol: str, n: int, unicode: bool) -> str:
    if n == 1:
        return symbol
    if unicode:
        return symbol + str(n).translate(_SUPERSCRIPTS)
    return f'{symbol}^{n}'


def format_monomial(c: Rational, symbol: str, n: int, unicode: bool = False
) -> str:
    """
    format_monomial renders c*symbol^n in the CLI syntax; a negative c
    yields a leading '-'.
    """
    if n == 0:
        return format_rational(c)
    mono = _power(symbol, n, unicode)
    if c == 1:
        return mono
    if c == -1:
        return '-' + mono
    return f'{format_rational(c)}*{mono}'


def join_terms(parts: list[str]) -> str:
    """join_terms joins rendered terms with ' + ' respectively ' - '."""
    if not parts:
        return '0'
    s = parts[0]
    for p in parts[1:]:
        s += ' - ' + p[1:] if p.startswith('-') else ' + ' + p
    return s


def format_poly(p: Poly, unicode: bool = False) -> str:
    terms = sorted(p.items(), key=lambda it: it[0][0], reverse=True)
    return join_terms(
        [format_monomial(c, 't', m[0], unicode) for m, c in terms])


def format_ratfun(f: RatFun, unicode: bool = False) -> str:
    """
    format_ratfun renders f in the CLI syntax, e.g. (t^2 + 1)/(t - 1),
    which parses back to f.
    """
    if f.is_polynomial():
        return format_poly(f.num, unicode)
    num, den = format_poly(f.num, unicode), format_poly(f.den, unicode)
    if len(f.num) > 1:
        num = f'({num})'
    if len(f.den) > 1:
        den = f'({den})'
    return f'{num}/{den}'
