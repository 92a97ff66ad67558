# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

"""
module ore provides the ring R[δ] of formal differential operators over
R = Q(t).  An OrePoly is kept in the normal form

    c_0 + c_1 δ + ... + c_n δ^n

with the coefficients on the left of the powers of δ.  Multiplication
moves δ to the right through the commutation rule δa = aδ + a', i.e. by
Leibniz's formula

    δ^m a = Σ_k C(m,k) a^(m-k) δ^k.

Normal forms are unique, hence operator equality is representation
equality.  The degree theta is a Euclidean valuation: divide computes
left (x = q·y + r) and right (x = y·q + r) Euclidean division and
common_multiple realizes the Ore condition.
"""

from enum import Enum
from math import comb
from typing import Iterable, Any, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from fadel._internal.ratfun import (
    RatFun, Poly, POLY_RING, InvariantError, rf_inv, derive, format_ratfun,
    format_monomial, join_terms, _power)

Theta = int | float
MINUS_INFINITY = float('-inf')  # type: float
"""MINUS_INFINITY is the degree of the zero operator."""

_FIELD = QQ.frac_field(*POLY_RING.symbols)


class DivisionByZeroOperator(Exception):
    pass


class ZeroArgument(Exception):
    pass


class CommonMultipleNotVerified(InvariantError):
    pass


class Side(Enum):
    """
    Side fixes on which side a quotient or cofactor multiplies.  LEFT
    division is x = q·y + r, RIGHT division is x = y·q + r.  A RIGHT
    common multiple is an element a·b = x·c of aR ∩ xR, a LEFT one an
    element b·a = c·x of Ra ∩ Rx.
    """
    LEFT = 'left'
    RIGHT = 'right'


class OrePoly:
    """
    OrePoly is an element of R[δ] in normal form; coeffs[i] is the
    coefficient of δ^i and the last coefficient is nonzero unless the
    operator is zero (empty coeffs).  Instances are immutable values.
    """

    __slots__ = ('coeffs', '_hash')

    def __init__(self, coeffs: Iterable[RatFun] = ()) -> None:
        cc = list(coeffs)
        while cc and not cc[-1]:
            cc.pop()
        self.coeffs = tuple(cc)  # type: Tuple[RatFun, ...]
        self._hash = None  # type: int | None

    @classmethod
    def zero(cls) -> 'OrePoly':
        return cls()

    @classmethod
    def one(cls) -> 'OrePoly':
        return cls((RatFun.one(), ))

    @classmethod
    def delta(cls) -> 'OrePoly':
        return cls((RatFun.zero(), RatFun.one()))

    @classmethod
    def monomial(cls, c: RatFun, k: int) -> 'OrePoly':
        """monomial returns c·δ^k."""
        return cls([RatFun.zero()]*k + [c])

    def coeff(self, i: int) -> RatFun:
        """coeff returns the coefficient of δ^i (zero if out of range)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatFun.zero()

    @property
    def leading(self) -> RatFun:
        return self.coeffs[-1] if self.coeffs else RatFun.zero()

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return len(self.coeffs) > 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, OrePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, RatFun)):
            return self == op_embed(_scalar(other))
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __add__(self, other: Any) -> 'OrePoly':
        o = _lift(other)
        return NotImplemented if o is None else op_add(self, o)

    def __radd__(self, other: Any) -> 'OrePoly':
        o = _lift(other)
        return NotImplemented if o is None else op_add(o, self)

    def __sub__(self, other: Any) -> 'OrePoly':
        o = _lift(other)
        return NotImplemented if o is None else op_sub(self, o)

    def __rsub__(self, other: Any) -> 'OrePoly':
        o = _lift(other)
        return NotImplemented if o is None else op_sub(o, self)

    def __neg__(self) -> 'OrePoly':
        return op_neg(self)

    def __mul__(self, other: Any) -> 'OrePoly':
        o = _lift(other)
        return NotImplemented if o is None else op_mul(self, o)

    def __rmul__(self, other: Any) -> 'OrePoly':
        o = _lift(other)
        return NotImplemented if o is None else op_mul(o, self)

    def __pow__(self, n: int) -> 'OrePoly':
        return op_pow(self, n)

    def __call__(self, f: RatFun) -> RatFun:
        return op_apply(self, f)

    def __str__(self) -> str:
        return format_operator(self)

    def __repr__(self) -> str:
        return f"OrePoly('{format_operator(self)}')"


def _scalar(x: Any) -> RatFun:
    return x if isinstance(x, RatFun) else RatFun.const(x)


def _lift(x: Any) -> OrePoly | None:
    """_lift embeds field elements, other types are not ours."""
    if isinstance(x, OrePoly):
        return x
    if isinstance(x, (int, RatFun, QQ.dtype)):
        return op_embed(_scalar(x))
    return None


def op_embed(x: RatFun) -> OrePoly:
    """op_embed returns the left multiplication by x as operator."""
    return OrePoly((x, ))


def op_delta() -> OrePoly:
    return OrePoly.delta()


def op_add(u: OrePoly, v: OrePoly) -> OrePoly:
    n = max(len(u), len(v))
    return OrePoly(u.coeff(i) + v.coeff(i) for i in range(n))


def op_neg(u: OrePoly) -> OrePoly:
    return OrePoly(-c for c in u.coeffs)


def op_sub(u: OrePoly, v: OrePoly) -> OrePoly:
    n = max(len(u), len(v))
    return OrePoly(u.coeff(i) - v.coeff(i) for i in range(n))


def op_mul(u: OrePoly, v: OrePoly) -> OrePoly:
    """
    op_mul returns the normal form of the composition u∘v:

        u_i δ^i · v_j δ^j = Σ_k C(i,k) u_i v_j^(k) δ^(i-k+j)
    """
    if not u or not v:
        return OrePoly.zero()
    m = len(u) - 1
    derivatives = []  # type: list[list[RatFun]]
    for vj in v.coeffs:
        dd = [vj]
        for _ in range(m):
            dd.append(derive(dd[-1]) if dd[-1] else dd[-1])
        derivatives.append(dd)
    out = [RatFun.zero()] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u.coeffs):
        if not ui:
            continue
        for j, dd in enumerate(derivatives):
            for k in range(i + 1):
                if not dd[k]:
                    continue
                out[i - k + j] = out[i - k + j] + ui * dd[k] * comb(i, k)
    return OrePoly(out)


def op_pow(u: OrePoly, n: int) -> OrePoly:
    if n < 0:
        raise ValueError('negative operator power')
    result = OrePoly.one()
    for _ in range(n):
        result = op_mul(result, u)
    return result


def op_apply(u: OrePoly, f: RatFun) -> RatFun:
    """op_apply evaluates the endomorphism u at f, i.e. Σ c_i f^(i)."""
    result, d = RatFun.zero(), f
    for i, c in enumerate(u.coeffs):
        if i:
            if not d:
                break
            d = derive(d)
        if c and d:
            result = result + c*d
    return result


def commutator(u: OrePoly, v: OrePoly) -> OrePoly:
    """commutator returns [u, v] = uv - vu."""
    return op_sub(op_mul(u, v), op_mul(v, u))


def theta(u: OrePoly) -> Theta:
    """theta returns the degree of u, MINUS_INFINITY for zero."""
    if not u:
        return MINUS_INFINITY
    return len(u) - 1


def leading_coefficient(u: OrePoly) -> RatFun:
    return u.leading


def divide(side: Side, x: OrePoly, y: OrePoly) -> Tuple[OrePoly, OrePoly]:
    """
    divide returns the unique (q, r) with x = q·y + r for LEFT
    respectively x = y·q + r for RIGHT division such that theta(r) <
    theta(y).  It fails with DivisionByZeroOperator if y is zero.  Each
    step subtracts α·y (y·α) with α = x_s y_r^-1 δ^(s-r) which cancels
    the leading term of the remainder.
    """
    if not y:
        raise DivisionByZeroOperator('division by the zero operator')
    r, lc_inv = theta(y), rf_inv(y.leading)
    q, rem = OrePoly.zero(), x
    while theta(rem) >= r:
        alpha = OrePoly.monomial(rem.leading * lc_inv, len(rem) - 1 - r)
        q = op_add(q, alpha)
        rem = op_sub(rem, op_mul(alpha, y) if side is Side.LEFT
            else op_mul(y, alpha))
    return q, rem


def adjoint(u: OrePoly) -> OrePoly:
    """
    adjoint returns the formal adjoint u* = Σ (-δ)^i c_i of u = Σ c_i δ^i.
    It is an involution reversing products, (u·v)* = v*·u*, and it
    preserves the degree.
    """
    out, power = OrePoly.zero(), OrePoly.one()
    minus_delta = op_neg(OrePoly.delta())
    for i, c in enumerate(u.coeffs):
        if i:
            power = op_mul(power, minus_delta)
        if c:
            out = op_add(out, op_mul(power, op_embed(c)))
    return out


def _to_field(p: Poly) -> Any:
    F = _FIELD.field
    return F(F.ring.from_dict(dict(p)))


def _from_field(e: Any) -> RatFun:
    return RatFun(POLY_RING.from_dict(dict(e.numer)),
        POLY_RING.from_dict(dict(e.denom)))


def _cleared(row: list[RatFun]) -> list[Poly]:
    """_cleared multiplies row by the lcm of its denominators."""
    L = POLY_RING.one
    for f in row:
        L = L.lcm(f.den)
    return [f.num * L.exquo(f.den) for f in row]


def _left_multiple(a: OrePoly, x: OrePoly) -> Tuple[OrePoly, OrePoly]:
    """
    _left_multiple returns nonzero (b, c) with b·a = c·x, θ(b) ≤ θ(x) and
    θ(c) ≤ θ(a).  Since b_j δ^j·a is Q(t)-linear in b_j the coefficients
    of b·a - c·x form a linear system of θ(a)+θ(x)+1 equations in
    θ(a)+θ(x)+2 unknowns; a kernel vector is read off its reduced row
    echelon form.
    """
    n, m = int(theta(x)), int(theta(a))
    delta = OrePoly.delta()
    columns = []  # type: list[OrePoly]
    for u, k in ((a, n), (op_neg(x), m)):
        for _ in range(k + 1):
            columns.append(u)
            u = op_mul(delta, u)
    h, w = n + m + 1, len(columns)
    rows = [[_to_field(p) for p in _cleared([u.coeff(e) for u in columns])]
        for e in range(h)]
    M, pivots = DomainMatrix(rows, (h, w), _FIELD).rref()
    free = min(j for j in range(w) if j not in pivots)
    v = [RatFun.zero()] * w
    v[free] = RatFun.one()
    for r, p in enumerate(pivots):
        v[p] = -_from_field(M[r, free].element)
    return OrePoly(v[:n + 1]), OrePoly(v[n + 1:])


def common_multiple(
    side: Side, a: OrePoly, x: OrePoly
) -> Tuple[OrePoly, OrePoly, OrePoly]:
    """
    common_multiple returns nonzero (b, c, m) with m = a·b = x·c for the
    RIGHT side and m = b·a = c·x for the LEFT side.  b and c are found
    as kernel vector of a linear system over Q(t) with θ(b) ≤ θ(x) and
    θ(c) ≤ θ(a); a RIGHT multiple is the adjoint of the LEFT multiple of
    the adjoints a*, x*.  The answer is normalized to a monic c, m is not
    guaranteed to be of minimal degree.
    """
    if not a or not x:
        raise ZeroArgument('common multiple with a zero argument')
    if side is Side.LEFT:
        b, c = _left_multiple(a, x)
        unit = op_embed(rf_inv(c.leading))
        b, c = op_mul(unit, b), op_mul(unit, c)
        m, check = op_mul(b, a), op_mul(c, x)
    else:
        b, c = _left_multiple(adjoint(a), adjoint(x))
        b, c = adjoint(b), adjoint(c)
        unit = op_embed(rf_inv(c.leading))
        b, c = op_mul(b, unit), op_mul(c, unit)
        m, check = op_mul(a, b), op_mul(x, c)
    if m != check or not b:
        raise CommonMultipleNotVerified(
            f'{side.value} common multiple of {a} and {x} failed')
    return b, c, m


def format_operator(u: OrePoly, unicode: bool = False) -> str:
    """
    format_operator renders u in the CLI syntax, e.g. t*D + 1, which
    parses back to u; with unicode δ and superscripts are used instead.
    """
    symbol = 'δ' if unicode else 'D'
    parts = []
    for i in range(len(u) - 1, -1, -1):
        c = u.coeffs[i]
        if not c:
            continue
        if i == 0:
            parts.append(format_ratfun(c, unicode))
            continue
        mono = _power(symbol, i, unicode)
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append('-' + mono)
        elif c.is_polynomial() and len(c.num) == 1:
            ((deg, ), q), = c.num.items()
            parts.append(format_monomial(q, 't', deg, unicode) + '*' + mono)
        else:
            parts.append(f'({format_ratfun(c, unicode)})*{mono}')
    return join_terms(parts)
