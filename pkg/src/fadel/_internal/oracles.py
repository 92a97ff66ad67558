# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

"""
module oracles provides SurjectivityOracle implementations which solve
scalar equations P(b) = g over Q(t).  None of them is a decision
procedure: they search a finite ansatz space by undetermined
coefficients and report "not found" (None) if it holds no solution.

    oracle_order0:     field division for operators of degree 0
    oracle_polynomial: polynomial b of minimal degree ≤ bound
    oracle_rational:   b = N/D^e with a squarefree candidate denominator D
    chain:             first answer of a sequence of oracles
    default_oracle:    chain(order0, polynomial, rational)
"""

from typing import Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from fadel._internal.ratfun import (
    RatFun, Poly, Rational, POLY_RING, rf_div, InvariantError)
from fadel._internal.ore import OrePoly, theta, op_apply
from fadel._internal.diag import SurjectivityOracle

DEFAULT_BOUND = 16
DEFAULT_POLE_ORDER = 4


def solve_linear(columns: Sequence[Poly], target: Poly
) -> list[Rational] | None:
    """
    solve_linear returns rationals β with Σ_k β_k columns[k] = target or
    None if there are none.  Free unknowns are set to zero.
    """
    degree = max([0] + [int(p.degree()) for p in list(columns) + [target]
        if p])
    m, w = degree + 1, len(columns)
    rows = [[p.get((e, ), QQ.zero) for p in columns] +
        [target.get((e, ), QQ.zero)] for e in range(m)]
    M, pivots = DomainMatrix(rows, (m, w + 1), QQ).rref()
    if w in pivots:
        return None
    reduced = M.to_Matrix()
    beta = [QQ.zero] * w
    for r, p in enumerate(pivots):
        beta[p] = QQ.from_sympy(reduced[r, w])
    return beta


def _lcm(pp: Sequence[Poly]) -> Poly:
    L = POLY_RING.one
    for p in pp:
        L = L.lcm(p)
    return L


def _combination(beta: Sequence[Rational], basis: Sequence[RatFun]
) -> RatFun:
    out = RatFun.zero()
    for q, f in zip(beta, basis):
        if q:
            out = out + f * RatFun.const(q)
    return out


def _ansatz(P: OrePoly, g: RatFun, basis: Sequence[RatFun]
) -> RatFun | None:
    """
    _ansatz solves P(b) = g for b in the Q-span of basis by clearing the
    denominators of the images P(f), f in basis.
    """
    images = [op_apply(P, f) for f in basis]
    L = _lcm([f.den for f in images] + [g.den])
    columns = [f.num * L.exquo(f.den) for f in images]
    beta = solve_linear(columns, g.num * L.exquo(g.den))
    if beta is None:
        return None
    b = _combination(beta, basis)
    if op_apply(P, b) != g:
        raise InvariantError(f'ansatz solution {b} fails ({P})(b) = {g}')
    return b


class Order0:

    def solve_scalar(self, P: OrePoly, g: RatFun) -> RatFun | None:
        if theta(P) != 0:
            return None
        return rf_div(g, P.coeffs[0])


class PolynomialAnsatz:
    """
    PolynomialAnsatz finds a polynomial solution of minimal degree not
    exceeding bound.
    """

    def __init__(self, bound: int = DEFAULT_BOUND) -> None:
        self.bound = bound

    def solve_scalar(self, P: OrePoly, g: RatFun) -> RatFun | None:
        if not P:
            return None
        basis = [RatFun.t()**k for k in range(self.bound + 1)]
        images = [op_apply(P, f) for f in basis]
        L = _lcm([f.den for f in images] + [g.den])
        columns = [f.num * L.exquo(f.den) for f in images]
        target = g.num * L.exquo(g.den)
        for d in range(self.bound + 1):
            beta = solve_linear(columns[:d + 1], target)
            if beta is not None:
                b = _combination(beta, basis)
                if op_apply(P, b) != g:
                    raise InvariantError(f'{b} fails ({P})(b) = {g}')
                return b
        return None


class RationalAnsatz:
    """
    RationalAnsatz looks for solutions N/D^e, e ≤ pole_order, with a
    polynomial N of degree ≤ bound.  D is the squarefree part of the
    product of g's denominator, the numerator of P's leading coefficient
    and the denominators of P's coefficients, i.e. the places where a
    solution may have poles.
    """

    def __init__(self, bound: int = DEFAULT_BOUND,
        pole_order: int = DEFAULT_POLE_ORDER
    ) -> None:
        self.bound, self.pole_order = bound, pole_order

    def solve_scalar(self, P: OrePoly, g: RatFun) -> RatFun | None:
        if not P:
            return None
        D = g.den * P.leading.num
        for c in P.coeffs:
            D = D * c.den
        D = D.sqf_part().monic()
        if D.degree() <= 0:
            return None
        for e in range(1, self.pole_order + 1):
            Dn = RatFun(POLY_RING.one, D**e)
            b = _ansatz(P, g,
                [RatFun.t()**k * Dn for k in range(self.bound + 1)])
            if b is not None:
                return b
        return None


class Chain:

    def __init__(self, *oracles: SurjectivityOracle) -> None:
        self.oracles = oracles

    def solve_scalar(self, P: OrePoly, g: RatFun) -> RatFun | None:
        for o in self.oracles:
            b = o.solve_scalar(P, g)
            if b is not None:
                return b
        return None


def oracle_order0() -> SurjectivityOracle:
    return Order0()


def oracle_polynomial(bound: int = DEFAULT_BOUND) -> SurjectivityOracle:
    return PolynomialAnsatz(bound)


def oracle_rational(bound: int = DEFAULT_BOUND,
    pole_order: int = DEFAULT_POLE_ORDER
) -> SurjectivityOracle:
    return RationalAnsatz(bound, pole_order)


def chain(*oracles: SurjectivityOracle) -> SurjectivityOracle:
    return Chain(*oracles)


def default_oracle(bound: int = DEFAULT_BOUND,
    pole_order: int = DEFAULT_POLE_ORDER
) -> SurjectivityOracle:
    return chain(Order0(), PolynomialAnsatz(bound),
        RationalAnsatz(bound, pole_order))
