# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

"""
module witness provides the construction of explicit witnesses of the
(weakly) fadelian identities in R[δ]:

    weak:  1 = b·x + x·c        full:  x = a·b + c·a

A weak witness of x = Σ_j x_j δ^j, n = θ(x) ≥ 1, is searched with
θ(b), θ(c) < n.  Comparing the coefficients of δ^d, d = 0..2n-1, of
b·x + x·c with those of 1 gives 2n equations in the unknown field
elements b_0..b_{n-1}, c_0..c_{n-1} (build_coefficient_equations).  The
equations d = 2n-1 down to n determine b_{d-n} in terms of the c_i
since x_n is invertible (eliminate_b); the remaining n equations form a
diagonally dominant operator system in the c_i which is solved by the
diag module.  Every returned witness is verified exactly.
"""

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Callable

from fadel._internal.ratfun import (
    RatFun, InvariantError, rf_inv, derive_n, derive)
from fadel._internal.ore import (
    OrePoly, Side, ZeroArgument, theta, op_add, op_mul, op_embed, op_apply,
    op_delta, common_multiple, format_operator)
from fadel._internal.diag import (
    LinearDiffSystem, SurjectivityOracle, solve)

Log = Callable[[str], None]


class DegreeZeroTarget(Exception):
    pass


class WitnessNotVerified(InvariantError):
    pass


class Flavor(Enum):
    WEAK = 'weak'
    FULL = 'full'


@dataclass(frozen=True)
class WitnessPair:
    """
    WitnessPair certifies 1 = b·target + target·c (WEAK) respectively
    target = anchor·b + c·anchor (FULL).
    """
    b: OrePoly
    c: OrePoly
    target: OrePoly
    flavor: Flavor
    anchor: OrePoly | None = None

    def __str__(self) -> str:
        return 'b = {}, c = {}'.format(
            format_operator(self.b), format_operator(self.c))


@dataclass
class CoefficientEquation:
    """
    CoefficientEquation is the coefficient of δ^d in b·x + x·c = 1:

        Σ_i b_ops[i]·b_i + Σ_i c_ops[i](c_i) = rhs

    b_ops are field elements multiplying the b_i, c_ops operators applied
    to the c_i and rhs is the Kronecker delta of d and 0.
    """
    d: int
    b_ops: list[RatFun]
    c_ops: list[OrePoly]
    rhs: RatFun


@dataclass
class EliminationTable:
    """
    EliminationTable holds the operators A[i][j] with
    b_i = Σ_j A[i][j](c_j); A[i][j] vanishes for j < i.
    """
    A: list[list[OrePoly]]

    def b_of(self, i: int, c: list[RatFun]) -> RatFun:
        v = RatFun.zero()
        for A, cj in zip(self.A[i], c):
            if A and cj:
                v = v + op_apply(A, cj)
        return v


def _kronecker(d: int) -> RatFun:
    return RatFun.one() if d == 0 else RatFun.zero()


def build_coefficient_equations(x: OrePoly) -> list[CoefficientEquation]:
    """
    build_coefficient_equations returns the 2n equations, indexed by d,
    whose solutions are the weak witnesses (b, c) of x with θ(b), θ(c)
    < n = θ(x):

        Σ_{i,j} C(i, m) x_j^(m) b_i + x_j C(j, m) c_i^(m) = δ_{d,0}

    with m = i+j-d.  Binomials outside their support are zero.  It
    fails with DegreeZeroTarget if θ(x) = 0 and with ZeroArgument for x
    = 0.
    """
    if not x:
        raise ZeroArgument('weak witness of zero')
    n = len(x) - 1
    if n == 0:
        raise DegreeZeroTarget(f'{x} has degree 0')
    derivatives = [[derive_n(xj, m) for m in range(n + 1)]
        for xj in x.coeffs]
    ee = []
    for d in range(2*n):
        b_ops, c_ops = [], []
        for i in range(n):
            bb, cc = RatFun.zero(), OrePoly.zero()
            for j, xj in enumerate(x.coeffs):
                m = i + j - d
                if m < 0 or not xj:
                    continue
                if m <= i:
                    bb = bb + derivatives[j][m] * comb(i, m)
                if m <= j:
                    cc = op_add(cc, OrePoly.monomial(xj * comb(j, m), m))
            b_ops.append(bb)
            c_ops.append(cc)
        ee.append(CoefficientEquation(d, b_ops, c_ops, _kronecker(d)))
    return ee


def eliminate_b(
    equations: list[CoefficientEquation], x: OrePoly
) -> tuple[EliminationTable, LinearDiffSystem]:
    """
    eliminate_b solves the equations d = 2n-1 down to n for b_{d-n}:

        b_i = -x_n^-1 (Σ_j L^c_{d,j}(c_j) + Σ_{k>i} L^b_{d,k} b_k)

    and substitutes the result into the equations d < n which gives the
    n×n system Σ_i P[d][i](c_i) = δ_{d,0}.
    """
    n = len(x) - 1
    inv = op_embed(-rf_inv(x.leading))
    A = [[OrePoly.zero()] * n for _ in range(n)]
    for d in range(2*n - 1, n - 1, -1):
        i, eq = d - n, equations[d]
        for j in range(n):
            acc = eq.c_ops[j]
            for k in range(i + 1, n):
                if eq.b_ops[k] and A[k][j]:
                    acc = op_add(acc, op_mul(op_embed(eq.b_ops[k]), A[k][j]))
            A[i][j] = op_mul(inv, acc)
    for i in range(n):
        for j in range(i):
            if A[i][j]:
                raise InvariantError(f'elimination entry ({i}, {j}) != 0')
    P = []
    for d in range(n):
        eq, row = equations[d], []
        for i in range(n):
            acc = eq.c_ops[i]
            for k in range(n):
                if eq.b_ops[k] and A[k][i]:
                    acc = op_add(acc, op_mul(op_embed(eq.b_ops[k]), A[k][i]))
            row.append(acc)
        P.append(row)
    return EliminationTable(A), LinearDiffSystem(
        P, [eq.rhs for eq in equations[:n]])


def verify_witness(w: WitnessPair) -> bool:
    """verify_witness checks w's defining identity exactly."""
    if w.flavor is Flavor.WEAK:
        return op_add(op_mul(w.b, w.target), op_mul(w.target, w.c)
            ) == OrePoly.one()
    if w.anchor is None:
        return False
    return op_add(op_mul(w.anchor, w.b), op_mul(w.c, w.anchor)) == w.target


def _verified(w: WitnessPair) -> WitnessPair:
    if not verify_witness(w):
        raise WitnessNotVerified(f'{w.flavor.value} witness of '
            f'{format_operator(w.target)} failed: {w}')
    return w


def weak_witness(
    x: OrePoly, oracle: SurjectivityOracle, log: Log | None = None
) -> WitnessPair:
    """
    weak_witness returns a verified pair (b, c) with 1 = b·x + x·c and
    θ(b), θ(c) < θ(x).  Operators of degree 0 are units: b = x^-1, c =
    0.  weak_witness fails with OracleIncomplete if given oracle can't
    solve a scalar equation of the reduced system.
    """
    if not x:
        raise ZeroArgument('weak witness of zero')
    if theta(x) == 0:
        return _verified(WitnessPair(op_embed(rf_inv(x.leading)),
            OrePoly.zero(), x, Flavor.WEAK))
    ee = build_coefficient_equations(x)
    table, sys = eliminate_b(ee, x)
    if log:
        log(f'weak witness of {x}: {len(ee)} coefficient equations')
    c = solve(sys, oracle, log)
    b = [table.b_of(i, c) for i in range(len(c))]
    return _verified(WitnessPair(OrePoly(b), OrePoly(c), x, Flavor.WEAK))


def fadelian_witness(
    x: OrePoly, a: OrePoly, oracle: SurjectivityOracle,
    side: Side = Side.RIGHT, log: Log | None = None
) -> WitnessPair:
    """
    fadelian_witness returns a verified pair (B, C) with x = a·B + C·a.

    RIGHT: with a right common multiple a·b = x·c and a weak witness
    1 = k'·(ca) + (ca)·k of c·a:  B = b·a·k, C = x·k'·c.

    LEFT: with a left common multiple b·x = c·a and a weak witness
    1 = l·(ab) + (ab)·k of a·b:  B = b·k·x, C = l·a·c.

    Zero x gives (0, 0), a unit a gives (a^-1·x, 0) and x = 1 reads the
    weak witness of a.  It fails with ZeroArgument for a = 0 and with
    OracleIncomplete if the weak witness can't be found.
    """
    if not a:
        raise ZeroArgument('fadelian witness for a zero anchor')
    Z = OrePoly.zero()
    if not x:
        return _verified(WitnessPair(Z, Z, x, Flavor.FULL, a))
    if theta(a) == 0:
        return _verified(WitnessPair(op_mul(op_embed(rf_inv(a.leading)), x),
            Z, x, Flavor.FULL, a))
    if x == OrePoly.one():
        w = weak_witness(a, oracle, log)
        return _verified(WitnessPair(w.c, w.b, x, Flavor.FULL, a))
    if side is Side.RIGHT:
        b, c, _ = common_multiple(Side.RIGHT, a, x)
        if log:
            log(f'right common multiple: b = {b}, c = {c}')
        w = weak_witness(op_mul(c, a), oracle, log)
        B = op_mul(op_mul(b, a), w.c)
        C = op_mul(op_mul(x, w.b), c)
    else:
        b, c, _ = common_multiple(Side.LEFT, x, a)
        if log:
            log(f'left common multiple: b = {b}, c = {c}')
        w = weak_witness(op_mul(a, b), oracle, log)
        B = op_mul(op_mul(b, w.c), x)
        C = op_mul(op_mul(w.b, a), c)
    return _verified(WitnessPair(B, C, x, Flavor.FULL, a))


def inverse_by_evaluation(w: WitnessPair) -> RatFun:
    """
    inverse_by_evaluation extracts the inverse of a from a weak witness
    1 = b·(aδ) + (aδ)·c: evaluating at 1 gives a·(c(1))' = 1.
    """
    x = w.target
    if w.flavor is not Flavor.WEAK or theta(x) != 1 or x.coeffs[0]:
        raise ValueError(f'{format_operator(x)} is not of the form a*D')
    if not verify_witness(w):
        raise WitnessNotVerified(f'weak witness of {x} failed: {w}')
    u = derive(op_apply(w.c, RatFun.one()))
    if x.leading * u != RatFun.one():
        raise WitnessNotVerified(f'{u} is no inverse of {x.leading}')
    return u


def preimage_by_evaluation(w: WitnessPair) -> RatFun:
    """
    preimage_by_evaluation extracts a preimage of f under U from a full
    witness f = (Uδ)·B + C·(Uδ): evaluating at 1 gives f = U((B(1))').
    """
    if (w.flavor is not Flavor.FULL or w.anchor is None or not w.anchor
            or w.anchor.coeffs[0] or theta(w.target) > 0):
        raise ValueError('witness is not of the form f = (U*D)*B + C*(U*D)')
    if not verify_witness(w):
        raise WitnessNotVerified(f'full witness failed: {w}')
    U, f = OrePoly(w.anchor.coeffs[1:]), w.target.coeff(0)
    g = derive(op_apply(w.b, RatFun.one()))
    if op_apply(U, g) != f:
        raise WitnessNotVerified(f'{g} is no preimage of {f}')
    return g


def inverse(a: RatFun, oracle: SurjectivityOracle, log: Log | None = None
) -> tuple[RatFun, WitnessPair]:
    """
    inverse computes a weak witness of a·δ and returns the inverse of a
    extracted from it together with the witness.
    """
    w = weak_witness(op_mul(op_embed(a), op_delta()), oracle, log)
    return inverse_by_evaluation(w), w


def preimage(
    U: OrePoly, f: RatFun, oracle: SurjectivityOracle,
    log: Log | None = None
) -> tuple[RatFun, WitnessPair]:
    """
    preimage computes a full witness of f for the anchor U·δ and
    returns the preimage of f under U extracted from it together with
    the witness.
    """
    w = fadelian_witness(
        op_embed(f), op_mul(U, op_delta()), oracle, log=log)
    return preimage_by_evaluation(w), w

