# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

"""
module diag provides the reduction of a square system of linear
differential equations

    Σ_i P[j][i](b_i) = rhs[j],  j = 0, ..., r

over R[δ] to an equivalent diagonal system by elementary row and column
operations driven by left and right Euclidean pseudo-division, i.e.
division after scaling a row or column by a nonzero polynomial.  Every
step is recorded in a ReductionTrace; column steps are accumulated in a
recovery matrix mapping solutions of the diagonal system back to
solutions of the original one.  Scalar equations P(b) = g of the
diagonal system are handed to a SurjectivityOracle, see module oracles.
"""

from dataclasses import dataclass, field
from typing import Callable, Protocol, Iterator, Sequence

from fadel._internal.ratfun import RatFun, POLY_RING, InvariantError
from fadel._internal.ore import (
    OrePoly, theta, op_embed, op_mul, op_sub, op_apply, MINUS_INFINITY)

Log = Callable[[str], None]
Matrix = list[list[OrePoly]]


class OracleIncomplete(Exception):
    """
    OracleIncomplete is raised if an oracle couldn't solve a scalar
    equation.  It doesn't state that no solution exists.
    """
    pass


class Inconsistent(Exception):
    pass


class SolutionNotVerified(InvariantError):
    pass


class SurjectivityOracle(Protocol):
    """
    SurjectivityOracle solves scalar equations P(b) = g.  A returned
    value must satisfy the equation exactly, None means "not found" and
    not "there is no solution".
    """

    def solve_scalar(self, P: OrePoly, g: RatFun) -> RatFun | None: ...


@dataclass
class LinearDiffSystem:
    """
    LinearDiffSystem is a square system whose j-th equation reads
    Σ_i P[j][i](b_i) = rhs[j] for unknown field elements b_i.
    """
    P: Matrix
    rhs: list[RatFun]

    def __post_init__(self) -> None:
        if len(self.P) != len(self.rhs) or any(
                len(row) != len(self.rhs) for row in self.P):
            raise ValueError('linear differential system must be square')

    @property
    def size(self) -> int:
        return len(self.rhs)


@dataclass(frozen=True)
class RowSwap:
    i: int
    j: int

    def __str__(self) -> str:
        return f'swap rows {self.i}, {self.j}'


@dataclass(frozen=True)
class ColSwap:
    i: int
    j: int

    def __str__(self) -> str:
        return f'swap columns {self.i}, {self.j}'


@dataclass(frozen=True)
class RowSub:
    """RowSub is row_i ← row_i − A∘row_j and rhs_i ← rhs_i − A(rhs_j)."""
    i: int
    j: int
    A: OrePoly

    def __str__(self) -> str:
        return f'row {self.i} -= ({self.A})*row {self.j}'


@dataclass(frozen=True)
class ColSub:
    """
    ColSub is col_i ← col_i − col_j∘A, i.e. the substitution
    b_j = b̃_j − A(b̃_i) of the unknowns.
    """
    i: int
    j: int
    A: OrePoly

    def __str__(self) -> str:
        return f'col {self.i} -= col {self.j}*({self.A})'


@dataclass(frozen=True)
class RowScale:
    """RowScale is row_i ← u·row_i and rhs_i ← u·rhs_i for nonzero u."""
    i: int
    u: RatFun

    def __str__(self) -> str:
        return f'row {self.i} *= {self.u}'


@dataclass(frozen=True)
class ColScale:
    """
    ColScale is col_i ← col_i∘u for nonzero u, i.e. the substitution
    b_i = u·b̃_i of the unknowns.
    """
    i: int
    u: RatFun

    def __str__(self) -> str:
        return f'col {self.i} *= {self.u}'


Step = RowSwap | ColSwap | RowSub | ColSub | RowScale | ColScale


@dataclass
class ReductionTrace:
    steps: list[Step] = field(default_factory=lambda: [])

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)


@dataclass
class DiagonalSystem:
    """
    DiagonalSystem is the outcome of a reduction: the scalar equations
    diag[i](b̃_i) = rhs[i] and the recovery matrix such that
    b_i = Σ_j recovery[i][j](b̃_j) solves the reduced system.
    """
    diag: list[OrePoly]
    rhs: list[RatFun]
    recovery: Matrix


class _Reduction:
    """
    _Reduction is the mutable state of a diagonalization.  Rows taking
    part in an elimination are kept primitive with polynomial
    coefficients, divisions are pseudo-divisions scaling a row or column
    by a polynomial so that quotients stay polynomial, too.
    """

    def __init__(self, sys: LinearDiffSystem) -> None:
        n = sys.size
        self.M = [list(row) for row in sys.P]  # type: Matrix
        self.rhs = list(sys.rhs)
        self.R = [[OrePoly.one() if i == j else OrePoly.zero()
            for j in range(n)] for i in range(n)]  # type: Matrix
        self.trace = ReductionTrace()

    def apply(self, step: Step) -> None:
        M, R = self.M, self.R
        match step:
            case RowSwap(i, j):
                M[i], M[j] = M[j], M[i]
                self.rhs[i], self.rhs[j] = self.rhs[j], self.rhs[i]
            case ColSwap(i, j):
                for X in (M, R):
                    for row in X:
                        row[i], row[j] = row[j], row[i]
            case RowSub(i, j, A):
                M[i] = [op_sub(M[i][k], op_mul(A, M[j][k]))
                    for k in range(len(M))]
                self.rhs[i] = self.rhs[i] - op_apply(A, self.rhs[j])
            case ColSub(i, j, A):
                for X in (M, R):
                    for row in X:
                        row[i] = op_sub(row[i], op_mul(row[j], A))
            case RowScale(i, u):
                M[i] = [OrePoly(u*c for c in e.coeffs) for e in M[i]]
                self.rhs[i] = u * self.rhs[i]
            case ColScale(i, u):
                for X in (M, R):
                    for row in X:
                        row[i] = op_mul(row[i], op_embed(u))
        self.trace.steps.append(step)

    def isolated(self, k: int) -> bool:
        """isolated reports if row k and column k vanish off (k, k)."""
        return all(not self.M[k][i] and not self.M[i][k]
            for i in range(len(self.M)) if i != k)

    def pivot(self, k: int) -> tuple[int, int] | None:
        """
        pivot returns the position of a nonzero entry of minimal degree
        in the lower right submatrix starting at (k, k); ties are broken
        by the smaller coefficients, then lowest row, then lowest column.
        """
        best, at = None, None
        n = len(self.M)
        for i in range(k, n):
            for j in range(k, n):
                if not self.M[i][j]:
                    continue
                key = (theta(self.M[i][j]), _size(self.M[i][j]))
                if best is None or key < best:
                    best, at = key, (i, j)
        return at

    def primitive(self, i: int) -> None:
        """
        primitive scales row i by a rational function such that its
        coefficients become polynomials without common factor.
        """
        cc = [c for e in self.M[i] for c in e.coeffs if c]
        if not cc:
            return
        L = POLY_RING.one
        for c in cc:
            L = L.lcm(c.den)
        g = POLY_RING.zero
        for c in cc:
            g = g.gcd(c.num * L.exquo(c.den))
        u = RatFun(L, g.monic())
        if u != 1:
            self.apply(RowScale(i, u))

    def reduce_row(self, i: int, k: int) -> None:
        """
        reduce_row pseudo-divides M[i][k] by the pivot M[k][k] from the
        left: each round scales row i by a polynomial and subtracts a
        polynomial multiple of row k cancelling the leading term.
        """
        y = self.M[k][k]
        while self.M[i][k] and theta(self.M[i][k]) >= theta(y):
            u = self.M[i][k]
            lu, ly = u.leading.num, y.leading.num
            g = lu.gcd(ly)
            s = ly.exquo(g)
            if s != POLY_RING.one:
                self.apply(RowScale(i, RatFun(s)))
            self.apply(RowSub(i, k, OrePoly.monomial(
                RatFun(lu.exquo(g)), int(theta(u) - theta(y)))))
        self.primitive(i)

    def reduce_col(self, j: int, k: int) -> None:
        """
        reduce_col pseudo-divides M[k][j] by the pivot M[k][k] from the
        right by scaling column j with a polynomial and subtracting a
        polynomial multiple of column k.
        """
        y = self.M[k][k]
        while self.M[k][j] and theta(self.M[k][j]) >= theta(y):
            u = self.M[k][j]
            lu, ly = u.leading.num, y.leading.num
            g = lu.gcd(ly)
            w = ly.exquo(g)
            if w != POLY_RING.one:
                self.apply(ColScale(j, RatFun(w)))
            self.apply(ColSub(j, k, OrePoly.monomial(
                RatFun(lu.exquo(g)), int(theta(u) - theta(y)))))


def _size(u: OrePoly) -> int:
    """_size measures u's coefficients by their degrees."""
    return sum(c.num.degree() + c.den.degree() + 1 for c in u.coeffs if c)


def check_dominance(sys: LinearDiffSystem) -> bool:
    """
    check_dominance returns True iff every row's diagonal entry has a
    degree strictly greater than all other entries of its row.
    """
    for j, row in enumerate(sys.P):
        off = max((theta(u) for i, u in enumerate(row) if i != j),
            default=MINUS_INFINITY)
        if not theta(row[j]) > off:
            return False
    return True


def diagonalize(
    sys: LinearDiffSystem, log: Log | None = None
) -> tuple[DiagonalSystem, ReductionTrace]:
    """
    diagonalize reduces given system to an equivalent diagonal system.
    For each k the rows from k on are made primitive and a pivot of
    minimal degree is moved to (k, k); the entries below it are reduced
    by left and the entries right of it by right pseudo-division.
    Nonzero remainders have a smaller degree than the pivot, hence
    swapping one of them in strictly decreases the pivot's degree which
    terminates the loop.  An already isolated nonzero (k, k) entry is
    kept.  The reduction stops as soon as the remaining submatrix
    vanishes.
    """
    red, n = _Reduction(sys), sys.size
    for k in range(n):
        while True:
            if red.M[k][k] and red.isolated(k):
                break
            for i in range(k, n):
                red.primitive(i)
            at = red.pivot(k)
            if at is None:
                return _diagonal(red), red.trace
            if at[0] != k:
                red.apply(RowSwap(k, at[0]))
            if at[1] != k:
                red.apply(ColSwap(k, at[1]))
            if log:
                log(f'pivot {k}: {red.M[k][k]}')
            for i in range(k + 1, n):
                red.reduce_row(i, k)
            for j in range(k + 1, n):
                red.reduce_col(j, k)
    return _diagonal(red), red.trace


def _diagonal(red: _Reduction) -> DiagonalSystem:
    n = len(red.M)
    for i in range(n):
        for j in range(n):
            if i != j and red.M[i][j]:
                raise InvariantError(f'entry ({i}, {j}) not eliminated')
    return DiagonalSystem(
        [red.M[i][i] for i in range(n)], red.rhs, red.R)


def replay(
    sys: LinearDiffSystem, trace: ReductionTrace
) -> tuple[Matrix, list[RatFun], Matrix]:
    """
    replay applies given trace's steps to given system and returns the
    resulting matrix, right hand side and recovery matrix.
    """
    red = _Reduction(sys)
    for step in trace:
        red.apply(step)
    return red.M, red.rhs, red.R


def substitute(sys: LinearDiffSystem, b: Sequence[RatFun]) -> list[RatFun]:
    """substitute evaluates the left hand sides of sys at b."""
    out = []
    for row in sys.P:
        v = RatFun.zero()
        for P, bi in zip(row, b):
            v = v + op_apply(P, bi)
        out.append(v)
    return out


def solve(
    sys: LinearDiffSystem, oracle: SurjectivityOracle, log: Log | None = None
) -> list[RatFun]:
    """
    solve returns a solution of given system.  It diagonalizes the
    system, solves the diagonal's scalar equations by given oracle and
    maps the result back through the recovery matrix.  A vanishing
    diagonal entry with vanishing right hand side leaves a free unknown
    which is set to zero.  solve fails with OracleIncomplete if the
    oracle finds no solution of a scalar equation and with Inconsistent
    if a vanishing diagonal entry meets a nonzero right hand side.  The
    returned solution is verified by substitution.
    """
    ds, _ = diagonalize(sys, log)
    bt = []
    for i, (P, g) in enumerate(zip(ds.diag, ds.rhs)):
        if not P:
            if g:
                raise Inconsistent(f'equation {i}: 0 = {g}')
            bt.append(RatFun.zero())
            continue
        b = oracle.solve_scalar(P, g)
        if b is None:
            raise OracleIncomplete(f'({P})(b) = {g}')
        if log:
            log(f'({P})(b) = {g}: b = {b}')
        bt.append(b)
    n = sys.size
    solution = []
    for i in range(n):
        v = RatFun.zero()
        for j in range(n):
            if ds.recovery[i][j] and bt[j]:
                v = v + op_apply(ds.recovery[i][j], bt[j])
        solution.append(v)
    if substitute(sys, solution) != list(sys.rhs):
        raise SolutionNotVerified('solution fails substitution')
    return solution
