# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

# fadel fixtures provides seeded generators of random test instances.

import random

from sympy.polys.domains import QQ

import testcontext
from fadel._internal.ratfun import RatFun, Rational
from fadel._internal.ore import OrePoly
from fadel._internal.diag import LinearDiffSystem, substitute
from fadel._internal.laurent import from_list
from fadel._internal.finite_ring import FiniteRing, Table

_ = testcontext


class Random:
    """
    Random generates reproducible random rational functions and
    operators of small size, i.e. small degrees and coefficients.
    """

    def __init__(self, seed: int = 0, size: int = 5):
        self.rnd = random.Random(seed)
        self.size = size

    def int_(self, lo: int, hi: int) -> int:
        return self.rnd.randint(lo, hi)

    def rational(self, nonzero: bool = False) -> Rational:
        while True:
            q = QQ(self.rnd.randint(-self.size, self.size),
                self.rnd.randint(1, 3))
            if q or not nonzero:
                return q

    def poly(self, degree: int = 2, nonzero: bool = False) -> RatFun:
        """poly returns a random polynomial of degree at most degree."""
        while True:
            p = RatFun.poly([self.rational() for _ in range(degree + 1)])
            if p or not nonzero:
                return p

    def ratfun(self, degree: int = 2, nonzero: bool = False) -> RatFun:
        """ratfun returns num/den with random polynomials num and den."""
        return self.poly(degree, nonzero) / self.poly(
            self.rnd.randint(0, degree), True)

    def coefficient(self, polynomial: bool, degree: int = 2,
        nonzero: bool = False
    ) -> RatFun:
        if polynomial:
            return self.poly(degree, nonzero)
        return self.ratfun(degree, nonzero)

    def operator(
        self, theta: int = 2, polynomial: bool = False,
        exact: bool = False, nonzero: bool = True, degree: int = 2
    ) -> OrePoly:
        """
        operator returns a random operator of degree at most theta
        (exactly theta if exact is set) with polynomial or rational
        coefficients of degree at most degree.
        """
        n = theta if exact else self.rnd.randint(0, theta)
        while True:
            cc = [self.coefficient(polynomial, degree) for _ in range(n)]
            cc.append(self.coefficient(polynomial, degree, nonzero=exact))
            u = OrePoly(cc)
            if u or not nonzero:
                return u

    def dominant_matrix(
        self, n: int, theta: int = 3, constant: bool = False,
        degree: int = 1
    ) -> list[list[OrePoly]]:
        """
        dominant_matrix returns a random n×n operator matrix whose
        diagonal entries have a degree strictly greater than the other
        entries of their row.  Coefficients are polynomials of degree at
        most degree, constants if constant is set.
        """
        degree = 0 if constant else degree
        rows = []
        for j in range(n):
            d = self.int_(1, theta)
            row = [self.operator(d - 1, polynomial=True, nonzero=False,
                degree=degree) for _ in range(n)]
            row[j] = self.operator(d, polynomial=True, exact=True,
                degree=degree)
            rows.append(row)
        return rows

    def system_with_solution(
        self, n: int, theta: int = 3
    ) -> tuple[LinearDiffSystem, list[RatFun]]:
        """
        system_with_solution applies a random constant coefficient
        dominant matrix to a random polynomial vector b and returns the
        resulting system together with b.
        """
        P = self.dominant_matrix(n, theta, constant=True)
        b = [self.poly(2) for _ in range(n)]
        sys = LinearDiffSystem(P, [RatFun.zero()] * n)
        return LinearDiffSystem(P, substitute(sys, b)), b

    def series_identity(self, r: int) -> tuple:
        """
        series_identity returns (x, a, j, P, k, Q, c, b) of a random
        identity x·X^r = X^j·P·a + a·X^k·Q over operators: the first r
        coefficient pairs (a·w, -w·a) cancel, the pair at index r is
        (c, b) with x = c·a + a·b.
        """
        a = self.operator(2, polynomial=True, degree=1)
        b = self.operator(1, polynomial=True, nonzero=False, degree=1)
        c = self.operator(1, polynomial=True, nonzero=False, degree=1)
        j = self.int_(0, r)
        ww = [OrePoly.zero() if i < j else self.operator(
            1, polynomial=True, nonzero=False, degree=1)
            for i in range(r + 3)]
        pp, qq = [a*w for w in ww], [-(w*a) for w in ww]
        pp[r], qq[r] = c, b
        P = from_list(pp[j:], OrePoly.zero())
        Q = from_list(qq[j:], OrePoly.zero())
        return c*a + a*b, a, j, P, j, Q, c, b

    def corrupted_mul(self, R: FiniteRing) -> Table:
        """
        corrupted_mul returns R's multiplication table with a single
        entry changed, that is neither in the row nor the column of
        zero or one.
        """
        ee = [x for x in R.elements if x not in (R.zero, R.one)]
        x, y = self.rnd.choice(ee), self.rnd.choice(ee)
        v = self.rnd.choice([v for v in R.elements if v != R.mul[x][y]])
        rows = [list(r) for r in R.mul]
        rows[x][y] = v
        return tuple(tuple(r) for r in rows)
