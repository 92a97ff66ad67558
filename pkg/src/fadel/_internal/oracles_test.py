# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

from sympy.polys.domains import QQ

from testcontext import testing
from fadel._internal.ratfun import RatFun, T
from fadel._internal.ore import op_delta, op_embed, op_apply
from fadel._internal.oracles import (
    solve_linear, oracle_order0, oracle_polynomial, oracle_rational, chain,
    default_oracle)

t_ = RatFun.t()
D = op_delta()


class SolveLinear:

    def finds_a_combination(self, t: testing.T):
        t.eq(solve_linear([T**2, T, T**0], 3*T**2 + 1),
            [QQ(3), QQ(0), QQ(1)])

    def sets_free_unknowns_to_zero(self, t: testing.T):
        t.eq(solve_linear([T, 2*T], 4*T), [QQ(4), QQ(0)])

    def reports_inconsistency(self, t: testing.T):
        t.eq(solve_linear([T**2], T), None)


class Order0:

    def divides(self, t: testing.T):
        b = oracle_order0().solve_scalar(op_embed(t_**2 + 1), t_)
        t.eq(b, t_/(t_**2 + 1))

    def ignores_higher_orders(self, t: testing.T):
        t.eq(oracle_order0().solve_scalar(D, t_), None)


class Polynomial:

    def integrates_polynomials(self, t: testing.T):
        t.eq(oracle_polynomial().solve_scalar(D, 2*t_), t_**2)

    def fails_without_polynomial_antiderivative(self, t: testing.T):
        t.eq(oracle_polynomial().solve_scalar(D, 1/t_), None)

    def returns_a_solution_of_minimal_degree(self, t: testing.T):
        b = oracle_polynomial().solve_scalar(D**2 + 1, t_**2)
        t.eq(b, t_**2 - 2)

    def respects_its_bound(self, t: testing.T):
        t.eq(oracle_polynomial(bound=3).solve_scalar(D, t_**3), None)
        t.eq(oracle_polynomial(bound=4).solve_scalar(D, t_**3),
            t_**4 / 4)

    def handles_rational_coefficients(self, t: testing.T):
        P = D + 1/t_
        b = oracle_polynomial().solve_scalar(P, 2*RatFun.one())
        t.eq(op_apply(P, b), 2*RatFun.one())


class Rational:

    def finds_solutions_with_poles(self, t: testing.T):
        g = -1/t_**2
        t.eq(oracle_rational().solve_scalar(D, g), 1/t_)

    def finds_solutions_of_first_order_equations(self, t: testing.T):
        P = (t_ - 1)*D + 1
        g = RatFun.one()
        b = oracle_rational().solve_scalar(P, g)
        t.fatal_if_not(t.truthy(b is not None))
        t.eq(op_apply(P, b), g)

    def fails_on_logarithms(self, t: testing.T):
        t.eq(oracle_rational().solve_scalar(D, 1/t_), None)


class Chain:

    def returns_the_first_answer(self, t: testing.T):
        o = chain(oracle_order0(), oracle_polynomial())
        t.eq(o.solve_scalar(op_embed(t_), t_), RatFun.one())
        t.eq(o.solve_scalar(D, RatFun.one()), t_)
        t.eq(o.solve_scalar(D, 1/t_), None)

    def is_the_default(self, t: testing.T):
        t.eq(default_oracle().solve_scalar(D, -1/t_**2), 1/t_)


if __name__ == '__main__':
    testing.run(SolveLinear)
    testing.run(Order0)
    testing.run(Polynomial)
    testing.run(Rational)
    testing.run(Chain)
