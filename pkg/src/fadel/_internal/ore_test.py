# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

from testcontext import testing
import testfixtures as fx
from sympy.polys.domains import QQ

from fadel._internal.ratfun import RatFun, derive
from fadel._internal.ore import (
    OrePoly, Side, MINUS_INFINITY, DivisionByZeroOperator, ZeroArgument,
    op_embed, op_add, op_neg, op_mul, op_apply, op_delta, theta, divide,
    adjoint, common_multiple, commutator, format_operator)

t_ = RatFun.t()
D = op_delta()


class AnOrePoly:

    def strips_vanishing_leading_coefficients(self, t: testing.T):
        u = OrePoly([t_, RatFun.zero(), RatFun.zero()])
        t.eq(len(u), 1)
        t.eq(theta(u), 0)

    def embeds_field_elements(self, t: testing.T):
        t.falsy(op_embed(RatFun.zero()))
        t.eq(op_embed(t_).coeffs, (t_, ))
        f = fx.Random(3).ratfun()
        t.eq(op_apply(op_embed(t_), f), t_ * f)

    def adds_coefficientwise(self, t: testing.T):
        t.falsy(op_add(D, op_neg(D)))
        t.eq(op_add(t_*D, D), OrePoly.monomial(t_ + 1, 1))
        u = fx.Random(4).operator()
        t.eq(op_add(u, OrePoly.zero()), u)

    def is_formatted_in_cli_syntax(self, t: testing.T):
        t.eq(format_operator(D*t_), 't*D + 1')
        t.eq(format_operator(-(t_**2 + 1)*D**2 + 3), '(-t^2 - 1)*D^2 + 3')
        t.eq(format_operator(D**2 + t_/(t_ - 1)), 'D^2 + t/(t - 1)')
        t.eq(format_operator((1/t_)*D), '(1/t)*D')
        t.eq(format_operator(OrePoly.zero()), '0')
        t.eq(format_operator(t_*D**2, unicode=True), 't*δ²')

    def leaves_foreign_operands_to_python(self, t: testing.T):
        t.raises(lambda: D + object(), TypeError)
        t.raises(lambda: object() * D, TypeError)
        t.eq(2*D - D, D)


class Multiplication:

    def commutes_d_with_t(self, t: testing.T):
        t.eq(op_mul(D, op_embed(t_)), t_*D + 1)

    def applies_leibniz_formula(self, t: testing.T):
        t.eq(op_mul(D**2, op_embed(t_)), t_*D**2 + 2*D)

    def has_a_unit(self, t: testing.T):
        u = fx.Random(5).operator()
        t.eq(op_mul(u, OrePoly.one()), u)
        t.eq(op_mul(OrePoly.one(), u), u)

    def realizes_the_commutation_law(self, t: testing.T):
        rnd = fx.Random(6)
        for _ in range(500):
            x = rnd.ratfun()
            t.eq(commutator(D, op_embed(x)), op_embed(derive(x)))

    def is_associative_and_distributive(self, t: testing.T):
        rnd = fx.Random(7)
        for _ in range(30):
            u, v, w = (rnd.operator(3), rnd.operator(3), rnd.operator(3))
            t.eq((u*v)*w, u*(v*w))
            t.eq(u*(v + w), u*v + u*w)
            t.eq((u + v)*w, u*w + v*w)

    def adds_degrees(self, t: testing.T):
        rnd = fx.Random(8)
        for _ in range(30):
            u, v = rnd.operator(3), rnd.operator(3)
            t.eq(theta(u*v), theta(u) + theta(v))
            t.truthy(theta(u + v) <= max(theta(u), theta(v)))


class Application:

    def differentiates_term_by_term(self, t: testing.T):
        t.eq(op_apply(D**2 + t_, t_**2), 2 + t_**3)

    def of_the_identity_is_the_identity(self, t: testing.T):
        f = fx.Random(9).ratfun()
        t.eq(op_apply(OrePoly.one(), f), f)

    def is_an_algebra_morphism(self, t: testing.T):
        rnd = fx.Random(10)
        for _ in range(20):
            u, v, f = rnd.operator(2), rnd.operator(2), rnd.ratfun()
            t.eq(op_apply(u*v, f), op_apply(u, op_apply(v, f)))

    def separates_distinct_normal_forms(self, t: testing.T):
        rnd = fx.Random(11)
        for _ in range(20):
            u, v = rnd.operator(2), rnd.operator(2)
            if u == v:
                continue
            d = max(theta(u), theta(v))
            t.truthy(any(op_apply(u, t_**j) != op_apply(v, t_**j)
                for j in range(2*int(d) + 3)))


class Theta:

    def of_zero_is_minus_infinity(self, t: testing.T):
        t.eq(theta(OrePoly.zero()), MINUS_INFINITY)

    def is_the_highest_power_of_d(self, t: testing.T):
        t.eq(theta(t_*D**2 + 1), 2)


class Divide:

    def finds_exact_factors(self, t: testing.T):
        t.eq(divide(Side.LEFT, D**2, D), (D, OrePoly.zero()))

    def leaves_a_remainder_of_lower_degree(self, t: testing.T):
        t.eq(divide(Side.LEFT, t_*D + 1, D), (op_embed(t_), OrePoly.one()))

    def puts_the_quotient_on_the_requested_side(self, t: testing.T):
        q, r = divide(Side.RIGHT, t_*D + 1, D)
        t.eq(D*q + r, t_*D + 1)
        t.eq(q, op_embed(t_))
        t.eq(r, OrePoly.zero())

    def fails_for_a_zero_divisor(self, t: testing.T):
        t.raises(lambda: divide(Side.LEFT, D, OrePoly.zero()),
            DivisionByZeroOperator)

    def recomposes_exactly_on_both_sides(self, t: testing.T):
        rnd = fx.Random(12)
        for _ in range(500):
            x = rnd.operator(4, nonzero=False)
            y = rnd.operator(4)
            q, r = divide(Side.LEFT, x, y)
            t.eq(q*y + r, x)
            t.truthy(theta(r) < theta(y))
            q, r = divide(Side.RIGHT, x, y)
            t.eq(y*q + r, x)
            t.truthy(theta(r) < theta(y))

    def has_unique_results(self, t: testing.T):
        rnd = fx.Random(13)
        for _ in range(20):
            y, q0 = rnd.operator(2), rnd.operator(2, nonzero=False)
            r0 = rnd.operator(int(theta(y)) - 1, nonzero=False) if theta(
                y) > 0 else OrePoly.zero()
            t.eq(divide(Side.LEFT, q0*y + r0, y), (q0, r0))
            t.eq(divide(Side.RIGHT, y*q0 + r0, y), (q0, r0))


class CommonMultiple:

    def of_d_and_t(self, t: testing.T):
        b, c, m = common_multiple(Side.RIGHT, D, op_embed(t_))
        t.eq(b, op_embed(t_))
        t.eq(c, D + 1/t_)
        t.eq(m, t_*D + 1)

    def of_equal_arguments_is_trivial(self, t: testing.T):
        u = fx.Random(14).operator(2, exact=True)
        t.eq(common_multiple(Side.RIGHT, u, u),
            (OrePoly.one(), OrePoly.one(), u))

    def fails_for_a_zero_argument(self, t: testing.T):
        t.raises(lambda: common_multiple(Side.RIGHT, D, OrePoly.zero()),
            ZeroArgument)
        t.raises(lambda: common_multiple(Side.LEFT, OrePoly.zero(), D),
            ZeroArgument)

    def realizes_the_right_ore_condition(self, t: testing.T):
        rnd = fx.Random(15)
        for _ in range(200):
            a = rnd.operator(3, polynomial=True, degree=1)
            x = rnd.operator(3, polynomial=True, degree=1)
            b, c, m = common_multiple(Side.RIGHT, a, x)
            t.truthy(b and c and m)
            t.eq(a*b, x*c)
            t.truthy(theta(m) <= theta(a) + theta(x))

    def realizes_the_left_ore_condition(self, t: testing.T):
        rnd = fx.Random(16)
        for _ in range(50):
            a = rnd.operator(3, polynomial=True, degree=1)
            x = rnd.operator(3, polynomial=True, degree=1)
            b, c, m = common_multiple(Side.LEFT, a, x)
            t.truthy(b and c and m)
            t.eq(b*a, m)
            t.eq(c*x, m)
            t.truthy(theta(b) <= theta(x) and theta(c) <= theta(a))

    def handles_rational_coefficients(self, t: testing.T):
        rnd = fx.Random(17)
        for _ in range(10):
            a, x = rnd.operator(2, degree=1), rnd.operator(2, degree=1)
            b, c, m = common_multiple(Side.RIGHT, a, x)
            t.eq((a*b, x*c), (m, m))
            t.eq(c.leading, RatFun.one())
            b, c, m = common_multiple(Side.LEFT, a, x)
            t.eq((b*a, c*x), (m, m))

    def of_a_constant_and_d(self, t: testing.T):
        b, c, m = common_multiple(Side.LEFT, op_embed(RatFun.const(2)), D)
        t.eq((b, c, m), (D*RatFun.const(QQ(1, 2)), OrePoly.one(), D))


class Adjoint:

    def negates_d(self, t: testing.T):
        t.eq(adjoint(D), -D)
        t.eq(adjoint(op_embed(t_)), op_embed(t_))
        t.eq(adjoint(t_*D), -(t_*D) - 1)

    def is_an_involution_reversing_products(self, t: testing.T):
        rnd = fx.Random(18)
        for _ in range(20):
            u, v = rnd.operator(2), rnd.operator(2)
            t.eq(adjoint(adjoint(u)), u)
            t.eq(adjoint(u*v), adjoint(v)*adjoint(u))
            t.eq(theta(adjoint(u)), theta(u))


if __name__ == '__main__':
    testing.run(AnOrePoly)
    testing.run(Multiplication)
    testing.run(Application)
    testing.run(Theta)
    testing.run(Divide)
    testing.run(CommonMultiple)
    testing.run(Adjoint)
