# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

from sympy.polys.domains import QQ

from testcontext import testing
import testfixtures as fx
from fadel._internal.ratfun import (
    RatFun, POLY_RING, T, DivisionByZero, rf_add, rf_mul, rf_inv, rf_neg,
    rf_eq, derive, derive_n, format_ratfun)

t_ = RatFun.t()


class ARatFun:

    def is_canonical_after_construction(self, t: testing.T):
        f = RatFun(2*T + 2, 2*T**2 - 2)
        t.eq(f.num, POLY_RING.one)
        t.eq(f.den, T - 1)

    def normalizes_zero_to_zero_over_one(self, t: testing.T):
        f = RatFun(POLY_RING.zero, T**2 + 3)
        t.falsy(f)
        t.eq(f.den, POLY_RING.one)

    def fails_with_a_zero_denominator(self, t: testing.T):
        t.raises(lambda: RatFun(T, POLY_RING.zero), DivisionByZero)

    def is_equal_iff_its_difference_is_zero(self, t: testing.T):
        f, g = RatFun(T, T + 1), RatFun(3*T, 3*T + 3)
        t.truthy(rf_eq(f, g))
        t.falsy(f - g)
        t.falsy(rf_eq(f, t_))
        t.truthy(f - t_)

    def compares_to_ints(self, t: testing.T):
        t.truthy(RatFun.const(3) == 3)
        t.truthy(RatFun.one() == 1)
        t.falsy(t_ == 1)

    def provides_its_constant_value(self, t: testing.T):
        t.eq(RatFun.const(QQ(3, 4)).constant(), QQ(3, 4))
        t.raises(lambda: t_.constant(), ValueError)

    def is_formatted_in_cli_syntax(self, t: testing.T):
        t.eq(format_ratfun(RatFun(T**2 + 1, T - 1)), '(t^2 + 1)/(t - 1)')
        t.eq(str(RatFun.poly([QQ(1, 2), 0, -3])), '-3*t^2 + 1/2')
        t.eq(str(-t_), '-t')
        t.eq(str(RatFun.zero()), '0')
        t.eq(format_ratfun(t_**3, unicode=True), 't³')


class FieldOperations:

    def invert_t(self, t: testing.T):
        t.eq(rf_mul(t_, rf_inv(t_)), RatFun.one())

    def add_with_a_common_denominator(self, t: testing.T):
        f = rf_add(RatFun(POLY_RING.one, T - 1),
            RatFun(POLY_RING.one, T + 1))
        t.eq(f, RatFun(2*T, T**2 - 1))

    def invert_polynomials(self, t: testing.T):
        p = RatFun(T**2 + 1)
        t.eq(rf_inv(p) * p, RatFun.one())

    def fail_inverting_zero(self, t: testing.T):
        t.raises(lambda: rf_inv(RatFun.zero()), DivisionByZero)

    def raise_to_negative_powers(self, t: testing.T):
        t.eq(t_**-2, RatFun(POLY_RING.one, T**2))
        t.eq((t_ + 1)**0, RatFun.one())

    def satisfy_the_field_axioms(self, t: testing.T):
        rnd = fx.Random(1)
        for _ in range(40):
            a, b, c = rnd.ratfun(), rnd.ratfun(), rnd.ratfun()
            t.eq((a + b) + c, a + (b + c))
            t.eq((a * b) * c, a * (b * c))
            t.eq(a * (b + c), a*b + a*c)
            t.eq(a + b, b + a)
            t.eq(a * b, b * a)
            t.falsy(rf_add(a, rf_neg(a)))
            if a:
                t.eq(a * rf_inv(a), RatFun.one())


class Derive:

    def maps_constants_to_zero(self, t: testing.T):
        t.eq(derive(RatFun.one()), RatFun.zero())
        t.eq(derive(RatFun.const(QQ(-7, 3))), RatFun.zero())

    def maps_t_to_one(self, t: testing.T):
        t.eq(derive(t_), RatFun.one())

    def applies_the_quotient_rule(self, t: testing.T):
        t.eq(derive(rf_inv(t_)), -RatFun(POLY_RING.one, T**2))

    def is_additive_and_leibniz(self, t: testing.T):
        rnd = fx.Random(2)
        for _ in range(40):
            f, g = rnd.ratfun(), rnd.ratfun()
            t.eq(derive(f + g), derive(f) + derive(g))
            t.eq(derive(f * g), derive(f)*g + f*derive(g))

    def iterates_with_derive_n(self, t: testing.T):
        t.eq(derive_n(t_**3, 2), 6*t_)
        t.eq(derive_n(t_**3, 4), RatFun.zero())
        t.eq(derive_n(t_, 0), t_)


if __name__ == '__main__':
    testing.run(ARatFun)
    testing.run(FieldOperations)
    testing.run(Derive)
