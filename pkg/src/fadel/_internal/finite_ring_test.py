# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

from testcontext import testing
import testfixtures as fx
from fadel._internal.ore import Side
from fadel._internal.finite_ring import (
    FiniteRing, AxiomViolation, NotADomain, TableFormatError, Implication,
    make_zmod, make_matrix_ring_2x2_f2, make_field_f4, make_product,
    load_table, is_isomorphic, is_commutative, is_division_ring,
    is_integral, is_simple, is_weakly_fadelian, is_fadelian, is_ore,
    find_witness, ideal, check_implications, corpus, PASS, VACUOUS,
    FAIL)

Z2_TABLE = """ring 2
0 1
1 0
0 0
0 1
0 1
"""

PRIMES = (2, 3, 5, 7, 11)


class AFiniteRing:

    def has_the_size_of_its_tables(self, t: testing.T):
        t.eq(make_zmod(5).size, 5)
        t.eq(make_matrix_ring_2x2_f2().size, 16)
        t.eq(make_field_f4().size, 4)

    def needs_at_least_two_elements(self, t: testing.T):
        t.raises(lambda: make_zmod(1), ValueError)

    def negates(self, t: testing.T):
        t.eq(make_zmod(6).neg(2), 4)

    def checks_its_axioms(self, t: testing.T):
        R = make_zmod(6)
        t.raises(lambda: FiniteRing(R.add, R.mul, 0, 0), AxiomViolation)
        t.raises(lambda: FiniteRing(R.add, R.mul[:5], 0, 1), AxiomViolation)

    def detects_every_corrupted_multiplication(self, t: testing.T):
        rnd = fx.Random(50)
        for R in (make_zmod(6), make_matrix_ring_2x2_f2()):
            for _ in range(20):
                mul = rnd.corrupted_mul(R)
                t.raises(lambda: FiniteRing(R.add, mul, R.zero, R.one),
                    AxiomViolation)

    def is_isomorphic_to_chinese_remainders(self, t: testing.T):
        Z6 = make_zmod(6)
        P = make_product(make_zmod(2), make_zmod(3))
        t.truthy(is_isomorphic(Z6, P, [k % 2 * 3 + k % 3 for k in range(6)]))
        t.falsy(is_isomorphic(Z6, P, list(range(6))))


class LoadTable:

    def reads_the_table_format(self, t: testing.T):
        R = load_table(Z2_TABLE)
        t.truthy(is_isomorphic(R, make_zmod(2), [0, 1]))

    def rejects_a_missing_header(self, t: testing.T):
        t.raises(lambda: load_table('2\n0 1'), TableFormatError)

    def rejects_non_integers(self, t: testing.T):
        t.raises(lambda: load_table(Z2_TABLE.replace('1 0', '1 x', 1)),
            TableFormatError)

    def rejects_missing_entries(self, t: testing.T):
        t.raises(lambda: load_table(Z2_TABLE.rsplit('\n', 2)[0]),
            TableFormatError)

    def rejects_tables_which_are_no_rings(self, t: testing.T):
        t.raises(lambda: load_table(Z2_TABLE.replace('1 0', '1 1', 1)),
            AxiomViolation)


class Predicates:

    def classify_prime_fields(self, t: testing.T):
        for p in PRIMES:
            R = make_zmod(p)
            t.truthy(is_weakly_fadelian(R))
            t.truthy(is_fadelian(R))
            t.truthy(is_division_ring(R))

    def reject_z4(self, t: testing.T):
        t.falsy(is_weakly_fadelian(make_zmod(4)))

    def reject_the_matrix_ring(self, t: testing.T):
        M = make_matrix_ring_2x2_f2()
        t.falsy(is_weakly_fadelian(M))
        t.falsy(is_fadelian(M))
        t.falsy(is_integral(M))
        t.falsy(is_commutative(M))
        t.truthy(is_simple(M))

    def find_zero_divisors(self, t: testing.T):
        t.falsy(is_integral(make_zmod(6)))
        t.falsy(is_simple(make_zmod(6)))
        t.eq(ideal(make_zmod(6), 2), frozenset({0, 2, 4}))

    def decide_the_ore_condition_of_fields(self, t: testing.T):
        R = make_zmod(7)
        t.truthy(is_integral(R) and is_simple(R))
        t.truthy(is_ore(Side.RIGHT, R))
        t.truthy(is_ore(Side.LEFT, R))

    def need_a_domain_for_the_ore_condition(self, t: testing.T):
        t.raises(lambda: is_ore(Side.RIGHT, make_zmod(6)), NotADomain)

    def scan_in_parallel(self, t: testing.T):
        for R in (make_zmod(5), make_zmod(4)):
            t.eq(is_weakly_fadelian(R, workers=2), is_weakly_fadelian(R))

    def find_witnesses(self, t: testing.T):
        R = make_zmod(5)
        b, c = find_witness(R, 3, 2)
        t.eq(R.add[R.mul[2][b]][R.mul[c][2]], 3)
        t.eq(find_witness(make_zmod(4), 1, 2), None)

    def separate_fields_among_commutative_rings(self, t: testing.T):
        for R in corpus():
            if not is_commutative(R):
                continue
            t.eq(is_weakly_fadelian(R), is_division_ring(R))


class Implications:

    def are_vacuous_for_z4(self, t: testing.T):
        report = check_implications(make_zmod(4))
        t.truthy(all(i.status == VACUOUS for i in report.implications))

    def pass_for_z5(self, t: testing.T):
        report = check_implications(make_zmod(5))
        t.truthy(all(i.status == PASS for i in report.implications))
        t.eq(report.predicates['weakly_fadelian'], True)

    def leave_ore_undecided_for_non_domains(self, t: testing.T):
        report = check_implications(make_zmod(6))
        t.eq(report.predicates['ore_right'], None)

    def hold_on_the_corpus(self, t: testing.T):
        names = []
        for R in corpus():
            names.append(R.name)
            report = check_implications(R, log=t.log)
            t.eq(report.violations, [])
            t.eq(report.predicates['weakly_fadelian'],
                report.predicates['fadelian'])
        t.in_('M2(F2)', names)
        t.in_('Z/2xZ/3', names)
        t.eq(len(names), 14)

    def respect_the_size_cap(self, t: testing.T):
        t.eq(len(list(corpus(max_size=6))), 7)

    def fail_on_a_true_premise_and_false_conclusion(self, t: testing.T):
        t.eq(Implication('p => q', True, False).status, FAIL)
        t.eq(Implication('p => q', False, False).status, VACUOUS)
        t.eq(Implication('p => q', True, True).status, PASS)


if __name__ == '__main__':
    testing.run(AFiniteRing)
    testing.run(LoadTable)
    testing.run(Predicates)
    testing.run(Implications)
