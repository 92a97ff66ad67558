# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

help = """
NAME

fadel - compute explicit witnesses x = a*b + c*a in the ring of
        differential operators over Q(t) and check ring theoretic
        implications on finite rings.

SYNOPSIS
    fadel [--json] [--unicode] [--dbg] [--bound=B] [--pole-order=E]
          [--workers=W] <verb> [verb options] <arguments>

DESCRIPTION
    Operators are written with D for the derivation d/dt and t for the
    variable, e.g. "t*D^2 + (1/t)*D - 3/2".  Multiplication is
    noncommutative and must be written explicitly: "D*t" is t*D + 1
    while "D t" is a syntax error.  Division is allowed by rational
    functions only, e.g. "(t^2+1)/(t-1)".

VERBS
    divide [--side left|right] <X> <Y>
            euclidean division x = q*y + r (left) or x = y*q + r (right).

    weak-witness <X>
            b, c with 1 = b*x + x*c.

    witness [--side left|right] <X> <A>
            b, c with x = a*b + c*a.

    inverse-eval <A>
            the inverse of the rational function a read off a weak
            witness of a*D.

    preimage <U> <F>
            some g with U(g) = f read off a witness of f for U*D.

    apply <U> <F>
            the operator u applied to the rational function f.

    lcm [--side left|right] <A> <X>
            b, c, m with m = a*b = x*c (right) or m = b*a = c*x (left).

    laurent-witness [--base q|ore] [--prec=N] <P> <Q>
            power series B, C with P = Q*B + C*Q for the comma
            separated coefficients P and Q, e.g. "1" and "1,-1".

    check-ring --ring zmod:<n>|m2f2|f4|table:<file>|table:-
            the ring's predicates and the implications between them;
            table:- reads the table from stdin.

    help    prints this text.

COMMAND LINE OPTIONS
    --json  prints one JSON document of schema fadel/1.

    --unicode
            prints δ and superscripts instead of D and ^.

    --dbg   adds the trace of the computation to the output.

    --bound=16
            degree bound of the ansatz solving scalar equations.

    --pole-order=4
            maximal pole order of the rational ansatz.

    --workers=0
            number of processes scanning a finite ring.

    --prec=32
            number of computed and verified series coefficients.

    Options may also be given as --option value.

EXIT CODES
    0 success, 2 parse or usage error, 3 no solution found, 4 violated
    implication, 5 failed internal check.

HAPPY COMPUTING
"""

import sys
from typing import Any, Callable, TextIO

from fadel.algebra import Config
from fadel._internal import reporting
from fadel._internal.ratfun import (
    InvariantError, DivisionByZero, format_ratfun, format_rational)
from fadel._internal.ore import (
    OrePoly, Side, DivisionByZeroOperator, ZeroArgument, op_mul, op_add,
    op_apply, divide, common_multiple, format_operator)
from fadel._internal.diag import OracleIncomplete, Inconsistent
from fadel._internal.oracles import default_oracle
from fadel._internal.witness import (
    DegreeZeroTarget, weak_witness, fadelian_witness, verify_witness,
    inverse, preimage)
from fadel._internal.laurent import (
    OracleFailure, NotNormalized, RationalBase, OperatorBase, from_list,
    laurent_witness)
from fadel._internal.finite_ring import (
    AxiomViolation, TableFormatError, ImplicationViolated, NotADomain,
    ImplicationReport, FiniteRing, make_zmod, make_matrix_ring_2x2_f2,
    make_field_f4, load_table, check_implications)
from fadel._internal.parser import (
    ParseError, NormalizeError, parse, parse_ratfun, parse_series)

ARG_JSON = '--json'
ARG_UNICODE = '--unicode'
ARG_DBG = '--dbg'
ARG_BOUND = '--bound'
ARG_POLE_ORDER = '--pole-order'
ARG_WORKERS = '--workers'
ARG_PREC = '--prec'
ARG_SIDE = '--side'
ARG_BASE = '--base'
ARG_RING = '--ring'
ARG_HELP = '--help'

FLAGS = {ARG_JSON, ARG_UNICODE, ARG_DBG, ARG_HELP}
VALUED = {ARG_BOUND, ARG_POLE_ORDER, ARG_WORKERS, ARG_PREC, ARG_SIDE,
    ARG_BASE, ARG_RING}

RING_ZMOD = 'zmod:'
RING_TABLE = 'table:'
RING_STDIN = '-'

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INCOMPLETE = 3
EXIT_VIOLATION = 4
EXIT_INVARIANT = 5

EXIT_CODES = {
    reporting.STATUS_OK: EXIT_OK,
    reporting.STATUS_USAGE: EXIT_USAGE,
    reporting.STATUS_INCOMPLETE: EXIT_INCOMPLETE,
    reporting.STATUS_VIOLATION: EXIT_VIOLATION,
    reporting.STATUS_INVARIANT: EXIT_INVARIANT,
}

# input errors reported with exit code 2
USAGE_ERRORS = (ParseError, NormalizeError, TableFormatError,
    AxiomViolation, DivisionByZero, DivisionByZeroOperator, ZeroArgument,
    DegreeZeroTarget, NotNormalized, NotADomain, Inconsistent)


class HelpRequest(Exception): pass


class UsageError(Exception): pass


class _Args:
    """_Args holds the parsed command line of one invocation."""

    def __init__(self) -> None:
        self.cfg = Config()
        self.verb = ''
        self.options = dict()  # type: dict[str, str]
        self.positionals = []  # type: list[str]

    def side(self) -> Side:
        v = self.options.get(ARG_SIDE, Side.RIGHT.value)
        try:
            return Side(v)
        except ValueError:
            raise UsageError(f'{ARG_SIDE}: expected left or right; got {v}')

    def expect(self, n: int) -> list[str]:
        if len(self.positionals) != n:
            raise UsageError(f'{self.verb}: expected {n} arguments; '
                f'got {len(self.positionals)}')
        return self.positionals


def _int_option(name: str, value: str, default: int, err: TextIO) -> int:
    try:
        v = int(value)
    except ValueError:
        print(f"couldn't convert {name}={value}; using {default}",
            file=err)
        return default
    if v < 0:
        print(f'{name} must not be negative; using {default}', file=err)
        return default
    return v


def process_args(argv: list[str], err: TextIO = sys.stderr) -> _Args:
    """
    process_args parses the command line argv (without the program
    name).  Malformed numeric values are reported to err and replaced
    by their defaults.
    """
    aa, i = _Args(), 0
    while i < len(argv):
        arg = argv[i]
        i += 1
        if arg == 'help' and not aa.verb:
            raise HelpRequest()
        if not arg.startswith('--'):
            if not aa.verb:
                aa.verb = arg
            else:
                aa.positionals.append(arg)
            continue
        name, value = arg, None
        if '=' in arg:
            name, value = arg.split('=', 1)
        if name in FLAGS:
            if value is not None:
                raise UsageError(f'{name} takes no value')
            if name == ARG_HELP:
                raise HelpRequest()
            if name == ARG_JSON:
                aa.cfg.reporter = reporting.JSON()
            aa.cfg.unicode |= name == ARG_UNICODE
            aa.cfg.dbg |= name == ARG_DBG
            continue
        if name not in VALUED:
            raise UsageError(f'unknown option {name}')
        if value is None:
            if i >= len(argv):
                raise UsageError(f'{name}: missing value')
            value, i = argv[i], i + 1
        aa.options[name] = value
    cfg = aa.cfg
    if ARG_BOUND in aa.options:
        cfg.bound = _int_option(ARG_BOUND, aa.options[ARG_BOUND],
            cfg.bound, err)
    if ARG_POLE_ORDER in aa.options:
        cfg.pole_order = _int_option(ARG_POLE_ORDER,
            aa.options[ARG_POLE_ORDER], cfg.pole_order, err)
    if ARG_WORKERS in aa.options:
        cfg.workers = _int_option(ARG_WORKERS, aa.options[ARG_WORKERS],
            cfg.workers, err)
    if ARG_PREC in aa.options:
        cfg.precision = _int_option(ARG_PREC, aa.options[ARG_PREC],
            cfg.precision, err)
    if not aa.verb:
        raise UsageError('missing verb; see fadel help')
    return aa


class _Verbs:
    """
    _Verbs executes the verb of parsed arguments and fills the report
    with its results.
    """

    def __init__(self, aa: _Args, report: reporting.Report, inp: TextIO):
        self.aa, self.cfg, self.report, self.inp = aa, aa.cfg, report, inp
        self.log = report.log if aa.cfg.dbg else None  # type: Any

    def op(self, u: OrePoly) -> str:
        return format_operator(u, self.cfg.unicode)

    def oracle(self):
        return default_oracle(self.cfg.bound, self.cfg.pole_order)

    def run(self, verb: str):
        fn = _VERBS.get(verb)
        if fn is None:
            raise UsageError(f'unknown verb {verb}; see fadel help')
        fn(self)

    def divide(self):
        x, y = (parse(s) for s in self.aa.expect(2))
        side = self.aa.side()
        q, r = divide(side, x, y)
        ok = op_add(op_mul(q, y) if side is Side.LEFT else op_mul(y, q),
            r) == x
        if not ok:
            raise InvariantError(f'{side.value} division of {x} by {y} '
                'doesn\'t recompose')
        r_ = self.report
        r_.set('side', side.value)
        r_.set('dividend', self.op(x))
        r_.set('divisor', self.op(y))
        r_.set('quotient', self.op(q))
        r_.set('remainder', self.op(r))
        r_.set('recomposed', ok)

    def weak_witness(self):
        x, = (parse(s) for s in self.aa.expect(1))
        w = weak_witness(x, self.oracle(), self.log)
        self.report.set('target', self.op(x))
        self.report.set('b', self.op(w.b))
        self.report.set('c', self.op(w.c))
        self.report.set('verified', verify_witness(w))

    def witness(self):
        x, a = (parse(s) for s in self.aa.expect(2))
        side = self.aa.side()
        w = fadelian_witness(x, a, self.oracle(), side, self.log)
        self.report.set('target', self.op(x))
        self.report.set('anchor', self.op(a))
        self.report.set('side', side.value)
        self.report.set('b', self.op(w.b))
        self.report.set('c', self.op(w.c))
        self.report.set('verified', verify_witness(w))

    def inverse_eval(self):
        a, = (parse_ratfun(s) for s in self.aa.expect(1))
        u, w = inverse(a, self.oracle(), self.log)
        self.report.set('a', format_ratfun(a, self.cfg.unicode))
        self.report.set('inverse', format_ratfun(u, self.cfg.unicode))
        self.report.set('verified', verify_witness(w) and a*u == 1)

    def preimage(self):
        U_, f_ = self.aa.expect(2)
        U, f = parse(U_), parse_ratfun(f_)
        g, w = preimage(U, f, self.oracle(), self.log)
        self.report.set('operator', self.op(U))
        self.report.set('f', format_ratfun(f, self.cfg.unicode))
        self.report.set('preimage', format_ratfun(g, self.cfg.unicode))
        self.report.set('verified',
            verify_witness(w) and op_apply(U, g) == f)

    def apply(self):
        U_, f_ = self.aa.expect(2)
        U, f = parse(U_), parse_ratfun(f_)
        self.report.set('operator', self.op(U))
        self.report.set('f', format_ratfun(f, self.cfg.unicode))
        self.report.set('result',
            format_ratfun(op_apply(U, f), self.cfg.unicode))

    def lcm(self):
        a, x = (parse(s) for s in self.aa.expect(2))
        side = self.aa.side()
        b, c, m = common_multiple(side, a, x)
        self.report.set('side', side.value)
        self.report.set('a', self.op(a))
        self.report.set('x', self.op(x))
        self.report.set('b', self.op(b))
        self.report.set('c', self.op(c))
        self.report.set('multiple', self.op(m))

    def laurent_witness(self):
        P_, Q_ = self.aa.expect(2)
        base = self.aa.options.get(ARG_BASE, 'q')
        N = self.cfg.precision
        if base == 'q':
            P, Q = parse_series(P_, True), parse_series(Q_, True)
            oracle = RationalBase()  # type: Any
            fmt = format_rational  # type: Callable[[Any], str]
        elif base == 'ore':
            P, Q = parse_series(P_), parse_series(Q_)
            oracle = OperatorBase(self.oracle(), self.aa.side())
            fmt = self.op
        else:
            raise UsageError(f'{ARG_BASE}: expected q or ore; got {base}')
        B, C = laurent_witness(from_list(P, oracle.zero),
            from_list(Q, oracle.zero), oracle, N, self.log)
        self.report.set('base', base)
        self.report.set('precision', N)
        self.report.set('B', [fmt(b) for b in B.truncate(N)])
        self.report.set('C', [fmt(c) for c in C.truncate(N)])

    def ring(self) -> FiniteRing:
        ring_arg = self.aa.options.get(ARG_RING)
        if ring_arg is None:
            raise UsageError(f'check-ring: missing {ARG_RING}')
        if ring_arg == 'm2f2':
            return make_matrix_ring_2x2_f2()
        if ring_arg == 'f4':
            return make_field_f4()
        if ring_arg.startswith(RING_ZMOD):
            try:
                n = int(ring_arg[len(RING_ZMOD):])
            except ValueError:
                raise UsageError(f'{ARG_RING}: malformed {ring_arg}')
            if not 2 <= n <= self.cfg.max_ring_size:
                raise UsageError(f'{ARG_RING}: n must be in 2..'
                    f'{self.cfg.max_ring_size}')
            return make_zmod(n)
        if ring_arg.startswith(RING_TABLE):
            fl = ring_arg[len(RING_TABLE):]
            if fl == RING_STDIN:
                return load_table(self.inp.read(), 'stdin')
            try:
                with open(fl) as f:
                    return load_table(f.read(), fl)
            except OSError as e:
                raise UsageError(f'{ARG_RING}: {e}')
        raise UsageError(f'{ARG_RING}: unknown ring {ring_arg}')

    def _ring_report(self, rp: ImplicationReport):
        self.report.set('ring', rp.ring)
        self.report.set('size', rp.size)
        self.report.set('predicates', dict(rp.predicates))
        self.report.set('implications', [
            {'name': i.name, 'status': i.status} for i in rp.implications])

    def check_ring(self):
        self.aa.expect(0)
        R = self.ring()
        try:
            rp = check_implications(R, self.cfg.workers, self.log)
        except ImplicationViolated as e:
            self._ring_report(e.report)
            raise
        self._ring_report(rp)


_VERBS = {
    'divide': _Verbs.divide,
    'weak-witness': _Verbs.weak_witness,
    'witness': _Verbs.witness,
    'inverse-eval': _Verbs.inverse_eval,
    'preimage': _Verbs.preimage,
    'apply': _Verbs.apply,
    'lcm': _Verbs.lcm,
    'laurent-witness': _Verbs.laurent_witness,
    'check-ring': _Verbs.check_ring,
}  # type: dict[str, Callable[[_Verbs], None]]


def main(
    argv: list[str] | None = None, out: TextIO | None = None,
    err: TextIO | None = None, inp: TextIO | None = None
) -> int:
    """
    main runs the fadel command with given arguments argv (defaulting
    to sys.argv[1:]) and returns its exit code.
    """
    argv = sys.argv[1:] if argv is None else argv
    out, err = out or sys.stdout, err or sys.stderr
    inp = inp or sys.stdin
    try:
        aa = process_args(argv, err)
    except HelpRequest:
        print(help, file=out)
        return EXIT_OK
    except UsageError as e:
        print(f'fadel: {e}', file=err)
        return EXIT_USAGE
    aa.cfg.out = out
    report = aa.cfg.reporter or reporting.Default()
    try:
        _Verbs(aa, report, inp).run(aa.verb)
    except (UsageError, *USAGE_ERRORS) as e:
        report.fail(reporting.STATUS_USAGE, e)
    except (OracleIncomplete, OracleFailure) as e:
        report.fail(reporting.STATUS_INCOMPLETE, e)
    except ImplicationViolated as e:
        report.fail(reporting.STATUS_VIOLATION, e)
    except InvariantError as e:
        report.fail(reporting.STATUS_INVARIANT, e)
    report.print(aa.verb, aa.cfg.out)
    return EXIT_CODES[report.status]
