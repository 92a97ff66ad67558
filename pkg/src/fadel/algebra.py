# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

"""
algebra is the entry point for fadel's features.  The typical use case
is

    from fadel.algebra import parse, weak_witness, default_oracle

    w = weak_witness(parse('D^2'), default_oracle())
    print(w)  # b = 1/3*t^3*D + 3/2*t^2, c = -1/3*t^3*D + 1/2*t^2

i.e. to compute explicit witnesses x = a·b + c·a in the ring of
differential operators over Q(t).  Besides operator arithmetic
(ore-operator), the solver for diagonally dominant differential systems
(diag-solver) and the witness pipelines, algebra provides lazy power
and Laurent series (laurent) and the finite ring lab (finite_ring).

For an enhanced usage you can also

    from fadel.algebra import Config, reporting

whereas Config bundles the knobs of the fadel command, while reporting
allows access to the abstract Report type to derive your own reporting.
"""

from dataclasses import dataclass as _dataclass
import sys as _sys
from typing import TextIO as _TextIO

from fadel._internal import reporting
from fadel._internal.ratfun import (
    RatFun, InvariantError, DivisionByZero, derive, derive_n, rf_add,
    rf_sub, rf_mul, rf_neg, rf_inv, rf_div, rf_eq, numerator, denominator,
    format_ratfun)
from fadel._internal.ore import (
    OrePoly, Side, DivisionByZeroOperator, ZeroArgument, op_embed,
    op_delta, op_add, op_sub, op_neg, op_mul, op_pow, op_apply, commutator,
    theta, leading_coefficient, divide, common_multiple, format_operator)
from fadel._internal.diag import (
    LinearDiffSystem, OracleIncomplete, Inconsistent, check_dominance,
    diagonalize, replay, substitute, solve)
from fadel._internal.oracles import (
    DEFAULT_BOUND, DEFAULT_POLE_ORDER, oracle_order0, oracle_polynomial,
    oracle_rational, chain, default_oracle)
from fadel._internal.witness import (
    WitnessPair, Flavor, DegreeZeroTarget, build_coefficient_equations,
    eliminate_b, weak_witness, fadelian_witness, verify_witness,
    inverse_by_evaluation, preimage_by_evaluation, inverse, preimage)
from fadel._internal.laurent import (
    DEFAULT_PRECISION, PowerSeries, LaurentSeries, RationalBase,
    OperatorBase, from_list, from_function, laurent_mul, laurent_witness,
    laurent_series_witness, witness_descend)
from fadel._internal.finite_ring import (
    DEFAULT_MAX_SIZE, FiniteRing, make_zmod, make_matrix_ring_2x2_f2,
    make_field_f4, make_product, load_table, is_isomorphic, is_commutative,
    is_division_ring, is_integral, is_simple, is_weakly_fadelian,
    is_fadelian, is_ore, find_witness, check_implications, corpus)
from fadel._internal.parser import (
    ParseError, NormalizeError, parse_operator, normalize, parse,
    parse_ratfun, parse_series)


@_dataclass
class Config:
    """
    configuration of the fadel command

    - reporter: is specifying the type for reporting a verb's result.
      It defaults to reporting.Default or to reporting.JSON in case the
      --json flag is set.

    - out: defines where given report prints to it defaults to
      sys.stdout.

    - bound: degree bound of the polynomial and rational ansatz oracles.

    - pole_order: maximal denominator power the rational ansatz oracle
      tries.

    - precision: number of series coefficients computed and verified.

    - max_ring_size: size cap of the finite ring corpus.

    - workers: number of processes scanning finite rings; 0 and 1 scan
      in-process.

    - unicode: print δ and superscripts instead of D and ^.

    - dbg: report the trace messages of the computation.
    """
    reporter: reporting.Report | None = None
    out: _TextIO = _sys.stdout
    bound: int = DEFAULT_BOUND
    pole_order: int = DEFAULT_POLE_ORDER
    precision: int = DEFAULT_PRECISION
    max_ring_size: int = DEFAULT_MAX_SIZE
    workers: int = 0
    unicode: bool = False
    dbg: bool = False
