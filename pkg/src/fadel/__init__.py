# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

"""
fadel computes explicit witnesses of the fadelian property x = a·b + c·a
in the ring R[δ] of differential operators over the differential field
Q(t), lifts and descends such witnesses along power and Laurent series,
and checks the implications between fadelian, simple, integral and Ore
rings exhaustively on finite rings.

Usage as command:

    python -m fadel weak-witness "D"

See

    python -m fadel help

for information about its verbs and command line arguments.

Usage as library:

    from fadel.algebra import parse, fadelian_witness, default_oracle

    w = fadelian_witness(parse('2'), parse('D'), default_oracle())
    assert parse('D')*w.b + w.c*parse('D') == parse('2')

See also fadel.algebra.Config for the knobs of a computation.

HAPPY COMPUTING
"""
