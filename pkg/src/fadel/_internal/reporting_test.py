# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

import json

from testcontext import testing
from testmocks import Out
from fadel._internal.reporting import (
    Default, JSON, SCHEMA, SCHEMA_VERSION, JSN_SCHEMA, JSN_VERB, JSN_STATUS,
    JSN_ERROR, JSN_LOGS, STATUS_OK, STATUS_INCOMPLETE, validate)


def _weak_witness_report(report):
    report.set('target', 'D')
    report.set('b', '-t')
    report.set('c', 't')
    report.set('verified', True)
    return report


class DefaultReport:

    def prints_name_value_lines(self, t: testing.T):
        out = Out()
        _weak_witness_report(Default()).print('weak-witness', out)
        t.star_matched(out.getvalue(), 'target: D', 'b: -t', 'c: t',
            'verified: true')

    def prints_nested_values_indented(self, t: testing.T):
        out, r = Out(), Default()
        r.set('predicates', {'integral': False, 'ore_right': None})
        r.set('implications', [{'name': 'p => q', 'status': 'vacuous'}])
        r.print('check-ring', out)
        t.star_matched(out.getvalue(), 'predicates:', '  integral: false',
            '  ore_right: -', 'implications:',
            '  name: p => q, status: vacuous')

    def prints_the_error_and_logs(self, t: testing.T):
        out, r = Out(), Default()
        r.log('pivot 0: D')
        r.fail(STATUS_INCOMPLETE, 'no solution found')
        r.print('weak-witness', out)
        t.star_matched(out.getvalue(),
            'weak-witness: incomplete: no solution found', 'trace:',
            '  pivot 0: D')

    def rejects_ok_as_failure(self, t: testing.T):
        t.raises(lambda: Default().fail(STATUS_OK, ''), ValueError)


class JSONReport:

    def is_provided_as_json(self, t: testing.T):
        out = Out()
        _weak_witness_report(JSON()).print('weak-witness', out)
        try:
            json.loads(out.getvalue())
        except json.JSONDecodeError:
            t.fatal("report couldn't be json-decoded")

    def provides_schema_verb_and_status(self, t: testing.T):
        out = Out()
        _weak_witness_report(JSON()).print('weak-witness', out)
        doc = json.loads(out.getvalue())
        t.eq(doc[JSN_SCHEMA], SCHEMA_VERSION)
        t.eq(doc[JSN_VERB], 'weak-witness')
        t.eq(doc[JSN_STATUS], STATUS_OK)
        t.eq(doc[JSN_LOGS], [])
        t.eq(doc['b'], '-t')

    def provides_the_error_of_a_failure(self, t: testing.T):
        out, r = Out(), JSON()
        r.fail(STATUS_INCOMPLETE, 'no solution found')
        r.print('witness', out)
        doc = json.loads(out.getvalue())
        t.eq(doc[JSN_STATUS], STATUS_INCOMPLETE)
        t.eq(doc[JSN_ERROR], 'no solution found')

    def keeps_unicode(self, t: testing.T):
        out, r = Out(), JSON()
        r.set('result', 'tδ²')
        r.print('apply', out)
        t.in_('tδ²', out.getvalue())


class Validate:

    def accepts_a_complete_document(self, t: testing.T):
        doc = _weak_witness_report(JSON()).document('weak-witness')
        t.eq(validate(doc), [])

    def accepts_a_failure_without_fields(self, t: testing.T):
        r = JSON()
        r.fail(STATUS_INCOMPLETE, 'no solution found')
        t.eq(validate(r.document('witness')), [])

    def names_missing_fields(self, t: testing.T):
        doc = JSON().document('divide')
        pp = validate(doc)
        t.eq(len(pp), len(SCHEMA['divide']))
        t.in_('divide: missing field quotient', pp)

    def rejects_foreign_documents(self, t: testing.T):
        t.eq(validate([]), ['document is not an object'])
        pp = validate({JSN_SCHEMA: 'other/2', JSN_VERB: 'x',
            JSN_STATUS: 'fine', JSN_LOGS: [1]})
        t.eq(len(pp), 4)


if __name__ == '__main__':
    testing.run(DefaultReport)
    testing.run(JSONReport)
    testing.run(Validate)
