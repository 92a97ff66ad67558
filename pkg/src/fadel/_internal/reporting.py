# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

"""
module reporting provides the two report types *Default* and *JSON*
which are used by the fadel command to report the result of a verb.  It
also provides the abstract type *Report* which may be used to implement
an other report type, and the published SCHEMA of the JSON output
together with a validate function.  Use algebra.Config to define which
report should be used.
"""

import json
from typing import Any, Dict, TextIO

SCHEMA_VERSION = 'fadel/1'

JSN_SCHEMA = 'schema'
JSN_VERB = 'verb'
JSN_STATUS = 'status'
JSN_ERROR = 'error'
JSN_LOGS = 'logs'

STATUS_OK = 'ok'
STATUS_USAGE = 'usage'
STATUS_INCOMPLETE = 'incomplete'
STATUS_VIOLATION = 'violation'
STATUS_INVARIANT = 'invariant'

STATUSES = (STATUS_OK, STATUS_USAGE, STATUS_INCOMPLETE, STATUS_VIOLATION,
    STATUS_INVARIANT)

SCHEMA = {
    'divide': ('side', 'dividend', 'divisor', 'quotient', 'remainder',
        'recomposed'),
    'weak-witness': ('target', 'b', 'c', 'verified'),
    'witness': ('target', 'anchor', 'side', 'b', 'c', 'verified'),
    'inverse-eval': ('a', 'inverse', 'verified'),
    'preimage': ('operator', 'f', 'preimage', 'verified'),
    'apply': ('operator', 'f', 'result'),
    'lcm': ('side', 'a', 'x', 'b', 'c', 'multiple'),
    'laurent-witness': ('base', 'precision', 'B', 'C'),
    'check-ring': ('ring', 'size', 'predicates', 'implications'),
    'help': (),
}  # type: Dict[str, tuple[str, ...]]
"""SCHEMA maps each verb to the fields of its successful result."""


class Report:
    """
    Report is the abstract type of which all reporting types should be
    derived.  A verb fills a report's *fields* with its results and its
    *logs* with trace messages; a failing verb sets *status* and
    *error*.  A call of print generates the output.
    """

    def __init__(self) -> None:
        self.fields = dict()  # type: Dict[str, Any]
        self.logs = []  # type: list[str]
        self.status = STATUS_OK  # type: str
        self.error = ''  # type: str

    def set(self, name: str, value: Any):
        """set the result field with given name to given value."""
        self.fields[name] = value

    def fail(self, status: str, msg: Any):
        """fail flags the report with given status and error message."""
        if status not in STATUSES or status == STATUS_OK:
            raise ValueError(f'no failing status: {status}')
        self.status = status
        self.error = str(msg)

    def log(self, msg: Any):
        """log given message msg."""
        if isinstance(msg, str):
            self.logs.append(msg)
        else:
            self.logs.append(str(msg).strip('\\\'"'))

    def print(self, verb: str, out: TextIO):
        """
        print the result of given verb to out.  Sub-types of Report must
        implement this method.
        """
        raise NotImplementedError()


def _lines(name: str, value: Any, indent: str = '') -> list[str]:
    if isinstance(value, dict):
        ll = [f'{indent}{name}:']
        for k, v in value.items():
            ll.extend(_lines(k, v, indent + '  '))
        return ll
    if isinstance(value, list):
        ll = [f'{indent}{name}:']
        for v in value:
            if isinstance(v, dict):
                ll.append(indent + '  ' + ', '.join(
                    f'{k}: {_str(x)}' for k, x in v.items()))
            else:
                ll.append(f'{indent}  {_str(v)}')
        return ll
    return [f'{indent}{name}: {_str(value)}']


def _str(v: Any) -> str:
    if v is None:
        return '-'
    if isinstance(v, bool):
        return 'true' if v else 'false'
    return str(v)


class Default(Report):
    """Default prints human readable 'name: value' lines."""

    def print(self, verb: str, out: TextIO):
        for name, value in self.fields.items():
            for line in _lines(name, value):
                print(line, file=out)
        if self.status != STATUS_OK:
            print(f'{verb}: {self.status}: {self.error}', file=out)
        if len(self.logs):
            print('trace:', file=out)
            for m in self.logs:
                print(f'  {m}', file=out)


class JSON(Report):
    """JSON prints one JSON document following SCHEMA."""

    def document(self, verb: str) -> Dict[str, Any]:
        doc = {
            JSN_SCHEMA: SCHEMA_VERSION,
            JSN_VERB: verb,
            JSN_STATUS: self.status,
        }  # type: Dict[str, Any]
        doc.update(self.fields)
        if self.status != STATUS_OK:
            doc[JSN_ERROR] = self.error
        doc[JSN_LOGS] = self.logs
        return doc

    def print(self, verb: str, out: TextIO):
        print(json.dumps(self.document(verb), indent=2, ensure_ascii=False),
            file=out)


def validate(doc: Any) -> list[str]:
    """
    validate returns the problems of a decoded JSON document with
    respect to SCHEMA; an empty list means the document is valid.
    """
    if not isinstance(doc, dict):
        return ['document is not an object']
    pp = []
    if doc.get(JSN_SCHEMA) != SCHEMA_VERSION:
        pp.append(f'{JSN_SCHEMA} must be "{SCHEMA_VERSION}"')
    verb = doc.get(JSN_VERB)
    if verb not in SCHEMA:
        pp.append(f'unknown {JSN_VERB}: {verb}')
    status = doc.get(JSN_STATUS)
    if status not in STATUSES:
        pp.append(f'unknown {JSN_STATUS}: {status}')
    logs = doc.get(JSN_LOGS)
    if not isinstance(logs, list) or not all(
            isinstance(l, str) for l in logs):
        pp.append(f'{JSN_LOGS} must be a list of strings')
    if status in STATUSES[1:] and not isinstance(
            doc.get(JSN_ERROR), str):
        pp.append(f'failing document without {JSN_ERROR}')
    if status == STATUS_OK and verb in SCHEMA:
        for f in SCHEMA[verb]:
            if f not in doc:
                pp.append(f'{verb}: missing field {f}')
    return pp
