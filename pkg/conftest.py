"""
pytest collection wiring for the tddflow test suites in src/fadel/_internal.

The *_test.py modules are written for tddflow and run their suites from
their ``if __name__ == '__main__'`` block.  This conftest collects every
suite passed to ``testing.run`` there and runs it through tddflow, so a
pytest item fails iff tddflow reports a failing test of that suite.
"""

import ast
import importlib.util
import io
import os
import sys

import pytest

_INTERNAL = os.path.join(
    os.path.dirname(os.path.abspath(__file__)), 'src', 'fadel', '_internal')

if _INTERNAL not in sys.path:
    sys.path.insert(0, _INTERNAL)


def _main_suites(source: str) -> list[str]:
    """names given to testing.run(...) in the module's __main__ block."""
    names = []
    for node in ast.parse(source).body:
        if not isinstance(node, ast.If):
            continue
        if '__main__' not in ast.unparse(node.test):
            continue
        for n in ast.walk(node):
            if (isinstance(n, ast.Call) and ast.unparse(n.func).endswith('run')
                    and n.args and isinstance(n.args[0], ast.Name)):
                names.append(n.args[0].id)
    return names


def pytest_collect_file(file_path, parent):
    if (file_path.name.endswith('_test.py')
            and os.path.dirname(str(file_path)) == _INTERNAL):
        return TDDFlowModule.from_parent(parent, path=file_path)
    return None


class TDDFlowModule(pytest.File):

    def collect(self):
        name = '_tddflow_' + self.path.stem
        spec = importlib.util.spec_from_file_location(name, self.path)
        module = importlib.util.module_from_spec(spec)
        sys.modules[name] = module
        spec.loader.exec_module(module)
        for suite in _main_suites(self.path.read_text()):
            yield TDDFlowSuite.from_parent(
                self, name=suite, suite=getattr(module, suite))


class TDDFlowSuite(pytest.Item):

    def __init__(self, *, suite, **kwargs):
        super().__init__(**kwargs)
        self.suite = suite

    def runtest(self):
        from tddflow import testing
        from tddflow._internal import reporting
        report = reporting.Default()
        out = io.StringIO()
        testing.run(self.suite, testing.Config(reporter=report, out=out))
        if report.fails_count:
            raise TDDFlowFailure(out.getvalue())
        if out.getvalue():
            sys.stdout.write(out.getvalue())

    def repr_failure(self, excinfo):
        if isinstance(excinfo.value, TDDFlowFailure):
            return str(excinfo.value)
        return super().repr_failure(excinfo)

    def reportinfo(self):
        return self.path, None, f'{self.path.name}::{self.name}'


class TDDFlowFailure(Exception):
    pass
