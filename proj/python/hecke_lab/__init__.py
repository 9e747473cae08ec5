"""Affine Hecke algebra characters and supersingular modules."""

import json

from . import _core
from ._core import HeckeLabError, __version__

__all__ = ["HeckeLabError", "build", "characters", "classify", "verify", "default_suite", "run", "__version__"]


def _case(case):
    return case if isinstance(case, str) else json.dumps(case)


def build(case):
    return json.loads(_core.build(_case(case)))


def characters(case, p=None, exhaustive=False):
    return json.loads(_core.characters(_case(case), p, exhaustive))


def classify(case, p=None, exhaustive=False):
    return json.loads(_core.classify(_case(case), p, exhaustive))


def verify(suite=None, p=None, exhaustive=False, seed=20240601, threads=0):
    """Returns (report, exit_code). Without a suite the built-in one runs."""
    text = _core.default_suite() if suite is None else _case(suite)
    report, code = _core.verify(text, p, exhaustive, seed, threads)
    return json.loads(report), code


def default_suite():
    return json.loads(_core.default_suite())


def run(args):
    """Runs the command line tool in process; returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])
