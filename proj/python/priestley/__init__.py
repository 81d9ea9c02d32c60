"""Finite Priestley duality checks and the symbolic frame fixtures.

The functions take and return JSON text at the C++ boundary; the wrappers
here decode reports into dictionaries.
"""

import json

from . import _core
from ._core import SCHEMA_VERSION, PriestleyError

__all__ = ["SCHEMA_VERSION", "PriestleyError", "check", "fixtures", "emit", "check_names", "fixture_check_names"]


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def check(document, suite="all", only=None):
    """Run a check suite on an input document (dict or JSON text)."""
    return json.loads(_core.check(_text(document), suite, only or ""))


def fixtures(sample=1000, seed=0, only=None):
    """Run the symbolic frame suite."""
    return json.loads(_core.fixtures(sample, seed, only or ""))


def emit(document, format="json", target="dual", suite="all"):
    """Render a lattice, dual, space, KSat poset or report. DOT output stays text."""
    out = _core.emit(_text(document), format, target, suite)
    return out if format == "dot" else json.loads(out)


def check_names(document, suite="all"):
    return _core.check_names(_text(document), suite)


def fixture_check_names():
    return _core.fixture_check_names()
