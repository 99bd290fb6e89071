"""Connectivity queries on real algebraic space curves given by a
one-dimensional rational parametrization."""

import json
import os

from ._core import (
    Error,
    apparent_singularities,
    first_subresultant,
    isolate,
    resultant,
    run_command,
    topology as _topology,
)

__all__ = [
    "CommandError",
    "Error",
    "apparent_singularities",
    "appsing",
    "connect",
    "first_subresultant",
    "isolate",
    "resultant",
    "run_command",
    "topo",
    "topology",
    "validate",
]


class CommandError(RuntimeError):
    """A command ended with a nonzero exit code."""

    def __init__(self, exit_code, message, output=""):
        super().__init__(message)
        self.exit_code = exit_code
        self.output = output


def _text(problem):
    if isinstance(problem, dict):
        return json.dumps(problem)
    if isinstance(problem, os.PathLike):
        with open(problem, encoding="utf-8") as f:
            return f.read()
    return problem


def _run(command, problem, **kw):
    code, out, err = run_command(command, _text(problem), **kw)
    if code != 0:
        raise CommandError(code, err.strip(), out)
    return out


def validate(problem):
    """Validation report as a dict; raises CommandError (exit 2 or 4) when invalid."""
    return json.loads(_run("validate", problem))


def appsing(problem):
    return json.loads(_run("appsing", problem))


def topo(problem, dot=None, svg=None):
    """Topology graph in Graphviz format."""
    return _run("topo", problem, dot=dot, svg=svg)


def connect(problem, components_only=False, eps=None):
    """{"partition": [[...], ...], "components": k}."""
    return json.loads(_run("connect", problem, components_only=components_only, eps=eps))


def topology(problem):
    """Graphs and partition as Python objects."""
    return _topology(_text(problem))
