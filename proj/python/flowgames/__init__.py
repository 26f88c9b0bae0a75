"""Exact equilibrium solvers, verifiers and reductions for flow games.

Games, profiles and circuits are the same JSON documents the command-line
tool reads. Every function accepts either a parsed object (dict) or JSON
text and returns a dict. Rationals travel as "p/q" strings.
"""

import json

try:
    from . import _flowgames as _core
except ImportError:  # Built in-tree: the extension sits next to the package.
    import _flowgames as _core

InputError = _core.InputError
PreconditionError = _core.PreconditionError
AnalysisError = _core.AnalysisError

__all__ = [
    "InputError", "PreconditionError", "AnalysisError", "verify", "solve",
    "dynamics", "best_response", "reduce", "compile_circuit", "report",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def _maybe(doc):
    return None if doc is None else _text(doc)


def verify(game, profile, eps=None):
    """Equilibrium report for `profile`; `eps` (e.g. "1/100") checks approximately."""
    return json.loads(_core.verify(_text(game), _text(profile),
                                   None if eps is None else str(eps)))


def solve(game, method, max_rounds=1000, seed=0, shuffle=False, max_lps=20000):
    """Run "dynamics", "cycle" or "enumerate"; the result carries "weights"."""
    return json.loads(_core.solve(_text(game), method, max_rounds, seed,
                                  shuffle, max_lps))


def dynamics(game, init=None, max_rounds=1000, seed=0, shuffle=False):
    return json.loads(_core.dynamics(_text(game), _maybe(init), max_rounds,
                                     seed, shuffle))


def best_response(game, profile, player):
    return json.loads(_core.best_response(_text(game), _text(profile), player))


def reduce(game, to, profile=None):
    """Bundle with "source", "target", "mapping" and, given a profile, "mapped"."""
    return json.loads(_core.reduce(_text(game), to, _maybe(profile)))


def compile_circuit(circuit, pins=None):
    """Compiled preference game plus port map; `pins` maps inputs to values."""
    if pins is not None:
        pins = {k: str(v) for k, v in pins.items()}
    return json.loads(_core.compile_circuit(_text(circuit), pins))


def report(game, profile=None):
    return json.loads(_core.report(_text(game), _maybe(profile)))
